"""Kernel selection: compiled extension when importable, else pure Python.

Set ``NUMSEMI_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

_INT64_SAFE = 2**62

BACKEND = "python"
_ext = None
if not os.environ.get("NUMSEMI_PURE_PYTHON"):
    try:
        from . import _ckernels as _ext

        BACKEND = "cython"
    except ImportError:  # pragma: no cover - depends on build
        _ext = None


def apery_distances(modulus, steps):
    steps = list(steps)
    if _ext is not None and modulus * max(steps, default=1) < _INT64_SAFE:
        return _ext.apery_distances(modulus, steps)
    return _pykernels.apery_distances(modulus, steps)


def enumerate_members(generators, bound):
    if _ext is not None:
        return _ext.enumerate_members(generators, bound)
    return _pykernels.enumerate_members(generators, bound)
