"""Resource caps shared by the Apéry and enumeration routines."""

import os
from dataclasses import dataclass

ENV_APERY = "NUMSEMI_MAX_APERY_NODES"
ENV_ENUMERATE = "NUMSEMI_MAX_ENUMERATE"


@dataclass(frozen=True)
class Limits:
    max_apery_nodes: int = 10**7
    # also caps gap/conductor enumeration in ``profile``
    max_enumerate: int = 10**8

    @classmethod
    def from_env(cls, environ=None):
        environ = os.environ if environ is None else environ
        kwargs = {}
        if environ.get(ENV_APERY):
            kwargs["max_apery_nodes"] = int(environ[ENV_APERY])
        if environ.get(ENV_ENUMERATE):
            kwargs["max_enumerate"] = int(environ[ENV_ENUMERATE])
        return cls(**kwargs)


def resolve(limits):
    return Limits.from_env() if limits is None else limits
