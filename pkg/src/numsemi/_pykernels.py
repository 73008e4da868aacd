"""Pure-Python kernels; used when the compiled extension is unavailable."""

import heapq


def apery_distances(modulus, steps):
    """Shortest path lengths from residue 0 on the residue graph mod ``modulus``.

    Edges go r -> (r + s) % modulus with weight s for each s in ``steps``.
    Unreachable residues get -1.
    """
    dist = [-1] * modulus
    dist[0] = 0
    done = bytearray(modulus)
    heap = [(0, 0)]
    steps = [s for s in steps if s % modulus]
    while heap:
        d, r = heapq.heappop(heap)
        if done[r]:
            continue
        done[r] = 1
        for s in steps:
            t = (r + s) % modulus
            nd = d + s
            if not done[t] and (dist[t] < 0 or nd < dist[t]):
                dist[t] = nd
                heapq.heappush(heap, (nd, t))
    return dist


def enumerate_members(generators, bound):
    """Membership table of the monoid spanned by ``generators`` on [0, bound]."""
    member = bytearray(bound + 1)
    member[0] = 1
    gens = sorted(set(g for g in generators if 0 < g <= bound))
    for x in range(1, bound + 1):
        for g in gens:
            if g > x:
                break
            if member[x - g]:
                member[x] = 1
                break
    return member
