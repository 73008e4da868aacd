# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: Dijkstra on the residue graph and the membership sweep.

Distances are int64; callers must ensure ``modulus * max(steps) < 2**62``.
"""

from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t


cdef inline void _sift_up(int64_t *heap, int64_t *key, int64_t *pos, int64_t i) nogil:
    cdef int64_t node = heap[i]
    cdef int64_t k = key[i]
    cdef int64_t parent
    while i > 0:
        parent = (i - 1) >> 1
        if key[parent] <= k:
            break
        heap[i] = heap[parent]
        key[i] = key[parent]
        pos[heap[i]] = i
        i = parent
    heap[i] = node
    key[i] = k
    pos[node] = i


cdef inline void _sift_down(int64_t *heap, int64_t *key, int64_t *pos,
                            int64_t i, int64_t size) nogil:
    cdef int64_t node = heap[i]
    cdef int64_t k = key[i]
    cdef int64_t child
    while True:
        child = 2 * i + 1
        if child >= size:
            break
        if child + 1 < size and key[child + 1] < key[child]:
            child += 1
        if k <= key[child]:
            break
        heap[i] = heap[child]
        key[i] = key[child]
        pos[heap[i]] = i
        i = child
    heap[i] = node
    key[i] = k
    pos[node] = i


def apery_distances(long long modulus, steps):
    cdef list step_list = [s for s in steps if s % modulus]
    cdef int64_t nsteps = len(step_list)
    cdef int64_t *st = <int64_t *> malloc(max(nsteps, 1) * sizeof(int64_t))
    cdef int64_t *sr = <int64_t *> malloc(max(nsteps, 1) * sizeof(int64_t))
    cdef int64_t *dist = <int64_t *> malloc(modulus * sizeof(int64_t))
    cdef int64_t *heap = <int64_t *> malloc(modulus * sizeof(int64_t))
    # key[i] mirrors dist[heap[i]] so comparisons stay inside the heap arrays
    cdef int64_t *key = <int64_t *> malloc(modulus * sizeof(int64_t))
    # pos[r]: -1 never queued, -2 settled, else index in heap
    cdef int64_t *pos = <int64_t *> malloc(modulus * sizeof(int64_t))
    cdef int64_t i, r, t, nd, size, k
    if st == NULL or sr == NULL or key == NULL or dist == NULL or heap == NULL or pos == NULL:
        free(st); free(sr); free(key); free(dist); free(heap); free(pos)
        raise MemoryError()
    try:
        for i in range(nsteps):
            st[i] = step_list[i]
            sr[i] = step_list[i] % modulus
        with nogil:
            for i in range(modulus):
                dist[i] = -1
                pos[i] = -1
            dist[0] = 0
            heap[0] = 0
            key[0] = 0
            pos[0] = 0
            size = 1
            while size > 0:
                r = heap[0]
                pos[r] = -2
                size -= 1
                if size > 0:
                    heap[0] = heap[size]
                    key[0] = key[size]
                    pos[heap[0]] = 0
                    _sift_down(heap, key, pos, 0, size)
                for k in range(nsteps):
                    t = r + sr[k]
                    if t >= modulus:
                        t -= modulus
                    if pos[t] == -2:
                        continue
                    nd = dist[r] + st[k]
                    if pos[t] == -1:
                        dist[t] = nd
                        heap[size] = t
                        key[size] = nd
                        pos[t] = size
                        size += 1
                        _sift_up(heap, key, pos, size - 1)
                    elif nd < dist[t]:
                        dist[t] = nd
                        key[pos[t]] = nd
                        _sift_up(heap, key, pos, pos[t])
        return [dist[i] for i in range(modulus)]
    finally:
        free(st); free(sr); free(key); free(dist); free(heap); free(pos)


def enumerate_members(generators, long long bound):
    cdef list gens = sorted(set(g for g in generators if 0 < g <= bound))
    cdef int64_t ngens = len(gens)
    cdef bytearray out = bytearray(bound + 1)
    cdef unsigned char[::1] member = out
    cdef int64_t *g = <int64_t *> malloc(max(ngens, 1) * sizeof(int64_t))
    cdef int64_t x, k
    if g == NULL:
        raise MemoryError()
    try:
        for k in range(ngens):
            g[k] = gens[k]
        with nogil:
            member[0] = 1
            for x in range(1, bound + 1):
                for k in range(ngens):
                    if g[k] > x:
                        break
                    if member[x - g[k]]:
                        member[x] = 1
                        break
        return out
    finally:
        free(g)
