# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitset kernels; must stay bit-identical to _ref.py."""

from libc.stdint cimport uint64_t, int64_t

BACKEND_NAME = "compiled"

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    #define ST_POPCOUNT(x) __builtin_popcountll(x)
    #define ST_CTZ(x) __builtin_ctzll(x)
    #else
    static int ST_POPCOUNT(unsigned long long x) {
        int c = 0; while (x) { x &= x - 1; c++; } return c;
    }
    static int ST_CTZ(unsigned long long x) {
        int c = 0; while (!(x & 1ULL)) { x >>= 1; c++; } return c;
    }
    #endif
    """
    int ST_POPCOUNT(uint64_t x) nogil
    int ST_CTZ(uint64_t x) nogil


cdef int _component_count(int n, uint64_t *adj, uint64_t removed) nogil:
    cdef uint64_t full = (<uint64_t>1 << n) - 1 if n < 64 else <uint64_t>0 - 1
    cdef uint64_t rest = full & ~removed
    cdef uint64_t comp, frontier, low, new
    cdef int count = 0
    while rest:
        count += 1
        comp = rest & (<uint64_t>0 - rest)
        frontier = comp
        while frontier:
            low = frontier & (<uint64_t>0 - frontier)
            frontier ^= low
            new = adj[ST_CTZ(low)] & rest & ~comp
            comp |= new
            frontier |= new
        rest &= ~comp
    return count


def toughness_search(int n, adj):
    """Mirror of _ref.toughness_search (same enumeration order and tie-break)."""
    cdef uint64_t cadj[64]
    cdef int idx[64]
    cdef int i, j, k, c, v
    cdef uint64_t mask
    cdef int64_t best_num = 0, best_den = 0
    cdef uint64_t best_mask = 0
    if n > 62:
        raise ValueError("compiled kernel supports n <= 62")
    for i in range(n):
        cadj[i] = adj[i]
    for k in range(1, n - 1):
        if best_den != 0 and <int64_t>k * best_den >= best_num * (n - k):
            break
        for i in range(k):
            idx[i] = i
        while True:
            mask = 0
            for i in range(k):
                mask |= <uint64_t>1 << idx[i]
            c = _component_count(n, cadj, mask)
            if c >= 2 and (best_den == 0 or <int64_t>k * best_den < best_num * c):
                best_num = k
                best_den = c
                best_mask = mask
            i = k - 1
            while i >= 0 and idx[i] == n - k + i:
                i -= 1
            if i < 0:
                break
            idx[i] += 1
            for j in range(i + 1, k):
                idx[j] = idx[j - 1] + 1
    return int(best_num), int(best_den), int(best_mask)


cdef bint _feasible(int n, uint64_t *adj, uint64_t full,
                    int current, uint64_t visited) nogil:
    cdef uint64_t rest = full & ~visited
    cdef uint64_t scan = rest
    cdef uint64_t avail, low, comp, frontier, reach, new
    cdef int u
    while scan:
        low = scan & (<uint64_t>0 - scan)
        scan ^= low
        u = ST_CTZ(low)
        avail = adj[u] & (rest | (<uint64_t>1 << current) | 1)
        if ST_POPCOUNT(avail) < 2:
            return False
    comp = <uint64_t>1 << current
    frontier = comp
    reach = rest | comp
    while frontier:
        low = frontier & (<uint64_t>0 - frontier)
        frontier ^= low
        new = adj[ST_CTZ(low)] & reach & ~comp
        comp |= new
        frontier |= new
    return (comp & rest) == rest


cdef bint _extend(int n, uint64_t *adj, uint64_t full,
                  int v, uint64_t visited) nogil:
    cdef uint64_t cand, low
    cdef int u
    if visited == full:
        return (adj[v] & 1) != 0
    if not _feasible(n, adj, full, v, visited):
        return False
    cand = adj[v] & ~visited
    while cand:
        low = cand & (<uint64_t>0 - cand)
        cand ^= low
        u = ST_CTZ(low)
        if _extend(n, adj, full, u, visited | low):
            return True
    return False


def hamilton_cycle(int n, adj):
    """Mirror of _ref.hamilton_cycle."""
    cdef uint64_t cadj[64]
    cdef int i
    cdef uint64_t full
    if n > 62:
        raise ValueError("compiled kernel supports n <= 62")
    if n < 3:
        return False
    for i in range(n):
        cadj[i] = adj[i]
        if ST_POPCOUNT(cadj[i]) < 2:
            return False
    full = (<uint64_t>1 << n) - 1
    return bool(_extend(n, cadj, full, 0, 1))
