"""Pure-Python kernels: bit-for-bit reference for the compiled extension.

Both backends must return identical results; tests cross-check them.
Subsets are enumerated by increasing size and, within a size, in
lexicographic order of the ascending vertex tuple, so "first strict
improvement wins" yields the documented deterministic tie-break.
"""

from __future__ import annotations

BACKEND_NAME = "pure"


def _component_count(n: int, adj: tuple[int, ...], removed: int) -> int:
    rest = ((1 << n) - 1) & ~removed
    count = 0
    while rest:
        count += 1
        comp = rest & -rest
        frontier = comp
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = adj[low.bit_length() - 1] & rest & ~comp
            comp |= new
            frontier |= new
        rest &= ~comp
    return count


def toughness_search(n: int, adj: tuple[int, ...]):
    """Minimize |S| / c(G-S) over cuts S with c >= 2; exact rational compare.

    Caller guarantees the graph is connected and not complete.  Returns
    (|S|, c, S_mask) for the optimal cut: smallest ratio, ties broken by
    smaller |S| then lexicographically smallest S.  Prunes size class k
    once k/(n-k) >= best, since c <= n-k.
    """
    best_num = 0
    best_den = 0  # den 0 encodes "+infinity, nothing found yet"
    best_mask = 0
    for k in range(1, n - 1):
        if best_den and k * best_den >= best_num * (n - k):
            break
        # iterative lexicographic k-combinations of range(n)
        idx = list(range(k))
        while True:
            mask = 0
            for v in idx:
                mask |= 1 << v
            c = _component_count(n, adj, mask)
            if c >= 2 and (best_den == 0 or k * best_den < best_num * c):
                best_num, best_den, best_mask = k, c, mask
            i = k - 1
            while i >= 0 and idx[i] == n - k + i:
                i -= 1
            if i < 0:
                break
            idx[i] += 1
            for j in range(i + 1, k):
                idx[j] = idx[j - 1] + 1
    return best_num, best_den, best_mask


def hamilton_cycle(n: int, adj: tuple[int, ...]) -> bool:
    """Backtracking Hamilton-cycle search with degree-2 and connectivity pruning."""
    if n < 3:
        return False
    if any(row.bit_count() < 2 for row in adj):
        return False
    full = (1 << n) - 1

    def feasible(current: int, visited: int) -> bool:
        rest = full & ~visited
        # every unvisited vertex still needs two usable incidences
        for u in _bits(rest):
            avail = adj[u] & (rest | (1 << current) | 1)
            if avail.bit_count() < 2:
                return False
        # unvisited region plus the path head must be connected
        comp = 1 << current
        frontier = comp
        reach = rest | comp
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = adj[low.bit_length() - 1] & reach & ~comp
            comp |= new
            frontier |= new
        return comp & rest == rest

    def extend(v: int, visited: int) -> bool:
        if visited == full:
            return bool(adj[v] & 1)
        if not feasible(v, visited):
            return False
        cand = adj[v] & ~visited
        for u in _bits(cand):
            if extend(u, visited | (1 << u)):
                return True
        return False

    return extend(0, 1)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low
