"""Pure-Python bitset kernels for exact searches on graphs with <= 64 vertices.

A graph is passed as a sequence `rows` where rows[i] is the neighbour
bitmask of vertex i (bit j set iff i-j is an edge).  Masks are plain ints.

This module is the fallback twin of the compiled gkgraphs._bitset_core;
the two must stay behaviourally identical (tests enforce it).
"""

from __future__ import annotations

from typing import Optional, Sequence

BACKEND = "python"


def max_clique_size(rows: Sequence[int]) -> int:
    """Exact maximum-clique size, branch and bound with a colouring bound."""
    n = len(rows)
    if n == 0:
        return 0
    best = 0

    def expand(cand: int, size: int) -> None:
        nonlocal best
        # greedy colouring of the candidate set: the number of colour
        # classes bounds the largest clique inside it
        order: list[int] = []
        bounds: list[int] = []
        colour = 0
        uncoloured = cand
        while uncoloured:
            colour += 1
            avail = uncoloured
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                avail &= ~rows[v] & ~low
                uncoloured ^= low
                order.append(v)
                bounds.append(colour)
        for i in range(len(order) - 1, -1, -1):
            if size + bounds[i] <= best:
                return
            v = order[i]
            nxt = cand & rows[v]
            if nxt:
                expand(nxt, size + 1)
            elif size + 1 > best:
                best = size + 1
            cand &= ~(1 << v)

    expand((1 << n) - 1, 0)
    return best


def is_k_colorable(rows: Sequence[int], k: int) -> bool:
    """Exact backtracking test for a proper colouring with <= k colours."""
    n = len(rows)
    if k >= n:
        return True
    if k <= 0:
        return n == 0
    order = sorted(range(n), key=lambda v: rows[v].bit_count(), reverse=True)
    classes = [0] * k

    def place(i: int, used: int) -> bool:
        if i == n:
            return True
        v = order[i]
        bit = 1 << v
        nb = rows[v]
        for c in range(used):
            if classes[c] & nb == 0:
                classes[c] |= bit
                if place(i + 1, used):
                    return True
                classes[c] &= ~bit
        if used < k:
            # first use of a fresh colour; trying later fresh colours would
            # only revisit symmetric assignments
            classes[used] |= bit
            if place(i + 1, used + 1):
                return True
            classes[used] &= ~bit
        return False

    return place(0, 0)


def find_triangle(rows: Sequence[int]) -> Optional[tuple[int, int, int]]:
    """A triangle (i < j < l as vertex indices) if one exists, else None."""
    n = len(rows)
    for i in range(n):
        ri = rows[i]
        above_i = ri & ~((1 << (i + 1)) - 1)
        while above_i:
            j = (above_i & -above_i).bit_length() - 1
            common = ri & rows[j] & ~((1 << (j + 1)) - 1)
            if common:
                l = (common & -common).bit_length() - 1
                return (i, j, l)
            above_i &= above_i - 1
    return None
