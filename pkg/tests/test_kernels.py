"""Compiled and pure-Python kernels agree with each other and brute force."""

import itertools
import random

from conftest import KERNEL_BACKENDS

from gkgraphs import kernels


def random_rows(n, p, rng):
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return rows


def brute_max_clique(rows):
    n = len(rows)
    best = 0
    for mask in range(1 << n):
        verts = [i for i in range(n) if mask >> i & 1]
        if len(verts) <= best:
            continue
        if all(rows[a] >> b & 1 for a, b in itertools.combinations(verts, 2)):
            best = len(verts)
    return best


def brute_k_colorable(rows, k):
    n = len(rows)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rows[i] >> j & 1]
    return any(
        all(col[a] != col[b] for a, b in edges)
        for col in itertools.product(range(k), repeat=n)
    )


def brute_has_triangle(rows):
    n = len(rows)
    return any(
        rows[a] >> b & 1 and rows[a] >> c & 1 and rows[b] >> c & 1
        for a, b, c in itertools.combinations(range(n), 3)
    )


def test_selected_backend_matches_a_twin():
    assert kernels.BACKEND in {m.BACKEND for m in KERNEL_BACKENDS}


def test_exhaustive_small_graphs(kernel_backend):
    n = 4
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        for idx, (i, j) in enumerate(pairs):
            if mask >> idx & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        assert kernel_backend.max_clique_size(rows) == brute_max_clique(rows)
        for k in (1, 2, 3):
            assert kernel_backend.is_k_colorable(rows, k) == brute_k_colorable(rows, k)
        tri = kernel_backend.find_triangle(rows)
        assert (tri is not None) == brute_has_triangle(rows)
        if tri is not None:
            a, b, c = tri
            assert rows[a] >> b & 1 and rows[a] >> c & 1 and rows[b] >> c & 1


def test_random_midsize_graphs(kernel_backend):
    rng = random.Random(31)
    for _ in range(40):
        n = rng.randrange(5, 15)
        rows = random_rows(n, rng.choice([0.2, 0.5, 0.8]), rng)
        assert kernel_backend.max_clique_size(rows) == brute_max_clique(rows)
        tri = kernel_backend.find_triangle(rows)
        assert (tri is not None) == brute_has_triangle(rows)
        if n <= 11:  # keep the k^n colouring scan affordable
            k = rng.randrange(1, 4)
            assert kernel_backend.is_k_colorable(rows, k) == brute_k_colorable(rows, k)


def test_backends_agree_on_larger_graphs():
    if len(KERNEL_BACKENDS) < 2:
        return
    a, b = KERNEL_BACKENDS
    rng = random.Random(17)
    for _ in range(15):
        n = rng.randrange(20, 50)
        rows = random_rows(n, rng.choice([0.1, 0.3, 0.6]), rng)
        assert a.max_clique_size(rows) == b.max_clique_size(rows)
        for k in (2, 3, 4):
            assert a.is_k_colorable(rows, k) == b.is_k_colorable(rows, k)
        assert (a.find_triangle(rows) is None) == (b.find_triangle(rows) is None)


def test_full_64_vertex_graph(kernel_backend):
    rows = [((1 << 64) - 1) & ~(1 << i) for i in range(64)]
    assert kernel_backend.max_clique_size(rows) == 64
    assert kernel_backend.find_triangle(rows) == (0, 1, 2)
    assert not kernel_backend.is_k_colorable(rows, 63)
    assert kernel_backend.is_k_colorable(rows, 64)


def test_empty_and_tiny(kernel_backend):
    assert kernel_backend.max_clique_size([]) == 0
    assert kernel_backend.max_clique_size([0]) == 1
    assert kernel_backend.is_k_colorable([], 1)
    assert kernel_backend.is_k_colorable([0], 1)
    assert kernel_backend.find_triangle([0, 0]) is None
