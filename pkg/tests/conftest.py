"""Shared graph builders and brute-force oracles for the test suite."""

import itertools

import pytest

from gkgraphs import _bitset_py
from gkgraphs.graph import build_graph

try:
    from gkgraphs import _bitset_core
    KERNEL_BACKENDS = [_bitset_py, _bitset_core]
except ImportError:
    KERNEL_BACKENDS = [_bitset_py]


@pytest.fixture(params=KERNEL_BACKENDS, ids=lambda m: m.BACKEND)
def kernel_backend(request):
    return request.param


def cycle_graph(n):
    return build_graph(
        list(range(1, n + 1)),
        [[i, i % n + 1] for i in range(1, n + 1)],
    )


def complete_graph(labels):
    labels = list(labels)
    return build_graph(labels, [[a, b] for a, b in itertools.combinations(labels, 2)])


def path3_graph():
    return build_graph([1, 2, 3], [[1, 2], [2, 3]])


def petersen_graph():
    """Kneser construction: 2-subsets of a 5-set, adjacent iff disjoint."""
    subs = list(itertools.combinations(range(5), 2))
    lab = {s: i + 1 for i, s in enumerate(subs)}
    edges = [
        [lab[a], lab[b]]
        for a, b in itertools.combinations(subs, 2)
        if not set(a) & set(b)
    ]
    return build_graph(list(range(1, 11)), edges)


def paley13_graph():
    qr = {pow(x, 2, 13) for x in range(1, 13)}
    edges = [
        [a, b] for a in range(1, 14) for b in range(a + 1, 14) if (a - b) % 13 in qr
    ]
    return build_graph(list(range(1, 14)), edges)


def octahedron_graph():
    """K_{2,2,2}: all edges except the three diagonals."""
    non_edges = ({1, 2}, {3, 4}, {5, 6})
    edges = [
        [a, b]
        for a, b in itertools.combinations(range(1, 7), 2)
        if {a, b} not in non_edges
    ]
    return build_graph(list(range(1, 7)), edges)


def complete_multipartite_graph(parts):
    """Complete multipartite graph with the given part sizes, labels 1..n."""
    labels = list(range(1, sum(parts) + 1))
    groups = []
    i = 0
    for size in parts:
        groups.append(labels[i:i + size])
        i += size
    edges = [
        [a, b]
        for ga, gb in itertools.combinations(groups, 2)
        for a in ga
        for b in gb
    ]
    return build_graph(labels, edges)


def all_graphs_on(labels):
    """Every labelled graph on the given vertices (2^(n choose 2) of them)."""
    labels = list(labels)
    pairs = list(itertools.combinations(labels, 2))
    for mask in range(1 << len(pairs)):
        edges = [list(pairs[i]) for i in range(len(pairs)) if mask >> i & 1]
        yield build_graph(labels, edges)


# ---------------------------------------------------------------------------
# Brute-force oracles (definition-level, independent of the library's
# search kernels; everything here works on explicit edge sets).

def oracle_components(g):
    """Components by naive union-find over the edge list."""
    parent = {v: v for v in g.labels}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in g.edges():
        parent[find(a)] = find(b)
    comps = {}
    for v in g.labels:
        comps.setdefault(find(v), set()).add(v)
    return sorted(comps.values(), key=min)


def oracle_is_union_of_cliques(g):
    """Definition check: every component induces a complete graph."""
    for comp in oracle_components(g):
        for a, b in itertools.combinations(sorted(comp), 2):
            if not g.has_edge(a, b):
                return False
    return True


def oracle_independence_number(g):
    """Exhaustive subset scan."""
    best = 0
    labels = list(g.labels)
    for r in range(len(labels), 0, -1):
        if r <= best:
            break
        for sub in itertools.combinations(labels, r):
            if all(not g.has_edge(a, b) for a, b in itertools.combinations(sub, 2)):
                best = r
                break
    return best


def oracle_max_clique(g):
    """Exhaustive subset scan."""
    best = 0
    labels = list(g.labels)
    for r in range(len(labels), 0, -1):
        if r <= best:
            break
        for sub in itertools.combinations(labels, r):
            if all(g.has_edge(a, b) for a, b in itertools.combinations(sub, 2)):
                best = r
                break
    return best


def oracle_k_colorable(g, k):
    """Exhaustive assignment scan."""
    n = g.n
    if n == 0:
        return True
    edges = [(g.index(a), g.index(b)) for a, b in g.edges()]
    for assignment in itertools.product(range(k), repeat=n):
        if all(assignment[a] != assignment[b] for a, b in edges):
            return True
    return False


def oracle_multipartite_parts(g):
    """Complement rule done naively on explicit edge sets."""
    comp_edges = [
        [a, b]
        for a, b in itertools.combinations(g.labels, 2)
        if not g.has_edge(a, b)
    ]
    cg = build_graph(g.labels, comp_edges)
    if not oracle_is_union_of_cliques(cg):
        return None
    return sorted(len(c) for c in oracle_components(cg))
