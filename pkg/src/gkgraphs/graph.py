"""Simple labelled graphs on at most 64 vertices, with exact combinatorics.

Vertices carry positive integer labels (primes, when the graph is the
prime graph of a group, but any labels are accepted).  Adjacency is held
as one bitmask per vertex, which keeps the exact searches (components,
cliques, cocliques, colourings, strong-regularity scans) cheap.

Graphs are value objects: construction canonicalises, nothing mutates.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from . import kernels

MAX_VERTICES = 64


class DegenerateComplementError(ValueError):
    """Raised when complement parameters would describe a union of cliques."""


@dataclass(frozen=True)
class GkGraph:
    labels: tuple[int, ...]  # strictly increasing positive integers
    rows: tuple[int, ...]    # rows[i] = bitmask of neighbours of labels[i]

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self, label: int) -> int:
        try:
            i = self.labels.index(label)
        except ValueError:
            raise ValueError(f"label {label} is not a vertex") from None
        return i

    def has_edge(self, a: int, b: int) -> bool:
        return bool(self.rows[self.index(a)] >> self.index(b) & 1)

    def degree(self, label: int) -> int:
        return self.rows[self.index(label)].bit_count()

    def neighbors(self, label: int) -> set[int]:
        return _mask_labels(self.rows[self.index(label)], self.labels)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for i in range(self.n):
            above = self.rows[i] >> (i + 1)
            j = i + 1
            while above:
                if above & 1:
                    out.append((self.labels[i], self.labels[j]))
                above >>= 1
                j += 1
        return out


@dataclass(frozen=True)
class SrgParameters:
    """Parameters (v, k, lam, mu) of a strongly regular graph."""

    v: int
    k: int
    lam: int
    mu: int

    def __post_init__(self):
        if not 1 <= self.k <= self.v - 2:
            raise ValueError(f"need 1 <= k <= v - 2, got {self}")
        if self.lam < 0 or self.mu < 1:
            raise ValueError(f"need lam >= 0 and mu >= 1, got {self}")
        if (self.v - self.k - 1) * self.mu != self.k * (self.k - self.lam - 1):
            raise ValueError(f"(v-k-1)*mu != k*(k-lam-1) for {self}")

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.v, self.k, self.lam, self.mu)


def _mask_labels(mask: int, labels: Sequence[int]) -> set[int]:
    out = set()
    while mask:
        low = mask & -mask
        out.add(labels[low.bit_length() - 1])
        mask ^= low
    return out


def build_graph(labels: Iterable[int], edges: Iterable[Sequence[int]]) -> GkGraph:
    """Canonical graph from labels and unordered label pairs.

    Labels are sorted; duplicate edges collapse.  Rejects duplicate or
    non-positive labels, loops, dangling endpoints and > 64 vertices.
    """
    lab = list(labels)
    for x in lab:
        if not isinstance(x, int) or isinstance(x, bool) or x < 1:
            raise ValueError(f"vertex labels must be positive integers, got {x!r}")
    if len(set(lab)) != len(lab):
        raise ValueError("duplicate vertex label")
    if len(lab) > MAX_VERTICES:
        raise ValueError(f"at most {MAX_VERTICES} vertices supported, got {len(lab)}")
    lab.sort()
    pos = {x: i for i, x in enumerate(lab)}
    rows = [0] * len(lab)
    for e in edges:
        pair = list(e)
        if len(pair) != 2:
            raise ValueError(f"edge must have exactly two endpoints, got {pair!r}")
        a, b = pair
        if a == b:
            raise ValueError(f"loop at vertex {a}")
        if a not in pos or b not in pos:
            raise ValueError(f"edge ({a}, {b}) mentions a missing vertex")
        rows[pos[a]] |= 1 << pos[b]
        rows[pos[b]] |= 1 << pos[a]
    return GkGraph(tuple(lab), tuple(rows))


def complement(g: GkGraph) -> GkGraph:
    full = (1 << g.n) - 1
    rows = tuple(full & ~r & ~(1 << i) for i, r in enumerate(g.rows))
    return GkGraph(g.labels, rows)


def induced_subgraph(g: GkGraph, subset: Iterable[int]) -> GkGraph:
    sub = sorted(set(subset))
    old = [g.index(x) for x in sub]  # raises on foreign labels
    rows = []
    for i in old:
        r = 0
        for newj, oldj in enumerate(old):
            if g.rows[i] >> oldj & 1:
                r |= 1 << newj
        rows.append(r)
    return GkGraph(tuple(sub), tuple(rows))


def _component_masks(rows: Sequence[int], n: int) -> list[int]:
    masks = []
    unseen = (1 << n) - 1
    while unseen:
        start = unseen & -unseen
        comp = 0
        frontier = start
        while frontier:
            comp |= frontier
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= rows[low.bit_length() - 1]
                m ^= low
            frontier = nxt & ~comp
        masks.append(comp)
        unseen &= ~comp
    return masks


def connected_components(g: GkGraph) -> list[set[int]]:
    """Vertex sets of the components, ordered by smallest label."""
    return [_mask_labels(m, g.labels) for m in _component_masks(g.rows, g.n)]


def is_union_of_cliques(g: GkGraph) -> bool:
    """True iff every component is complete (no induced 3-vertex path)."""
    return _induced_path3(g) is None


def _induced_path3(g: GkGraph) -> Optional[tuple[int, int, int]]:
    """An induced path (a, mid, b) with a-mid, mid-b edges and a-b a non-edge."""
    for i in range(g.n):
        nb = g.rows[i]
        m = nb
        while m:
            low = m & -m
            j = low.bit_length() - 1
            missing = nb & ~g.rows[j] & ~low
            if missing:
                l = (missing & -missing).bit_length() - 1
                return (g.labels[j], g.labels[i], g.labels[l])
            m ^= low
    return None


def is_triangle_free(g: GkGraph) -> bool:
    return kernels.find_triangle(g.rows) is None


def complete_multipartite_parts(g: GkGraph) -> Optional[list[int]]:
    """Part sizes (ascending) if g is complete multipartite, else None.

    g is complete multipartite exactly when its complement is a union of
    cliques; the parts are the complement's components.
    """
    cg = complement(g)
    if not is_union_of_cliques(cg):
        return None
    return sorted(m.bit_count() for m in _component_masks(cg.rows, cg.n))


def independence_number(g: GkGraph) -> int:
    """Exact size of a maximum coclique (0 only for the empty vertex set)."""
    return kernels.max_clique_size(complement(g).rows)


def independence_number_at(g: GkGraph, v: int) -> int:
    """Exact size of a maximum coclique through the vertex labelled v."""
    cg = complement(g)
    i = cg.index(v)
    allowed = _mask_labels(cg.rows[i], cg.labels)
    return 1 + kernels.max_clique_size(induced_subgraph(cg, allowed).rows)


def is_k_colorable(g: GkGraph, k: int) -> bool:
    """Exact test for a proper vertex colouring with at most k colours."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if k >= g.n:
        return True
    return kernels.is_k_colorable(g.rows, k)


def srg_parameters(g: GkGraph) -> Optional[SrgParameters]:
    """Parameters if g is strongly regular, else None.

    Requires: connected, k-regular with 1 <= k <= v - 2, every adjacent
    pair with exactly lam common neighbours, every non-adjacent pair with
    exactly mu >= 1.  Complete and disconnected graphs are rejected (they
    leave mu vacuous or break connectivity).
    """
    v = g.n
    if v == 0:
        return None
    k = g.rows[0].bit_count()
    if any(r.bit_count() != k for r in g.rows):
        return None
    if not 1 <= k <= v - 2:
        return None
    if len(_component_masks(g.rows, v)) != 1:
        return None
    lam = mu = None
    for i in range(v):
        for j in range(i + 1, v):
            common = (g.rows[i] & g.rows[j]).bit_count()
            if g.rows[i] >> j & 1:
                if lam is None:
                    lam = common
                elif lam != common:
                    return None
            else:
                if mu is None:
                    mu = common
                elif mu != common:
                    return None
    if mu is None or mu < 1:
        # no non-adjacent pair cannot happen here (k <= v - 2 and regular),
        # but mu = 0 does: a connected graph of diameter > 2
        return None
    return SrgParameters(v, k, lam if lam is not None else 0, mu)


def complement_srg_parameters(p: SrgParameters) -> SrgParameters:
    """Parameters of the complement graph of a strongly regular graph.

    Raises DegenerateComplementError when the complement is a union of
    cliques (then it is not strongly regular and has no parameters).
    """
    v, k, lam, mu = p.as_tuple()
    ck = v - k - 1
    clam = v - 2 - 2 * k + mu
    cmu = v - 2 * k + lam
    try:
        return SrgParameters(v, ck, clam, cmu)
    except ValueError as exc:
        raise DegenerateComplementError(
            f"complement of SRG{p.as_tuple()} is a union of cliques"
        ) from exc


# ---------------------------------------------------------------------------
# JSON wire format: {"vertices": [int, ...], "edges": [[a, b], ...]}

def graph_to_json_dict(g: GkGraph) -> dict:
    return {
        "vertices": list(g.labels),
        "edges": [[a, b] for a, b in g.edges()],
    }


def graph_from_json_dict(data: object) -> GkGraph:
    if not isinstance(data, dict):
        raise ValueError("graph JSON must be an object")
    extra = set(data) - {"vertices", "edges"}
    if extra:
        raise ValueError(f"unknown graph fields: {sorted(extra)}")
    if "vertices" not in data or "edges" not in data:
        raise ValueError("graph JSON requires 'vertices' and 'edges'")
    vertices = data["vertices"]
    edges = data["edges"]
    if not isinstance(vertices, list) or not isinstance(edges, list):
        raise ValueError("'vertices' and 'edges' must be arrays")
    return build_graph(vertices, edges)


def graph_to_json(g: GkGraph) -> str:
    return json.dumps(graph_to_json_dict(g))
