"""Executable graph-theoretic criteria for prime graphs of finite groups.

Three families of checks:

* the non-neighbours of the vertex 2 in the prime graph of any group of
  even order form a union of cliques (verified, with witness on failure);
* a strongly regular prime graph is the complement of a triangle-free
  strongly regular graph or a complete multipartite graph with all parts
  of size 2 (classifier; "candidate" verdicts never assert existence);
* realizability rules for complete multipartite graphs and the solvable
  criterion (the complement must be 3-colourable and triangle-free).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .families import pgl2_spectrum
from .graph import (
    GkGraph,
    SrgParameters,
    complement,
    complete_multipartite_parts,
    connected_components,
    independence_number,
    independence_number_at,
    induced_subgraph,
    is_k_colorable,
    is_triangle_free,
    is_union_of_cliques,
    srg_parameters,
    _induced_path3,
)
from .numtheory import is_prime, prime_divisors
from .spectrum import gk_graph_of_spectrum
from . import kernels


class MissingVertexTwoError(ValueError):
    """The graph has no vertex 2 (prime graph of an odd-order group)."""


ODD_ORDER_NOTE = "no vertex 2: odd order, solvable by the Feit-Thompson theorem"

# SRG classification verdicts
NOT_SRG = "not_srg"
COMPLEMENT_TRIANGLE_FREE = "complement_triangle_free_srg_candidate"
PARTS_OF_TWO = "complete_multipartite_parts_of_two"
RULED_OUT = "ruled_out"

# multipartite realizability verdicts
REALIZABLE_SOLVABLE = "realizable_solvable"
REALIZABLE = "realizable"
NOT_REALIZABLE = "not_realizable"
OPEN = "open"

# ... and the rules that can decide them
RULE_ALL_PARTS_GE3 = "all_parts_at_least_3"
RULE_BIPARTITE_TABLE = "bipartite_small_sum_table"
RULE_ALL_PARTS_LE2 = "all_parts_at_most_2"
RULE_UNDECIDED = "no_applicable_rule"


@dataclass(frozen=True)
class SrgVerdict:
    verdict: str
    parameters: Optional[SrgParameters] = None
    complement_parameters: Optional[SrgParameters] = None
    parts: Optional[tuple[int, ...]] = None
    witness: Optional[tuple[int, ...]] = None  # complement triangle when ruled out

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "parameters": list(self.parameters.as_tuple()) if self.parameters else None,
            "complement_parameters": (
                list(self.complement_parameters.as_tuple())
                if self.complement_parameters else None
            ),
            "parts": list(self.parts) if self.parts is not None else None,
            "witness": list(self.witness) if self.witness is not None else None,
        }


@dataclass(frozen=True)
class MultipartiteVerdict:
    verdict: str
    rule: str
    parts: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"verdict": self.verdict, "rule": self.rule, "parts": list(self.parts)}


@dataclass(frozen=True)
class Pgl2Witness:
    p: int
    m: int
    q: int
    holds: bool
    non_neighbors: tuple[int, ...]
    expected: tuple[int, ...]  # primes dividing (q - 1)(q + 1)
    sets_match: bool
    connected: bool
    complete: bool


@dataclass(frozen=True)
class AnalysisReport:
    name: str
    vertices: tuple[int, ...]
    s: int
    t: int
    t_at_2: Optional[int]
    tau: Optional[tuple[int, ...]]
    tau_union_of_cliques: Optional[bool]
    tau_witness: Optional[tuple[int, int, int]]
    srg: SrgVerdict
    multipartite_parts: Optional[tuple[int, ...]]
    solvable_realizable: bool
    note: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "report_version": 1,
            "name": self.name,
            "vertices": list(self.vertices),
            "s": self.s,
            "t": self.t,
            "t_at_2": self.t_at_2,
            "tau": list(self.tau) if self.tau is not None else None,
            "tau_union_of_cliques": self.tau_union_of_cliques,
            "tau_witness": list(self.tau_witness) if self.tau_witness else None,
            "srg": self.srg.to_dict(),
            "multipartite_parts": (
                list(self.multipartite_parts)
                if self.multipartite_parts is not None else None
            ),
            "solvable_realizable": self.solvable_realizable,
            "note": self.note,
        }


def non_neighbors_of_two(g: GkGraph) -> set[int]:
    """The vertices other than 2 that are not adjacent to 2."""
    if 2 not in g.labels:
        raise MissingVertexTwoError("graph has no vertex 2")
    return set(g.labels) - g.neighbors(2) - {2}


def check_tau_union_of_cliques(g: GkGraph) -> tuple[bool, Optional[tuple[int, int, int]]]:
    """Check that the non-neighbours of 2 induce a union of cliques.

    Prime graphs of finite groups always pass.  On failure the witness is
    an induced 3-vertex path (end, middle, end) inside that set.
    """
    tau = non_neighbors_of_two(g)
    witness = _induced_path3(induced_subgraph(g, tau))
    return (witness is None, witness)


def classify_srg(g: GkGraph) -> SrgVerdict:
    """Decide which strongly-regular shape, if any, a graph falls into.

    A strongly regular graph can only be the prime graph of a group if it
    is a complete multipartite graph with all parts of size 2 or the
    complement of a triangle-free strongly regular graph; anything else
    strongly regular is ruled out.  "Candidate" does not assert that a
    realizing group exists.
    """
    params = srg_parameters(g)
    if params is None:
        return SrgVerdict(NOT_SRG)
    parts = complete_multipartite_parts(g)
    if parts is not None and all(x == 2 for x in parts):
        # checked before the complement branch: here the complement is a
        # perfect matching, a union of cliques rather than an SRG
        return SrgVerdict(PARTS_OF_TWO, parameters=params, parts=tuple(parts))
    comp = complement(g)
    comp_params = srg_parameters(comp)
    if comp_params is not None and is_triangle_free(comp):
        return SrgVerdict(
            COMPLEMENT_TRIANGLE_FREE,
            parameters=params,
            complement_parameters=comp_params,
        )
    triangle = kernels.find_triangle(comp.rows)
    witness = tuple(comp.labels[i] for i in triangle) if triangle else None
    return SrgVerdict(
        RULED_OUT,
        parameters=params,
        parts=tuple(parts) if parts is not None else None,
        witness=witness,
    )


def multipartite_realizability(parts) -> MultipartiteVerdict:
    """Can a complete multipartite graph with these parts be a prime graph?

    Rules, in order:
      * two or more parts, all of size >= 3: impossible;
      * exactly two parts (n, m): possible iff n + m <= 6 and (n, m) != (3, 3)
        (the complete bipartite classification);
      * all parts of size <= 2: realizable by a solvable group (the
        complement is 2-colourable and triangle-free);
      * anything else is undecided here.

    A single part of size >= 3 is an edgeless graph, which can be a prime
    graph (PSL2(7) gives three isolated vertices), so the first rule
    deliberately requires at least two parts.
    """
    sizes = tuple(sorted(parts))
    if not sizes:
        raise ValueError("at least one part required")
    if any(not isinstance(x, int) or isinstance(x, bool) or x < 1 for x in sizes):
        raise ValueError(f"part sizes must be positive integers, got {sizes}")
    if len(sizes) >= 2 and all(x >= 3 for x in sizes):
        return MultipartiteVerdict(NOT_REALIZABLE, RULE_ALL_PARTS_GE3, sizes)
    if len(sizes) == 2:
        n, m = sizes
        ok = n + m <= 6 and (n, m) != (3, 3)
        return MultipartiteVerdict(
            REALIZABLE if ok else NOT_REALIZABLE, RULE_BIPARTITE_TABLE, sizes
        )
    if all(x <= 2 for x in sizes):
        return MultipartiteVerdict(REALIZABLE_SOLVABLE, RULE_ALL_PARTS_LE2, sizes)
    return MultipartiteVerdict(OPEN, RULE_UNDECIDED, sizes)


def solvable_realizable(g: GkGraph) -> bool:
    """Whether g is the prime graph of some solvable group.

    Holds exactly when the complement is triangle-free and 3-colourable.
    """
    comp = complement(g)
    return is_triangle_free(comp) and (comp.n == 0 or is_k_colorable(comp, 3))


def pgl2_witness(p: int, m: int) -> Pgl2Witness:
    """Check the PGL2(p^m) witness for a connected, non-clique non-neighbour set.

    For odd primes p the set of vertices non-adjacent to p in the prime
    graph of PGL2(p^m) is the set of primes dividing (q-1)(q+1), q = p^m.
    This verifies that equality and reports whether the induced subgraph
    is connected and not complete; both hold for every m >= 5 (for small m
    the set can degenerate to a clique, hence "witness", never "assume").
    """
    if p % 2 == 0 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    q = p ** m
    if q > 10 ** 6:
        raise ValueError(f"p^m must be <= 10^6, got {q}")
    g = gk_graph_of_spectrum(pgl2_spectrum(q))
    non_nb = sorted(set(g.labels) - g.neighbors(p) - {p})
    expected = sorted(prime_divisors(q - 1) | prime_divisors(q + 1))
    sets_match = non_nb == expected
    sub = induced_subgraph(g, non_nb)
    connected = len(connected_components(sub)) <= 1
    complete = all(
        r.bit_count() == sub.n - 1 for r in sub.rows
    ) if sub.n else True
    holds = sets_match and connected and not complete
    return Pgl2Witness(
        p=p, m=m, q=q, holds=holds,
        non_neighbors=tuple(non_nb), expected=tuple(expected),
        sets_match=sets_match, connected=connected, complete=complete,
    )


def analyze(g: GkGraph, name: str) -> AnalysisReport:
    """Run every check on one graph and collect the verdicts."""
    s = len(connected_components(g))
    t = independence_number(g)
    if 2 in g.labels:
        t_at_2 = independence_number_at(g, 2)
        tau = tuple(sorted(non_neighbors_of_two(g)))
        tau_ok, tau_witness = check_tau_union_of_cliques(g)
        note = None
    else:
        t_at_2 = None
        tau = None
        tau_ok = None
        tau_witness = None
        note = ODD_ORDER_NOTE
    parts = complete_multipartite_parts(g)
    return AnalysisReport(
        name=name,
        vertices=g.labels,
        s=s,
        t=t,
        t_at_2=t_at_2,
        tau=tau,
        tau_union_of_cliques=tau_ok,
        tau_witness=tau_witness,
        srg=classify_srg(g),
        multipartite_parts=tuple(parts) if parts is not None else None,
        solvable_realizable=solvable_realizable(g),
        note=note,
    )
