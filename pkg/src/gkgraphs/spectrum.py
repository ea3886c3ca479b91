"""Element-order spectra, stored by their divisibility-maximal elements.

The full set of element orders of a finite group is closed under taking
divisors, so the antichain of maximal orders determines it.  All queries
(membership, prime graph construction) work directly on the antichain.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .graph import GkGraph, build_graph
from .numtheory import MAX_INPUT, prime_divisors


@dataclass(frozen=True)
class Spectrum:
    name: str
    maximal_orders: tuple[int, ...]  # ascending antichain under divisibility


def normalize_spectrum(name: str, orders) -> Spectrum:
    """Reduce an order list to its divisibility-maximal elements.

    Accepts any non-empty list of positive integers (a full divisor-closed
    spectrum works too); 1 survives only for the trivial group.
    """
    values = list(orders)
    if not values:
        raise ValueError("spectrum requires at least one order")
    for x in values:
        if not isinstance(x, int) or isinstance(x, bool) or x < 1:
            raise ValueError(f"orders must be positive integers, got {x!r}")
        if x > MAX_INPUT:
            raise ValueError(f"order {x} exceeds the 2^63 cap")
    distinct = sorted(set(values))
    maximal = [
        m for m in distinct
        if not any(other != m and other % m == 0 for other in distinct)
    ]
    return Spectrum(name, tuple(maximal))


def spectrum_contains(s: Spectrum, n: int) -> bool:
    """Whether n is an element order, i.e. divides some maximal order."""
    if n < 1:
        return False
    return any(m % n == 0 for m in s.maximal_orders)


def gk_graph_of_spectrum(s: Spectrum) -> GkGraph:
    """The prime graph: vertices are the primes dividing some order, and
    two primes r, s are adjacent iff r*s is an element order."""
    primes: set[int] = set()
    for m in s.maximal_orders:
        primes |= prime_divisors(m)
    vertices = sorted(primes)
    edges = [
        [r, t]
        for i, r in enumerate(vertices)
        for t in vertices[i + 1:]
        if spectrum_contains(s, r * t)
    ]
    return build_graph(vertices, edges)


# ---------------------------------------------------------------------------
# JSON wire format: {"name": str, "maximal_orders": [int, ...]}

def spectrum_to_json_dict(s: Spectrum) -> dict:
    return {"name": s.name, "maximal_orders": list(s.maximal_orders)}


def spectrum_from_json_dict(data: object) -> Spectrum:
    if not isinstance(data, dict):
        raise ValueError("spectrum JSON must be an object")
    extra = set(data) - {"name", "maximal_orders"}
    if extra:
        raise ValueError(f"unknown spectrum fields: {sorted(extra)}")
    if "name" not in data or "maximal_orders" not in data:
        raise ValueError("spectrum JSON requires 'name' and 'maximal_orders'")
    name = data["name"]
    if not isinstance(name, str):
        raise ValueError("'name' must be a string")
    orders = data["maximal_orders"]
    if not isinstance(orders, list):
        raise ValueError("'maximal_orders' must be an array")
    return normalize_spectrum(name, orders)


def spectrum_to_json(s: Spectrum) -> str:
    return json.dumps(spectrum_to_json_dict(s))
