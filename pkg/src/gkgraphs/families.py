"""Built-in spectrum generators and externally tabulated spectra.

Covers symmetric and alternating groups (element orders are lcms over
cycle-type partitions, with a parity constraint in the alternating case),
the degree-2 projective groups PSL2(q)/PGL2(q), a brute-force matrix
enumeration oracle for small PSL2, and JSON spectrum files for groups
whose spectra are taken as input data (e.g. sporadic groups).
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional

from .numtheory import factorize
from .spectrum import Spectrum, normalize_spectrum, spectrum_from_json_dict

N_MAX = 200
Q_MAX = 10 ** 6

# matrix-oracle range: prime powers with at most 13^3 - 13 group elements
ORACLE_Q = (4, 5, 7, 8, 9, 11, 13)

DATA_DIR_ENV = "GK_DATA_DIR"


def _primes_upto(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, int(n ** 0.5) + 1):
        if sieve[p]:
            sieve[p * p:: p] = bytearray(len(range(p * p, n + 1, p)))
    return [i for i, b in enumerate(sieve) if b]


def _maximal_orders(n: int, alternating: bool) -> list[int]:
    """Divisibility-maximal element orders of Sym_n (or Alt_n).

    m is an element order of Sym_n iff the prime powers in m sum to at
    most n (put one cycle per prime power, pad with fixed points).  In
    Alt_n an even m additionally pays a 2-point charge: the cheapest
    cycle types realising an even order are odd permutations, and
    appending a 2-cycle (2 divides m) is the cheapest parity repair.
    The search walks all admissible prime-power supports and keeps the
    orders with no affordable single-prime extension.
    """
    penalty = 2 if alternating else 0
    ps = _primes_upto(n)
    out: list[int] = []
    used: list[tuple[int, int]] = []  # (prime, its power in m)

    def charged(cost: int, even: bool) -> int:
        return cost + (penalty if even else 0)

    def is_maximal(cost: int, even: bool) -> bool:
        room = n - charged(cost, even)
        for p, pe in used:
            if pe * (p - 1) <= room:  # p^e -> p^(e+1)
                return False
        used_primes = {p for p, _ in used}
        if 2 not in used_primes and 2 + penalty <= room:
            return False
        for p in ps[1:]:
            if p not in used_primes:
                return p > room
        return True

    def dfs(j0: int, m: int, cost: int, even: bool) -> None:
        for j in range(j0, len(ps)):
            p = ps[j]
            child_even = even or p == 2
            if charged(cost + p, child_even) > n:
                if p == 2:
                    continue  # an odd prime may still fit without the parity charge
                break
            pe = p
            while charged(cost + pe, child_even) <= n:
                used.append((p, pe))
                dfs(j + 1, m * pe, cost + pe, child_even)
                used.pop()
                pe *= p
        if is_maximal(cost, even):
            out.append(m)

    dfs(0, 1, 0, False)
    return sorted(out)


def sym_spectrum(n: int) -> Spectrum:
    """Maximal element orders of the symmetric group on n letters."""
    if not 2 <= n <= N_MAX:
        raise ValueError(f"sym_spectrum requires 2 <= n <= {N_MAX}, got {n}")
    return Spectrum(f"Sym({n})", tuple(_maximal_orders(n, alternating=False)))


def alt_spectrum(n: int) -> Spectrum:
    """Maximal element orders of the alternating group on n letters."""
    if not 2 <= n <= N_MAX:
        raise ValueError(f"alt_spectrum requires 2 <= n <= {N_MAX}, got {n}")
    return Spectrum(f"Alt({n})", tuple(_maximal_orders(n, alternating=True)))


def _prime_power(q: int) -> tuple[int, int]:
    fact = factorize(q)
    if len(fact) != 1:
        raise ValueError(f"{q} is not a prime power")
    return fact[0]


def is_prime_power(q: int) -> bool:
    """Whether q = p^k for a prime p and k >= 1."""
    return q >= 2 and len(factorize(q)) == 1


def psl2_spectrum(q: int) -> Spectrum:
    """Maximal element orders of PSL2(q).

    For even q the orders divide one of 2, q - 1, q + 1; for odd q one of
    p, (q - 1)/2, (q + 1)/2 where p is the characteristic.  The matrix
    oracle (enumerate_psl2_orders) certifies this for every q it covers.
    """
    if not 3 <= q <= Q_MAX:
        raise ValueError(f"psl2_spectrum requires 3 <= q <= {Q_MAX}, got {q}")
    p, _ = _prime_power(q)
    if q % 2 == 0:
        tops = [2, q - 1, q + 1]
    else:
        tops = [p, (q - 1) // 2, (q + 1) // 2]
    return normalize_spectrum(f"PSL2({q})", tops)


def pgl2_spectrum(q: int) -> Spectrum:
    """Maximal element orders of PGL2(q): divisors of p, q - 1 and q + 1."""
    if not 3 <= q <= Q_MAX:
        raise ValueError(f"pgl2_spectrum requires 3 <= q <= {Q_MAX}, got {q}")
    p, _ = _prime_power(q)
    return normalize_spectrum(f"PGL2({q})", [p, q - 1, q + 1])


# ---------------------------------------------------------------------------
# Brute-force oracle: element orders of PSL2(q) by matrix enumeration.

# reduction rules x^k -> low-degree polynomial, as coefficient tuples
_REDUCTION = {
    4: (2, 2, (1, 1)),     # GF(4)  = GF(2)[x] / (x^2 + x + 1)
    8: (2, 3, (1, 1, 0)),  # GF(8)  = GF(2)[x] / (x^3 + x + 1)
    9: (3, 2, (2, 0)),     # GF(9)  = GF(3)[x] / (x^2 + 1)
}


def _field_tables(q: int):
    """Addition/multiplication tables for the q-element field.

    Elements are 0..q-1; for prime powers the base-p digits of the index
    are the polynomial coefficients (least significant first).
    """
    p, k = _prime_power(q)
    if k == 1:
        add = [[(a + b) % p for b in range(p)] for a in range(p)]
        mul = [[a * b % p for b in range(p)] for a in range(p)]
    else:
        red = _REDUCTION[q][2]

        def digits(v: int) -> list[int]:
            return [v // p ** i % p for i in range(k)]

        def undigits(ds) -> int:
            return sum(d * p ** i for i, d in enumerate(ds))

        def polymul(a: int, b: int) -> int:
            da, db = digits(a), digits(b)
            prod = [0] * (2 * k - 1)
            for i, x in enumerate(da):
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
            for i in range(2 * k - 2, k - 1, -1):
                c = prod[i]
                if c:
                    prod[i] = 0
                    for j, r in enumerate(red):
                        prod[i - k + j] = (prod[i - k + j] + c * r) % p
            return undigits(prod[:k])

        add = [
            [undigits([(x + y) % p for x, y in zip(digits(a), digits(b))])
             for b in range(q)]
            for a in range(q)
        ]
        mul = [[polymul(a, b) for b in range(q)] for a in range(q)]
    neg = [0] * q
    inv = [0] * q
    for a in range(q):
        for b in range(q):
            if add[a][b] == 0:
                neg[a] = b
            if mul[a][b] == 1:
                inv[a] = b
    return add, mul, neg, inv


def enumerate_psl2_orders(q: int) -> Spectrum:
    """Element orders of PSL2(q) from scratch, for q in ORACLE_Q.

    Enumerates the determinant-1 matrices over the q-element field and
    computes each element's order in the quotient by the centre {I, -I}.
    Independent of psl2_spectrum; kept as its correctness oracle.
    """
    if q not in ORACLE_Q:
        raise ValueError(f"matrix oracle supports q in {ORACLE_Q}, got {q}")
    add, mul, neg, inv = _field_tables(q)

    def matmul(A, B):
        a, b, c, d = A
        e, f, g, h = B
        return (
            add[mul[a][e]][mul[b][g]], add[mul[a][f]][mul[b][h]],
            add[mul[c][e]][mul[d][g]], add[mul[c][f]][mul[d][h]],
        )

    identity = (1, 0, 0, 1)
    neg_identity = (neg[1], 0, 0, neg[1])
    orders = set()
    mats = []
    for a in range(1, q):
        for b in range(q):
            for c in range(q):
                # det = a*d - b*c = 1 fixes d
                mats.append((a, b, c, mul[inv[a]][add[1][mul[b][c]]]))
    for b in range(1, q):
        c = neg[inv[b]]  # a = 0 forces b*c = -1, d is free
        for d in range(q):
            mats.append((0, b, c, d))
    for mat in mats:
        power = mat
        order = 1
        while power != identity and power != neg_identity:
            power = matmul(power, mat)
            order += 1
        orders.add(order)
    return normalize_spectrum(f"PSL2({q})", sorted(orders))


# ---------------------------------------------------------------------------
# External spectrum files and the bundled data set.

def load_spectrum_file(path) -> Spectrum:
    """Load and normalize a spectrum JSON file."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: malformed JSON ({exc})") from exc
    try:
        return spectrum_from_json_dict(data)
    except ValueError as exc:
        raise ValueError(f"{path}: {exc}") from exc


def bundled_spectra() -> list[Spectrum]:
    """Spectra shipped with the package (override dir via GK_DATA_DIR)."""
    override = os.environ.get(DATA_DIR_ENV)
    if override:
        paths = sorted(Path(override).glob("*.json"))
        return [load_spectrum_file(p) for p in paths]
    root = resources.files(__package__).joinpath("data")
    out = []
    for entry in sorted(root.iterdir(), key=lambda e: e.name):
        if entry.name.endswith(".json"):
            out.append(spectrum_from_json_dict(json.loads(entry.read_text())))
    return out


# ---------------------------------------------------------------------------
# Descriptors tying a family tag and parameters together (CLI currency).

KINDS = ("alt", "sym", "psl2", "pgl2", "external")


@dataclass(frozen=True)
class GroupDescriptor:
    kind: str
    n: Optional[int] = None
    q: Optional[int] = None
    path: Optional[str] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}, expected one of {KINDS}")
        if self.kind in ("alt", "sym"):
            if self.n is None:
                raise ValueError(f"kind {self.kind!r} requires n")
            if not 2 <= self.n <= N_MAX:
                raise ValueError(f"n must be in [2, {N_MAX}], got {self.n}")
        elif self.kind in ("psl2", "pgl2"):
            if self.q is None:
                raise ValueError(f"kind {self.kind!r} requires q")
            if not 3 <= self.q <= Q_MAX:
                raise ValueError(f"q must be in [3, {Q_MAX}], got {self.q}")
            _prime_power(self.q)
        else:
            if not self.path:
                raise ValueError("kind 'external' requires a file path")

    def label(self) -> str:
        if self.kind == "alt":
            return f"Alt({self.n})"
        if self.kind == "sym":
            return f"Sym({self.n})"
        if self.kind == "psl2":
            return f"PSL2({self.q})"
        if self.kind == "pgl2":
            return f"PGL2({self.q})"
        return Path(self.path).stem

    def spectrum(self) -> Spectrum:
        if self.kind == "alt":
            return alt_spectrum(self.n)
        if self.kind == "sym":
            return sym_spectrum(self.n)
        if self.kind == "psl2":
            return psl2_spectrum(self.q)
        if self.kind == "pgl2":
            return pgl2_spectrum(self.q)
        return load_spectrum_file(self.path)
