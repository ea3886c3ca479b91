"""Exact integer arithmetic for prime-graph work, capped at 64-bit inputs.

Everything here is deterministic: primality testing uses a fixed
Miller-Rabin witness set that is exact below 3.3e24, and the factoring
fallback (Brent's cycle method) draws its parameters from a generator
seeded by the input, so repeated runs always agree.
"""

from __future__ import annotations

import random
from math import gcd, isqrt

MAX_INPUT = 2 ** 63

# Exact for all n < 3,317,044,064,679,887,385,961,981 (far beyond 2^63).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_TRIAL_LIMIT = 1_000_000

# 2/3/5 wheel: offsets between consecutive integers coprime to 30.
_WHEEL = (4, 2, 4, 2, 4, 6, 2, 6)

_RHO_SEED = 0x9E3779B97F4A7C15

# pairs (prime, exponent) with primes strictly increasing
Factorization = list[tuple[int, int]]


def is_prime(n: int) -> bool:
    """Deterministic primality test for 0 <= n <= 2^63."""
    if not 0 <= n <= MAX_INPUT:
        raise ValueError(f"is_prime requires 0 <= n <= 2^63, got {n}")
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int, rng: random.Random) -> int:
    """Return a non-trivial factor of an odd composite n."""
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(n: int) -> Factorization:
    """Prime factorization of 1 <= n <= 2^63 as sorted (prime, exponent) pairs.

    Trial division (2/3/5 wheel) below 10^6, then Miller-Rabin plus Brent
    splitting for whatever survives.  factorize(1) == [].
    """
    if not 1 <= n <= MAX_INPUT:
        raise ValueError(f"factorize requires 1 <= n <= 2^63, got {n}")
    counts: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            counts[p] = counts.get(p, 0) + 1
            n //= p
    if n > 1 and not is_prime(n):
        d = 7
        i = 0
        while d * d <= n and d < _TRIAL_LIMIT:
            if n % d == 0:
                e = 0
                while n % d == 0:
                    e += 1
                    n //= d
                counts[d] = e
                if n == 1 or is_prime(n):
                    break
            d += _WHEEL[i]
            i = (i + 1) % 8
    if n > 1:
        # everything small is gone: n is prime or a product of primes > 10^6
        pending = [n]
        while pending:
            m = pending.pop()
            if is_prime(m):
                counts[m] = counts.get(m, 0) + 1
                continue
            rng = random.Random(_RHO_SEED ^ m)
            d = _brent_rho(m, rng)
            pending.append(d)
            pending.append(m // d)
    return sorted(counts.items())


def prime_divisors(n: int) -> set[int]:
    """The set of prime divisors of n (empty for n = 1)."""
    return {p for p, _ in factorize(n)}


def mult_order(r: int, q: int) -> int:
    """Order of q in the multiplicative group mod the prime r.

    For r = 2 (q odd) the value is 1 when q = 1 (mod 4) and 2 otherwise,
    which is the convention that makes primitive-divisor bookkeeping for
    q^i - 1 uniform at the prime 2.
    """
    if abs(q) <= 1:
        raise ValueError(f"mult_order requires |q| > 1, got q={q}")
    if not is_prime(r):
        raise ValueError(f"mult_order requires prime r, got {r}")
    if q % r == 0:
        raise ValueError(f"order of {q} mod {r} undefined: {r} divides {q}")
    if r == 2:
        return 1 if q % 4 == 1 else 2
    order = r - 1
    for p, _ in factorize(r - 1):
        while order % p == 0 and pow(q, order // p, r) == 1:
            order //= p
    return order


def nu(m: int) -> int:
    """m for m = 0 (mod 4); m/2 for m = 2 (mod 4); 2m for odd m."""
    if m < 1:
        raise ValueError(f"nu requires m >= 1, got {m}")
    if m % 4 == 0:
        return m
    if m % 4 == 2:
        return m // 2
    return 2 * m


def eta(m: int) -> int:
    """m for odd m; m/2 for even m."""
    if m < 1:
        raise ValueError(f"eta requires m >= 1, got {m}")
    return m if m % 2 else m // 2


def primitive_prime_divisors(q: int, i: int) -> set[int]:
    """Primes r dividing q^i - 1 whose order mod q (mult_order) is exactly i."""
    if q <= 1 or q > 2 ** 31:
        raise ValueError(f"primitive_prime_divisors requires 1 < q <= 2^31, got {q}")
    if i < 1:
        raise ValueError(f"primitive_prime_divisors requires i >= 1, got {i}")
    value = q ** i - 1
    if value >= MAX_INPUT:
        raise OverflowError(f"{q}^{i} - 1 exceeds the 64-bit input cap")
    if value == 1:
        return set()
    return {r for r in prime_divisors(value) if mult_order(r, q) == i}


def zsigmondy_exists(q: int, m: int) -> bool:
    """Whether q^m - 1 has a primitive prime divisor.

    By the Bang-Zsigmondy theorem (with the mod-4 convention at the prime 2)
    this fails only for (q, m) in {(2, 1), (3, 1), (2, 6)}.
    """
    return bool(primitive_prime_divisors(q, m))
