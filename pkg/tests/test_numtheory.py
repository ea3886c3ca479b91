"""Number-theory layer: primality, factoring, orders, primitive divisors."""

import random

import pytest
import sympy

from gkgraphs.numtheory import (
    MAX_INPUT,
    eta,
    factorize,
    is_prime,
    mult_order,
    nu,
    prime_divisors,
    primitive_prime_divisors,
    zsigmondy_exists,
)


def lucas_lehmer(p):
    """Independent Mersenne-prime certificate for 2^p - 1 (odd prime p)."""
    m = 2 ** p - 1
    s = 4
    for _ in range(p - 2):
        s = (s * s - 2) % m
    return s == 0


class TestIsPrime:
    def test_small_values(self):
        assert is_prime(2)
        assert not is_prime(1)
        assert not is_prime(0)
        small = [n for n in range(100) if is_prime(n)]
        assert small == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
                         47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97]

    def test_mersenne_61(self):
        assert lucas_lehmer(61)  # oracle for the frozen expectation below
        assert is_prime(2 ** 61 - 1)
        assert not is_prime(2 ** 62 - 1)

    def test_carmichael_and_strong_pseudoprimes(self):
        for n in (561, 1105, 1729, 3215031751, 3474749660383):
            assert not is_prime(n)

    def test_agrees_with_sympy_on_random_values(self):
        rng = random.Random(7)
        for _ in range(300):
            n = rng.randrange(2, 2 ** 62)
            assert is_prime(n) == sympy.isprime(n), n

    def test_range_check(self):
        with pytest.raises(ValueError):
            is_prime(-1)
        with pytest.raises(ValueError):
            is_prime(2 ** 63 + 1)


class TestFactorize:
    def test_examples(self):
        assert factorize(1) == []
        assert factorize(63) == [(3, 2), (7, 1)]
        assert factorize(242) == [(2, 1), (11, 2)]

    def test_reconstruction_exhaustive(self):
        for n in range(1, 20000):
            pairs = factorize(n)
            prod = 1
            for p, e in pairs:
                prod *= p ** e
            assert prod == n
            assert all(is_prime(p) for p, _ in pairs)
            assert [p for p, _ in pairs] == sorted({p for p, _ in pairs})

    def test_against_sympy_random_63bit(self):
        rng = random.Random(11)
        for _ in range(60):
            n = rng.randrange(2, 2 ** 63)
            assert dict(factorize(n)) == sympy.factorint(n), n

    def test_hard_semiprimes(self):
        # both factors above the trial-division bound
        a, b = 2_147_483_647, 2_147_483_629  # two primes near 2^31
        assert factorize(a * b) == sorted([(b, 1), (a, 1)])
        p = 1_000_003
        assert factorize(p * p) == [(p, 2)]

    def test_range_check(self):
        with pytest.raises(ValueError):
            factorize(0)
        with pytest.raises(ValueError):
            factorize(2 ** 63 + 2)

    def test_prime_divisors(self):
        assert prime_divisors(1) == set()
        assert prime_divisors(244) == {2, 61}
        assert prime_divisors(360) == {2, 3, 5}


class TestMultOrder:
    def test_examples(self):
        assert mult_order(7, 2) == 3
        assert mult_order(2, 7) == 2  # 7 = 3 (mod 4)
        assert mult_order(3, 4) == 1
        assert mult_order(2, 5) == 1  # 5 = 1 (mod 4)

    def test_odd_r_against_naive_loop(self):
        for r in (3, 5, 7, 11, 13, 17, 19, 23, 97, 101):
            for q in range(2, 50):
                if q % r == 0:
                    continue
                naive = 1
                acc = q % r
                while acc != 1:
                    acc = acc * q % r
                    naive += 1
                assert mult_order(r, q) == naive, (r, q)

    def test_order_divides_r_minus_1(self):
        for r in (3, 5, 7, 11, 13, 31, 61, 127):
            for q in (2, 3, 5, 10, -2, -7):
                if q % r == 0 or abs(q) <= 1:
                    continue
                e = mult_order(r, q)
                assert pow(q, e, r) == 1
                assert (r - 1) % e == 0
                assert all(pow(q, d, r) != 1 for d in range(1, e))

    def test_errors(self):
        with pytest.raises(ValueError):
            mult_order(7, 14)  # r divides q
        with pytest.raises(ValueError):
            mult_order(2, 6)  # even q with r = 2 rejected
        with pytest.raises(ValueError):
            mult_order(6, 5)  # r not prime
        with pytest.raises(ValueError):
            mult_order(3, 1)  # |q| <= 1


class TestNuEta:
    def test_examples(self):
        assert nu(4) == 4
        assert nu(6) == 3
        assert nu(5) == 10
        assert eta(5) == 5
        assert eta(6) == 3
        assert eta(1) == 1

    def test_case_tables_direct(self):
        for m in range(1, 10001):
            if m % 4 == 0:
                assert nu(m) == m
            elif m % 4 == 2:
                assert nu(m) == m // 2
            else:
                assert nu(m) == 2 * m
            assert eta(m) == (m if m % 2 == 1 else m // 2)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            nu(0)
        with pytest.raises(ValueError):
            eta(0)


class TestPrimitivePrimeDivisors:
    def test_examples(self):
        assert primitive_prime_divisors(2, 6) == set()
        assert primitive_prime_divisors(2, 4) == {5}
        assert primitive_prime_divisors(3, 1) == set()
        assert primitive_prime_divisors(2, 1) == set()
        assert primitive_prime_divisors(5, 3) == {31}

    def test_members_are_primitive(self):
        for q in (2, 3, 5, 6, 10):
            for i in range(1, 15):
                if q ** i - 1 >= MAX_INPUT:
                    break
                divs = primitive_prime_divisors(q, i)
                assert divs <= prime_divisors(q ** i - 1)
                for r in divs:
                    assert mult_order(r, q) == i

    def test_overflow_rejected(self):
        with pytest.raises(OverflowError):
            primitive_prime_divisors(2, 64)
        with pytest.raises(ValueError):
            primitive_prime_divisors(1, 3)
        with pytest.raises(ValueError):
            primitive_prime_divisors(2 ** 31 + 1, 1)

    def test_zsigmondy_examples(self):
        assert not zsigmondy_exists(2, 1)
        assert not zsigmondy_exists(3, 1)
        assert not zsigmondy_exists(2, 6)
        assert zsigmondy_exists(5, 3)
        assert zsigmondy_exists(2, 2)
        assert zsigmondy_exists(3, 2)
