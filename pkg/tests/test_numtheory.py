"""Number theory primitives, including the divisor facts about 2^l +- 1
that drive the period-divides-degree argument."""

import random
from math import gcd

import pytest

from ratcos.errors import CapExceededError
from ratcos.numtheory import (
    FactoredInteger,
    divisors,
    euler_phi,
    factorize,
    is_probable_prime,
    moebius,
    mult_order,
    p_adic_valuation,
    totient_summatory,
)


def phi_by_counting(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


class TestFactorize:
    def test_small(self):
        assert factorize(15).factors == ((3, 1), (5, 1))

    def test_two_pow_five_plus_one(self):
        assert factorize(2**5 + 1).factors == ((3, 1), (11, 1))

    def test_prime(self):
        assert factorize(257).factors == ((257, 1),)

    def test_one(self):
        assert factorize(1).factors == ()

    def test_reconstruction_and_primality_randomized(self):
        rng = random.Random(5)
        for _ in range(300):
            n = rng.randrange(2, 10**9)
            fac = factorize(n)
            prod = 1
            for p, e in fac.factors:
                assert is_probable_prime(p)
                prod *= p**e
            assert prod == n

    def test_large_semiprime(self):
        p, q = 1000003, 1000033
        assert factorize(p * q).factors == ((p, 1), (q, 1))

    def test_validation(self):
        with pytest.raises(ValueError):
            FactoredInteger(12, ((2, 1), (3, 1)))
        with pytest.raises(ValueError):
            FactoredInteger(12, ((3, 1), (2, 2)))

    def test_cap_refuses_big_composite(self):
        huge_composite = (2**127 - 1) ** 2
        with pytest.raises(CapExceededError):
            factorize(huge_composite)

    def test_cap_allows_certified_prime(self):
        # primes above the cap are fine; only opaque composites are refused
        assert factorize(2**127 - 1).factors == ((2**127 - 1, 1),)

    def test_divisors(self):
        assert divisors(12) == [1, 2, 3, 4, 6, 12]
        assert factorize(1).divisors() == [1]


class TestPhiMu:
    def test_phi_examples(self):
        assert euler_phi(1) == 1
        assert euler_phi(5) == 4
        assert euler_phi(12) == 4

    def test_phi_matches_counting(self):
        for n in range(1, 400):
            assert euler_phi(n) == phi_by_counting(n)

    def test_phi_multiplicative_randomized(self):
        rng = random.Random(9)
        tried = 0
        while tried < 200:
            a = rng.randrange(2, 10**4)
            b = rng.randrange(2, 10**4)
            if gcd(a, b) != 1:
                continue
            tried += 1
            assert euler_phi(a * b) == euler_phi(a) * euler_phi(b)

    def test_moebius_examples(self):
        assert moebius(1) == 1
        assert moebius(4) == 0
        assert moebius(6) == 1

    def test_moebius_divisor_sum(self):
        for n in range(1, 10001):
            total = sum(moebius(d) for d in divisors(n))
            assert total == (1 if n == 1 else 0)


class TestValuationOrder:
    def test_valuation_examples(self):
        assert p_adic_valuation(3, 2**9 + 1) == 3
        assert p_adic_valuation(3, 2**25 + 1) == 1
        assert p_adic_valuation(2, 8) == 3

    def test_valuation_errors(self):
        with pytest.raises(ValueError):
            p_adic_valuation(3, 0)
        with pytest.raises(ValueError):
            p_adic_valuation(4, 12)

    def test_order_examples(self):
        assert mult_order(2, 7) == 3
        assert mult_order(2, 3) == 2
        assert mult_order(1, 97) == 1

    def test_order_requires_coprime(self):
        with pytest.raises(ValueError):
            mult_order(6, 9)

    def test_order_divides_phi_randomized(self):
        rng = random.Random(21)
        tried = 0
        while tried < 200:
            n = rng.randrange(3, 5000)
            a = rng.randrange(2, n)
            if gcd(a, n) != 1:
                continue
            tried += 1
            r = mult_order(a, n)
            assert pow(a, r, n) == 1
            assert euler_phi(n) % r == 0
            # minimality by brute force on small moduli
            if n < 200:
                for s in range(1, r):
                    assert pow(a, s, n) != 1


class TestTotientSummatory:
    def test_examples(self):
        assert totient_summatory(1) == 1
        assert totient_summatory(8) == 22
        assert totient_summatory(32) == 324

    def test_matches_counting_oracle(self):
        for m in (5, 17, 50):
            assert totient_summatory(m) == sum(phi_by_counting(n) for n in range(1, m + 1))


class TestDivisorFacts:
    """Congruence and valuation facts about divisors of 2^l +- 1."""

    def test_fermat_prime_divisors_congruence(self):
        for k in (2, 3, 4):
            n = 2 ** (2**k) + 1
            for q in factorize(n).primes():
                assert q % 2 ** (k + 2) == 1

    @pytest.mark.parametrize("p", [3, 5, 7])
    @pytest.mark.parametrize("k", [1, 2])
    def test_new_divisors_of_mersenne_side(self, p, k):
        n = 2 ** (p**k) - 1
        prev = 2 ** (p ** (k - 1)) - 1
        for q in factorize(n).primes():
            if prev % q != 0:
                assert q % (2 * p**k) == 1

    @pytest.mark.parametrize("p", [3, 5, 7])
    @pytest.mark.parametrize("k", [1, 2])
    def test_new_divisors_of_plus_side(self, p, k):
        n = 2 ** (p**k) + 1
        prev = 2 ** (p ** (k - 1)) + 1
        for q in factorize(n).primes():
            if prev % q != 0:
                assert q % (2 * p**k) == 1

    def test_valuation_of_three_power_side(self):
        for k in (1, 2, 3):
            assert p_adic_valuation(3, 2 ** (3**k) + 1) == k + 1
        for p in (5, 7, 11):
            for k in (1, 2):
                assert p_adic_valuation(3, 2 ** (p**k) + 1) == 1
        for p in (3, 5, 7, 11):
            for k in (1, 2):
                assert p_adic_valuation(3, 2 ** (p**k) - 1) == 0
