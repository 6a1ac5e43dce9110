"""Polynomial core: arithmetic, division, gcd, resultants.

Expected values for the resultant tests were frozen from the Sylvester
determinant oracle below (exact fraction-free elimination), which stays
independent of the subresultant implementation under test.
"""

import random
from fractions import Fraction

import pytest

from ratcos.polycore import (
    IntPoly,
    RatPoly,
    parse_int_poly,
    poly_gcd,
    resultant,
    resultant_poly,
)

X = IntPoly([0, 1])


def rand_ipoly(rng, max_deg=8, max_c=1000):
    deg = rng.randrange(max_deg + 1)
    return IntPoly([rng.randint(-max_c, max_c) for _ in range(deg + 1)])


def sylvester_det(a: IntPoly, b: IntPoly) -> int:
    """Oracle: determinant of the Sylvester matrix of (a, b), a-rows first,
    via exact fraction Gaussian elimination."""
    m, n = a.degree, b.degree
    size = m + n
    if size == 0:
        return 1
    rows = []
    ad = list(reversed(a.coeffs))
    bd = list(reversed(b.coeffs))
    for i in range(n):
        rows.append([Fraction(0)] * i + [Fraction(c) for c in ad] + [Fraction(0)] * (n - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + [Fraction(c) for c in bd] + [Fraction(0)] * (m - 1 - i))
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if rows[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, size):
            if rows[r][col] != 0:
                factor = rows[r][col] * inv
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
    assert det.denominator == 1
    return int(det)


class TestArithmetic:
    def test_linear_product(self):
        assert IntPoly([1, 1]) * IntPoly([-2, 1]) == IntPoly([-2, -1, 1])

    def test_add_zero_identity(self):
        p = IntPoly([3, 0, -7, 2])
        assert p + IntPoly() == p

    def test_quartic_product(self):
        got = IntPoly([-1, 1, 1]) * IntPoly([-2, 1]) * IntPoly([1, 1])
        assert got == IntPoly([2, -1, -4, 0, 1])

    def test_degree_additivity(self):
        rng = random.Random(1)
        for _ in range(200):
            p, q = rand_ipoly(rng), rand_ipoly(rng)
            if not p.is_zero() and not q.is_zero():
                assert (p * q).degree == p.degree + q.degree

    def test_canonical_trailing_zeros(self):
        assert IntPoly([1, 2, 0, 0]).coeffs == (1, 2)
        assert IntPoly([0, 0]).is_zero()

    def test_ring_axioms_randomized(self):
        rng = random.Random(42)
        for _ in range(1100):
            p, q, r = (rand_ipoly(rng, 8, 1000) for _ in range(3))
            assert p + q == q + p
            assert p * q == q * p
            assert (p * q) * r == p * (q * r)
            assert p * (q + r) == p * q + p * r

    def test_rat_embedding_roundtrip(self):
        p = IntPoly([-2, 0, 1])
        assert p.to_rat().as_int_poly() == p
        with pytest.raises(ValueError):
            RatPoly([Fraction(1, 2)]).as_int_poly()

    def test_pow(self):
        p = IntPoly([1, 1])
        assert p**3 == IntPoly([1, 3, 3, 1])
        assert p**0 == IntPoly([1])


class TestDivision:
    def test_exact_division_paper_pair(self):
        num = IntPoly([2, -1, -4, 0, 1])
        den = IntPoly([-1, 1, 1])
        quot = num.exact_div(den)
        assert quot == IntPoly([-2, -1, 1])
        assert quot * den == num

    def test_divide_by_one(self):
        p = IntPoly([5, -3, 2])
        assert p.exact_div(IntPoly([1])) == p

    def test_rat_divmod_with_remainder(self):
        q, r = divmod(RatPoly([0, 0, 1]), RatPoly([-1, 1]))
        assert q == RatPoly([1, 1])
        assert r == RatPoly([1])

    def test_rat_divmod_roundtrip_randomized(self):
        rng = random.Random(7)
        for _ in range(400):
            p = rand_ipoly(rng, 8, 50).to_rat()
            q = rand_ipoly(rng, 5, 50).to_rat()
            if q.is_zero():
                continue
            quot, rem = divmod(p, q)
            assert quot * q + rem == p
            assert rem.degree < q.degree

    def test_inexact_division_raises(self):
        with pytest.raises(ArithmeticError):
            IntPoly([0, 0, 1]).exact_div(IntPoly([-1, 1]))

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            divmod(RatPoly([1]), RatPoly())


class TestCompose:
    def test_self_composition_of_squaring_map(self):
        f = IntPoly([-2, 0, 1])
        assert f.compose(f) == IntPoly([2, 0, -4, 0, 1])

    def test_identity_inner(self):
        p = IntPoly([4, -1, 0, 3])
        assert p.compose(X) == p

    def test_identity_outer(self):
        p = IntPoly([4, -1, 0, 3])
        assert X.compose(p) == p

    def test_associativity_randomized(self):
        rng = random.Random(11)
        for _ in range(60):
            p, q, r = (rand_ipoly(rng, 3, 8) for _ in range(3))
            assert p.compose(q).compose(r) == p.compose(q.compose(r))


class TestGcd:
    def test_shared_linear_factor(self):
        assert poly_gcd(IntPoly([-2, -1, 1]), IntPoly([-2, 1])) == IntPoly([-2, 1])

    def test_gcd_with_zero(self):
        p = IntPoly([4, -2, 6])
        assert poly_gcd(p, IntPoly()) == IntPoly([2, -1, 3])

    def test_coprime_irreducibles(self):
        assert poly_gcd(IntPoly([-1, 1, 1]), IntPoly([-3, 0, 1])) == IntPoly([1])

    def test_gcd_divides_both_randomized(self):
        rng = random.Random(13)
        for _ in range(300):
            p, q = rand_ipoly(rng, 6, 40), rand_ipoly(rng, 6, 40)
            if p.is_zero() and q.is_zero():
                continue
            g = poly_gcd(p, q)
            for target in (p, q):
                if not target.is_zero():
                    # remainder of pseudo-division must vanish
                    _, rem = target.to_rat().__divmod__(g.to_rat())
                    assert rem.is_zero()

    def test_gcd_of_common_multiple(self):
        rng = random.Random(17)
        for _ in range(100):
            common = rand_ipoly(rng, 3, 10)
            if common.degree < 1:
                continue
            a = common * rand_ipoly(rng, 3, 10)
            b = common * rand_ipoly(rng, 3, 10)
            if a.is_zero() or b.is_zero():
                continue
            g = poly_gcd(a, b)
            _, rem = g.to_rat().__divmod__(common.primitive_part().to_rat())
            assert rem.is_zero()


class TestResultant:
    def test_linear_pair(self):
        # p evaluated at the root of q: (x - 2) at x = -1
        assert resultant(IntPoly([-2, 1]), IntPoly([1, 1])) == -3

    def test_constant_argument(self):
        assert resultant(IntPoly([7, 0, 3]), IntPoly([1])) == 1

    def test_matches_sylvester_oracle_randomized(self):
        rng = random.Random(23)
        checked = 0
        for _ in range(1200):
            p, q = rand_ipoly(rng, 6, 30), rand_ipoly(rng, 6, 30)
            if p.is_zero() or q.is_zero():
                continue
            checked += 1
            assert resultant(p, q) == sylvester_det(q, p)
        assert checked > 1000

    def test_common_root_gives_zero(self):
        p = IntPoly([-2, 1]) * IntPoly([1, 1, 1])
        q = IntPoly([-2, 1]) * IntPoly([5, 1])
        assert resultant(p, q) == 0

    def test_bivariate_characteristic_polynomial(self):
        # Res_y(y^2 - y - 1, x - y) = x^2 - x - 1
        p = [IntPoly([-1]), IntPoly([-1]), IntPoly([1])]
        q = [IntPoly([0, 1]), IntPoly([-1])]
        assert resultant_poly(p, q) == IntPoly([-1, -1, 1])

    def test_bivariate_matches_pointwise(self):
        rng = random.Random(29)
        for _ in range(40):
            p = [rand_ipoly(rng, 2, 6) for _ in range(3)]
            q = [rand_ipoly(rng, 2, 6) for _ in range(2)]
            if p[-1].is_zero() or q[-1].is_zero():
                continue
            r = resultant_poly(p, q)
            for x0 in (2, 3, 5):
                if p[-1](x0) == 0 or q[-1](x0) == 0:
                    continue
                pe = IntPoly([c(x0) for c in p])
                qe = IntPoly([c(x0) for c in q])
                assert r(x0) == resultant(pe, qe)


class TestTextForms:
    def test_parse_ascending_csv(self):
        assert parse_int_poly("-2,0,1") == IntPoly([-2, 0, 1])
        assert parse_int_poly(" 1 , -4 ") == IntPoly([1, -4])

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError):
            parse_int_poly("1,two,3")
        with pytest.raises(ValueError):
            parse_int_poly("")

    def test_pretty_descending(self):
        assert IntPoly([-2, 0, 1]).pretty() == "x^2 - 2"
        assert IntPoly([1, 4, -4, -1, 1]).pretty() == "x^4 - x^3 - 4x^2 + 4x + 1"
        assert IntPoly([]).pretty() == "0"
        assert IntPoly([0, -1]).pretty() == "-x"

    def test_pretty_rational(self):
        assert RatPoly([Fraction(1, 4), -1, 1]).pretty() == "x^2 - x + 1/4"

    def test_csv_roundtrip(self):
        p = IntPoly([3, 0, -1, 7])
        assert parse_int_poly(p.coeff_csv()) == p


class TestSmallOps:
    def test_derivative(self):
        assert IntPoly([5, 3, 0, 2]).derivative() == IntPoly([3, 0, 6])

    def test_content_primitive(self):
        p = IntPoly([6, -9, 12])
        assert p.content() == 3
        assert p.primitive_part() == IntPoly([2, -3, 4])

    def test_evaluate(self):
        p = IntPoly([-2, 0, 1])
        assert p(3) == 7
        assert p(Fraction(1, 2)) == Fraction(-7, 4)

    def test_monic_and_degree_queries(self):
        assert IntPoly([-2, 1]).is_monic()
        assert not IntPoly([1, 2]).is_monic()
        assert IntPoly().degree == -1
