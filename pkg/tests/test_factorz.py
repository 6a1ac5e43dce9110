"""Integer polynomial factorization: squarefree split, irreducibility,
full Zassenhaus rounds, and reconstruction fuzzing."""

import random

import pytest

from ratcos.dynatomic import iterate_minus_x
from ratcos.errors import CapExceededError
from ratcos.factorz import (
    factor_over_integers,
    is_irreducible,
    squarefree_decompose,
)
from ratcos.polycore import IntPoly


def rand_irreducible(rng, max_deg=3):
    """Small random irreducible with positive leading coefficient."""
    while True:
        deg = rng.randrange(1, max_deg + 1)
        coeffs = [rng.randint(-9, 9) for _ in range(deg)] + [rng.randrange(1, 9)]
        p = IntPoly(coeffs)
        if p.degree >= 1 and p.content() == 1 and is_irreducible(p):
            return p


class TestSquarefree:
    def test_repeated_linear(self):
        p = IntPoly([-2, 1]) ** 2 * IntPoly([1, 1])
        assert squarefree_decompose(p) == [(IntPoly([1, 1]), 1), (IntPoly([-2, 1]), 2)]

    def test_already_squarefree(self):
        p = IntPoly([2, -1, -4, 0, 1])
        assert squarefree_decompose(p) == [(p, 1)]

    def test_cubic_with_nonzero_discriminant(self):
        p = IntPoly([1, -3, 0, 1])
        assert squarefree_decompose(p) == [(p, 1)]

    def test_reconstruction_randomized(self):
        rng = random.Random(31)
        for _ in range(150):
            base = [rand_irreducible(rng, 2) for _ in range(rng.randrange(1, 4))]
            mults = [rng.randrange(1, 4) for _ in base]
            p = IntPoly([1])
            for b, m in zip(base, mults):
                p = p * b**m
            parts = squarefree_decompose(p)
            rebuilt = IntPoly([1])
            for part, mult in parts:
                rebuilt = rebuilt * part**mult
            assert rebuilt == p.primitive_part()

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            squarefree_decompose(IntPoly())


class TestFactorKnown:
    def test_quartic_iterate(self):
        fac = factor_over_integers(IntPoly([2, -1, -4, 0, 1]))
        assert fac.unit == 1 and fac.content == 1
        assert [(f.coeffs, m) for f, m in fac.factors] == [
            ((-2, 1), 1),
            ((1, 1), 1),
            ((-1, 1, 1), 1),
        ]

    def test_irreducible_quadratic(self):
        fac = factor_over_integers(IntPoly([-3, 0, 1]))
        assert fac.factors == ((IntPoly([-3, 0, 1]), 1),)

    def test_fourth_iterate_five_factors(self):
        p = iterate_minus_x(4, -2).as_int_poly()
        fac = factor_over_integers(p)
        assert sorted(f.degree for f, _ in fac.factors) == [1, 1, 2, 4, 8]
        assert fac.reconstruct() == p

    def test_iterate_factor_counts(self):
        for d, count in [(1, 2), (2, 3), (3, 4), (4, 5), (5, 5)]:
            p = iterate_minus_x(d, -2).as_int_poly()
            assert factor_over_integers(p).factor_count() == count

    def test_content_unit_and_multiplicity(self):
        p = IntPoly([-2, 1]) ** 2 * IntPoly([1, 1]) * -6
        fac = factor_over_integers(p)
        assert fac.unit == -1
        assert fac.content == 6
        assert fac.factors == ((IntPoly([-2, 1]), 2), (IntPoly([1, 1]), 1))
        assert fac.reconstruct() == p

    def test_degree_cap(self):
        with pytest.raises(CapExceededError):
            factor_over_integers(IntPoly([0] * 129 + [1]), max_degree=128)

    def test_constant(self):
        fac = factor_over_integers(IntPoly([-6]))
        assert fac.unit == -1 and fac.content == 6 and fac.factors == ()


class TestAgreementWithClosedForm:
    def test_two_independent_paths_to_the_same_factors(self):
        # the general-purpose engine must recover exactly the psi
        # polynomials that the closed-form shape predicts
        from ratcos.dynatomic import iterate_minus_x_psi_factors

        for d in range(1, 6):
            shape = iterate_minus_x_psi_factors(d)
            predicted = sorted(
                ((poly, mult) for _, mult, poly in shape.factor_list()),
                key=lambda fm: (fm[0].degree, fm[0].coeffs),
            )
            fac = factor_over_integers(shape.materialize())
            assert fac.unit == 1 and fac.content == 1
            assert list(fac.factors) == predicted, d


class TestIsIrreducible:
    def test_golden_quadratic(self):
        assert is_irreducible(IntPoly([-1, 1, 1]))

    def test_factored_quadratic(self):
        assert not is_irreducible(IntPoly([-2, -1, 1]))

    def test_x(self):
        assert is_irreducible(IntPoly([0, 1]))

    def test_constant_and_content(self):
        assert not is_irreducible(IntPoly([5]))
        assert not is_irreducible(IntPoly([2, 2]))

    def test_cyclotomic_like(self):
        assert is_irreducible(IntPoly([1, 1, 1, 1, 1]))
        assert not is_irreducible(IntPoly([-1, 0, 0, 0, 0, 1]))

    def test_recombination_heavy_octic(self):
        # minimal polynomial of sqrt(2)+sqrt(3)+sqrt(5): irreducible over ZZ
        # but splits into low-degree factors modulo every prime, forcing the
        # subset search to do real work
        sd = IntPoly([576, 0, -960, 0, 352, 0, -40, 0, 1])
        assert is_irreducible(sd)
        shifted = sd.compose(IntPoly([1, 1]))  # stays irreducible under x -> x+1
        assert is_irreducible(shifted)
        fac = factor_over_integers(sd * shifted)
        assert sorted(f.degree for f, _ in fac.factors) == [8, 8]


class TestReconstructionFuzz:
    def test_reconstruction_randomized(self):
        rng = random.Random(37)
        for trial in range(1000):
            parts = [rand_irreducible(rng, 3) for _ in range(rng.randrange(1, 4))]
            mults = [rng.randrange(1, 3) for _ in parts]
            scale = rng.choice([-3, -1, 1, 2, 5])
            p = IntPoly([scale])
            for b, m in zip(parts, mults):
                p = p * b**m
            fac = factor_over_integers(p, seed=trial)
            assert fac.reconstruct() == p, p
            # every reported factor is irreducible at small degree:
            # no proper divisor among candidate degrees <= 3
            for f, _ in fac.factors:
                assert is_irreducible(f, seed=trial + 1)

    def test_determinism_under_seed(self):
        p = iterate_minus_x(4, -2).as_int_poly()
        a = factor_over_integers(p, seed=123)
        b = factor_over_integers(p, seed=123)
        assert a == b
