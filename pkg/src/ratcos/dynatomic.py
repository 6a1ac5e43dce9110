"""Iterates of x^2 + c, dynatomic polynomials, and their closed-form
psi-factorizations at c = -2.

The n-th dynatomic polynomial of f_c is the Moebius product

    Phi_n(x) = prod over d | n of (f_c^(d)(x) - x)^mu(n/d),

whose roots are the formal n-periodic points.  The full numerator
product is accumulated before the single exact division, so a nonzero
remainder is checked exactly once; by theory the quotient is always a
polynomial, and a nonzero remainder signals an arithmetic bug rather
than bad input.

At c = -2 the dynatomic polynomial factors in closed form into the
minimal polynomials psi_m of 2cos(2*pi/m), with m running over the
divisors of 2^d - 1 and 2^d + 1 for d | n.  ``PsiFactorization`` keeps
the exponent map; index 1 (and 2) exponents live in "squared" units,
i.e. an exponent 2e at index 1 materializes as (x - 2)^e, so the
index-1 and index-2 exponents must be even whenever a polynomial is
requested.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .cyclotomic import psi, psi_degree
from .errors import CapExceededError
from .numtheory import DEFAULT_FACTOR_CAP, divisors, factorize, moebius
from .polycore import IntPoly, RatPoly

DEFAULT_ITERATE_CAP = 20
DEFAULT_DYNATOMIC_CAP = 12


def iterate_f(k: int, c: Fraction | int, *, max_k: int = DEFAULT_ITERATE_CAP) -> RatPoly:
    """k-fold composition of f_c(x) = x^2 + c with itself; k = 0 gives x."""
    if k < 0:
        raise ValueError(f"iteration count must be >= 0, got {k}")
    if k > max_k:
        raise CapExceededError(f"iterate degree 2^{k} exceeds the cap 2^{max_k}")
    cc = Fraction(c)
    p = RatPoly.x()
    for _ in range(k):
        p = p * p + RatPoly.constant(cc)
    return p


def iterate_minus_x(k: int, c: Fraction | int = -2, *, max_k: int = DEFAULT_ITERATE_CAP) -> RatPoly:
    """f_c^(k)(x) - x."""
    return iterate_f(k, c, max_k=max_k) - RatPoly.x()


def dynatomic_poly(
    n: int, c: Fraction | int, *, max_n: int = DEFAULT_DYNATOMIC_CAP
) -> RatPoly:
    """The n-th dynatomic polynomial of x^2 + c, via the Moebius product."""
    if n < 1:
        raise ValueError(f"dynatomic index must be >= 1, got {n}")
    if n > max_n:
        raise CapExceededError(f"dynatomic index {n} exceeds the cap {max_n}")
    numerator = RatPoly([1])
    denominator = RatPoly([1])
    for d in divisors(n):
        mu = moebius(n // d)
        if mu == 1:
            numerator = numerator * iterate_minus_x(d, c)
        elif mu == -1:
            denominator = denominator * iterate_minus_x(d, c)
    return numerator.exact_div(denominator)


@dataclass(frozen=True)
class PsiFactorization:
    """Multiset of psi-indices with exponents, the factor shape of a polynomial.

    Exponents at indices 1 and 2 count squared-linear halves and must be
    even before materialization.
    """

    exponents: tuple[tuple[int, int], ...] = field(default_factory=tuple)

    @classmethod
    def from_map(cls, exps: dict[int, int]) -> "PsiFactorization":
        return cls(tuple(sorted((n, e) for n, e in exps.items() if e != 0)))

    def as_map(self) -> dict[int, int]:
        return dict(self.exponents)

    def degree(self) -> int:
        """Degree of the materialized product (index 1/2 exponents count in
        squared units, two units per linear factor)."""
        total = 0
        for n, e in self.exponents:
            total += e // 2 if n <= 2 else e * psi_degree(n)
        return total

    def materialize(self) -> IntPoly:
        """Expand to the product polynomial; exponents must be >= 0 and the
        index-1 and index-2 exponents even."""
        result = IntPoly([1])
        for n, e in self.exponents:
            if e < 0:
                raise ArithmeticError(f"negative exponent {e} at psi index {n}")
            if n <= 2:
                if e % 2:
                    raise ArithmeticError(
                        f"odd squared-unit exponent {e} at psi index {n}"
                    )
                result = result * psi(n).poly ** (e // 2)
            else:
                result = result * psi(n).poly ** e
        return result

    def factor_list(self) -> list[tuple[int, int, IntPoly]]:
        """(psi index, multiplicity, polynomial) per materialized factor."""
        out = []
        for n, e in self.exponents:
            mult = e // 2 if n <= 2 else e
            if mult > 0:
                out.append((n, mult, psi(n).poly))
        return out


def dynatomic_psi_factors(
    n: int, *, seed: int = 0, factor_cap: int = DEFAULT_FACTOR_CAP
) -> PsiFactorization:
    """Closed-form factor shape of the n-th dynatomic polynomial at c = -2.

    For each d | n, the psi-indices dividing 2^d - 1 and 2^d + 1 each
    contribute mu(n/d) to their exponent; index 1 divides both, hence the
    built-in doubling that keeps its squared-unit exponent even.
    """
    if n < 1:
        raise ValueError(f"dynatomic index must be >= 1, got {n}")
    exps: dict[int, int] = {}
    for d in divisors(n):
        mu = moebius(n // d)
        if mu == 0:
            continue
        for d1 in factorize(2**d - 1, seed=seed, cap=factor_cap).divisors():
            exps[d1] = exps.get(d1, 0) + mu
        for d2 in factorize(2**d + 1, seed=seed, cap=factor_cap).divisors():
            exps[d2] = exps.get(d2, 0) + mu
    return PsiFactorization.from_map(exps)


def iterate_minus_x_psi_factors(
    d: int, *, seed: int = 0, factor_cap: int = DEFAULT_FACTOR_CAP
) -> PsiFactorization:
    """Factor shape of f^(d)(x) - x at c = -2: one copy of psi_m for every
    m > 1 dividing 2^d - 1 or 2^d + 1, plus the (x - 2) factor at index 1."""
    if d < 1:
        raise ValueError(f"iterate index must be >= 1, got {d}")
    exps: dict[int, int] = {1: 2}
    for m in factorize(2**d - 1, seed=seed, cap=factor_cap).divisors():
        if m > 1:
            exps[m] = exps.get(m, 0) + 1
    for m in factorize(2**d + 1, seed=seed, cap=factor_cap).divisors():
        if m > 1:
            exps[m] = exps.get(m, 0) + 1
    return PsiFactorization.from_map(exps)
