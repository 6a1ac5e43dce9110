"""Cyclotomic polynomials and minimal polynomials of 2cos(2*pi/n).

``cyclotomic_poly(n)`` is the n-th cyclotomic polynomial Phi_n.  For
n > 2, Phi_n is palindromic of even degree phi(n), and substituting
x = z + 1/z compresses it to ``psi(n)``, the monic integer minimal
polynomial of 2cos(2*pi/n), of degree phi(n)/2.

The indices 1 and 2 are special: the natural objects there are the
*squares* psi_1^2 = x - 2 and psi_2^2 = x + 2 (annihilating 2cos(0) = 2
and 2cos(pi) = -2).  ``PsiPoly.squared`` flags these two, and product
bookkeeping elsewhere works in exponent space so that an index-1 or
index-2 exponent is always even before a polynomial is materialized.

Both tables are memoized: classification re-queries the same small
indices heavily.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .numtheory import divisors, euler_phi
from .polycore import IntPoly


@dataclass(frozen=True)
class PsiPoly:
    """Minimal polynomial of 2cos(2*pi/index); squared linear form for index 1, 2."""

    index: int
    poly: IntPoly
    squared: bool

    @property
    def degree(self) -> int:
        return self.poly.degree


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> IntPoly:
    """The n-th cyclotomic polynomial, by exact division of x^n - 1.

    >>> cyclotomic_poly(1)
    IntPoly('x - 1')
    >>> cyclotomic_poly(12)
    IntPoly('x^4 - x^2 + 1')
    """
    if n < 1:
        raise ValueError(f"cyclotomic index must be >= 1, got {n}")
    p = IntPoly([-1] + [0] * (n - 1) + [1])
    for d in divisors(n):
        if d < n:
            p = p.exact_div(cyclotomic_poly(d))
    return p


def depalindromize(p: IntPoly) -> IntPoly:
    """Invert the substitution x = z + 1/z on a palindromic polynomial.

    For palindromic p of even degree 2k, returns the unique q of degree k
    with z^k * q(z + 1/z) = p(z).  Uses the basis b_j(t) representing
    z^j + z^(-j), built from b_j = t*b_{j-1} - b_{j-2}, b_0 = 2, b_1 = t.
    """
    if p.is_zero() or p.degree % 2 != 0:
        raise ValueError(f"not a palindrome of even degree: {p.pretty()}")
    coeffs = p.coeffs
    if tuple(reversed(coeffs)) != coeffs:
        raise ValueError(f"not palindromic: {p.pretty()}")
    k = p.degree // 2
    b_prev = IntPoly([2])
    b_cur = IntPoly.x()
    t = IntPoly.x()
    q = IntPoly.constant(coeffs[k])
    for j in range(1, k + 1):
        if j == 1:
            b = b_cur
        else:
            b = t * b_cur - b_prev
            b_prev, b_cur = b_cur, b
        q = q + coeffs[k + j] * b
    return q


@lru_cache(maxsize=None)
def psi(n: int) -> PsiPoly:
    """Minimal polynomial of 2cos(2*pi/n) (squared form for n = 1, 2).

    >>> psi(12).poly
    IntPoly('x^2 - 3')
    >>> psi(1)
    PsiPoly(index=1, poly=IntPoly('x - 2'), squared=True)
    """
    if n < 1:
        raise ValueError(f"psi index must be >= 1, got {n}")
    if n == 1:
        return PsiPoly(1, IntPoly([-2, 1]), True)
    if n == 2:
        return PsiPoly(2, IntPoly([2, 1]), True)
    return PsiPoly(n, depalindromize(cyclotomic_poly(n)), False)


def psi_degree(n: int) -> int:
    """Degree of the stored psi polynomial: phi(n)/2 for n > 2, else 1."""
    if n <= 2:
        return 1
    return euler_phi(n) // 2
