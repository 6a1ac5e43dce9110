"""Complete factorization of univariate integer polynomials.

Pipeline: content/sign normalization, Yun squarefree decomposition,
then for each squarefree part a Zassenhaus round: factor modulo a good
odd prime (distinct-degree, then seeded Cantor-Zassenhaus equal-degree
splitting), quadratic Hensel lifting past a Mignotte coefficient bound,
and subset recombination.  Every candidate combination is confirmed by
exact trial division over ZZ, so an accepted factor is a true factor
regardless of bound slack; the bound guarantees completeness.

The modular and equal-degree randomness is drawn from a caller-supplied
seed, so runs are reproducible; with a fixed seed every function here is
a pure function of its inputs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from math import isqrt

from . import _gfpoly as gf
from .errors import CapExceededError
from .numtheory import is_probable_prime
from .polycore import IntPoly, poly_gcd

DEFAULT_DEGREE_CAP = 128

# stop the prime scan early once the modular factor count is this small
_GOOD_FACTOR_COUNT = 8
_MAX_PRIME_TRIES = 5


@dataclass(frozen=True)
class IntFactorization:
    """unit * content * prod(factors[i] ^ mult[i]) reconstructs the input.

    ``unit`` is +-1, ``content`` a positive integer, and each factor a
    primitive irreducible IntPoly with positive leading coefficient,
    sorted by (degree, coefficients).
    """

    unit: int
    content: int
    factors: tuple[tuple[IntPoly, int], ...]

    def reconstruct(self) -> IntPoly:
        out = IntPoly([self.unit * self.content])
        for f, m in self.factors:
            out = out * f**m
        return out

    def factor_count(self) -> int:
        return len(self.factors)


def squarefree_decompose(p: IntPoly) -> list[tuple[IntPoly, int]]:
    """Yun decomposition of the positive primitive part of p.

    Returns [(g, m), ...] with every g squarefree, primitive, positive
    leading coefficient, pairwise coprime, and prod g^m equal to the
    primitive part of p up to sign.  Content and sign are the caller's
    problem (factor_over_integers tracks both).
    """
    if p.is_zero():
        raise ValueError("cannot decompose the zero polynomial")
    work = p.primitive_part()
    if work.lc < 0:
        work = -work
    if work.degree < 1:
        return []
    g = poly_gcd(work, work.derivative())
    if g.degree == 0:
        return [(work, 1)]
    b = work.exact_div(g)
    c = work.derivative().exact_div(g)
    d = c - b.derivative()
    out: list[tuple[IntPoly, int]] = []
    i = 1
    while not b.is_one():
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a, i))
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        i += 1
    return out


# -- Hensel lifting on plain int coefficient lists (ascending) --------------


def _ztrim(a: list[int]) -> list[int]:
    n = len(a)
    while n > 0 and a[n - 1] == 0:
        n -= 1
    return a[:n]


def _zmul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return out


def _zadd(a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, cb in enumerate(b):
        out[i] += cb
    return _ztrim(out)


def _zsub(a: list[int], b: list[int]) -> list[int]:
    out = list(a) + [0] * (len(b) - len(a))
    for i, cb in enumerate(b):
        out[i] -= cb
    return _ztrim(out)


def _ztrunc(a: list[int], m: int) -> list[int]:
    """Reduce coefficients into the symmetric range (-m/2, m/2]."""
    half = m // 2
    out = []
    for c in a:
        c %= m
        if c > half:
            c -= m
        out.append(c)
    return _ztrim(out)


def _zdivmod_monic(a: list[int], b: list[int]) -> tuple[list[int], list[int]]:
    """Division by a monic polynomial over ZZ."""
    if len(a) < len(b):
        return [], list(a)
    r = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for k in range(len(a) - len(b), -1, -1):
        t = r[k + len(b) - 1]
        if t:
            q[k] = t
            for j, cb in enumerate(b):
                r[k + j] -= t * cb
    return _ztrim(q), _ztrim(r[: len(b) - 1])


def _hensel_step(m, f, g, h, s, t):
    """Lift f = g*h (mod m), s*g + t*h = 1 (mod m) to the same mod m^2.

    h and its lift stay monic; g carries lc(f).
    """
    mm = m * m
    e = _ztrunc(_zsub(f, _zmul(g, h)), mm)
    q, r = _zdivmod_monic(_zmul(s, e), h)
    q = _ztrunc(q, mm)
    r = _ztrunc(r, mm)
    u = _zadd(_zmul(t, e), _zmul(q, g))
    big_g = _ztrunc(_zadd(g, u), mm)
    big_h = _ztrunc(_zadd(h, r), mm)
    u = _zadd(_zmul(s, big_g), _zmul(t, big_h))
    b = _ztrunc(_zsub(u, [1]), mm)
    c, d = _zdivmod_monic(_zmul(s, b), big_h)
    c = _ztrunc(c, mm)
    d = _ztrunc(d, mm)
    u = _zadd(_zmul(t, b), _zmul(c, big_g))
    big_s = _ztrunc(_zsub(s, d), mm)
    big_t = _ztrunc(_zsub(t, u), mm)
    return big_g, big_h, big_s, big_t


def _hensel_lift(p: int, f: list[int], modular: list[list[int]], l: int) -> list[list[int]]:
    """Lift monic pairwise-coprime factors of f mod p to factors mod p^l.

    ``modular`` holds monic factors with f = lc(f) * prod(modular) mod p.
    Returns monic lifts in the same order.
    """
    r = len(modular)
    lc = f[-1]
    if r == 1:
        inv = pow(lc % p**l, -1, p**l)
        return [_ztrunc([c * inv for c in f], p**l)]
    k = r // 2
    d = max(1, (l - 1).bit_length())  # 2^d >= l
    g = gf.gf_from_int([lc], p)
    for fi in modular[:k]:
        g = gf.gf_mul(g, gf.gf_from_int(fi, p), p)
    h = gf.gf_from_int(modular[k], p)
    for fi in modular[k + 1 :]:
        h = gf.gf_mul(h, gf.gf_from_int(fi, p), p)
    s, t, one = gf.gf_gcdex(g, h, p)
    if gf.gf_deg(one) != 0:
        raise ArithmeticError("modular factors are not coprime")
    g = gf.gf_to_int_symmetric(g, p)
    h = gf.gf_to_int_symmetric(h, p)
    s = gf.gf_to_int_symmetric(s, p)
    t = gf.gf_to_int_symmetric(t, p)
    m = p
    for _ in range(d):
        g, h, s, t = _hensel_step(m, f, g, h, s, t)
        m = m * m
    return _hensel_lift(p, g, modular[:k], l) + _hensel_lift(p, h, modular[k:], l)


# -- Zassenhaus --------------------------------------------------------------


def _mignotte_bound(coeffs: list[int]) -> int:
    """Classical bound on the max-norm of any divisor of the polynomial
    (times its leading coefficient), valid for divisors of every degree."""
    n = len(coeffs) - 1
    max_norm = max(abs(c) for c in coeffs)
    return (isqrt(n + 1) + 1) * 2**n * max_norm * abs(coeffs[-1])


def _pick_prime(f: IntPoly, seed: int):
    """Smallest-ish odd prime keeping f squarefree mod p, preferring few
    modular factors; returns (p, monic modular factors)."""
    candidates = []
    p = 3
    tried = 0
    while True:
        if is_probable_prime(p) and f.lc % p != 0:
            fp = gf.gf_monic(gf.gf_from_int(f.coeffs, p), p)
            if gf.gf_deg(fp) == f.degree and gf.gf_is_squarefree(fp, p):
                rng = random.Random(seed * 0x9E3779B1 + p)
                factors = gf.gf_factor_squarefree_monic(fp, p, rng)
                candidates.append((len(factors), p, factors))
                tried += 1
                if len(factors) <= _GOOD_FACTOR_COUNT or tried >= _MAX_PRIME_TRIES:
                    break
        p += 2
    return min(candidates, key=lambda c: (c[0], c[1]))[1:]


def _zassenhaus(f: IntPoly, seed: int) -> list[IntPoly]:
    """Irreducible factors of a primitive squarefree f with positive lc."""
    if f.degree == 1:
        return [f]
    p, modular = _pick_prime(f, seed)
    bound = _mignotte_bound(list(f.coeffs))
    l, pl = 1, p
    while pl <= 2 * bound:
        pl *= p
        l += 1
    lifted = _hensel_lift(p, list(f.coeffs), [gf.gf_to_int_symmetric(m, p) for m in modular], l)

    current = f
    found: list[IntPoly] = []
    indices = list(range(len(lifted)))
    s = 1
    while 2 * s <= len(indices):
        progressed = False
        for subset in combinations(indices, s):
            b = current.lc
            fc = current.constant_coeff
            if b == 1 and fc != 0:
                q = 1
                for i in subset:
                    q = q * lifted[i][0] % pl
                if q > pl // 2:
                    q -= pl
                if q != 0 and fc % q != 0:
                    continue
            g = [b]
            for i in subset:
                g = _zmul(g, lifted[i])
            g = _ztrunc(g, pl)
            cand = IntPoly(g).primitive_part()
            if cand.degree < 1:
                continue
            quotient, remainder = current.divmod_checked(cand)
            if quotient is not None and remainder.is_zero():
                found.append(cand)
                current = quotient
                indices = [i for i in indices if i not in subset]
                progressed = True
                break
        if not progressed:
            s += 1
    if current.degree > 0:
        found.append(current.primitive_part())
    return found


def factor_over_integers(
    p: IntPoly, *, max_degree: int = DEFAULT_DEGREE_CAP, seed: int = 0
) -> IntFactorization:
    """Complete irreducible factorization over ZZ.

    Raises CapExceededError above ``max_degree`` (subset recombination is
    exponential in the worst case, so the cap is explicit configuration).
    """
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if p.degree > max_degree:
        raise CapExceededError(
            f"degree {p.degree} exceeds the factorization cap {max_degree}"
        )
    content = p.content()
    prim = p.primitive_part()
    unit = 1
    if prim.lc < 0:
        unit = -1
        prim = -prim
    factors: list[tuple[IntPoly, int]] = []
    for part, mult in squarefree_decompose(prim):
        for irr in _zassenhaus(part, seed):
            factors.append((irr, mult))
    factors.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return IntFactorization(unit, content, tuple(factors))


def is_irreducible(p: IntPoly, *, max_degree: int = DEFAULT_DEGREE_CAP, seed: int = 0) -> bool:
    """True iff p is irreducible in ZZ[x]: a single multiplicity-1 factor
    and no content beyond a unit."""
    if p.is_zero() or p.degree < 1:
        return False
    fac = factor_over_integers(p, max_degree=max_degree, seed=seed)
    return (
        fac.content == 1
        and len(fac.factors) == 1
        and fac.factors[0][1] == 1
    )
