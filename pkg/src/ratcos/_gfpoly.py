"""Dense polynomial arithmetic over GF(p) for odd primes p (internal).

Coefficients live in numpy int64 arrays, ascending by power, trimmed,
reduced into [0, p).  Products hold exactly in int64 provided
p^2 * (degree + 1) < 2^63; callers keep p below 2^20, far inside that.

Only what the integer factorization engine needs: ring ops, gcd,
extended gcd, modular exponentiation, squarefree test, distinct-degree
and equal-degree (Cantor-Zassenhaus) splitting.
"""

from __future__ import annotations

import random

import numpy as np

ZERO = np.zeros(0, dtype=np.int64)


def gf_trim(a: np.ndarray) -> np.ndarray:
    nz = np.nonzero(a)[0]
    if len(nz) == 0:
        return ZERO
    return a[: nz[-1] + 1]


def gf_from_int(coeffs, p: int) -> np.ndarray:
    return gf_trim(np.array([c % p for c in coeffs], dtype=np.int64))


def gf_to_int_symmetric(a: np.ndarray, p: int) -> list[int]:
    half = p // 2
    return [int(c) - p if c > half else int(c) for c in a]


def gf_deg(a: np.ndarray) -> int:
    return len(a) - 1


def gf_add(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    if len(a) < len(b):
        a, b = b, a
    out = a.copy()
    out[: len(b)] = (out[: len(b)] + b) % p
    return gf_trim(out)


def gf_sub(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    n = max(len(a), len(b))
    out = np.zeros(n, dtype=np.int64)
    out[: len(a)] = a
    out[: len(b)] = (out[: len(b)] - b) % p
    return gf_trim(out)


def gf_mul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    if len(a) == 0 or len(b) == 0:
        return ZERO
    return gf_trim(np.convolve(a, b) % p)


def gf_scale(a: np.ndarray, c: int, p: int) -> np.ndarray:
    return gf_trim((a * (c % p)) % p)


def gf_monic(a: np.ndarray, p: int) -> np.ndarray:
    if len(a) == 0 or a[-1] == 1:
        return a
    return gf_scale(a, pow(int(a[-1]), -1, p), p)


def gf_divmod(a: np.ndarray, b: np.ndarray, p: int):
    if len(b) == 0:
        raise ZeroDivisionError("GF(p) polynomial division by zero")
    if len(a) < len(b):
        return ZERO, a
    r = a.copy()
    q = np.zeros(len(a) - len(b) + 1, dtype=np.int64)
    inv = pow(int(b[-1]), -1, p)
    for k in range(len(a) - len(b), -1, -1):
        t = r[k + len(b) - 1] * inv % p
        if t:
            q[k] = t
            r[k : k + len(b)] = (r[k : k + len(b)] - t * b) % p
    return gf_trim(q), gf_trim(r[: len(b) - 1])


def gf_rem(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return gf_divmod(a, b, p)[1]


def gf_gcd(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    while len(b):
        a, b = b, gf_rem(a, b, p)
    return gf_monic(a, p)


def gf_gcdex(a: np.ndarray, b: np.ndarray, p: int):
    """Extended Euclid: returns (s, t, g) with s*a + t*b = g, g monic."""
    s0, s1 = np.array([1], dtype=np.int64), ZERO
    t0, t1 = ZERO, np.array([1], dtype=np.int64)
    r0, r1 = a, b
    while len(r1):
        q, r = gf_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, gf_sub(s0, gf_mul(q, s1, p), p)
        t0, t1 = t1, gf_sub(t0, gf_mul(q, t1, p), p)
    if len(r0) == 0:
        raise ZeroDivisionError("gcdex of zero polynomials")
    inv = pow(int(r0[-1]), -1, p)
    return gf_scale(s0, inv, p), gf_scale(t0, inv, p), gf_monic(r0, p)


def gf_pow_mod(a: np.ndarray, e: int, m: np.ndarray, p: int) -> np.ndarray:
    result = np.array([1], dtype=np.int64)
    base = gf_rem(a, m, p)
    while e:
        if e & 1:
            result = gf_rem(gf_mul(result, base, p), m, p)
        e >>= 1
        if e:
            base = gf_rem(gf_mul(base, base, p), m, p)
    return result


def gf_derivative(a: np.ndarray, p: int) -> np.ndarray:
    if len(a) <= 1:
        return ZERO
    idx = np.arange(1, len(a), dtype=np.int64)
    return gf_trim(a[1:] * idx % p)


def gf_is_squarefree(a: np.ndarray, p: int) -> bool:
    return gf_deg(gf_gcd(a, gf_derivative(a, p), p)) == 0


_X = np.array([0, 1], dtype=np.int64)


def gf_ddf(f: np.ndarray, p: int) -> list[tuple[np.ndarray, int]]:
    """Distinct-degree factorization of monic squarefree f.

    Returns pairs (product of all irreducible factors of degree d, d).
    """
    out = []
    rest = f
    h = gf_rem(_X, rest, p)
    d = 0
    while gf_deg(rest) >= 2 * (d + 1):
        d += 1
        h = gf_pow_mod(h, p, rest, p)
        g = gf_gcd(rest, gf_sub(h, _X, p), p)
        if gf_deg(g) > 0:
            out.append((g, d))
            rest = gf_divmod(rest, g, p)[0]
            h = gf_rem(h, rest, p)
    if gf_deg(rest) > 0:
        out.append((rest, gf_deg(rest)))
    return out


def gf_edf(f: np.ndarray, d: int, p: int, rng: random.Random) -> list[np.ndarray]:
    """Cantor-Zassenhaus equal-degree splitting (p odd): f monic squarefree
    with all irreducible factors of degree d."""
    n = gf_deg(f)
    if n == d:
        return [f]
    half_order = (p**d - 1) // 2
    pieces = [f]
    done: list[np.ndarray] = []
    while pieces:
        g = pieces.pop()
        if gf_deg(g) == d:
            done.append(g)
            continue
        while True:
            r = gf_from_int([rng.randrange(p) for _ in range(gf_deg(g))], p)
            if gf_deg(r) < 1:
                continue
            s = gf_pow_mod(r, half_order, g, p)
            w = gf_gcd(g, gf_sub(s, np.array([1], dtype=np.int64), p), p)
            if 0 < gf_deg(w) < gf_deg(g):
                pieces.append(w)
                pieces.append(gf_divmod(g, w, p)[0])
                break
    return done


def gf_factor_squarefree_monic(
    f: np.ndarray, p: int, rng: random.Random
) -> list[np.ndarray]:
    """All monic irreducible factors of monic squarefree f, sorted."""
    factors: list[np.ndarray] = []
    for part, d in gf_ddf(f, p):
        factors.extend(gf_edf(part, d, p, rng))
    return sorted(factors, key=lambda a: (len(a), a.tolist()))
