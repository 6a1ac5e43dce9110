"""Exact dense univariate polynomial arithmetic over ZZ and QQ.

Polynomials are stored as tuples of coefficients in ascending order of
power, with no trailing zeros; the zero polynomial is the empty tuple.
``IntPoly`` holds arbitrary-precision integers, ``RatPoly`` holds
``fractions.Fraction`` values (always in lowest terms with a positive
denominator, which Fraction guarantees).

All values are immutable and all operations are pure functions, so
instances can be shared freely across threads.

The textual interchange form is a comma-separated ascending coefficient
list, e.g. ``"-2,0,1"`` for x^2 - 2; ``pretty()`` renders descending
powers, e.g. ``"x^2 - 2"``.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


def _trim(coeffs: list) -> tuple:
    end = len(coeffs)
    while end > 0 and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


def _pretty(coeffs: Sequence[Scalar], var: str = "x") -> str:
    if not coeffs:
        return "0"
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if i == 0:
            body = str(mag)
        else:
            term = var if i == 1 else f"{var}^{i}"
            if mag == 1:
                body = term
            elif isinstance(mag, Fraction) and mag.denominator != 1:
                body = f"({mag}){term}"
            else:
                body = f"{mag}{term}"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


class IntPoly:
    """Dense univariate polynomial with integer coefficients.

    >>> IntPoly([-2, 0, 1])
    IntPoly('x^2 - 2')
    >>> IntPoly([1, 1]) * IntPoly([-2, 1])
    IntPoly('x^2 - x - 2')
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficient expected, got {c!r}")
        object.__setattr__(self, "coeffs", _trim(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls([c])

    @classmethod
    def x(cls) -> "IntPoly":
        return cls([0, 1])

    @classmethod
    def monomial(cls, c: int, k: int) -> "IntPoly":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def constant_coeff(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def is_monic(self) -> bool:
        return self.lc == 1

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("IntPoly", self.coeffs))

    def __repr__(self) -> str:
        return f"IntPoly({self.pretty()!r})"

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        return IntPoly([x + y for x, y in itertools.zip_longest(a, b, fillvalue=0)])

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        return IntPoly([x - y for x, y in itertools.zip_longest(a, b, fillvalue=0)])

    def __neg__(self) -> "IntPoly":
        return IntPoly([-c for c in self.coeffs])

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPoly":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = IntPoly([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def __call__(self, x: Scalar) -> Scalar:
        acc: Scalar = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "IntPoly") -> "IntPoly":
        """self(inner(x)), computed by Horner over polynomials."""
        acc = IntPoly()
        for c in reversed(self.coeffs):
            acc = acc * inner + IntPoly.constant(c)
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def content(self) -> int:
        """GCD of the coefficients, >= 0; 0 for the zero polynomial."""
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive_part(self) -> "IntPoly":
        """self divided by its content; keeps the sign of the leading term."""
        c = self.content()
        if c <= 1:
            return self
        return IntPoly([x // c for x in self.coeffs])

    def scale_exact_div(self, d: int) -> "IntPoly":
        """Divide every coefficient by d, which must divide exactly."""
        if d == 0:
            raise ZeroDivisionError("division of polynomial by zero")
        out = []
        for c in self.coeffs:
            q, r = divmod(c, d)
            if r:
                raise ArithmeticError(f"coefficient {c} not divisible by {d}")
            out.append(q)
        return IntPoly(out)

    def exact_div(self, other: "IntPoly") -> "IntPoly":
        """Exact polynomial division; raises if the remainder is nonzero.

        The nonzero-remainder error signals a violated identity in the
        caller, never a user error.
        """
        q, r = self.divmod_checked(other)
        if q is None or not r.is_zero():
            raise ArithmeticError(
                f"inexact division: {self.pretty()} by {other.pretty()}"
            )
        return q

    def divmod_checked(self, other: "IntPoly"):
        """Integer long division with early abort.

        Returns (quotient, remainder) when every division step lands in ZZ
        (always true when ``other`` divides ``self``), else (None, None).
        """
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        d = other.coeffs
        dn = len(d)
        if len(r) < dn:
            return IntPoly(), self
        q = [0] * (len(r) - dn + 1)
        for k in range(len(r) - dn, -1, -1):
            top = r[k + dn - 1]
            if top % d[-1]:
                return None, None
            t = top // d[-1]
            q[k] = t
            if t:
                for j, dc in enumerate(d):
                    r[k + j] -= t * dc
        return IntPoly(q), IntPoly(r[: dn - 1])

    def pseudo_divmod(self, other: "IntPoly"):
        """Pseudo-division: lc(other)^(deg self - deg other + 1) * self = Q*other + R."""
        if other.is_zero():
            raise ZeroDivisionError("pseudo-division by zero")
        if self.degree < other.degree:
            return IntPoly(), self
        d = other.lc
        n = self.degree - other.degree + 1
        q = IntPoly()
        r = self
        while not r.is_zero() and r.degree >= other.degree:
            t = IntPoly.monomial(r.lc, r.degree - other.degree)
            n -= 1
            q = q * d + t
            r = r * d - t * other
        scale = d**n
        return q * scale, r * scale

    def to_rat(self) -> "RatPoly":
        return RatPoly([Fraction(c) for c in self.coeffs])

    def pretty(self, var: str = "x") -> str:
        return _pretty(self.coeffs, var)

    def coeff_csv(self) -> str:
        return ",".join(str(c) for c in self.coeffs)


class RatPoly:
    """Dense univariate polynomial with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        object.__setattr__(self, "coeffs", _trim(cs))

    def __setattr__(self, name, value):
        raise AttributeError("RatPoly is immutable")

    @classmethod
    def constant(cls, c: Scalar) -> "RatPoly":
        return cls([Fraction(c)])

    @classmethod
    def x(cls) -> "RatPoly":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (Fraction(1),)

    def is_monic(self) -> bool:
        return self.lc == 1

    def __eq__(self, other) -> bool:
        return isinstance(other, RatPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("RatPoly", self.coeffs))

    def __repr__(self) -> str:
        return f"RatPoly({self.pretty()!r})"

    def __add__(self, other: "RatPoly") -> "RatPoly":
        a, b = self.coeffs, other.coeffs
        return RatPoly([x + y for x, y in itertools.zip_longest(a, b, fillvalue=0)])

    def __sub__(self, other: "RatPoly") -> "RatPoly":
        a, b = self.coeffs, other.coeffs
        return RatPoly([x - y for x, y in itertools.zip_longest(a, b, fillvalue=0)])

    def __neg__(self) -> "RatPoly":
        return RatPoly([-c for c in self.coeffs])

    def __mul__(self, other) -> "RatPoly":
        if isinstance(other, (int, Fraction)):
            return RatPoly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return RatPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return RatPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "RatPoly":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = RatPoly([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __divmod__(self, other: "RatPoly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        d = other.coeffs
        dn = len(d)
        if len(r) < dn:
            return RatPoly(), self
        q = [Fraction(0)] * (len(r) - dn + 1)
        inv = 1 / d[-1]
        for k in range(len(r) - dn, -1, -1):
            t = r[k + dn - 1] * inv
            q[k] = t
            if t:
                for j, dc in enumerate(d):
                    r[k + j] -= t * dc
        return RatPoly(q), RatPoly(r[: dn - 1])

    def exact_div(self, other: "RatPoly") -> "RatPoly":
        """Division that must be remainder-free; a nonzero remainder signals
        a violated polynomial identity, not bad user input."""
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError(
                f"inexact division: {self.pretty()} by {other.pretty()}"
            )
        return q

    def compose(self, inner: "RatPoly") -> "RatPoly":
        acc = RatPoly()
        for c in reversed(self.coeffs):
            acc = acc * inner + RatPoly.constant(c)
        return acc

    def derivative(self) -> "RatPoly":
        return RatPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "RatPoly":
        if self.is_zero():
            return self
        return self * (1 / self.lc)

    def denominator_lcm(self) -> int:
        d = 1
        for c in self.coeffs:
            d = d * c.denominator // gcd(d, c.denominator)
        return d

    def clear_denominators(self) -> tuple[IntPoly, int]:
        """Return (d * self as IntPoly, d) for the least positive such d."""
        d = self.denominator_lcm()
        return IntPoly([int(c * d) for c in self.coeffs]), d

    def as_int_poly(self) -> IntPoly:
        """Lossless conversion; raises if any coefficient is non-integral."""
        p, d = self.clear_denominators()
        if d != 1:
            raise ValueError(f"non-integer coefficients in {self.pretty()}")
        return p

    def pretty(self, var: str = "x") -> str:
        return _pretty(self.coeffs, var)


def parse_int_poly(text: str) -> IntPoly:
    """Parse a comma-separated ascending coefficient list, e.g. "-2,0,1"."""
    items = [s.strip() for s in text.split(",")]
    if items == [""]:
        raise ValueError("empty polynomial string")
    try:
        return IntPoly([int(s) for s in items])
    except ValueError as exc:
        raise ValueError(f"bad polynomial coefficient list {text!r}") from exc


def poly_gcd(p: IntPoly, q: IntPoly) -> IntPoly:
    """Primitive GCD in ZZ[x] with positive leading coefficient.

    Subresultant polynomial remainder sequence, so intermediate
    coefficients stay polynomially bounded.
    """
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    if q.is_zero():
        p, q = q, p
    if p.is_zero():
        r = q.primitive_part()
        return -r if r.lc < 0 else r
    a = p.primitive_part()
    b = q.primitive_part()
    if a.degree < b.degree:
        a, b = b, a
    g, h = 1, 1
    while True:
        delta = a.degree - b.degree
        _, r = a.pseudo_divmod(b)
        if r.is_zero():
            result = b
            break
        if r.degree == 0:
            result = IntPoly([1])
            break
        a, b = b, r.scale_exact_div(g * h**delta)
        g = a.lc
        if delta > 0:
            num = g**delta
            den = h ** (delta - 1)
            h = num // den
    result = result.primitive_part()
    return -result if result.lc < 0 else result


def _resultant_std(a: IntPoly, b: IntPoly) -> int:
    """Resultant in the orientation res(a, b) = lc(a)^deg(b) * prod b(alpha)
    over the roots alpha of a (the Sylvester determinant of (a, b)).

    Subresultant PRS, Ducos/Cohen bookkeeping.
    """
    if a.is_zero() or b.is_zero():
        return 0
    if a.degree == 0:
        return a.lc ** b.degree
    if b.degree == 0:
        return b.lc ** a.degree
    s = 1
    ca = a.content()
    cb = b.content()
    a = a.scale_exact_div(ca)
    b = b.scale_exact_div(cb)
    t = ca**b.degree * cb**a.degree
    if a.degree < b.degree:
        if (a.degree * b.degree) % 2:
            s = -s
        a, b = b, a
    g, h = 1, 1
    while True:
        delta = a.degree - b.degree
        if (a.degree % 2) and (b.degree % 2):
            s = -s
        _, r = a.pseudo_divmod(b)
        if r.is_zero():
            return 0
        a, b = b, r.scale_exact_div(g * h**delta)
        g = a.lc
        if delta > 0:
            h = g**delta // h ** (delta - 1)
        if b.degree == 0:
            break
    num = b.lc ** a.degree
    den = h ** (a.degree - 1)
    return s * t * (num // den)


def resultant(p: IntPoly, q: IntPoly) -> int:
    """Resultant of p and q, normalized so that

        resultant(p, q) = lc(q)^deg(p) * product of p over the roots of q.

    For monic q this is exactly the norm of p evaluated at a root of q;
    it equals the Sylvester determinant with the q-rows on top, i.e.
    (-1)^(deg p * deg q) times the (p, q)-oriented determinant.
    Example: resultant(x - 2, x + 1) = -3.
    """
    if p.is_zero() or q.is_zero():
        raise ValueError("resultant of the zero polynomial is undefined")
    return _resultant_std(q, p)


def resultant_poly(p: Sequence[IntPoly], q: Sequence[IntPoly]) -> IntPoly:
    """Bivariate resultant eliminating the outer variable.

    ``p`` and ``q`` are polynomials in y whose coefficients (ascending in
    y) are IntPoly values in x; the result is the resultant with respect
    to y, a polynomial in x, with the same orientation as ``resultant``:

        resultant_poly(p, q)(x) = lc_y(q)^deg_y(p) * prod p(x, beta)

    over the roots beta of q(x, .).  Computed by evaluation at integer
    points followed by exact Lagrange interpolation; points where either
    leading y-coefficient vanishes are skipped so the y-degrees never
    drop.
    """
    pc = list(p)
    while pc and pc[-1].is_zero():
        pc.pop()
    qc = list(q)
    while qc and qc[-1].is_zero():
        qc.pop()
    if not pc or not qc:
        raise ValueError("resultant of the zero polynomial is undefined")
    deg_y_p = len(pc) - 1
    deg_y_q = len(qc) - 1
    if deg_y_p == 0 and deg_y_q == 0:
        return IntPoly([1])
    max_x_p = max(c.degree for c in pc)
    max_x_q = max(c.degree for c in qc)
    bound = deg_y_p * max(max_x_q, 0) + deg_y_q * max(max_x_p, 0)
    points: list[int] = []
    values: list[int] = []
    x0 = 0
    while len(points) <= bound:
        lead_p = pc[-1](x0)
        lead_q = qc[-1](x0)
        if lead_p != 0 and lead_q != 0:
            pe = IntPoly([c(x0) for c in pc])
            qe = IntPoly([c(x0) for c in qc])
            points.append(x0)
            values.append(resultant(pe, qe))
        x0 += 1
    coeffs = _lagrange_interpolate(points, values)
    return IntPoly(coeffs)


def _lagrange_interpolate(points: list[int], values: list[int]) -> list[int]:
    """Exact interpolation through integer points; result must be in ZZ[x]."""
    n = len(points)
    acc = [Fraction(0)] * n
    for i in range(n):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            new = [Fraction(0)] * (len(basis) + 1)
            for k, c in enumerate(basis):
                new[k] += c * (-points[j])
                new[k + 1] += c
            basis = new
            denom *= points[i] - points[j]
        scale = Fraction(values[i]) / denom
        for k, c in enumerate(basis):
            acc[k] += c * scale
    out = []
    for c in acc:
        if c.denominator != 1:
            raise ArithmeticError("interpolation produced a non-integer coefficient")
        out.append(int(c))
    return out
