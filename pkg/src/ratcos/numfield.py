"""Arithmetic in QQ[y]/(g(y)) and cosine-value membership for number fields.

A ``NumberField`` wraps a monic irreducible integer polynomial g;
elements are rational coefficient vectors of length deg(g), reduced mod
g.  The rationals themselves are the degree-1 field g = y, so a single
code path covers every base field.

Root-finding in K uses the norm technique: for a shift s making the
norm N(x) = Res_y(g(y), p(x - s*y)) squarefree, N factors over ZZ and
every irreducible factor F contributes gcd(p(x), F(x + s*theta)) in
K[x]; the degree-1 gcds are exactly the roots of p lying in K.  Every
returned root is re-verified by exact substitution rather than trusted
from the algorithm.

``cosine_values_in_field`` then enumerates the denominators n with
phi(n)/2 dividing deg(K), finds the roots of each minimal polynomial of
2cos(2*pi/n), and labels the resulting elements with angle classes
consistently with the squaring dynamics.  Where several labelings are
consistent (they differ by a field automorphism commuting with the
doubling action), ties break deterministically by coefficient order.
"""

from __future__ import annotations

from fractions import Fraction
from .classify import AngleClass, OrbitDigraph, classes_for_denominator, qualifying_denominators
from .cyclotomic import psi
from .errors import CapExceededError, InvalidInputError
from .factorz import factor_over_integers
from .polycore import IntPoly, RatPoly, poly_gcd, resultant_poly

_MAX_NORM_SHIFT = 64


class NumberField:
    """QQ[y]/(g(y)) for monic irreducible g with integer coefficients."""

    def __init__(self, g: IntPoly, *, seed: int = 0):
        if g.degree < 1:
            raise InvalidInputError(f"field polynomial must be nonconstant: {g.pretty()}")
        if not g.is_monic():
            raise InvalidInputError(f"field polynomial must be monic: {g.pretty()}")
        if g.degree > 1:
            fac = factor_over_integers(g, max_degree=max(g.degree, 128), seed=seed)
            if len(fac.factors) != 1 or fac.factors[0][1] != 1:
                culprit = fac.factors[0][0]
                raise InvalidInputError(
                    f"field polynomial is reducible: {g.pretty('y')} "
                    f"has factor {culprit.pretty('y')}"
                )
        self.g = g
        self.degree = g.degree
        self._g_rat = g.to_rat()

    def __eq__(self, other) -> bool:
        return isinstance(other, NumberField) and self.g == other.g

    def __hash__(self) -> int:
        return hash(("NumberField", self.g.coeffs))

    def __repr__(self) -> str:
        return f"NumberField({self.g.pretty('y')!r})"

    def element(self, coeffs) -> "FieldElement":
        """Element from rational coefficients (reduced mod g if too long)."""
        rep = RatPoly([Fraction(c) for c in coeffs])
        if rep.degree >= self.degree:
            rep = divmod(rep, self._g_rat)[1]
        padded = list(rep.coeffs) + [Fraction(0)] * (self.degree - len(rep.coeffs))
        return FieldElement(self, tuple(padded))

    def from_rational(self, q) -> "FieldElement":
        return self.element([Fraction(q)])

    def zero(self) -> "FieldElement":
        return self.from_rational(0)

    def one(self) -> "FieldElement":
        return self.from_rational(1)

    def generator(self) -> "FieldElement":
        return self.element([0, 1]) if self.degree > 1 else self.element([-self.g.coeffs[0]])


class FieldElement:
    """An element of a NumberField: rational coordinates in 1, y, ..., y^(D-1)."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: NumberField, coeffs: tuple[Fraction, ...]):
        if len(coeffs) != field.degree:
            raise ValueError("coefficient vector has the wrong length")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _rep(self) -> RatPoly:
        return RatPoly(self.coeffs)

    def _check(self, other: "FieldElement"):
        if self.field != other.field:
            raise ValueError("elements belong to different fields")

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self.pretty()} is not rational")
        return self.coeffs[0]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldElement)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash(("FieldElement", self.field.g.coeffs, self.coeffs))

    def __repr__(self) -> str:
        return f"<{self.pretty()} in {self.field!r}>"

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return self.field.element([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return self.field.element([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "FieldElement":
        return self.field.element([-a for a in self.coeffs])

    def __mul__(self, other) -> "FieldElement":
        if isinstance(other, (int, Fraction)):
            return self.field.element([a * other for a in self.coeffs])
        self._check(other)
        prod = self._rep() * other._rep()
        return self.field.element(divmod(prod, self.field._g_rat)[1].coeffs)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        """Multiplicative inverse via extended Euclid against g."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        s, _, r = _rat_gcdex(self._rep(), self.field._g_rat)
        if r.degree != 0:
            raise ArithmeticError("field polynomial shares a factor with a nonzero element")
        return self.field.element((s * (1 / r.coeffs[0])).coeffs)

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return self * other.inverse()

    def __pow__(self, e: int) -> "FieldElement":
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def apply_square_minus_two(self) -> "FieldElement":
        return self * self - self.field.from_rational(2)

    def sort_key(self):
        return self.coeffs

    def pretty(self) -> str:
        return self._rep().pretty("y") if not self.is_zero() else "0"


def _rat_gcdex(a: RatPoly, b: RatPoly) -> tuple[RatPoly, RatPoly, RatPoly]:
    """Extended Euclid in QQ[x]: s*a + t*b = r with r the (non-normalized) gcd."""
    s0, s1 = RatPoly([1]), RatPoly()
    t0, t1 = RatPoly(), RatPoly([1])
    r0, r1 = a, b
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return s0, t0, r0


def evaluate_at_element(p: IntPoly, a: FieldElement) -> FieldElement:
    """p(a) computed by Horner inside the field."""
    acc = a.field.zero()
    for c in reversed(p.coeffs):
        acc = acc * a + a.field.from_rational(c)
    return acc


def elem_minpoly(a: FieldElement, *, seed: int = 0) -> IntPoly:
    """Minimal polynomial of a over QQ, as a primitive integer polynomial
    with positive leading coefficient (monic exactly when a is an
    algebraic integer).

    The characteristic polynomial is the resultant Res_y(g(y), x - a(y));
    its squarefree part is factored and the factor vanishing at a (checked
    by exact substitution mod g) is returned.  The degree divides deg(K).
    """
    field = a.field
    if a.is_rational():
        q = a.as_fraction()
        return IntPoly([-q.numerator, q.denominator])
    rep = a._rep()
    den = rep.denominator_lcm()
    scaled, _ = (rep * den).clear_denominators()
    # x - a(y), scaled by den: coefficient of y^0 is den*x - scaled_0
    phat = [IntPoly([-scaled.coeffs[0], den])]
    phat += [IntPoly([-c]) for c in scaled.coeffs[1:]]
    ghat = [IntPoly([c]) for c in field.g.coeffs]
    char_scaled = resultant_poly(phat, ghat)
    sqfree = char_scaled.exact_div(poly_gcd(char_scaled, char_scaled.derivative()))
    sqfree = sqfree.primitive_part()
    if sqfree.lc < 0:
        sqfree = -sqfree
    fac = factor_over_integers(sqfree, max_degree=max(sqfree.degree, 128), seed=seed)
    for factor, _ in fac.factors:
        if evaluate_at_element(factor, a).is_zero():
            return factor
    raise ArithmeticError("no factor of the characteristic polynomial vanishes")


# -- K[x] helpers (coefficient lists of FieldElement, ascending) -------------


def _kx_trim(a: list[FieldElement]) -> list[FieldElement]:
    n = len(a)
    while n > 0 and a[n - 1].is_zero():
        n -= 1
    return a[:n]


def _kx_divmod(a: list[FieldElement], b: list[FieldElement], field: NumberField):
    if not b:
        raise ZeroDivisionError("K[x] division by zero")
    r = list(a)
    if len(r) < len(b):
        return [], r
    q = [field.zero()] * (len(r) - len(b) + 1)
    inv = b[-1].inverse()
    for k in range(len(r) - len(b), -1, -1):
        t = r[k + len(b) - 1] * inv
        q[k] = t
        if not t.is_zero():
            for j, cb in enumerate(b):
                r[k + j] = r[k + j] - t * cb
    return _kx_trim(q), _kx_trim(r[: len(b) - 1])


def _kx_gcd_monic(a: list[FieldElement], b: list[FieldElement], field: NumberField):
    while b:
        a, b = b, _kx_divmod(a, b, field)[1]
    if a:
        inv = a[-1].inverse()
        a = [c * inv for c in a]
    return a


def _kx_compose_shift(p: IntPoly, s: int, field: NumberField) -> list[FieldElement]:
    """p(x + s*theta) as a K[x] coefficient list."""
    theta_s = field.generator() * s
    acc: list[FieldElement] = []
    for c in reversed(p.coeffs):
        # acc = acc * (x + s*theta) + c
        shifted = [field.zero()] + acc
        for i, ci in enumerate(acc):
            shifted[i] = shifted[i] + ci * theta_s
        if not shifted:
            shifted = [field.zero()]
        shifted[0] = shifted[0] + field.from_rational(c)
        acc = _kx_trim(shifted)
    return acc


def roots_in_field(
    p: IntPoly, field: NumberField, *, seed: int = 0, max_shift: int = _MAX_NORM_SHIFT
) -> list[FieldElement]:
    """All alpha in K with p(alpha) = 0, for squarefree integer p.

    Norm-and-factor method; completeness follows from the squarefree norm,
    soundness is re-checked by exact substitution of every candidate.
    """
    if p.is_zero() or p.degree < 1:
        raise InvalidInputError("roots_in_field expects a nonconstant polynomial")
    if poly_gcd(p, p.derivative()).degree != 0:
        raise InvalidInputError(f"polynomial is not squarefree: {p.pretty()}")
    ghat = [IntPoly([c]) for c in field.g.coeffs]
    norm = None
    shift = 0
    for s in range(max_shift):
        # p(x - s*y) as a polynomial in y with IntPoly coefficients in x,
        # built by Horner against the linear form x - s*y
        base = [IntPoly.x(), IntPoly([-s])]
        acc: list[IntPoly] = []
        for c in reversed(p.coeffs):
            acc = _ypoly_mul(acc, base) if acc else []
            acc = _ypoly_add_const(acc, IntPoly([c]))
        candidate = resultant_poly(acc, ghat)
        if poly_gcd(candidate, candidate.derivative()).degree == 0:
            norm = candidate
            shift = s
            break
    if norm is None:
        raise CapExceededError(
            f"no squarefree norm shift below {max_shift} for {p.pretty()}"
        )
    fac = factor_over_integers(norm, max_degree=max(norm.degree, 128), seed=seed)
    roots = []
    px = [field.from_rational(c) for c in p.coeffs]
    for factor, _ in fac.factors:
        shifted = _kx_compose_shift(factor, shift, field)
        common = _kx_gcd_monic(list(px), shifted, field)
        if len(common) == 2:
            root = -common[0]
            value = evaluate_at_element(p, root)
            if not value.is_zero():
                raise ArithmeticError("norm method produced a non-root")
            roots.append(root)
    roots.sort(key=FieldElement.sort_key)
    return roots


def _ypoly_mul(a: list[IntPoly], b: list[IntPoly]) -> list[IntPoly]:
    if not a or not b:
        return []
    out = [IntPoly() for _ in range(len(a) + len(b) - 1)]
    for i, ca in enumerate(a):
        if not ca.is_zero():
            for j, cb in enumerate(b):
                out[i + j] = out[i + j] + ca * cb
    while out and out[-1].is_zero():
        out.pop()
    return out


def _ypoly_add_const(a: list[IntPoly], c: IntPoly) -> list[IntPoly]:
    if not a:
        return [c] if not c.is_zero() else []
    out = list(a)
    out[0] = out[0] + c
    while out and out[-1].is_zero():
        out.pop()
    return out


def _psi_or_linear(n: int) -> IntPoly:
    if n == 1:
        return IntPoly([-2, 1])
    if n == 2:
        return IntPoly([2, 1])
    return psi(n).poly


def cosine_values_in_field(
    field: NumberField, *, seed: int = 0
) -> tuple[list[tuple[AngleClass, FieldElement]], OrbitDigraph]:
    """All cosine values at rational multiples of pi lying in K, as
    (angle class, field element) pairs, plus the doubling digraph.

    For each qualifying denominator n either no root or every root of the
    degree-phi(n)/2 minimal polynomial lies in K (the roots are conjugate
    over QQ and generate the same subfield); that dichotomy is asserted.
    """
    roots_by_n: dict[int, list[FieldElement]] = {}
    for n in qualifying_denominators(field.degree):
        poly = _psi_or_linear(n)
        roots = roots_in_field(poly, field, seed=seed)
        if roots and len(roots) != poly.degree:
            raise ArithmeticError(
                f"partial conjugate set for denominator {n}: "
                f"{len(roots)} of {poly.degree}"
            )
        if roots:
            roots_by_n[n] = roots
    labels = _assign_angle_labels(roots_by_n)
    pairs = sorted(labels.items(), key=lambda kv: kv[0].sort_key())
    graph = OrbitDigraph([a for a, _ in pairs], {a: a.double() for a, _ in pairs})
    return pairs, graph


def _assign_angle_labels(
    roots_by_n: dict[int, list[FieldElement]]
) -> dict[AngleClass, FieldElement]:
    """Label each found element with an angle class so that squaring-minus-two
    on elements matches doubling on classes.

    Odd denominators are permuted by doubling, so element cycles are matched
    to class cycles of equal length; even denominators drop to n/2, so labels
    propagate backward from the already-labeled image.  Remaining ties are
    broken by sorted order (element coefficients against class numerators).
    """
    label_of_element: dict[FieldElement, AngleClass] = {}
    out: dict[AngleClass, FieldElement] = {}

    def assign(cls: AngleClass, elem: FieldElement):
        if cls in out or elem in label_of_element:
            raise ArithmeticError(f"double assignment at {cls}")
        out[cls] = elem
        label_of_element[elem] = cls

    for n in sorted(roots_by_n):
        elems = roots_by_n[n]
        classes = [c for c in classes_for_denominator(n) if c.n == n]
        if n % 2 == 1:
            elem_cycles = _element_cycles(elems)
            class_cycles = _class_cycles(classes)
            used = [False] * len(elem_cycles)
            for ccyc in class_cycles:
                for idx, ecyc in enumerate(elem_cycles):
                    if not used[idx] and len(ecyc) == len(ccyc):
                        used[idx] = True
                        cls = ccyc[0]
                        for elem in ecyc:
                            assign(cls, elem)
                            cls = cls.double()
                        break
                else:
                    raise ArithmeticError(f"no matching element cycle at n={n}")
        else:
            groups: dict[AngleClass, list[FieldElement]] = {}
            for elem in elems:
                image = elem.apply_square_minus_two()
                image_cls = label_of_element.get(image)
                if image_cls is None:
                    raise ArithmeticError(f"unlabeled image while processing n={n}")
                groups.setdefault(image_cls, []).append(elem)
            for image_cls, group in sorted(
                groups.items(), key=lambda kv: kv[0].sort_key()
            ):
                candidates = sorted(
                    (c for c in image_cls.preimages() if c.n == n),
                    key=AngleClass.sort_key,
                )
                if len(candidates) != len(group):
                    raise ArithmeticError(
                        f"preimage mismatch at n={n}: {len(candidates)} classes "
                        f"for {len(group)} elements"
                    )
                for cls, elem in zip(candidates, sorted(group, key=FieldElement.sort_key)):
                    assign(cls, elem)
    return out


def _element_cycles(elems: list[FieldElement]) -> list[list[FieldElement]]:
    """Cycles of squaring-minus-two on a set it permutes, smallest-first."""
    elem_set = set(elems)
    seen: set[FieldElement] = set()
    cycles = []
    for start in sorted(elems, key=FieldElement.sort_key):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        cur = start.apply_square_minus_two()
        while cur != start:
            if cur not in elem_set:
                raise ArithmeticError("element set is not doubling-closed")
            cyc.append(cur)
            seen.add(cur)
            cur = cur.apply_square_minus_two()
        cycles.append(cyc)
    cycles.sort(key=lambda c: c[0].sort_key())
    return cycles


def _class_cycles(classes: list[AngleClass]) -> list[list[AngleClass]]:
    seen: set[AngleClass] = set()
    cycles = []
    for start in sorted(classes, key=AngleClass.sort_key):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        cur = start.double()
        while cur != start:
            cyc.append(cur)
            seen.add(cur)
            cur = cur.double()
        cycles.append(cyc)
    cycles.sort(key=lambda c: c[0].sort_key())
    return cycles


def field_membership_check(g: IntPoly, *, seed: int = 0):
    """Convenience wrapper: build the field and run the full membership scan."""
    field = NumberField(g, seed=seed)
    values, graph = cosine_values_in_field(field, seed=seed)
    return field, values, graph
