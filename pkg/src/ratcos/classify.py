"""Symbolic classification of the values 2cos(2*pi*m/n) by algebraic degree.

An ``AngleClass`` is the reduced fraction m/n, canonicalized to
0 <= m <= n/2 (the classes +-m mod n carry the same cosine), and stands
for the algebraic number 2cos(2*pi*m/n).  Squaring-minus-two on these
numbers is conjugate to doubling the angle, so orbits are computed
purely combinatorially; no floating point appears anywhere.

``classify_by_degree(D)`` enumerates every class whose value has degree
dividing D, by scanning denominators n <= 8*D^2 and testing
phi(n)/2 | D directly; ``build_digraph`` assembles the functional graph
of the doubling map over any closed vertex set, with deterministic DOT
output (vertices sorted by (n, m), one digraph per weakly-connected
component).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .cyclotomic import psi
from .numtheory import euler_phi, factorize, totient_summatory
from .polycore import IntPoly


@dataclass(frozen=True)
class AngleClass:
    """Reduced m/n with 0 <= m <= n/2, representing 2cos(2*pi*m/n)."""

    m: int
    n: int

    def __post_init__(self):
        m, n = self.m, self.n
        if n <= 0:
            raise ValueError(f"denominator must be positive, got {n}")
        if m < 0:
            raise ValueError(f"numerator must be nonnegative, got {m}")
        m %= n
        g = gcd(m, n)
        m //= g
        n //= g
        if 2 * m > n:
            m = n - m
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n", n)

    def sort_key(self) -> tuple[int, int]:
        return (self.n, self.m)

    def __str__(self) -> str:
        return f"{self.m}/{self.n}"

    def double(self) -> "AngleClass":
        """Image under the angle-doubling map (the x^2 - 2 action)."""
        return AngleClass(2 * self.m, self.n)

    def preimages(self) -> set["AngleClass"]:
        """The classes whose double is this class (at most 2)."""
        return {AngleClass(self.m, 2 * self.n), AngleClass(self.m + self.n, 2 * self.n)}

    def value_degree(self) -> int:
        return 1 if self.n <= 2 else euler_phi(self.n) // 2

    def rpi_form(self) -> tuple[int, int]:
        """The same angle written as r*pi with r = 2m/n reduced."""
        num, den = 2 * self.m, self.n
        g = gcd(num, den)
        return (num // g, den // g) if g else (0, 1)


@dataclass(frozen=True)
class AlgebraicValue:
    """An angle class with its monic integer minimal polynomial."""

    angle: AngleClass
    min_poly: IntPoly
    degree: int


def min_poly_of(a: AngleClass) -> AlgebraicValue:
    """Attach the minimal polynomial of 2cos(2*pi*m/n)."""
    if a.n == 1:
        poly = IntPoly([-2, 1])
    elif a.n == 2:
        poly = IntPoly([2, 1])
    else:
        poly = psi(a.n).poly
    return AlgebraicValue(a, poly, max(1, poly.degree))


def qualifying_denominators(degree: int) -> list[int]:
    """All n whose cosine values have degree dividing ``degree``:
    n <= 8*degree^2 with phi(n)/2 | degree, plus n = 1, 2."""
    if degree < 1:
        raise ValueError(f"degree must be >= 1, got {degree}")
    out = []
    for n in range(1, 8 * degree * degree + 1):
        if n <= 2 or (euler_phi(n) // 2 > 0 and degree % (euler_phi(n) // 2) == 0):
            out.append(n)
    return out


def classes_for_denominator(n: int) -> list[AngleClass]:
    """Canonical classes m/n, sorted by m (phi(n)/2 of them for n > 2)."""
    if n == 1:
        return [AngleClass(0, 1)]
    if n == 2:
        return [AngleClass(1, 2)]
    return [AngleClass(m, n) for m in range(1, n // 2 + 1) if gcd(m, n) == 1]


def classify_by_degree(degree: int) -> list[AlgebraicValue]:
    """Every cosine value at a rational angle whose degree divides ``degree``,
    sorted by (n, m)."""
    values = []
    for n in qualifying_denominators(degree):
        for a in classes_for_denominator(n):
            values.append(min_poly_of(a))
    values.sort(key=lambda v: v.angle.sort_key())
    return values


def preper_bound(degree: int) -> int:
    """Totient-summatory cardinality bound for the degree-D value set."""
    if degree < 1:
        raise ValueError(f"degree must be >= 1, got {degree}")
    return totient_summatory(8 * degree * degree)


class OrbitDigraph:
    """Functional graph of the doubling map over a closed set of classes."""

    def __init__(self, vertices, edges: dict[AngleClass, AngleClass]):
        self.vertices: tuple[AngleClass, ...] = tuple(
            sorted(vertices, key=AngleClass.sort_key)
        )
        self.edges = dict(edges)
        vset = set(self.vertices)
        for v in self.vertices:
            if self.edges[v] not in vset:
                raise ValueError(f"vertex set not closed: {v} -> {self.edges[v]}")

    def successor(self, v: AngleClass) -> AngleClass:
        return self.edges[v]

    def components(self) -> list[list[AngleClass]]:
        """Weakly-connected components, each sorted, ordered by smallest vertex."""
        parent = {v: v for v in self.vertices}

        def find(v):
            while parent[v] is not v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for v, w in self.edges.items():
            rv, rw = find(v), find(w)
            if rv is not rw:
                parent[rv] = rw
        groups: dict[AngleClass, list[AngleClass]] = {}
        for v in self.vertices:
            groups.setdefault(find(v), []).append(v)
        comps = [sorted(g, key=AngleClass.sort_key) for g in groups.values()]
        comps.sort(key=lambda g: g[0].sort_key())
        return comps

    def cycles(self) -> list[list[AngleClass]]:
        """All cycles, each rotated to start at its smallest vertex, ordered
        by that vertex."""
        color: dict[AngleClass, int] = {}
        cycles = []
        for v in self.vertices:
            path = []
            u = v
            while color.get(u, 0) == 0:
                color[u] = 1
                path.append(u)
                u = self.edges[u]
            if color[u] == 1:
                i = path.index(u)
                cycles.append(path[i:])
            for w in path:
                color[w] = 2
        out = []
        for cyc in cycles:
            k = min(range(len(cyc)), key=lambda i: cyc[i].sort_key())
            out.append(cyc[k:] + cyc[:k])
        out.sort(key=lambda c: c[0].sort_key())
        return out

    def to_dot(self, labeler=None) -> str:
        """Deterministic DOT text: one digraph per weakly-connected component."""
        labeler = labeler or value_label
        blocks = []
        for idx, comp in enumerate(self.components()):
            lines = [f"digraph component_{idx} {{"]
            for v in comp:
                lines.append(f'  "{v}" [label="{labeler(v)}"];')
            for v in comp:
                lines.append(f'  "{v}" -> "{self.edges[v]}";')
            lines.append("}")
            blocks.append("\n".join(lines))
        return "\n".join(blocks) + "\n"


def build_digraph(values) -> OrbitDigraph:
    """Functional graph a -> double(a) over the given values (AlgebraicValue
    or AngleClass); raises if the set is not closed under doubling."""
    classes = [v.angle if isinstance(v, AlgebraicValue) else v for v in values]
    edges = {a: a.double() for a in classes}
    return OrbitDigraph(classes, edges)


def periodic_cycles(graph: OrbitDigraph) -> list[list[AngleClass]]:
    return graph.cycles()


def _squarefree_split(n: int) -> tuple[int, int]:
    """n = s^2 * d with d squarefree; returns (s, d)."""
    s, d = 1, 1
    for p, e in factorize(n).factors:
        s *= p ** (e // 2)
        if e % 2:
            d *= p
    return s, d


_RATIONAL_VALUE = {1: "2", 2: "-2", 3: "-1", 4: "0", 6: "1"}


def value_label(a: AngleClass) -> str:
    """Display string: exact rational or quadratic surd for degree <= 2,
    otherwise the (m/n, minimal polynomial) pair."""
    if a.n in _RATIONAL_VALUE:
        return _RATIONAL_VALUE[a.n]
    if a.value_degree() == 2:
        return _quadratic_label(a)
    return f"{a}: {min_poly_of(a).min_poly.pretty()}"


def _quadratic_label(a: AngleClass) -> str:
    """Surd form of a degree-2 value.

    2cos is strictly decreasing in m over 0 <= m <= n/2, so of the two
    conjugate roots (-b +- sqrt(disc))/2 of x^2 + bx + c, the smaller m
    of the two classes sharing n takes the + branch.  No floating point.
    """
    poly = min_poly_of(a).min_poly
    c, b, _ = poly.coeffs
    disc = b * b - 4 * c
    s, d = _squarefree_split(disc)
    ms = [cl.m for cl in classes_for_denominator(a.n)]
    plus = a.m == min(ms)
    if b % 2 == 0 and s % 2 == 0:
        whole = -b // 2
        k = s // 2 if plus else -(s // 2)
        root = f"sqrt({d})" if abs(k) == 1 else f"{abs(k)}*sqrt({d})"
        if whole == 0:
            return root if k > 0 else f"-{root}"
        sign = "+" if k > 0 else "-"
        return f"{whole}{sign}{root}"
    root = f"sqrt({d})" if s == 1 else f"{s}*sqrt({d})"
    sign = "+" if plus else "-"
    return f"({-b}{sign}{root})/2"
