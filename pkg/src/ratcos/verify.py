"""Cross-module identity suite behind the CLI ``verify`` subcommand.

Every check exercises two independent routes to the same object: the
Moebius-product dynatomic polynomial against its closed-form psi
factorization, the telescoped product against the raw iterate, the
palindrome substitution against the cyclotomic polynomial, cycle lengths
against field degrees, and the small-prime divisor facts behind the
degree argument.  Each check reports pass/fail with a short detail line.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classify import build_digraph, classify_by_degree
from .cyclotomic import cyclotomic_poly, psi, psi_degree
from .dynatomic import (
    dynatomic_poly,
    dynatomic_psi_factors,
    iterate_minus_x,
    iterate_minus_x_psi_factors,
)
from .numtheory import divisors, factorize, p_adic_valuation
from .polycore import IntPoly


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _check_moebius_vs_closed_form(max_n: int) -> CheckResult:
    for n in range(1, max_n + 1):
        direct = dynatomic_poly(n, -2, max_n=max(12, max_n)).as_int_poly()
        shaped = dynatomic_psi_factors(n).materialize()
        if direct != shaped:
            return CheckResult(
                "moebius-vs-closed-form", False, f"mismatch at n={n}"
            )
    return CheckResult("moebius-vs-closed-form", True, f"n = 1..{max_n}")


def _check_telescoping(max_n: int) -> CheckResult:
    for d in range(1, max_n + 1):
        target = iterate_minus_x(d, -2).as_int_poly()
        product = IntPoly([1])
        for k in divisors(d):
            product = product * dynatomic_poly(k, -2, max_n=max(12, max_n)).as_int_poly()
        if product != target:
            return CheckResult("telescoping-product", False, f"mismatch at D={d}")
        if iterate_minus_x_psi_factors(d).materialize() != target:
            return CheckResult("telescoping-product", False, f"closed form mismatch at D={d}")
    return CheckResult("telescoping-product", True, f"D = 1..{max_n}")


def _check_palindrome_substitution(max_n: int) -> CheckResult:
    bound = max(60, 8 * max_n)
    for n in range(3, bound + 1):
        k = psi_degree(n)
        q = psi(n).poly
        if q.degree != k:
            return CheckResult(
                "palindrome-substitution", False, f"degree mismatch at n={n}"
            )
        # z^k * q(z + 1/z) must reproduce the cyclotomic polynomial
        acc = IntPoly()
        z2p1 = IntPoly([1, 0, 1])
        for j, c in enumerate(q.coeffs):
            term = IntPoly.monomial(c, k - j) * z2p1**j
            acc = acc + term
        if acc != cyclotomic_poly(n):
            return CheckResult("palindrome-substitution", False, f"identity fails at n={n}")
    return CheckResult("palindrome-substitution", True, f"n = 3..{bound}")


def _check_period_divides_degree(max_n: int) -> CheckResult:
    top = min(max_n, 6)
    for deg in range(1, top + 1):
        graph = build_digraph(classify_by_degree(deg))
        for cycle in graph.cycles():
            for a in cycle:
                if a.value_degree() % len(cycle) != 0:
                    return CheckResult(
                        "period-divides-degree",
                        False,
                        f"cycle of length {len(cycle)} at {a} (degree {a.value_degree()})",
                    )
    return CheckResult("period-divides-degree", True, f"D = 1..{top}")


def _check_divisor_lemma(max_n: int) -> CheckResult:
    facts = [
        (p_adic_valuation(3, 2**9 + 1), 3, "v3(2^9+1)"),
        (p_adic_valuation(3, 2**27 + 1), 4, "v3(2^27+1)"),
        (p_adic_valuation(3, 2**25 + 1), 1, "v3(2^25+1)"),
        (p_adic_valuation(3, 2**49 + 1), 1, "v3(2^49+1)"),
        (p_adic_valuation(3, 2**25 - 1), 0, "v3(2^25-1)"),
        (p_adic_valuation(3, 2**27 - 1), 0, "v3(2^27-1)"),
    ]
    for got, want, name in facts:
        if got != want:
            return CheckResult("divisor-lemma", False, f"{name} = {got}, expected {want}")
    for k in (2, 3, 4):
        fermat = 2**(2**k) + 1
        for q in factorize(fermat).primes():
            if q % 2 ** (k + 2) != 1:
                return CheckResult(
                    "divisor-lemma", False, f"{q} | 2^(2^{k})+1 not 1 mod 2^{k + 2}"
                )
    return CheckResult("divisor-lemma", True, "valuations and Fermat divisors")


def run_checks(max_n: int) -> list[CheckResult]:
    """Run the whole identity suite; max_n bounds the dynatomic indices."""
    if max_n < 1:
        raise ValueError(f"verify bound must be >= 1, got {max_n}")
    return [
        _check_moebius_vs_closed_form(max_n),
        _check_telescoping(max_n),
        _check_palindrome_substitution(max_n),
        _check_period_divides_degree(max_n),
        _check_divisor_lemma(max_n),
    ]
