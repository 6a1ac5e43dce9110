"""ratcos: exact classification of cos(r*pi), r rational, in number fields.

The toolkit works with 2cos(2*pi*m/n), whose behaviour under the map
x -> x^2 - 2 mirrors doubling of the angle; every value of cosine at a
rational multiple of pi that lies in a number field K is a preperiodic
point of that map, and conversely.  All arithmetic is exact: big
integers, fractions, and integer polynomials throughout.
"""

from .classify import (
    AlgebraicValue,
    AngleClass,
    OrbitDigraph,
    build_digraph,
    classify_by_degree,
    min_poly_of,
    periodic_cycles,
    preper_bound,
    value_label,
)
from .cyclotomic import PsiPoly, cyclotomic_poly, depalindromize, psi
from .dynatomic import (
    PsiFactorization,
    dynatomic_poly,
    dynatomic_psi_factors,
    iterate_f,
    iterate_minus_x,
    iterate_minus_x_psi_factors,
)
from .errors import CapExceededError, InvalidInputError
from .factorz import (
    IntFactorization,
    factor_over_integers,
    is_irreducible,
    squarefree_decompose,
)
from .numfield import (
    FieldElement,
    NumberField,
    cosine_values_in_field,
    elem_minpoly,
    evaluate_at_element,
    roots_in_field,
)
from .numtheory import (
    FactoredInteger,
    divisors,
    euler_phi,
    factorize,
    moebius,
    mult_order,
    p_adic_valuation,
    totient_summatory,
)
from .polycore import IntPoly, RatPoly, parse_int_poly, poly_gcd, resultant, resultant_poly

__version__ = "0.1.0"

__all__ = [
    "AlgebraicValue",
    "AngleClass",
    "CapExceededError",
    "FactoredInteger",
    "FieldElement",
    "IntFactorization",
    "IntPoly",
    "InvalidInputError",
    "NumberField",
    "OrbitDigraph",
    "PsiFactorization",
    "PsiPoly",
    "RatPoly",
    "build_digraph",
    "classify_by_degree",
    "cosine_values_in_field",
    "cyclotomic_poly",
    "depalindromize",
    "divisors",
    "dynatomic_poly",
    "dynatomic_psi_factors",
    "elem_minpoly",
    "euler_phi",
    "evaluate_at_element",
    "factor_over_integers",
    "factorize",
    "is_irreducible",
    "iterate_f",
    "iterate_minus_x",
    "iterate_minus_x_psi_factors",
    "min_poly_of",
    "moebius",
    "mult_order",
    "p_adic_valuation",
    "parse_int_poly",
    "periodic_cycles",
    "poly_gcd",
    "preper_bound",
    "psi",
    "resultant",
    "resultant_poly",
    "roots_in_field",
    "squarefree_decompose",
    "totient_summatory",
    "value_label",
]
