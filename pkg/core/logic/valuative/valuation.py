"""
Monomial valuations v(x_i) = gamma_i on a weighted polynomial ring.
"""

import logging
import re
from fractions import Fraction
from typing import Dict, Mapping, Tuple, Union

import sympy as sp
from pydantic import BaseModel, ConfigDict, Field, model_validator
from sympy.polys.polyerrors import BasePolynomialError

from core.constants import MAX_EXPONENT
from core.logic.algebra import INFINITY, Rational, WeightedAlgebra, parse_rational, rational_gcd, variable_names
from core.logic.algebra.weighted import _validate_weights
from core.logic.errors import InputValidationError

logger = logging.getLogger(__name__)

Polynomial = Dict[Tuple[int, ...], Fraction]

_TOKEN_RE = re.compile(r"\s*(\d+|[A-Za-z_][A-Za-z0-9_]*|\*\*|[-+*/^()])")


class MonomialValuation(BaseModel):
    """
    A rank-1 quasi-regular valuation given by its values on the variables.

    Fields:
        weights: (gamma_1, ..., gamma_n), all positive
    """
    weights: Tuple[Rational, ...] = Field(..., description="Values v(x_i)")

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @model_validator(mode="after")
    def _check_weights(self):
        _validate_weights(self.weights)
        return self

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def index(self) -> Fraction:
        """delta: generator of the value group, gcd of the weights in Q."""
        return rational_gcd(self.weights)

    @property
    def algebra(self) -> WeightedAlgebra:
        """gr_v(R), which for a monomial valuation is the same weighted ring."""
        return WeightedAlgebra(weights=self.weights)

    @classmethod
    def of(cls, algebra: WeightedAlgebra) -> "MonomialValuation":
        return cls(weights=algebra.weights)


def log_discrepancy(v: MonomialValuation) -> Fraction:
    """A(v) = sum of the weights."""
    return sum(v.weights, Fraction(0))


def parse_polynomial(expr: Union[str, sp.Expr, Mapping], n: int) -> Polynomial:
    """
    Convert a polynomial into an exponent -> coefficient map.

    Strings and sympy expressions are read in the variables x, y, z (n <= 3)
    or x1..xn; an existing map is validated and returned with zero terms removed.

    Raises:
        InputValidationError: If the input is not a polynomial with rational
            coefficients in those variables
    """
    if isinstance(expr, Mapping):
        out = {}
        for exps, coeff in expr.items():
            exps = tuple(exps)
            _check_exponents(exps, n)
            coeff = parse_rational(coeff)
            if coeff != 0:
                out[exps] = out.get(exps, Fraction(0)) + coeff
        return {e: c for e, c in out.items() if c != 0}

    names = variable_names(n)
    gens = sp.symbols(names)
    try:
        if isinstance(expr, str):
            _check_grammar(expr, names)
            expr = sp.sympify(expr, locals=dict(zip(names, gens)), convert_xor=True)
        poly = sp.Poly(expr, *gens, domain='QQ')
    except InputValidationError:
        logger.warning(f"Rejected polynomial {expr!r}")
        raise
    except (sp.SympifyError, BasePolynomialError, TypeError, ValueError, ZeroDivisionError) as e:
        logger.warning(f"Rejected polynomial {expr!r}: {e}")
        raise InputValidationError(f"not a polynomial in {', '.join(map(str, gens))}: {expr!r}") from e
    return {
        tuple(int(k) for k in monom): Fraction(int(c.p), int(c.q))
        for monom, c in poly.terms()
        if c != 0
    }


def _check_grammar(text: str, names: Tuple[str, ...]) -> None:
    """
    Accept only integers, the variable names, + - * / ^ ** ( ) and whitespace.
    Every exponent is a single integer literal, and the exponent of a power
    times the largest exponent inside its base stays within MAX_EXPONENT.
    """
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise InputValidationError(f"unexpected character {text[pos:].lstrip()[:1]!r} in polynomial {text!r}")
        tokens.append(m.group(1))
        pos = m.end()

    # largest effective exponent per open parenthesis level
    levels = [1]
    closed = 1
    for i, tok in enumerate(tokens):
        if tok[0].isalpha() or tok[0] == "_":
            if tok not in names:
                raise InputValidationError(f"unknown symbol {tok!r}; variables are {', '.join(names)}")
        elif tok == "(":
            levels.append(1)
        elif tok == ")" and len(levels) > 1:
            closed = levels.pop()
            levels[-1] = max(levels[-1], closed)
        elif tok in ("**", "^"):
            exponent = tokens[i + 1] if i + 1 < len(tokens) else ""
            if not exponent.isdigit():
                raise InputValidationError(f"exponents must be nonnegative integer literals in {text!r}")
            if i + 2 < len(tokens) and tokens[i + 2] in ("**", "^"):
                raise InputValidationError(f"chained powers are not accepted in {text!r}")
            base = closed if i > 0 and tokens[i - 1] == ")" else 1
            effective = base * int(exponent)
            if effective > MAX_EXPONENT:
                raise InputValidationError(f"exponent {effective} exceeds {MAX_EXPONENT} in {text!r}")
            levels[-1] = max(levels[-1], effective)



def _check_exponents(exps: Tuple[int, ...], n: int) -> None:
    if len(exps) != n:
        raise InputValidationError(f"monomial {exps} has {len(exps)} exponents, expected {n}")
    for k in exps:
        if not isinstance(k, int) or k < 0:
            raise InputValidationError(f"exponents must be nonnegative integers, got {exps}")


def v_eval(v: MonomialValuation, f) -> Union[Fraction, float]:
    """
    v(f) = min over the monomials of f of sum k_i gamma_i; infinity for f = 0.

    Raises:
        InputValidationError: On negative or mis-sized exponents
    """
    poly = parse_polynomial(f, v.n)
    if not poly:
        return INFINITY
    return min(
        sum((k * g for k, g in zip(exps, v.weights)), Fraction(0))
        for exps in poly
    )
