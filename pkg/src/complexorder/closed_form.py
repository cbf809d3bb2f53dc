"""Exact operator action on power functions via Gamma-ratio coefficients.

On a power term (x - x0)^p the integral and derivative of complex order act
multiplicatively:

    J^s: (x-x0)^p  ->  Gamma(p+1)/Gamma(s+p+1) * (x-x0)^(p+s)      Re(s) > 0
    D^s: (x-x0)^p  ->  Gamma(p+1)/Gamma(p-s+1) * (x-x0)^(p-s)      Re(s) >= 0

Both coefficients are formed in log space; a pole in the denominator
Gamma yields an exactly zero coefficient, which is how D^2 annihilates x.
With x0 = -inf the only closed form available is e^x, an eigenfunction of
integer net orders.
"""

from __future__ import annotations

from .errors import DomainError, MismatchError, UnsupportedError
from .functions import CausalFunction, PowerTerm
from .operators import Branch, OperatorExpr, normalize
from .special import gamma_ratio

__all__ = [
    "INTEGER_ORDER_TOL",
    "apply_closed",
    "differentiate_power",
    "integrate_power",
]

#: Net orders within this distance of an integer count as integers for the
#: exponential eigenfunction rule.
INTEGER_ORDER_TOL = 1e-12


def integrate_power(p: complex, s: complex) -> tuple[complex, complex]:
    """Coefficient and exponent of J^s applied to the power p.

    Requires Re(p) > -1 (integrability at the lower endpoint) and
    Re(s) > 0.
    """
    p, s = complex(p), complex(s)
    if p.real <= -1.0:
        raise DomainError(f"integrate_power needs Re(p) > -1, got p = {p!r}")
    if s.real <= 0.0:
        raise DomainError(f"integrate_power needs Re(s) > 0, got s = {s!r}")
    return gamma_ratio(p + 1.0, s + p + 1.0), p + s


def differentiate_power(p: complex, s: complex) -> tuple[complex, complex]:
    """Coefficient and exponent of D^s applied to the power p.

    Requires Re(p) > -1 and Re(s) >= 0 (the purely imaginary case is valid:
    the coefficient formula does not involve the construction index k).
    The coefficient is exactly 0 when p - s + 1 hits a Gamma pole.
    """
    p, s = complex(p), complex(s)
    if p.real <= -1.0:
        raise DomainError(f"differentiate_power needs Re(p) > -1, got p = {p!r}")
    if s.real < 0.0:
        raise DomainError(
            f"differentiate_power needs Re(s) >= 0, got s = {s!r}; "
            "use integrate_power for net integrals"
        )
    return gamma_ratio(p + 1.0, p - s + 1.0), p - s


def _is_integer(z: complex) -> bool:
    return abs(z.imag) <= INTEGER_ORDER_TOL and abs(z.real - round(z.real)) <= INTEGER_ORDER_TOL


def apply_closed(expr: OperatorExpr, f: CausalFunction) -> CausalFunction:
    """Apply a normalized operator chain to a symbolic function, exactly.

    The chain collapses to its net order sigma first (the composition laws
    hold exactly on the power-function class), then each term maps through
    a single Gamma-ratio coefficient.
    """
    if expr.lower_limit != f.lower_limit:
        raise MismatchError(
            f"operator lower limit {expr.lower_limit!r} != function lower limit {f.lower_limit!r}"
        )
    net = normalize(expr)
    if net.branch is Branch.IDENTITY:
        return f

    sigma = net.sigma
    new_terms = []
    for term in f.terms:
        if net.branch is Branch.INTEGRATE:
            coef, exponent = integrate_power(term.exponent, sigma)
        else:
            coef, exponent = differentiate_power(term.exponent, -sigma)
        new_terms.append(PowerTerm(term.coef * coef, exponent))

    exp_coef = 0j
    if f.exp_coef != 0:
        if not _is_integer(sigma):
            raise UnsupportedError(
                "closed form for exp(x) exists only for integer net orders, "
                f"got {sigma!r}"
            )
        exp_coef = f.exp_coef
    return CausalFunction(terms=tuple(new_terms), exp_coef=exp_coef, lower_limit=f.lower_limit)
