"""Grid evaluation: route an operator chain to the closed or numeric backend.

Per-point failures are isolated: a point that cannot be evaluated gets an
error status in its row instead of aborting the rest of the grid.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace
from typing import Sequence

from . import closed_form as _closed
from . import quadrature as _quad
from .errors import ConvergenceError, DomainError, MismatchError, UnsupportedError
from .functions import CausalFunction, OpaqueFunction
from .operators import Branch, OperatorExpr, normalize
from .special import complex_pow

__all__ = ["EvalResult", "EvalStatus", "Method", "apply"]

#: Floor used in the relative-error denominator.
TINY_FLOOR = 1e-300


class Method(enum.Enum):
    CLOSED = "closed"
    NUMERIC = "numeric"
    BOTH = "both"


class EvalStatus(enum.Enum):
    OK = "ok"
    CONVERGENCE_ERROR = "convergence_error"
    DOMAIN_ERROR = "domain_error"
    UNSUPPORTED = "unsupported"


@dataclass(frozen=True)
class EvalResult:
    """One grid point: numeric (or closed) value, optional reference, errors."""

    x: float
    value: complex | None
    reference: complex | None = None
    abs_err: float | None = None
    rel_err: float | None = None
    status: EvalStatus = EvalStatus.OK


def _status_of(exc: Exception) -> EvalStatus:
    if isinstance(exc, ConvergenceError):
        return EvalStatus.CONVERGENCE_ERROR
    if isinstance(exc, UnsupportedError):
        return EvalStatus.UNSUPPORTED
    return EvalStatus.DOMAIN_ERROR


def _numeric_point(net, f, x: float, cfg: _quad.QuadConfig) -> complex:
    x0 = f.lower_limit
    if net.branch is Branch.IDENTITY:
        return complex(f(x))

    if isinstance(f, CausalFunction):
        if not math.isfinite(x0):
            # Pure exponential with lower limit -inf.
            if f.exp_coef == 0:
                return 0j
            if net.branch is Branch.INTEGRATE:
                return f.exp_coef * _quad.integrate_exp_lower_inf(net.sigma, x, cfg)
            order = -net.sigma
            inner_cfg = replace(cfg, rel_tol=max(cfg.rel_tol * 1e-3, 1e-13))

            def inner(u: float) -> complex:
                try:
                    return _quad.integrate_exp_lower_inf(net.k - order, u, inner_cfg)
                except ConvergenceError as exc:
                    if exc.achieved_rel_err <= cfg.rel_tol:
                        return exc.best_estimate
                    raise

            return f.exp_coef * _quad.central_derivative(inner, x, net.k, cfg)

        total = 0j
        for term in f.terms:
            coef, p = term.coef, term.exponent

            def term_fn(y: float, _c=coef, _p=p) -> complex:
                return _c * complex_pow(y - x0, _p)

            if net.branch is Branch.INTEGRATE:
                total += _quad.integrate_numeric(
                    term_fn, net.sigma, x, x0, cfg, singular_exponent=p
                )
            else:
                total += _quad.differentiate_numeric(
                    term_fn, -net.sigma, x, x0, net.k, cfg, singular_exponent=p
                )
        return total

    # Opaque handle: no structural information to exploit.
    if net.branch is Branch.INTEGRATE:
        return _quad.integrate_numeric(f, net.sigma, x, x0, cfg)
    return _quad.differentiate_numeric(f, -net.sigma, x, x0, net.k, cfg)


def apply(
    expr: OperatorExpr,
    f: CausalFunction | OpaqueFunction,
    xs: Sequence[float],
    method: Method | str = Method.BOTH,
    cfg: _quad.QuadConfig | None = None,
) -> list[EvalResult]:
    """Evaluate the operator chain applied to ``f`` at every point of ``xs``.

    ``closed`` evaluates the exact Gamma-ratio image (CausalFunction only),
    ``numeric`` runs the quadrature backend, ``both`` runs the two and
    reports the numeric value against the closed reference with absolute
    and relative errors.
    """
    method = Method(method)
    if cfg is None:
        cfg = _quad.QuadConfig()
    if expr.lower_limit != f.lower_limit:
        raise MismatchError(
            f"operator lower limit {expr.lower_limit!r} != function lower limit {f.lower_limit!r}"
        )
    if method is not Method.NUMERIC and not isinstance(f, CausalFunction):
        raise UnsupportedError("closed-form evaluation needs a CausalFunction")

    net = normalize(expr)

    closed_image: CausalFunction | None = None
    closed_failure: Exception | None = None
    if method is not Method.NUMERIC:
        try:
            closed_image = _closed.apply_closed(expr, f)
        except (DomainError, UnsupportedError) as exc:
            closed_failure = exc

    results: list[EvalResult] = []
    for x in xs:
        x = float(x)
        if not x > f.lower_limit:
            results.append(
                EvalResult(x=x, value=None, status=EvalStatus.DOMAIN_ERROR)
            )
            continue

        reference: complex | None = None
        ref_status: EvalStatus | None = None
        if method is not Method.NUMERIC:
            if closed_failure is not None:
                ref_status = _status_of(closed_failure)
            else:
                try:
                    reference = closed_image(x)
                except DomainError as exc:
                    ref_status = _status_of(exc)

        if method is Method.CLOSED:
            results.append(
                EvalResult(
                    x=x,
                    value=reference,
                    status=EvalStatus.OK if ref_status is None else ref_status,
                )
            )
            continue

        value: complex | None = None
        num_status: EvalStatus | None = None
        try:
            value = _numeric_point(net, f, x, cfg)
        except ConvergenceError as exc:
            value = exc.best_estimate
            num_status = EvalStatus.CONVERGENCE_ERROR
        except (DomainError, UnsupportedError) as exc:
            num_status = _status_of(exc)

        if method is Method.NUMERIC:
            results.append(
                EvalResult(
                    x=x,
                    value=value,
                    status=EvalStatus.OK if num_status is None else num_status,
                )
            )
            continue

        abs_err = rel_err = None
        if value is not None and reference is not None:
            abs_err = abs(value - reference)
            rel_err = abs_err / max(abs(reference), TINY_FLOOR)
        status = num_status or ref_status or EvalStatus.OK
        results.append(
            EvalResult(
                x=x,
                value=value,
                reference=reference,
                abs_err=abs_err,
                rel_err=rel_err,
                status=status,
            )
        )
    return results
