"""Operator chains and their normalization.

A chain like D^(0.5).J^(1+1i) is a sequence of integral (J) and derivative
(D) stages applied right to left, all sharing one lower limit.  Because the
composition laws add orders, any chain collapses to a single net signed
order sigma = sum of J orders minus sum of D orders; evaluation then
branches on the sign of Re(sigma).  Net derivatives are realized through
k-fold ordinary differentiation of a (k + sigma)-order integral, where the
integer k is chosen so that Re(k + sigma) > 0.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from ._parsing import TokenStream, parse_complex, tokenize
from .errors import DomainError, ParseError

__all__ = [
    "Branch",
    "NetOperator",
    "OperatorExpr",
    "OperatorStage",
    "OpKind",
    "choose_k",
    "normalize",
    "parse_operator",
]


class OpKind(enum.Enum):
    INTEGRAL = "J"
    DERIVATIVE = "D"


class Branch(enum.Enum):
    INTEGRATE = "integrate"
    DIFFERENTIATE = "differentiate"
    IDENTITY = "identity"


@dataclass(frozen=True)
class OperatorStage:
    """One J^order or D^order application.

    J^0 is the explicit identity stage; D^0 is rejected.
    """

    kind: OpKind
    order: complex

    def __post_init__(self):
        object.__setattr__(self, "order", complex(self.order))
        if not (math.isfinite(self.order.real) and math.isfinite(self.order.imag)):
            raise DomainError(f"stage order must be finite, got {self.order!r}")
        if self.kind is OpKind.DERIVATIVE and self.order == 0:
            raise DomainError("D^0 is not a stage; use J^0 for the identity")


@dataclass(frozen=True)
class OperatorExpr:
    """Ordered stages (applied right to left) with a shared lower limit."""

    stages: tuple[OperatorStage, ...]
    lower_limit: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "stages", tuple(self.stages))
        object.__setattr__(self, "lower_limit", float(self.lower_limit))
        if math.isnan(self.lower_limit) or self.lower_limit == math.inf:
            raise DomainError(f"lower limit must be finite or -inf, got {self.lower_limit!r}")


@dataclass(frozen=True)
class NetOperator:
    """Collapsed form of a chain: net order, branch, and derivative index k."""

    sigma: complex
    branch: Branch
    k: int


def choose_k(s: complex) -> int:
    """Smallest practical integer k with k > Re(s): floor(Re(s)) + 1.

    For a net derivative of order s (Re(s) >= 0) this guarantees
    Re(k - s) > 0, so the inner integral is defined.
    """
    s = complex(s)
    return int(math.floor(s.real)) + 1


def normalize(expr: OperatorExpr) -> NetOperator:
    """Collapse a chain to its net operator.

    The net order adds commutatively, so the result is invariant under
    permuting stages or splitting one stage into two whose orders sum to it.
    """
    sigma = 0j
    for stage in expr.stages:
        if stage.kind is OpKind.INTEGRAL:
            sigma += stage.order
        else:
            sigma -= stage.order
    if sigma == 0:
        return NetOperator(sigma=0j, branch=Branch.IDENTITY, k=0)
    if sigma.real > 0:
        return NetOperator(sigma=sigma, branch=Branch.INTEGRATE, k=0)
    # Net derivative of order -sigma (Re >= 0); Re(sigma) == 0 with
    # sigma != 0 lands here too, with k = 1 so Re(k + sigma) = 1 > 0.
    return NetOperator(sigma=sigma, branch=Branch.DIFFERENTIATE, k=choose_k(-sigma))


def parse_operator(text: str, lower_limit: float = 0.0) -> OperatorExpr:
    """Parse a chain like "D^(0.5).J^(1+1i)" (stages separated by '.')."""
    stream = TokenStream(tokenize(text))
    stages: list[OperatorStage] = []
    while True:
        tok = stream.expect("name", "'J' or 'D'")
        if tok.text == "J":
            kind = OpKind.INTEGRAL
        elif tok.text == "D":
            kind = OpKind.DERIVATIVE
        else:
            raise ParseError(tok.offset, "'J' or 'D'")
        stream.expect("^", "'^'")
        order = parse_complex(stream)
        stages.append(OperatorStage(kind=kind, order=order))
        if stream.peek().kind == ".":
            stream.next()
            continue
        stream.expect_end()
        break
    return OperatorExpr(stages=tuple(stages), lower_limit=lower_limit)
