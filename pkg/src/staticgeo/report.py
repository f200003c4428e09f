"""Report containers shared by the check operations.

Every inequality check is oriented so that "inequality satisfied" means
slack >= 0; identity checks use slack = -|lhs - rhs|. A report is
satisfied when slack >= -tol.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

__all__ = ["InequalityReport"]


@dataclass(frozen=True)
class InequalityReport:
    name: str
    lhs: float
    rhs: float
    slack: float
    satisfied: bool
    tol: float

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def make_report(name: str, lhs: float, rhs: float, slack: float, tol: float
                ) -> InequalityReport:
    return InequalityReport(
        name=name,
        lhs=float(lhs),
        rhs=float(rhs),
        slack=float(slack),
        satisfied=bool(slack >= -tol),
        tol=float(tol),
    )


def inequality_report(name: str, lhs: float, rhs: float, tol: float = 1e-10,
                      ) -> InequalityReport:
    """Report for an inequality lhs >= rhs (slack = lhs - rhs)."""
    return make_report(name, lhs, rhs, float(lhs) - float(rhs), tol)


def identity_report(name: str, lhs: float, rhs: float, tol: float = 1e-10,
                    ) -> InequalityReport:
    """Report for an identity lhs == rhs (slack = -|lhs - rhs|)."""
    return make_report(name, lhs, rhs, -abs(float(lhs) - float(rhs)), tol)
