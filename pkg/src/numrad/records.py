"""Uniform result carrier for evaluated inequalities.

Every bound in the package produces BoundRecord values with a stable
bound_id, the two sides, their slack, and the tightness ratio.  The holding
test is the repo-wide tolerance policy lhs <= rhs + 1e-9 + 1e-9 |rhs|.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

__all__ = ["BoundRecord", "TOL_ABS", "TOL_REL", "bound_record"]

TOL_ABS = 1e-9
TOL_REL = 1e-9


@dataclass(frozen=True)
class BoundRecord:
    bound_id: str
    lhs: float
    rhs: float
    slack: float
    tightness: float
    preconditions_met: bool = True
    notes: str = ""

    def holds(self, tol_abs: float = TOL_ABS, tol_rel: float = TOL_REL) -> bool:
        return self.lhs <= self.rhs + tol_abs + tol_rel * abs(self.rhs)

    def to_dict(self) -> dict:
        return asdict(self)


def bound_record(
    bound_id: str,
    lhs: float,
    rhs: float,
    preconditions_met: bool = True,
    notes: str = "",
) -> BoundRecord:
    """Build a record, deriving slack = rhs - lhs and tightness = lhs/rhs."""
    lhs = float(lhs)
    rhs = float(rhs)
    if rhs == 0.0:
        tightness = 0.0 if lhs == 0.0 else math.inf
    else:
        tightness = lhs / rhs
    return BoundRecord(
        bound_id=bound_id,
        lhs=lhs,
        rhs=rhs,
        slack=rhs - lhs,
        tightness=tightness,
        preconditions_met=preconditions_met,
        notes=notes,
    )
