"""Exception hierarchy and work budgets shared by every module."""

from __future__ import annotations

import os
from dataclasses import dataclass


class ToricError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(ToricError, ValueError):
    """Malformed graph, unknown family, unknown edge or vertex."""


class WalkError(ToricError, ValueError):
    """Invalid closed walk."""


class NotAChord(ToricError, ValueError):
    pass


class ChordNotOdd(ToricError, ValueError):
    pass


class NotSubgraph(ToricError, ValueError):
    pass


class NotASplitting(ToricError, ValueError):
    pass


class NotReduced(ToricError, ValueError):
    pass


class ClosedFormViolation(ToricError, AssertionError):
    """A computed answer contradicts a closed-form classification."""


class NoMatchingType(ClosedFormViolation):
    """A K_n splitting fits none of the four 4-cycle shapes."""


class BudgetExceeded(ToricError, RuntimeError):
    """A configured enumeration cap was hit; the answer is unknown."""


DEFAULT_CAP = 200_000


@dataclass
class Budget:
    fiber_cap: int = DEFAULT_CAP
    candidate_cap: int = DEFAULT_CAP
    selection_cap: int = DEFAULT_CAP
    # None means 2*|E| of the graph at hand
    walk_length_cap: int | None = None

    def walk_cap(self, n_edges: int) -> int:
        return self.walk_length_cap if self.walk_length_cap is not None else 2 * n_edges


def _from_env() -> Budget:
    raw = os.environ.get("TORIC_SPLIT_BUDGET")
    if not raw:
        return Budget()
    cap = int(raw)
    return Budget(fiber_cap=cap, candidate_cap=cap, selection_cap=cap)


BUDGET = _from_env()


def set_budget(cap: int) -> None:
    """Set every enumeration cap to ``cap`` (walk length cap unchanged)."""
    BUDGET.fiber_cap = BUDGET.candidate_cap = BUDGET.selection_cap = int(cap)
