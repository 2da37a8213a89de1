"""
Exception hierarchy for lorenz_covering.

Configuration problems (exit code 2 at the CLI) derive from ValueError and
carry no numerical context. Failures found while computing (exit code 3)
carry the time / state / sample index where they happened.
"""

from __future__ import annotations

from typing import Any


class LorenzCoveringError(Exception):
    """Root of every error raised by this package."""


# ── Configuration errors (exit 2) ─────────────────────────────────────────────

class ParameterDomainError(LorenzCoveringError, ValueError):
    """Parameters outside the domain of a transform (e.g. rayleigh <= 1)."""


class ScenarioError(LorenzCoveringError, ValueError):
    """Scenario document could not be parsed or validated."""

    def __init__(
        self,
        message: str,
        key: str | None = None,
        line: int | None = None,
        column: int | None = None,
    ) -> None:
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.key = key
        self.line = line
        self.column = column


class TrajectoryFormatError(LorenzCoveringError, ValueError):
    """Trajectory invariants violated, or a CSV file is malformed."""

    def __init__(self, message: str, row: int | None = None) -> None:
        if row is not None:
            message = f"row {row}: {message}"
        super().__init__(message)
        self.row = row


# ── Numerical / domain failures (exit 3) ─────────────────────────────────────

def _fmt_state(state: Any) -> str:
    try:
        return "(" + ", ".join(f"{float(v):.6g}" for v in state) + ")"
    except TypeError:
        return repr(state)


class AxisDomainError(LorenzCoveringError, ValueError):
    """A quotient-space operation was asked to act on (or near) the z-axis."""

    def __init__(
        self,
        message: str,
        index: int | None = None,
        time: float | None = None,
        state: Any = None,
    ) -> None:
        parts = [message]
        if index is not None:
            parts.append(f"sample index {index}")
        if time is not None:
            parts.append(f"t={time:.6g}")
        if state is not None:
            parts.append(f"state={_fmt_state(state)}")
        super().__init__("; ".join(parts))
        self.index = index
        self.time = time
        self.state = state


class AmbiguousLiftError(AxisDomainError):
    """Consecutive samples are too far apart to choose a unique sheet."""


class NumericalFailure(LorenzCoveringError, RuntimeError):
    """Integration could not continue (step underflow, non-finite state, axis approach)."""

    def __init__(
        self,
        message: str,
        time: float | None = None,
        state: Any = None,
        partial: Any = None,
    ) -> None:
        parts = [message]
        if time is not None:
            parts.append(f"t={time:.6g}")
        if state is not None:
            parts.append(f"state={_fmt_state(state)}")
        super().__init__("; ".join(parts))
        self.time = time
        self.state = state
        self.partial = partial
