"""Check outcomes and failure witnesses.

A failed identity is reported, never raised, and always carries two
independently checkable pieces of evidence: the nonzero residual printed in
the scalar grammar, and one rational point where that residual evaluates to
a nonzero exact value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import PoleAtPoint
from .scalar import ScalarField, scalar_text

# Candidate coordinate values for point witnesses.  A nonzero rational
# function whose numerator and denominator have total degree below the list
# length cannot vanish at every grid point (DeMillo-Lipton-Schwartz-Zippel),
# so the search below always terminates at desk scale.
POINT_CANDIDATES = tuple(
    [Fraction(0), Fraction(1), Fraction(-1), Fraction(2), Fraction(-2)]
    + [Fraction(1, 2), Fraction(-1, 2), Fraction(3), Fraction(-3), Fraction(3, 2)]
    + [Fraction(-3, 2), Fraction(5), Fraction(-5), Fraction(1, 3), Fraction(-1, 3)]
    + [Fraction(k) for k in range(4, 50) if k != 5]
)


@dataclass(frozen=True)
class Witness:
    """Evidence that a residual expression is not identically zero."""

    label: str
    expression: str
    point: tuple
    value: str

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "expression": self.expression,
            "point": list(self.point),
            "value": self.value,
        }


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one identity check; witness is present exactly on failure."""

    check_id: str
    passed: bool
    trial: int | None = None
    witness: Witness | None = None

    def to_dict(self) -> dict:
        out = {"check-id": self.check_id, "pass": self.passed}
        if self.trial is not None:
            out["trial"] = self.trial
        if self.witness is not None:
            out["witness"] = self.witness.to_dict()
        return out


# Identity suites report the same shape.
IdentityReport = CheckReport


def find_nonzero_point(f: ScalarField) -> tuple:
    """A rational point where the nonzero field f has a nonzero value."""
    n = f.nvars
    for point in product(POINT_CANDIDATES, repeat=n):
        try:
            value = f.evaluate(point)
        except PoleAtPoint:
            continue
        if value != 0:
            return point, value
    raise AssertionError("no witness point found; candidate list too small")


def _residual_components(residual):
    """Yield (label, ScalarField) pairs for any supported residual shape."""
    from .cartan import OneForm, VectorField  # local import avoids a cycle

    if isinstance(residual, ScalarField):
        yield "scalar", residual
        return
    if isinstance(residual, VectorField):
        for i, f in enumerate(residual.components):
            yield f"vec[{i}]", f
        return
    if isinstance(residual, OneForm):
        for i, f in enumerate(residual.components):
            yield f"form[{i}]", f
        return
    vec = getattr(residual, "vec", None)
    form = getattr(residual, "form", None)
    if vec is not None and form is not None:
        for i, f in enumerate(vec.components):
            yield f"vec[{i}]", f
        for i, f in enumerate(form.components):
            yield f"form[{i}]", f
        return
    raise TypeError(f"unsupported residual type {type(residual).__name__}")


def witness_for(residual, context: str = "") -> Witness | None:
    """Build a witness from the first nonzero component of a residual, or
    None when the residual is identically zero."""
    for label, f in _residual_components(residual):
        if f.is_zero():
            continue
        point, value = find_nonzero_point(f)
        full_label = f"{context}.{label}" if context else label
        return Witness(
            label=full_label,
            expression=scalar_text(f),
            point=tuple(str(v) for v in point),
            value=str(value),
        )
    return None


def check(check_id: str, residual, trial: int | None = None, context: str = "") -> CheckReport:
    """Report whether a residual is identically zero."""
    w = witness_for(residual, context)
    return CheckReport(check_id=check_id, passed=w is None, trial=trial, witness=w)
