"""The standard Courant algebroid on TM (+) T*M over a coordinate chart.

Sections are pairs (vector field, 1-form).  The anchor projects onto the
vector part, the pairing is <X+xi, Y+eta> = (xi(Y) + eta(X))/2, and the
Dorfman bracket is

    [[X+xi, Y+eta]] = [X, Y] + (L_X eta - i_Y d xi).

The Dorfman bracket is the primitive here; the Courant bracket is derived as
its skew-symmetric part.  verify_axioms checks the six defining relations
plus the Dorfman = Courant + D<,> decomposition on seeded random sections,
reducing every residual to an exact zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from random import Random

from .cartan import (
    OneForm,
    VectorField,
    exterior_derivative,
    interior_product,
    lie_bracket,
    lie_derivative,
    pair_form_vector,
)
from .errors import DimensionMismatch
from .report import check
from .sampling import random_scalar, suite_rng
from .scalar import ScalarField


@dataclass(frozen=True)
class GSection:
    """A section X + xi of the generalized tangent bundle."""

    vec: VectorField
    form: OneForm

    def __post_init__(self):
        if self.vec.dim != self.form.dim:
            raise DimensionMismatch("vector and form parts live on different charts")

    @property
    def dim(self) -> int:
        return self.vec.dim

    @classmethod
    def zero(cls, n: int) -> "GSection":
        return cls(VectorField.zero(n), OneForm.zero(n))

    @classmethod
    def from_components(cls, components) -> "GSection":
        """Build from 2n scalar components (vector part first)."""
        components = tuple(components)
        if len(components) % 2:
            raise DimensionMismatch("expected 2n components")
        n = len(components) // 2
        return cls(VectorField(components[:n]), OneForm(components[n:]))

    @property
    def components(self) -> tuple:
        return self.vec.components + self.form.components

    def is_zero(self) -> bool:
        return self.vec.is_zero() and self.form.is_zero()

    def __add__(self, other: "GSection") -> "GSection":
        return GSection(self.vec + other.vec, self.form + other.form)

    def __sub__(self, other: "GSection") -> "GSection":
        return GSection(self.vec - other.vec, self.form - other.form)

    def __neg__(self) -> "GSection":
        return GSection(-self.vec, -self.form)

    def smul(self, f: ScalarField) -> "GSection":
        return GSection(self.vec.smul(f), self.form.smul(f))

    def half(self) -> "GSection":
        return self.smul(ScalarField.const(self.dim, Fraction(1, 2)))


def basis_sections(n: int) -> tuple:
    """The 2n frame sections: d/dx_1 .. d/dx_n, then dx_1 .. dx_n."""
    out = [GSection(VectorField.basis(n, i), OneForm.zero(n)) for i in range(n)]
    out += [GSection(VectorField.zero(n), OneForm.basis(n, i)) for i in range(n)]
    return tuple(out)


def anchor(s: GSection) -> VectorField:
    """Projection onto the tangent component."""
    return s.vec


def anchor_apply(s: GSection, f: ScalarField) -> ScalarField:
    """rho(s) f = sum_i s.vec^i d_i f."""
    n = s.dim
    if f.nvars != n:
        raise DimensionMismatch("scalar lives on a different chart")
    acc = ScalarField.zero(n)
    for i in range(n):
        xi = s.vec.components[i]
        if not xi.is_zero():
            acc = acc + xi * f.derivative(i)
    return acc


def pairing(s: GSection, t: GSection) -> ScalarField:
    """<s, t> = (s.form(t.vec) + t.form(s.vec)) / 2."""
    if s.dim != t.dim:
        raise DimensionMismatch("sections live on different charts")
    half = ScalarField.const(s.dim, "1/2")
    return (pair_form_vector(s.form, t.vec) + pair_form_vector(t.form, s.vec)) * half


def d_map(f: ScalarField) -> GSection:
    """D f = (0, df), characterized by <Df, s> = rho(s) f / 2."""
    return GSection(VectorField.zero(f.nvars), exterior_derivative(f))


def dorfman(s: GSection, t: GSection) -> GSection:
    """[[s, t]] = [X, Y] + (L_X eta - i_Y d xi)."""
    if s.dim != t.dim:
        raise DimensionMismatch("sections live on different charts")
    vec = lie_bracket(s.vec, t.vec)
    form = lie_derivative(s.vec, t.form) - interior_product(t.vec, exterior_derivative(s.form))
    return GSection(vec, form)


def _corrupted_dorfman(s: GSection, t: GSection) -> GSection:
    # test-only mutant: the sign of the i_Y d xi term is flipped
    if s.dim != t.dim:
        raise DimensionMismatch("sections live on different charts")
    vec = lie_bracket(s.vec, t.vec)
    form = lie_derivative(s.vec, t.form) + interior_product(t.vec, exterior_derivative(s.form))
    return GSection(vec, form)


def courant_bracket(s: GSection, t: GSection, bracket=dorfman) -> GSection:
    """Skew-symmetric part ([[s, t]] - [[t, s]]) / 2."""
    return (bracket(s, t) - bracket(t, s)).half()


def random_section(rng: Random, n: int, degree: int) -> GSection:
    """2n polynomial components, coefficients uniform in -3..3."""
    comps = tuple(random_scalar(rng, n, degree) for _ in range(2 * n))
    return GSection.from_components(comps)


# ---------------------------------------------------------------------------
# axiom verification
# ---------------------------------------------------------------------------

AXIOM_IDS = (
    "axiom-1-left-jacobi",
    "axiom-2-anchor-homomorphism",
    "axiom-3-anchored-leibniz",
    "axiom-4-symmetric-part",
    "axiom-5-d-kernel",
    "axiom-6-pairing-invariance",
    "dorfman-decomposition",
)


def _axiom_trial(br, n: int, degree: int, rng: Random, trial: int) -> list:
    x = random_section(rng, n, degree)
    y = random_section(rng, n, degree)
    z = random_section(rng, n, degree)
    f = random_scalar(rng, n, degree)
    two = ScalarField.const(n, 2)

    reports = []
    r1 = br(x, br(y, z)) - br(br(x, y), z) - br(y, br(x, z))
    reports.append(check(AXIOM_IDS[0], r1, trial))

    r2 = anchor(br(x, y)) - lie_bracket(anchor(x), anchor(y))
    reports.append(check(AXIOM_IDS[1], r2, trial))

    r3 = br(x, y.smul(f)) - y.smul(anchor_apply(x, f)) - br(x, y).smul(f)
    reports.append(check(AXIOM_IDS[2], r3, trial))

    r4 = br(x, y) + br(y, x) - d_map(pairing(x, y)).smul(two)
    reports.append(check(AXIOM_IDS[3], r4, trial))

    r5 = br(d_map(f), x)
    reports.append(check(AXIOM_IDS[4], r5, trial))

    r6 = anchor_apply(x, pairing(y, z)) - pairing(br(x, y), z) - pairing(y, br(x, z))
    reports.append(check(AXIOM_IDS[5], r6, trial))

    r7 = br(x, y) - courant_bracket(x, y, bracket=br) - d_map(pairing(x, y))
    reports.append(check(AXIOM_IDS[6], r7, trial))
    return reports


def verify_axioms(
    dim: int,
    degree: int = 2,
    trials: int = 10,
    seed: int = 0,
    *,
    _corrupt_bracket: bool = False,
    parallel: bool = False,
) -> list:
    """Check axioms (1)-(6) and the bracket decomposition on `trials` seeded
    random section triples.  Failures are reported, never raised.

    `_corrupt_bracket` swaps in a sign-flipped bracket; it exists only so the
    test suites can demonstrate that a broken bracket is detected.
    """
    if dim < 1:
        raise DimensionMismatch("chart dimension must be at least 1")
    br = _corrupted_dorfman if _corrupt_bracket else dorfman
    rngs = [suite_rng(seed, f"axioms-{t}") for t in range(trials)]
    if parallel and trials > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor() as pool:
            chunks = list(
                pool.map(lambda t: _axiom_trial(br, dim, degree, rngs[t], t), range(trials))
            )
    else:
        chunks = [_axiom_trial(br, dim, degree, rngs[t], t) for t in range(trials)]
    return [r for chunk in chunks for r in chunk]
