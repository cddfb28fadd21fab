"""Endomorphisms of TM (+) T*M, lifts, and structure certification.

A GEndo is stored in 2x2 block form acting on component columns:

    (X, xi)  |->  (A X + B xi, C X + D xi)

with A : tangent -> tangent, B : cotangent -> tangent, C : tangent ->
cotangent, D : cotangent -> cotangent.  The dual map of a tangent
endomorphism is its transpose in the coordinate frame, which is forced by
dx^i(j d/dx_k) = j^i_k.

Certification checks orthogonality against the canonical pairing on the 2n
frame sections (enough, since both sides are bilinear over scalars) and the
quaternionic relations I^2 = J^2 = K^2 = IJK = -1 as exact matrix
identities.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cartan import OneForm, TwoForm, VectorField
from .courant import GSection, basis_sections, pairing
from .errors import (
    DimensionMismatch,
    NotAlmostComplex,
    NotInverse,
    UncertifiedStructure,
)
from .report import CheckReport, Witness, find_nonzero_point
from .scalar import ScalarField, scalar_text


def _check_matrix(m, n: int) -> tuple:
    rows = tuple(tuple(row) for row in m)
    if len(rows) != n or any(len(r) != n for r in rows):
        raise DimensionMismatch(f"expected a {n}x{n} matrix")
    for row in rows:
        for f in row:
            if not isinstance(f, ScalarField) or f.nvars != n:
                raise DimensionMismatch("matrix entries must be scalars on the same chart")
    return rows


def mat_identity(n: int) -> tuple:
    one = ScalarField.one(n)
    zero = ScalarField.zero(n)
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def mat_zero(n: int) -> tuple:
    zero = ScalarField.zero(n)
    return tuple((zero,) * n for _ in range(n))


def mat_mul(a, b) -> tuple:
    n = len(a)
    zero = ScalarField.zero(a[0][0].nvars)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = zero
            for k in range(n):
                x = a[i][k]
                y = b[k][j]
                if not x.is_zero() and not y.is_zero():
                    acc = acc + x * y
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_add(a, b) -> tuple:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_neg(a) -> tuple:
    return tuple(tuple(-x for x in row) for row in a)


def mat_scale(a, f: ScalarField) -> tuple:
    return tuple(tuple(f * x for x in row) for row in a)


def mat_transpose(a) -> tuple:
    return tuple(tuple(row) for row in zip(*a))


def mat_apply(a, v: tuple) -> tuple:
    n = len(a)
    zero = ScalarField.zero(a[0][0].nvars)
    out = []
    for i in range(n):
        acc = zero
        for k in range(n):
            x = a[i][k]
            y = v[k]
            if not x.is_zero() and not y.is_zero():
                acc = acc + x * y
        out.append(acc)
    return tuple(out)


def mat_eq(a, b) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


@dataclass(frozen=True)
class GEndo:
    """Block endomorphism of the generalized tangent bundle."""

    a: tuple
    b: tuple
    c: tuple
    d: tuple

    def __post_init__(self):
        n = len(self.a)
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, _check_matrix(getattr(self, name), n))

    @property
    def n(self) -> int:
        return len(self.a)

    @classmethod
    def identity(cls, n: int) -> "GEndo":
        return cls(mat_identity(n), mat_zero(n), mat_zero(n), mat_identity(n))

    @classmethod
    def zero(cls, n: int) -> "GEndo":
        z = mat_zero(n)
        return cls(z, z, z, z)

    def apply(self, s: GSection) -> "GSection":
        if s.dim != self.n:
            raise DimensionMismatch("section and endomorphism chart dimensions differ")
        v = s.vec.components
        f = s.form.components
        vec = tuple(x + y for x, y in zip(mat_apply(self.a, v), mat_apply(self.b, f)))
        form = tuple(x + y for x, y in zip(mat_apply(self.c, v), mat_apply(self.d, f)))
        return GSection(VectorField(vec), OneForm(form))

    def compose(self, other: "GEndo") -> "GEndo":
        """self after other."""
        if self.n != other.n:
            raise DimensionMismatch("endomorphism dimensions differ")
        return GEndo(
            mat_add(mat_mul(self.a, other.a), mat_mul(self.b, other.c)),
            mat_add(mat_mul(self.a, other.b), mat_mul(self.b, other.d)),
            mat_add(mat_mul(self.c, other.a), mat_mul(self.d, other.c)),
            mat_add(mat_mul(self.c, other.b), mat_mul(self.d, other.d)),
        )

    def __matmul__(self, other: "GEndo") -> "GEndo":
        return self.compose(other)

    def __add__(self, other: "GEndo") -> "GEndo":
        if self.n != other.n:
            raise DimensionMismatch("endomorphism dimensions differ")
        return GEndo(
            mat_add(self.a, other.a),
            mat_add(self.b, other.b),
            mat_add(self.c, other.c),
            mat_add(self.d, other.d),
        )

    def __neg__(self) -> "GEndo":
        return GEndo(mat_neg(self.a), mat_neg(self.b), mat_neg(self.c), mat_neg(self.d))

    def __sub__(self, other: "GEndo") -> "GEndo":
        return self + (-other)

    def scale(self, f: ScalarField) -> "GEndo":
        return GEndo(
            mat_scale(self.a, f),
            mat_scale(self.b, f),
            mat_scale(self.c, f),
            mat_scale(self.d, f),
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GEndo)
            and self.n == other.n
            and mat_eq(self.a, other.a)
            and mat_eq(self.b, other.b)
            and mat_eq(self.c, other.c)
            and mat_eq(self.d, other.d)
        )

    def is_zero(self) -> bool:
        return all(
            f.is_zero() for blk in (self.a, self.b, self.c, self.d) for row in blk for f in row
        )

    def blocks(self) -> dict:
        return {"A": self.a, "B": self.b, "C": self.c, "D": self.d}


# ---------------------------------------------------------------------------
# lifts
# ---------------------------------------------------------------------------


def lift_diagonal(j) -> GEndo:
    """Lift a tangent almost complex structure j to diag(-j, j*).

    Requires j^2 = -identity exactly; j* is the transpose in coordinates.
    """
    n = len(j)
    j = _check_matrix(j, n)
    if not mat_eq(mat_mul(j, j), mat_neg(mat_identity(n))):
        raise NotAlmostComplex("j^2 is not minus the identity")
    return GEndo(mat_neg(j), mat_zero(n), mat_zero(n), mat_transpose(j))


def lift_symplectic(omega: TwoForm, omega_inv) -> GEndo:
    """Lift a nondegenerate 2-form to the block shape (X, xi) |-> (Vinv xi, -W X).

    omega_inv is supplied, not computed, and must satisfy W * Vinv = identity
    as an exact matrix product of the component matrices.
    """
    n = omega.dim
    w = omega.entries
    v = _check_matrix(omega_inv, n)
    if not mat_eq(mat_mul(w, v), mat_identity(n)):
        raise NotInverse("omega * omega_inv is not the identity")
    return GEndo(mat_zero(n), v, mat_neg(w), mat_zero(n))


# ---------------------------------------------------------------------------
# certification
# ---------------------------------------------------------------------------


def is_orthogonal(endo: GEndo) -> CheckReport:
    """Check <F e_a, F e_b> = <e_a, e_b> on all frame pairs, exactly."""
    n = endo.n
    basis = basis_sections(n)
    images = [endo.apply(e) for e in basis]
    for a in range(2 * n):
        for b in range(a, 2 * n):
            residual = pairing(images[a], images[b]) - pairing(basis[a], basis[b])
            if not residual.is_zero():
                point, value = find_nonzero_point(residual)
                w = Witness(
                    label=f"pairing defect on frame pair ({a}, {b})",
                    expression=scalar_text(residual),
                    point=tuple(str(x) for x in point),
                    value=str(value),
                )
                return CheckReport("orthogonality", False, witness=w)
    return CheckReport("orthogonality", True)


def _first_matrix_defect(endo: GEndo, expect: GEndo, what: str) -> Witness | None:
    diff = endo - expect
    for name, blk in diff.blocks().items():
        for i, row in enumerate(blk):
            for j, f in enumerate(row):
                if not f.is_zero():
                    point, value = find_nonzero_point(f)
                    return Witness(
                        label=f"{what}, block {name}[{i}][{j}]",
                        expression=scalar_text(f),
                        point=tuple(str(x) for x in point),
                        value=str(value),
                    )
    return None


def quaternionic_check(i: GEndo, j: GEndo, k: GEndo) -> CheckReport:
    """I^2 = J^2 = K^2 = IJK = -identity, all as exact matrix identities."""
    if not (i.n == j.n == k.n):
        raise DimensionMismatch("triple members have different dimensions")
    minus_id = -GEndo.identity(i.n)
    for endo, what in (
        (i @ i, "I^2 + 1"),
        (j @ j, "J^2 + 1"),
        (k @ k, "K^2 + 1"),
        ((i @ j) @ k, "IJK + 1"),
    ):
        w = _first_matrix_defect(endo, minus_id, what)
        if w is not None:
            return CheckReport("quaternionic-relations", False, witness=w)
    return CheckReport("quaternionic-relations", True)


@dataclass(frozen=True)
class HKTriple:
    """A candidate almost hypercomplex structure with its certificates.

    Certification happens at construction and is never mutated; connection
    level operations refuse uncertified triples.
    """

    i: GEndo
    j: GEndo
    k: GEndo
    orthogonality: tuple  # three CheckReports, for I, J, K
    quaternionic: CheckReport

    @property
    def n(self) -> int:
        return self.i.n

    @property
    def certified_orthogonal(self) -> tuple:
        return tuple(r.passed for r in self.orthogonality)

    @property
    def certified_quaternionic(self) -> bool:
        return self.quaternionic.passed

    @property
    def certified(self) -> bool:
        return all(self.certified_orthogonal) and self.certified_quaternionic

    @classmethod
    def certify(cls, i: GEndo, j: GEndo, k: GEndo | None = None) -> "HKTriple":
        """Build and certify a triple; K defaults to I composed with J."""
        if i.n != j.n or (k is not None and k.n != i.n):
            raise DimensionMismatch("triple members have different dimensions")
        if k is None:
            k = i @ j
        orth = (is_orthogonal(i), is_orthogonal(j), is_orthogonal(k))
        quat = quaternionic_check(i, j, k)
        return cls(i, j, k, orth, quat)

    def require_certified(self):
        if not self.certified:
            failures = []
            for name, rep in zip("IJK", self.orthogonality):
                if not rep.passed:
                    failures.append(f"{name} not orthogonal")
            if not self.quaternionic.passed:
                failures.append("quaternionic relations fail")
            raise UncertifiedStructure("; ".join(failures))

    def members(self) -> dict:
        return {"I": self.i, "J": self.j, "K": self.k}
