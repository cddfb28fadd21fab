"""Coordinate Cartan calculus on R^n, degrees 0 through 2.

Vector fields and 1-forms are component tuples over the chart; 2-forms are
full antisymmetric component matrices (uniform indexing beats the storage
saving of a triangle at this scale).  The degree ladder stops at 2-forms:
d of a 2-form is deliberately not provided.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, NotAntisymmetric
from .scalar import ScalarField


def _check_dim(a, b):
    if a.dim != b.dim:
        raise DimensionMismatch(f"chart dimension {a.dim} vs {b.dim}")


def _check_components(components: tuple) -> tuple:
    components = tuple(components)
    n = len(components)
    if n == 0:
        raise DimensionMismatch("empty component tuple")
    for f in components:
        if not isinstance(f, ScalarField) or f.nvars != n:
            raise DimensionMismatch("component count must equal the chart dimension")
    return components


@dataclass(frozen=True)
class VectorField:
    """X = sum_i X^i d/dx_i."""

    components: tuple

    def __post_init__(self):
        object.__setattr__(self, "components", _check_components(self.components))

    @property
    def dim(self) -> int:
        return len(self.components)

    @classmethod
    def zero(cls, n: int) -> "VectorField":
        z = ScalarField.zero(n)
        return cls((z,) * n)

    @classmethod
    def basis(cls, n: int, i: int) -> "VectorField":
        """d/dx_{i+1} (0-based index)."""
        z = ScalarField.zero(n)
        one = ScalarField.one(n)
        return cls(tuple(one if k == i else z for k in range(n)))

    def is_zero(self) -> bool:
        return all(f.is_zero() for f in self.components)

    def __add__(self, other: "VectorField") -> "VectorField":
        _check_dim(self, other)
        return VectorField(tuple(a + b for a, b in zip(self.components, other.components)))

    def __sub__(self, other: "VectorField") -> "VectorField":
        _check_dim(self, other)
        return VectorField(tuple(a - b for a, b in zip(self.components, other.components)))

    def __neg__(self) -> "VectorField":
        return VectorField(tuple(-a for a in self.components))

    def smul(self, f: ScalarField) -> "VectorField":
        return VectorField(tuple(f * a for a in self.components))


@dataclass(frozen=True)
class OneForm:
    """xi = sum_i xi_i dx_i."""

    components: tuple

    def __post_init__(self):
        object.__setattr__(self, "components", _check_components(self.components))

    @property
    def dim(self) -> int:
        return len(self.components)

    @classmethod
    def zero(cls, n: int) -> "OneForm":
        z = ScalarField.zero(n)
        return cls((z,) * n)

    @classmethod
    def basis(cls, n: int, i: int) -> "OneForm":
        """dx_{i+1} (0-based index)."""
        z = ScalarField.zero(n)
        one = ScalarField.one(n)
        return cls(tuple(one if k == i else z for k in range(n)))

    def is_zero(self) -> bool:
        return all(f.is_zero() for f in self.components)

    def __add__(self, other: "OneForm") -> "OneForm":
        _check_dim(self, other)
        return OneForm(tuple(a + b for a, b in zip(self.components, other.components)))

    def __sub__(self, other: "OneForm") -> "OneForm":
        _check_dim(self, other)
        return OneForm(tuple(a - b for a, b in zip(self.components, other.components)))

    def __neg__(self) -> "OneForm":
        return OneForm(tuple(-a for a in self.components))

    def smul(self, f: ScalarField) -> "OneForm":
        return OneForm(tuple(f * a for a in self.components))


@dataclass(frozen=True)
class TwoForm:
    """omega = sum_{i<j} omega_ij dx_i ^ dx_j, stored as the full
    antisymmetric matrix omega_ij."""

    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.entries)
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise DimensionMismatch("2-form matrix must be square")
        for i in range(n):
            for j in range(n):
                f = rows[i][j]
                if not isinstance(f, ScalarField) or f.nvars != n:
                    raise DimensionMismatch("2-form entries must match the chart dimension")
        for i in range(n):
            if not rows[i][i].is_zero():
                raise NotAntisymmetric(f"nonzero diagonal entry at ({i}, {i})")
            for j in range(i + 1, n):
                if rows[i][j] != -rows[j][i]:
                    raise NotAntisymmetric(f"entries ({i},{j}) and ({j},{i}) are not opposite")
        object.__setattr__(self, "entries", rows)

    @property
    def dim(self) -> int:
        return len(self.entries)

    @classmethod
    def zero(cls, n: int) -> "TwoForm":
        z = ScalarField.zero(n)
        return cls(tuple((z,) * n for _ in range(n)))

    @classmethod
    def from_upper(cls, n: int, upper: dict) -> "TwoForm":
        """Build from {(i, j): field} with i < j, 0-based."""
        z = ScalarField.zero(n)
        rows = [[z] * n for _ in range(n)]
        for (i, j), f in upper.items():
            if not 0 <= i < j < n:
                raise DimensionMismatch(f"bad index pair ({i}, {j})")
            rows[i][j] = f
            rows[j][i] = -f
        return cls(tuple(tuple(r) for r in rows))

    def is_zero(self) -> bool:
        return all(f.is_zero() for row in self.entries for f in row)


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------


def lie_bracket(x: VectorField, y: VectorField) -> VectorField:
    """[X, Y]^k = sum_i (X^i d_i Y^k - Y^i d_i X^k)."""
    _check_dim(x, y)
    n = x.dim
    out = []
    for k in range(n):
        acc = ScalarField.zero(n)
        yk = y.components[k]
        xk = x.components[k]
        for i in range(n):
            xi = x.components[i]
            yi = y.components[i]
            if not xi.is_zero():
                acc = acc + xi * yk.derivative(i)
            if not yi.is_zero():
                acc = acc - yi * xk.derivative(i)
        out.append(acc)
    return VectorField(tuple(out))


def exterior_derivative(arg):
    """d of a scalar (giving a 1-form) or of a 1-form (giving a 2-form)."""
    if isinstance(arg, ScalarField):
        n = arg.nvars
        return OneForm(tuple(arg.derivative(i) for i in range(n)))
    if isinstance(arg, OneForm):
        n = arg.dim
        upper = {}
        for i in range(n):
            for j in range(i + 1, n):
                upper[(i, j)] = arg.components[j].derivative(i) - arg.components[i].derivative(j)
        return TwoForm.from_upper(n, upper)
    raise TypeError("exterior_derivative takes a ScalarField or a OneForm")


def lie_derivative(x: VectorField, eta: OneForm) -> OneForm:
    """(L_X eta)_j = sum_i (X^i d_i eta_j + eta_i d_j X^i)."""
    _check_dim(x, eta)
    n = x.dim
    out = []
    for j in range(n):
        acc = ScalarField.zero(n)
        for i in range(n):
            xi = x.components[i]
            ei = eta.components[i]
            if not xi.is_zero():
                acc = acc + xi * eta.components[j].derivative(i)
            if not ei.is_zero():
                acc = acc + ei * xi.derivative(j)
        out.append(acc)
    return OneForm(tuple(out))


def interior_product(y: VectorField, omega: TwoForm) -> OneForm:
    """(i_Y omega)_j = sum_i Y^i omega_ij."""
    _check_dim(y, omega)
    n = y.dim
    out = []
    for j in range(n):
        acc = ScalarField.zero(n)
        for i in range(n):
            yi = y.components[i]
            w = omega.entries[i][j]
            if not yi.is_zero() and not w.is_zero():
                acc = acc + yi * w
        out.append(acc)
    return OneForm(tuple(out))


def pair_form_vector(xi: OneForm, y: VectorField) -> ScalarField:
    """xi(Y) = sum_i xi_i Y^i."""
    _check_dim(xi, y)
    n = xi.dim
    acc = ScalarField.zero(n)
    for i in range(n):
        a = xi.components[i]
        b = y.components[i]
        if not a.is_zero() and not b.is_zero():
            acc = acc + a * b
    return acc
