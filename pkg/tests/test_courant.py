from fractions import Fraction

import pytest

from hypercourant.cartan import OneForm, VectorField
from hypercourant.courant import (
    AXIOM_IDS,
    GSection,
    anchor,
    anchor_apply,
    basis_sections,
    courant_bracket,
    d_map,
    dorfman,
    pairing,
    random_section,
    verify_axioms,
)
from hypercourant.errors import DimensionMismatch
from hypercourant.parse import parse_scalar
from hypercourant.sampling import random_scalar, suite_rng
from hypercourant.scalar import ScalarField

from oracle import leibniz_dorfman


def gs(n, *texts):
    return GSection.from_components(tuple(parse_scalar(t, n) for t in texts))


class TestAnchorAndPairing:
    def test_anchor_projects(self):
        s = gs(2, "1", "0", "0", "x1")
        assert anchor(s) == s.vec
        assert anchor(s).components[0] == ScalarField.one(2)

    def test_anchor_of_pure_form_is_zero(self):
        assert anchor(gs(2, "0", "0", "x1", "x2")).is_zero()

    def test_anchor_kills_d(self):
        f = parse_scalar("x1^2*x2", 2)
        assert anchor(d_map(f)).is_zero()

    def test_pairing_frozen_values(self):
        n = 2
        s = gs(n, "1", "0", "1", "0")  # d1 + dx1
        assert pairing(s, s) == ScalarField.one(n)
        assert pairing(gs(n, "1", "0", "0", "0"), gs(n, "0", "0", "1", "0")) == ScalarField.const(
            n, "1/2"
        )
        assert pairing(gs(n, "1", "0", "0", "0"), gs(n, "0", "1", "0", "0")).is_zero()

    def test_gram_matrix(self):
        n = 3
        basis = basis_sections(n)
        half = ScalarField.const(n, "1/2")
        for a in range(2 * n):
            for b in range(2 * n):
                expected = half if abs(a - b) == n else ScalarField.zero(n)
                assert pairing(basis[a], basis[b]) == expected

    def test_pairing_symmetric(self):
        rng = suite_rng(3, "pair")
        s = random_section(rng, 2, 2)
        t = random_section(rng, 2, 2)
        assert pairing(s, t) == pairing(t, s)


class TestDMap:
    def test_d_of_square(self):
        assert d_map(parse_scalar("x1^2", 2)) == gs(2, "0", "0", "2*x1", "0")

    def test_d_of_constant(self):
        assert d_map(parse_scalar("5", 2)).is_zero()

    def test_defining_property(self):
        # <Df, s> = rho(s) f / 2 for random s
        rng = suite_rng(4, "dmap")
        n = 2
        f = random_scalar(rng, n, 3)
        s = random_section(rng, n, 2)
        lhs = pairing(d_map(f), s)
        rhs = anchor_apply(s, f) * ScalarField.const(n, "1/2")
        assert lhs == rhs

    def test_frozen_example(self):
        got = pairing(d_map(parse_scalar("x1*x2", 2)), gs(2, "1", "0", "0", "0"))
        assert got == parse_scalar("1/2*x2", 2)


class TestDorfman:
    def test_reduces_to_lie_derivative(self):
        assert dorfman(gs(2, "1", "0", "0", "0"), gs(2, "0", "0", "0", "x1")) == gs(
            2, "0", "0", "0", "1"
        )

    def test_interior_product_term(self):
        assert dorfman(gs(2, "0", "0", "x2", "0"), gs(2, "1", "0", "0", "0")) == gs(
            2, "0", "0", "0", "1"
        )

    def test_self_bracket_is_d_of_norm(self):
        s = gs(2, "1", "0", "x1", "0")
        assert dorfman(s, s) == gs(2, "0", "0", "1", "0")
        assert dorfman(s, s) == d_map(pairing(s, s))

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            dorfman(gs(1, "1", "0"), gs(2, "1", "0", "0", "0"))

    def test_matches_leibniz_oracle(self):
        # the independent expansion and the closed formula must agree,
        # component by component
        rng = suite_rng(5, "oracle")
        for n in (1, 2, 3):
            for _ in range(4):
                s = random_section(rng, n, 2)
                t = random_section(rng, n, 2)
                got = dorfman(s, t)
                expected = leibniz_dorfman(s, t)
                for mine, ref in zip(got.components, expected.components):
                    assert mine == ref


class TestCourantBracket:
    def test_antisymmetry_on_self(self):
        rng = suite_rng(6, "skew")
        s = random_section(rng, 2, 2)
        assert courant_bracket(s, s).is_zero()

    def test_constant_commuting_sections(self):
        assert courant_bracket(gs(2, "1", "0", "0", "0"), gs(2, "0", "1", "0", "0")).is_zero()

    def test_decomposition(self):
        rng = suite_rng(6, "decomp")
        for _ in range(4):
            s = random_section(rng, 2, 2)
            t = random_section(rng, 2, 2)
            residual = dorfman(s, t) - courant_bracket(s, t) - d_map(pairing(s, t))
            assert residual.is_zero()


class TestVerifyAxioms:
    def test_all_pass_small(self):
        reports = verify_axioms(1, degree=2, trials=10, seed=1)
        assert len(reports) == 70
        assert all(r.passed for r in reports)

    def test_all_pass_dim2(self):
        reports = verify_axioms(2, degree=2, trials=5, seed=42)
        assert all(r.passed for r in reports)

    def test_deterministic(self):
        a = verify_axioms(2, degree=1, trials=3, seed=9)
        b = verify_axioms(2, degree=1, trials=3, seed=9)
        assert [(r.check_id, r.trial, r.passed) for r in a] == [
            (r.check_id, r.trial, r.passed) for r in b
        ]

    def test_parallel_matches_sequential(self):
        seq = verify_axioms(2, degree=1, trials=4, seed=17)
        par = verify_axioms(2, degree=1, trials=4, seed=17, parallel=True)
        assert [r.to_dict() for r in seq] == [r.to_dict() for r in par]

    def test_corrupted_bracket_fails_axiom_4_with_witness(self):
        reports = verify_axioms(2, degree=2, trials=3, seed=1, _corrupt_bracket=True)
        failed = [r for r in reports if r.check_id == AXIOM_IDS[3] and not r.passed]
        assert failed
        w = failed[0].witness
        assert w is not None
        residual = parse_scalar(w.expression, 2)
        point = tuple(Fraction(v) for v in w.point)
        value = residual.evaluate(point)
        assert value == Fraction(w.value) and value != 0

    def test_invalid_dimension(self):
        with pytest.raises(DimensionMismatch):
            verify_axioms(0)


def test_section_algebra_dimension_checks():
    with pytest.raises(DimensionMismatch):
        GSection(VectorField.zero(2), OneForm.zero(3))
