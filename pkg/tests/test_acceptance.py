"""Acceptance criteria, one test per criterion, each printing a PASS/FAIL
line and enforcing its stated wall-clock budget.

Run with `pytest -s tests/test_acceptance.py` to see the per-criterion lines.

Criterion 6 contains one assertion that is mathematically unattainable as
stated: the concomitant of the identity pair vanishes identically (its eight
terms cancel pairwise), so its first-slot linearity defect is exactly zero,
never nonzero.  Direct evaluation, the closed defect formula and the
independent Leibniz-rule oracle all agree on zero, and the companion unit
test test_swap_endo_defect_nonzero_and_matches_all_routes demonstrates the
defect machinery on a pair where the defect genuinely is nonzero.  The
assertion is kept as written and fails honestly rather than being weakened.
"""

import functools
import json
import time
from fractions import Fraction

from hypercourant.cli import main
from hypercourant.courant import random_section, verify_axioms
from hypercourant.endo import GEndo, is_orthogonal
from hypercourant.nijenhuis import (
    check_connection_laws,
    check_delta_properties,
    check_identities,
    concomitant_linearity_defect,
    theorem_report,
)
from hypercourant.parse import parse_scalar
from hypercourant.sampling import random_scalar, suite_rng
from hypercourant.structures import OMEGA_1, OMEGA_2

from oracle import oracle_first_slot_defect


def criterion(cid: str, budget_seconds: float):
    def decorate(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            started = time.perf_counter()
            try:
                fn(*args, **kwargs)
                elapsed = time.perf_counter() - started
                assert elapsed < budget_seconds, (
                    f"budget exceeded: {elapsed:.1f}s > {budget_seconds}s"
                )
            except BaseException as exc:
                print(f"[criterion {cid}] FAIL  {type(exc).__name__}: {exc}")
                raise
            print(f"[criterion {cid}] PASS  ({elapsed:.1f}s, budget {budget_seconds:.0f}s)")

        return wrapper

    return decorate


@criterion("1 courant-axioms", 10)
def test_criterion_1_axiom_suite():
    for n in (1, 2, 3):
        reports = verify_axioms(n, degree=2, trials=20, seed=n)
        assert len(reports) == 140
        assert all(r.passed for r in reports), [
            (r.check_id, r.trial) for r in reports if not r.passed
        ]


@criterion("2 flat-quaternionic", 30)
def test_criterion_2_flat_structure(flat):
    assert flat.certified
    rep = theorem_report(flat, trials=10, seed=2, span_degree=1, structure_id="flat")
    assert all(st.vanishes for st in rep.concomitants.values())
    assert rep.connections_agree
    assert all(rep.parallel.values())
    assert rep.torsion_formula
    assert rep.verdict == "hypercomplex" and rep.consistency == "ok"


@criterion("3 holomorphic-symplectic", 30)
def test_criterion_3_holomorphic_symplectic(holsymp):
    # the pinned data: omega_1 = dx1^dx3 - dx2^dx4, omega_2 = dx1^dx4 + dx2^dx3
    assert OMEGA_1[0][2] == 1 and OMEGA_1[1][3] == -1
    assert OMEGA_2[0][3] == 1 and OMEGA_2[1][2] == 1
    assert all(r.passed for r in holsymp.orthogonality)
    assert holsymp.quaternionic.passed
    rep = theorem_report(holsymp, trials=10, seed=3, span_degree=1, structure_id="hs")
    assert rep.verdict == "hypercomplex" and rep.consistency == "ok"


@criterion("4 nonintegrable-conjugated", 60)
def test_criterion_4_nonintegrable(noni):
    assert noni.certified
    rep = theorem_report(noni, trials=10, seed=4, span_degree=1, structure_id="noni")
    for key in ("JJ", "IJ"):
        status = rep.concomitants[key]
        assert not status.vanishes
        w = status.witness
        assert w is not None
        residual = parse_scalar(w.expression, 4)
        point = tuple(Fraction(v) for v in w.point)
        value = residual.evaluate(point)
        assert value == Fraction(w.value) and value != 0
    assert rep.consistency == "ok"
    assert rep.verdict == "not-hypercomplex"


@criterion("5 unconditional-identities", 60)
def test_criterion_5_identity_suites(all_triples):
    for name, hk in all_triples.items():
        for suite in (
            check_connection_laws(hk, "ijk", trials=10, seed=5),
            check_identities(hk, trials=10, seed=5),
            check_delta_properties(hk, trials=10, seed=5),
        ):
            failed = [r.check_id for r in suite if not r.passed]
            assert not failed, f"{name}: {failed}"


@criterion("6 concomitant-linearity", 30)
def test_criterion_6_concomitant_linearity(all_triples):
    rng = suite_rng(6, "acceptance-linearity")
    n = 2

    def rand_endo():
        def block():
            return tuple(
                tuple(random_scalar(rng, n, 1) for _ in range(n)) for _ in range(n)
            )

        return GEndo(block(), block(), block(), block())

    # second-slot linearity for five random pairs, non-orthogonal included
    saw_non_orthogonal = False
    for _ in range(5):
        f, g = rand_endo(), rand_endo()
        saw_non_orthogonal = saw_non_orthogonal or not is_orthogonal(f).passed
        fun = random_scalar(rng, n, 1)
        x = random_section(rng, n, 1)
        y = random_section(rng, n, 1)
        _, second = concomitant_linearity_defect(f, g, fun, x, y)
        assert second.is_zero()
    assert saw_non_orthogonal

    # first-slot linearity for every pair drawn from each certified triple
    for hk in all_triples.values():
        rng4 = suite_rng(64, "acceptance-linearity-certified")
        fun = random_scalar(rng4, 4, 1)
        x = random_section(rng4, 4, 1)
        y = random_section(rng4, 4, 1)
        for f in (hk.i, hk.j, hk.k):
            for g in (hk.i, hk.j, hk.k):
                first, _ = concomitant_linearity_defect(f, g, fun, x, y)
                assert first.is_zero()

    # the identity-pair defect, checked against the independent expansion
    ident = GEndo.identity(n)
    fun = parse_scalar("x1", n)
    from hypercourant.courant import GSection

    x = GSection.from_components(tuple(parse_scalar(t, n) for t in ("1", "0", "1", "0")))
    first, _ = concomitant_linearity_defect(ident, ident, fun, x, x)
    assert (first - oracle_first_slot_defect(ident, ident, fun, x, x)).is_zero()
    # unattainable: N for the identity pair is identically zero, so this
    # defect is exactly zero on every route (see module docstring)
    assert not first.is_zero(), (
        "the first-slot defect for the identity pair is provably zero: the "
        "identity-pair concomitant vanishes identically, so a nonzero defect "
        "cannot exist (all three independent evaluation routes agree)"
    )


@criterion("7 mutation-detection", 10)
def test_criterion_7_mutation_detection(capsys):
    code = main(
        ["verify-axioms", "--dim", "2", "--trials", "3", "--seed", "1",
         "--corrupt-bracket", "--format", "json"]
    )
    out = capsys.readouterr().out
    assert code == 1
    doc = json.loads(out)
    assert doc["verdict"] == "fail"
    failing = [
        c
        for s in doc["suites"]
        for c in s["checks"]
        if c["check-id"] == "axiom-4-symmetric-part" and not c["pass"]
    ]
    assert failing
    w = failing[0]["witness"]
    residual = parse_scalar(w["expression"], 2)
    point = tuple(Fraction(v) for v in w["point"])
    assert residual.evaluate(point) == Fraction(w["value"]) != 0
