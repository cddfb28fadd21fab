"""Structure documents, suite orchestration, and report emission.

The input document is JSON with every symbolic entry written in the scalar
grammar; exactness forbids floats anywhere.  Reports are canonical: sorted
keys, exact rationals as "p/q" strings, and no wall-clock data unless
explicitly requested, so a given (input, seed, version) always produces
byte-identical output.
"""

from __future__ import annotations

import hashlib
import json
import os
import time
from dataclasses import dataclass, field

from . import __version__
from .cartan import TwoForm
from .courant import GSection, verify_axioms
from .endo import GEndo, HKTriple, lift_diagonal, lift_symplectic
from .errors import DimensionMismatch, InconsistentEquivalence, SchemaError
from .nijenhuis import (
    VARIANTS,
    check_connection_laws,
    check_delta_properties,
    check_identities,
    theorem_report,
)
from .parse import parse_scalar

SUITES = ("axioms", "certification", "connection-laws", "identities", "theorem")

_DEFAULT_OPTIONS = {"trials": 10, "degree": 2, "seed": 0, "span_degree": 1}


@dataclass(frozen=True)
class StructureFile:
    """A validated structure document."""

    dimension: int
    coordinates: tuple
    triple: HKTriple
    sections: dict
    checks: tuple
    trials: int
    degree: int
    seed: int
    span_degree: int
    digest: str
    parallel_trials: bool = False


@dataclass
class SuiteReport:
    suite: str
    status: str  # pass | fail | skipped
    checks: list = field(default_factory=list)
    theorem: object = None
    reason: str = ""

    def to_dict(self) -> dict:
        out = {"suite": self.suite, "status": self.status}
        if self.reason:
            out["reason"] = self.reason
        if self.theorem is not None:
            out["theorem"] = self.theorem.to_dict()
        if self.checks:
            out["checks"] = [c.to_dict() for c in self.checks]
        return out


@dataclass
class RunReport:
    version: str
    input_digest: str
    structure_id: str
    options: dict
    suites: list
    verdict: str
    timings: dict = field(default_factory=dict)

    def to_dict(self, include_timings: bool = False) -> dict:
        out = {
            "version": self.version,
            "input-digest": self.input_digest,
            "structure-id": self.structure_id,
            "options": dict(self.options),
            "suites": [s.to_dict() for s in self.suites],
            "verdict": self.verdict,
        }
        if include_timings:
            out["timings"] = {k: round(v, 3) for k, v in self.timings.items()}
        return out


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------


def _require(cond: bool, message: str):
    if not cond:
        raise SchemaError(message)


def _parse_matrix(rows, n: int, coords, what: str):
    if not isinstance(rows, list) or len(rows) != n or any(
        not isinstance(r, list) or len(r) != n for r in rows
    ):
        raise DimensionMismatch(f"{what} must be a {n}x{n} array")
    return tuple(tuple(parse_scalar(entry, coords) for entry in row) for row in rows)


def _parse_endo(spec, n: int, coords, what: str) -> GEndo:
    _require(isinstance(spec, dict), f"{what} must be an object")
    if "lift" in spec:
        kind = spec["lift"]
        if kind == "diagonal":
            _require("j" in spec, f"{what}: diagonal lift needs a 'j' matrix")
            return lift_diagonal(_parse_matrix(spec["j"], n, coords, f"{what}.j"))
        if kind == "symplectic":
            _require(
                "omega" in spec and "omega_inv" in spec,
                f"{what}: symplectic lift needs 'omega' and 'omega_inv'",
            )
            omega = TwoForm(_parse_matrix(spec["omega"], n, coords, f"{what}.omega"))
            inv = _parse_matrix(spec["omega_inv"], n, coords, f"{what}.omega_inv")
            return lift_symplectic(omega, inv)
        raise SchemaError(f"{what}: unknown lift kind {kind!r}")
    missing = [k for k in ("A", "B", "C", "D") if k not in spec]
    _require(not missing, f"{what}: block form needs A, B, C, D (missing {missing})")
    return GEndo(
        _parse_matrix(spec["A"], n, coords, f"{what}.A"),
        _parse_matrix(spec["B"], n, coords, f"{what}.B"),
        _parse_matrix(spec["C"], n, coords, f"{what}.C"),
        _parse_matrix(spec["D"], n, coords, f"{what}.D"),
    )


def parse_structure_text(text: str, digest: str | None = None) -> StructureFile:
    """Parse and validate a structure document from JSON text."""
    if digest is None:
        digest = "sha256:" + hashlib.sha256(text.encode("utf-8")).hexdigest()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}") from None
    _require(isinstance(doc, dict), "top level must be an object")
    unknown = set(doc) - {"dimension", "coordinates", "structure", "sections", "checks", "options"}
    _require(not unknown, f"unknown top-level keys {sorted(unknown)}")

    n = doc.get("dimension")
    _require(isinstance(n, int) and n >= 1, "'dimension' must be an integer >= 1")
    coords = tuple(doc.get("coordinates", [f"x{k + 1}" for k in range(n)]))
    _require(
        list(coords) == [f"x{k + 1}" for k in range(n)],
        "'coordinates' must be x1..xn in order (the scalar grammar fixes the names)",
    )

    _require("structure" in doc and isinstance(doc["structure"], dict), "'structure' is required")
    st = doc["structure"]
    _require("I" in st and "J" in st, "'structure' needs at least I and J")
    unknown = set(st) - {"I", "J", "K"}
    _require(not unknown, f"unknown structure members {sorted(unknown)}")
    i_endo = _parse_endo(st["I"], n, coords, "I")
    j_endo = _parse_endo(st["J"], n, coords, "J")
    k_endo = _parse_endo(st["K"], n, coords, "K") if "K" in st else None
    triple = HKTriple.certify(i_endo, j_endo, k_endo)

    sections = {}
    for name, comps in (doc.get("sections") or {}).items():
        _require(
            isinstance(comps, list) and len(comps) == 2 * n,
            f"section {name!r} must have 2n = {2 * n} components",
        )
        sections[name] = GSection.from_components(
            tuple(parse_scalar(c, coords) for c in comps)
        )

    checks = tuple(doc.get("checks", SUITES))
    for c in checks:
        _require(c in SUITES, f"unknown check suite {c!r} (known: {', '.join(SUITES)})")
    _require(len(set(checks)) == len(checks), "'checks' must not repeat suites")

    options = dict(_DEFAULT_OPTIONS)
    for key, value in (doc.get("options") or {}).items():
        _require(key in options, f"unknown option {key!r}")
        _require(isinstance(value, int) and value >= 0, f"option {key!r} must be a nonnegative integer")
        options[key] = value

    return StructureFile(
        dimension=n,
        coordinates=coords,
        triple=triple,
        sections=sections,
        checks=checks,
        trials=options["trials"],
        degree=options["degree"],
        seed=options["seed"],
        span_degree=options["span_degree"],
        digest=digest,
    )


def parse_structure(source: str) -> StructureFile:
    """Parse from a file path, or directly from JSON text."""
    if os.path.exists(source):
        with open(source, "rb") as fh:
            data = fh.read()
        digest = "sha256:" + hashlib.sha256(data).hexdigest()
        return parse_structure_text(data.decode("utf-8"), digest)
    stripped = source.lstrip()
    if stripped.startswith("{"):
        return parse_structure_text(source)
    raise SchemaError(f"no such file: {source}")


# ---------------------------------------------------------------------------
# orchestration
# ---------------------------------------------------------------------------


def _suite_status(checks) -> str:
    return "pass" if all(c.passed for c in checks) else "fail"


def run(sf: StructureFile, parallel: bool = False) -> RunReport:
    """Run the selected suites in order; failures land in the report."""
    suites = []
    timings = {}
    certified = sf.triple.certified
    names = sorted(sf.sections)
    extra_pairs = [
        (f"{a},{b}", sf.sections[a], sf.sections[b])
        for ai, a in enumerate(names)
        for b in names[ai:]
    ]

    for suite in sf.checks:
        started = time.perf_counter()
        if suite == "axioms":
            checks = verify_axioms(
                sf.dimension, sf.degree, sf.trials, sf.seed, parallel=parallel
            )
            suites.append(SuiteReport(suite, _suite_status(checks), checks))
        elif suite == "certification":
            checks = list(sf.triple.orthogonality) + [sf.triple.quaternionic]
            suites.append(SuiteReport(suite, _suite_status(checks), checks))
        elif not certified:
            suites.append(
                SuiteReport(suite, "skipped", reason="structure failed certification")
            )
        elif suite == "connection-laws":
            checks = []
            for variant in VARIANTS:
                checks.extend(
                    check_connection_laws(
                        sf.triple, variant, sf.trials, sf.seed, degree=sf.degree,
                        extra_pairs=extra_pairs, parallel=parallel,
                    )
                )
            suites.append(SuiteReport(suite, _suite_status(checks), checks))
        elif suite == "identities":
            checks = check_identities(
                sf.triple, sf.trials, sf.seed, degree=sf.degree,
                extra_pairs=extra_pairs, parallel=parallel,
            )
            checks += check_delta_properties(
                sf.triple, sf.trials, sf.seed, degree=sf.degree, parallel=parallel
            )
            suites.append(SuiteReport(suite, _suite_status(checks), checks))
        elif suite == "theorem":
            try:
                rep = theorem_report(
                    sf.triple,
                    trials=sf.trials,
                    seed=sf.seed,
                    span_degree=sf.span_degree,
                    structure_id=sf.digest[:19],
                    degree=sf.degree,
                )
                suites.append(SuiteReport(suite, "pass", theorem=rep))
            except InconsistentEquivalence as exc:
                suites.append(
                    SuiteReport(suite, "fail", theorem=exc.report, reason=str(exc))
                )
        timings[suite] = time.perf_counter() - started

    verdict = "pass" if all(s.status == "pass" for s in suites) else "fail"
    return RunReport(
        version=__version__,
        input_digest=sf.digest,
        structure_id=sf.digest[:19],
        options={
            "trials": sf.trials,
            "degree": sf.degree,
            "seed": sf.seed,
            "span_degree": sf.span_degree,
        },
        suites=suites,
        verdict=verdict,
        timings=timings,
    )


# ---------------------------------------------------------------------------
# emission
# ---------------------------------------------------------------------------


def emit(report: RunReport, fmt: str = "json", include_timings: bool = False) -> bytes:
    """Serialize a report; canonical JSON or a human-readable table."""
    if fmt == "json":
        doc = report.to_dict(include_timings)
        return (json.dumps(doc, sort_keys=True, indent=2) + "\n").encode("utf-8")
    if fmt == "text":
        return _emit_text(report, include_timings).encode("utf-8")
    raise ValueError(f"unknown format {fmt!r}")


def _emit_text(report: RunReport, include_timings: bool) -> str:
    lines = [
        f"hypercourant {report.version}",
        f"input      {report.input_digest}",
        f"structure  {report.structure_id}",
        f"options    {json.dumps(report.options, sort_keys=True)}",
        "",
    ]
    for s in report.suites:
        head = f"suite {s.suite:<17} {s.status}"
        if include_timings and s.suite in report.timings:
            head += f"  ({report.timings[s.suite]:.2f}s)"
        if s.reason:
            head += f"  [{s.reason}]"
        lines.append(head)
        if s.checks:
            failed = [c for c in s.checks if not c.passed]
            lines.append(f"    checks: {len(s.checks) - len(failed)}/{len(s.checks)} passed")
            for c in failed:
                where = f" trial {c.trial}" if c.trial is not None else ""
                lines.append(f"    FAIL {c.check_id}{where}")
                if c.witness is not None:
                    w = c.witness
                    lines.append(f"         residual {w.label} = {w.expression}")
                    lines.append(f"         at point ({', '.join(w.point)}) value {w.value}")
        if s.theorem is not None:
            t = s.theorem
            parts = []
            for key, st in t.concomitants.items():
                parts.append(f"N[{key}]{'=0' if st.vanishes else '!=0'}")
            lines.append(f"    concomitants: {' '.join(parts)}")
            for key, st in t.concomitants.items():
                if not st.vanishes and st.witness is not None:
                    w = st.witness
                    lines.append(f"    witness {w.label}")
                    lines.append(f"         residual = {w.expression}")
                    lines.append(f"         at point ({', '.join(w.point)}) value {w.value}")
            lines.append(
                "    connections-agree={} parallel(I,J,K)=({},{},{}) torsion-formula={}".format(
                    t.connections_agree,
                    t.parallel["I"],
                    t.parallel["J"],
                    t.parallel["K"],
                    t.torsion_formula,
                )
            )
            lines.append(f"    theorem verdict: {t.verdict} (consistency {t.consistency})")
    lines.append("")
    lines.append(f"verdict: {report.verdict}")
    lines.append("")
    return "\n".join(lines)


def exit_code(report: RunReport) -> int:
    return 0 if report.verdict == "pass" else 1
