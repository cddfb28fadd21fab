"""Nijenhuis concomitants, canonical connections, torsion, and the full
identity suites for almost hypercomplex structures on TM (+) T*M.

The concomitant of two endomorphisms F, G is the eight-term expression

    N_{F,G}(X,Y) = [[FX,GY]] - F[[X,GY]] - G[[FX,Y]] + FG[[X,Y]]
                 + [[GX,FY]] - G[[X,FY]] - F[[GX,Y]] + GF[[X,Y]]

built on the Dorfman bracket.  It is symmetric in F and G and always
scalar-linear in its second slot; first-slot linearity needs F and G to be
pairing-orthogonal with square -1 and (for F != G) anticommuting, which every
pair drawn from a certified triple satisfies.  The defect is computed and
reported rather than assumed away (see linearity_defect_formula).

The three canonical connections come from one formula evaluated on the three
cyclic rotations of (I, J, K); variants are named by the rotation fed in:

    "ijk":  nabla_X Y  = -1/2 K( [[JY,IX]] - J[[Y,IX]] - I[[JY,X]] + JI[[Y,X]] )
    "jki":  the same with (I,J,K) -> (J,K,I)
    "kij":  the same with (I,J,K) -> (K,I,J)

Vanishing of a concomitant is decided exactly on a finite spanning family:
all frame sections multiplied by monomials up to a degree bound (default 1),
which suffices because the concomitant restricted to a certified triple is
bilinear over scalars.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .courant import (
    GSection,
    anchor_apply,
    basis_sections,
    courant_bracket,
    d_map,
    dorfman,
    pairing,
    random_section,
)
from .endo import GEndo, HKTriple
from .errors import DimensionMismatch, InconsistentEquivalence
from .report import Witness, check, witness_for
from .sampling import monomials_up_to, random_scalar, suite_rng
from .scalar import Polynomial, ScalarField

VARIANTS = ("ijk", "jki", "kij")


def _map_trials(worker, inputs, parallel: bool) -> list:
    """Run independent trial workers, optionally on a thread pool; the
    result order never depends on the execution order."""
    if parallel and len(inputs) > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor() as pool:
            chunks = list(pool.map(worker, inputs))
    else:
        chunks = [worker(item) for item in inputs]
    return [r for chunk in chunks for r in chunk]


@dataclass(frozen=True)
class Concomitant:
    """The concomitant of a fixed endomorphism pair, as a callable on
    section pairs.  Symmetric in the two endomorphisms."""

    f: GEndo
    g: GEndo

    def __call__(self, x: GSection, y: GSection) -> GSection:
        return concomitant(self.f, self.g, x, y)


@dataclass(frozen=True)
class CanonicalConnection:
    """One of the three canonical connections of a certified triple."""

    hk: HKTriple
    variant: str = "ijk"

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown connection variant {self.variant!r}")
        self.hk.require_certified()

    def __call__(self, x: GSection, y: GSection) -> GSection:
        return connection(self.hk, self.variant, x, y)

    def torsion(self, x: GSection, y: GSection) -> GSection:
        return torsion(self.hk, self.variant, x, y)

    def nabla(self, f: GEndo, x: GSection, y: GSection) -> GSection:
        return nabla_endo(self.hk, self.variant, f, x, y)


def concomitant(f: GEndo, g: GEndo, x: GSection, y: GSection) -> GSection:
    """The eight-term Nijenhuis concomitant N_{F,G}(X,Y)."""
    if not (f.n == g.n == x.dim == y.dim):
        raise DimensionMismatch("concomitant operands live on different charts")
    fx, gx = f.apply(x), g.apply(x)
    fy, gy = f.apply(y), g.apply(y)
    b_xy = dorfman(x, y)
    out = dorfman(fx, gy) - f.apply(dorfman(x, gy)) - g.apply(dorfman(fx, y))
    out = out + f.apply(g.apply(b_xy))
    out = out + dorfman(gx, fy) - g.apply(dorfman(x, fy)) - f.apply(dorfman(gx, y))
    out = out + g.apply(f.apply(b_xy))
    return out


def concomitant_linearity_defect(
    f: GEndo, g: GEndo, fun: ScalarField, x: GSection, y: GSection
) -> tuple:
    """(N(fX,Y) - f N(X,Y),  N(X,fY) - f N(X,Y)), both computed directly.

    The second component is always zero; the first vanishes when F and G are
    drawn from a certified triple, and is generally nonzero otherwise.
    """
    n0 = concomitant(f, g, x, y)
    first = concomitant(f, g, x.smul(fun), y) - n0.smul(fun)
    second = concomitant(f, g, x, y.smul(fun)) - n0.smul(fun)
    return first, second


def linearity_defect_formula(
    f: GEndo, g: GEndo, fun: ScalarField, x: GSection, y: GSection
) -> GSection:
    """Closed form of the first-slot defect:

        2<FX,GY>Df - 2<X,GY>F Df - 2<FX,Y>G Df + 2<X,Y>FG Df
        + (the same four terms with F and G exchanged).

    Derived by expanding every bracket of N(fX, Y) with the two Leibniz rules
    of the Dorfman bracket; verified against brute force in the test suite.
    """
    two = ScalarField.const(x.dim, 2)
    df = d_map(fun)
    fdf, gdf = f.apply(df), g.apply(df)
    fgdf, gfdf = f.apply(gdf), g.apply(fdf)
    fx, gx = f.apply(x), g.apply(x)
    fy, gy = f.apply(y), g.apply(y)
    out = df.smul(two * pairing(fx, gy)) - fdf.smul(two * pairing(x, gy))
    out = out - gdf.smul(two * pairing(fx, y)) + fgdf.smul(two * pairing(x, y))
    out = out + df.smul(two * pairing(gx, fy)) - gdf.smul(two * pairing(x, fy))
    out = out - fdf.smul(two * pairing(gx, y)) + gfdf.smul(two * pairing(x, y))
    return out


def delta(hk: HKTriple, fun: ScalarField, x: GSection, y: GSection) -> GSection:
    """Delta_f(X,Y) = <X,Y>Df + <IX,Y>I Df + <JX,Y>J Df + <KX,Y>K Df."""
    hk.require_certified()
    df = d_map(fun)
    out = df.smul(pairing(x, y))
    for endo in (hk.i, hk.j, hk.k):
        out = out + endo.apply(df).smul(pairing(endo.apply(x), y))
    return out


def _rotation(hk: HKTriple, variant: str) -> tuple:
    if variant == "ijk":
        return hk.i, hk.j, hk.k
    if variant == "jki":
        return hk.j, hk.k, hk.i
    if variant == "kij":
        return hk.k, hk.i, hk.j
    raise ValueError(f"unknown connection variant {variant!r}")


def connection(
    hk: HKTriple, variant: str, x: GSection, y: GSection, *, _flip_sign: bool = False
) -> GSection:
    """The canonical connection for one cyclic rotation of the triple.

    `_flip_sign` corrupts the last term; it exists only so the suites can
    demonstrate that a wrong formula is caught by the connection laws.
    """
    hk.require_certified()
    p, q, r = _rotation(hk, variant)
    px = p.apply(x)
    qy = q.apply(y)
    inner = dorfman(qy, px) - q.apply(dorfman(y, px)) - p.apply(dorfman(qy, x))
    last = q.apply(p.apply(dorfman(y, x)))
    inner = inner - last if _flip_sign else inner + last
    return r.apply(inner).smul(ScalarField.const(x.dim, Fraction(-1, 2)))


def torsion(hk: HKTriple, variant: str, x: GSection, y: GSection) -> GSection:
    """T(X,Y) = nabla_X Y - nabla_Y X - [X,Y], with the skew bracket."""
    return connection(hk, variant, x, y) - connection(hk, variant, y, x) - courant_bracket(x, y)


def nabla_endo(hk: HKTriple, variant: str, f: GEndo, x: GSection, y: GSection) -> GSection:
    """(nabla_X F)Y = nabla_X(FY) - F(nabla_X Y)."""
    return connection(hk, variant, x, f.apply(y)) - f.apply(connection(hk, variant, x, y))


def torsion_formula_residual(hk: HKTriple, variant: str, x: GSection, y: GSection) -> GSection:
    """T(X,Y) - (I D<X,IY> + J D<X,JY> + K D<X,KY>)."""
    rhs = GSection.zero(x.dim)
    for endo in (hk.i, hk.j, hk.k):
        rhs = rhs + endo.apply(d_map(pairing(x, endo.apply(y))))
    return torsion(hk, variant, x, y) - rhs


# ---------------------------------------------------------------------------
# identity suites
# ---------------------------------------------------------------------------


def check_connection_laws(
    hk: HKTriple,
    variant: str = "ijk",
    trials: int = 10,
    seed: int = 0,
    degree: int = 1,
    extra_pairs: list | None = None,
    parallel: bool = False,
    *,
    _flip_sign: bool = False,
) -> list:
    """Exactly verify the two defining laws of the connection:

        nabla_{fX} Y = f nabla_X Y
        nabla_X (fY) = (rho(X)f) Y + f nabla_X Y - Delta_f(X,Y)

    `extra_pairs` adds named deterministic (X, Y) inputs (the scalar used
    with them is the first coordinate function).
    """
    hk.require_certified()
    n = hk.n
    rng = suite_rng(seed, f"connection-laws-{variant}")
    inputs = []
    for t in range(trials):
        inputs.append(
            (
                t,
                "",
                random_section(rng, n, degree),
                random_section(rng, n, degree),
                random_scalar(rng, n, degree),
            )
        )
    for name, x, y in extra_pairs or ():
        inputs.append((None, f"[sections:{name}]", x, y, ScalarField.coordinate(n, 0)))

    def nab(a, b):
        return connection(hk, variant, a, b, _flip_sign=_flip_sign)

    def worker(item):
        t, tag, x, y, fun = item
        r1 = nab(x.smul(fun), y) - nab(x, y).smul(fun)
        r2 = nab(x, y.smul(fun)) - y.smul(anchor_apply(x, fun)) - nab(x, y).smul(fun) + delta(
            hk, fun, x, y
        )
        return [
            check(f"connection-law-tensorial[{variant}]{tag}", r1, t),
            check(f"connection-law-leibniz-delta[{variant}]{tag}", r2, t),
        ]

    return _map_trials(worker, inputs, parallel)


def check_identities(
    hk: HKTriple,
    trials: int = 10,
    seed: int = 0,
    degree: int = 1,
    extra_pairs: list | None = None,
    parallel: bool = False,
) -> list:
    """The unconditional identities of the primary connection, exactly:

    nabla J = 0; the (nabla I) formula against N_{I,J}; the bracket
    decomposition; and skew-symmetry of N_{I,J}.  All hold for every
    certified almost hypercomplex structure, integrable or not.
    """
    hk.require_certified()
    n = hk.n
    half = ScalarField.const(n, Fraction(1, 2))
    rng = suite_rng(seed, "identities")
    inputs = [
        (t, random_section(rng, n, degree), random_section(rng, n, degree))
        for t in range(trials)
    ]
    inputs += [(None, x, y) for _, x, y in (extra_pairs or ())]

    def worker(item):
        t, x, y = item
        out = []
        r = nabla_endo(hk, "ijk", hk.j, x, y)
        out.append(check("nabla-j-vanishes", r, t))

        nij_y = concomitant(hk.i, hk.j, x, y)
        nij_iy = concomitant(hk.i, hk.j, x, hk.i.apply(y))
        r = (
            nabla_endo(hk, "ijk", hk.i, x, y)
            - hk.k.apply(nij_iy).smul(half)
            - hk.j.apply(nij_y).smul(half)
        )
        out.append(check("nabla-i-concomitant-formula", r, t))

        lhs = dorfman(x, y) + hk.k.apply(nij_y).smul(half)
        rhs = connection(hk, "ijk", x, y) - connection(hk, "ijk", y, x) + d_map(pairing(x, y))
        for endo in (hk.i, hk.j, hk.k):
            rhs = rhs - endo.apply(d_map(pairing(x, endo.apply(y))))
        out.append(check("bracket-decomposition", lhs - rhs, t))

        r = nij_y + concomitant(hk.i, hk.j, y, x)
        out.append(check("concomitant-skew", r, t))
        return out

    return _map_trials(worker, inputs, parallel)


def check_delta_properties(
    hk: HKTriple,
    trials: int = 10,
    seed: int = 0,
    degree: int = 1,
    parallel: bool = False,
) -> list:
    """Delta_f compatibility with I, J, K and its symmetric part."""
    hk.require_certified()
    n = hk.n
    two = ScalarField.const(n, 2)
    rng = suite_rng(seed, "delta")
    inputs = [
        (
            t,
            random_section(rng, n, degree),
            random_section(rng, n, degree),
            random_scalar(rng, n, degree),
        )
        for t in range(trials)
    ]

    def worker(item):
        t, x, y, fun = item
        out = []
        base = delta(hk, fun, x, y)
        for name, endo in (("i", hk.i), ("j", hk.j), ("k", hk.k)):
            r = delta(hk, fun, x, endo.apply(y)) - endo.apply(base)
            out.append(check(f"delta-compat-{name}", r, t))
        r = base + delta(hk, fun, y, x) - d_map(fun).smul(two * pairing(x, y))
        out.append(check("delta-symmetric-part", r, t))
        return out

    return _map_trials(worker, inputs, parallel)


# ---------------------------------------------------------------------------
# theorem report
# ---------------------------------------------------------------------------

CONCOMITANT_KEYS = ("II", "JJ", "KK", "IJ", "JK", "KI")


def spanning_family(n: int, degree: int = 1) -> list:
    """Frame sections times all monomials of total degree <= degree."""
    basis = basis_sections(n)
    family = []
    for mono in monomials_up_to(n, degree):
        coeff = ScalarField.from_polynomial(Polynomial(n, {mono: 1}))
        for e in basis:
            family.append(e.smul(coeff))
    return family


@dataclass(frozen=True)
class ConcomitantStatus:
    vanishes: bool
    witness: Witness | None = None

    def to_dict(self) -> dict:
        out = {"vanishes": self.vanishes}
        if self.witness is not None:
            out["witness"] = self.witness.to_dict()
        return out


@dataclass(frozen=True)
class TheoremReport:
    """Observed vanishing pattern and connection-level consequences."""

    structure_id: str
    span_degree: int
    trials: int
    seed: int
    concomitants: dict
    connections_agree: bool
    parallel: dict
    torsion_formula: bool
    verdict: str
    consistency: str

    def to_dict(self) -> dict:
        return {
            "structure-id": self.structure_id,
            "span-degree": self.span_degree,
            "trials": self.trials,
            "seed": self.seed,
            "concomitants": {k: v.to_dict() for k, v in self.concomitants.items()},
            "connection-equality": self.connections_agree,
            "parallel": dict(self.parallel),
            "torsion-formula": self.torsion_formula,
            "verdict": self.verdict,
            "consistency": self.consistency,
        }

    @property
    def passed(self) -> bool:
        return self.consistency == "ok"


def concomitant_statuses(hk: HKTriple, span_degree: int = 1) -> dict:
    """Decide vanishing of all six concomitants on the spanning family.

    Evaluation shares one bracket cache per section pair: the sixteen
    brackets [[P x, Q y]] with P, Q in {1, I, J, K} cover all six
    concomitants, and endomorphism applications are cached the same way.
    """
    hk.require_certified()
    n = hk.n
    members = {"I": hk.i, "J": hk.j, "K": hk.k}
    products = {(p, q): members[p] @ members[q] for p in "IJK" for q in "IJK"}
    family = spanning_family(n, span_degree)
    images = {"1": family}
    for name, endo in members.items():
        images[name] = [endo.apply(s) for s in family]

    undecided = set(CONCOMITANT_KEYS)
    status = {}
    for xi in range(len(family)):
        for yi in range(len(family)):
            if not undecided:
                break
            brackets: dict = {}
            apps1: dict = {}
            apps2: dict = {}
            prods: dict = {}

            def br(p, q):
                v = brackets.get((p, q))
                if v is None:
                    v = dorfman(images[p][xi], images[q][yi])
                    brackets[(p, q)] = v
                return v

            def app1(p, q):
                v = apps1.get((p, q))
                if v is None:
                    v = members[p].apply(br("1", q))
                    apps1[(p, q)] = v
                return v

            def app2(p, q):
                v = apps2.get((p, q))
                if v is None:
                    v = members[p].apply(br(q, "1"))
                    apps2[(p, q)] = v
                return v

            def prod(p, q):
                v = prods.get((p, q))
                if v is None:
                    v = products[(p, q)].apply(br("1", "1"))
                    prods[(p, q)] = v
                return v

            for key in sorted(undecided):
                f, g = key
                residual = (
                    br(f, g)
                    - app1(f, g)
                    - app2(g, f)
                    + prod(f, g)
                    + br(g, f)
                    - app1(g, f)
                    - app2(f, g)
                    + prod(g, f)
                )
                w = witness_for(residual, context=f"N[{f},{g}] on family pair ({xi}, {yi})")
                if w is not None:
                    status[key] = ConcomitantStatus(False, w)
                    undecided.discard(key)
        if not undecided:
            break
    for key in CONCOMITANT_KEYS:
        if key not in status:
            status[key] = ConcomitantStatus(True)
    return {key: status[key] for key in CONCOMITANT_KEYS}


def theorem_report(
    hk: HKTriple,
    trials: int = 10,
    seed: int = 0,
    span_degree: int = 1,
    structure_id: str = "unnamed",
    degree: int = 1,
) -> TheoremReport:
    """Certify the equivalence pattern on one structure.

    The three vanishing conditions (N_II = N_JJ = 0, N_IJ = 0, all six zero)
    must agree.  When N_IJ = 0 the three connections must coincide, I, J, K
    must all be parallel, and the torsion formula must hold; when N_IJ != 0
    at least one of those consequences must visibly fail.  A contradiction
    raises InconsistentEquivalence: it would mean the engine itself is wrong.
    """
    hk.require_certified()
    n = hk.n
    status = concomitant_statuses(hk, span_degree)

    rng = suite_rng(seed, "theorem")
    pairs = [
        (random_section(rng, n, degree), random_section(rng, n, degree))
        for _ in range(trials)
    ]

    connections_agree = True
    for x, y in pairs:
        base = connection(hk, "ijk", x, y)
        if (base - connection(hk, "jki", x, y)).is_zero() and (
            base - connection(hk, "kij", x, y)
        ).is_zero():
            continue
        connections_agree = False
        break

    parallel = {}
    for name, endo in (("I", hk.i), ("J", hk.j), ("K", hk.k)):
        ok = True
        for x, y in pairs:
            if not nabla_endo(hk, "ijk", endo, x, y).is_zero():
                ok = False
                break
        parallel[name] = ok

    torsion_ok = True
    for x, y in pairs:
        if not torsion_formula_residual(hk, "ijk", x, y).is_zero():
            torsion_ok = False
            break

    cond_pair = status["II"].vanishes and status["JJ"].vanishes
    cond_ij = status["IJ"].vanishes
    cond_all = all(status[k].vanishes for k in CONCOMITANT_KEYS)

    consistent = cond_pair == cond_ij == cond_all
    if cond_ij:
        consistent = consistent and connections_agree and all(parallel.values()) and torsion_ok
    else:
        consistent = consistent and ((not parallel["I"]) or (not torsion_ok))

    rep = TheoremReport(
        structure_id=structure_id,
        span_degree=span_degree,
        trials=trials,
        seed=seed,
        concomitants=status,
        connections_agree=connections_agree,
        parallel=parallel,
        torsion_formula=torsion_ok,
        verdict="hypercomplex" if cond_all else "not-hypercomplex",
        consistency="ok" if consistent else "violated",
    )
    if not consistent:
        raise InconsistentEquivalence(
            "observed vanishing pattern contradicts the proved equivalences "
            "(this is an engine bug, not a property of the structure)",
            report=rep,
        )
    return rep
