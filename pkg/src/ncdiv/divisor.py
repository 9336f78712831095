"""Hypersurface germs at the origin and the normal-crossing decision pipeline.

A :class:`DivisorGerm` is a reduced polynomial equation h with h(0) = 0,
optionally with a factorization into components.  The criteria here are
exact; each verdict carries the polynomials that certify it.
"""
from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from . import gb
from .errors import InternalError, InputError, NonReducedError, NotOnDivisorError
from .ideal import (
    CMHint,
    Ideal,
    RadicalityReport,
    is_radical,
    minimal_generators_at_origin,
    poly_gcd,
)
from .poly import Polynomial, RingContext, determinant, exact_quotient, minors
from .weights import find_positive_weights

log = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# data
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DivisorGerm:
    h: Polynomial
    factors: tuple | None = None

    def __post_init__(self):
        if self.h.is_zero():
            raise InputError("h must be nonzero")
        if self.h.constant_term() != 0:
            raise NotOnDivisorError(f"h(0) = {self.h.constant_term()}: the origin is not on the divisor")
        if self.factors is not None:
            facs = tuple(self.factors)
            object.__setattr__(self, "factors", facs)
            prod = self.ring.one()
            for f in facs:
                if f.ring != self.ring:
                    raise InputError(f"factor {f} lives in a different ring")
                prod = prod * f
            if prod != self.h:
                raise InputError(f"product of factors is {prod}, not h = {self.h}")

    @property
    def ring(self) -> RingContext:
        return self.h.ring

    @property
    def n(self) -> int:
        return self.ring.n

    @classmethod
    def parse(cls, ring: RingContext, h: str, factors: Sequence[str] | None = None) -> DivisorGerm:
        hp = ring.parse(h)
        fs = tuple(ring.parse(f) for f in factors) if factors else None
        return cls(hp, fs)

    def local_factors(self) -> list[Polynomial]:
        """Factors through the origin; the others are units in the local ring."""
        return [f for f in (self.factors or ()) if f.constant_term() == 0]

    def is_smooth_at_origin(self) -> bool:
        return any(g.constant_term() != 0 for g in self.h.gradient())

    def translated(self, point: Sequence) -> DivisorGerm:
        """The germ at ``point``, moved to the origin by x -> x + point."""
        R = self.ring
        shift = [R.var(i) + Fraction(point[i]) for i in range(R.n)]
        h = self.h.substitute(shift)
        facs = tuple(f.substitute(shift) for f in self.factors) if self.factors else None
        return DivisorGerm(h, facs)


class VectorField:
    """delta = sum a_i d/dx_i."""

    def __init__(self, coeffs: Sequence[Polynomial]):
        self.coeffs = tuple(coeffs)
        if not self.coeffs:
            raise ValueError("a vector field needs at least one coefficient")

    @property
    def ring(self) -> RingContext:
        return self.coeffs[0].ring

    def __call__(self, f: Polynomial) -> Polynomial:
        total = f.ring.zero()
        for i, a in enumerate(self.coeffs):
            if not a.is_zero():
                total = total + a * f.partial(i)
        return total

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.coeffs)

    def is_logarithmic(self, h: Polynomial) -> bool:
        return exact_quotient(self(h), h) is not None

    def __eq__(self, other):
        return isinstance(other, VectorField) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        names = self.ring.names
        parts = []
        for a, nm in zip(self.coeffs, names):
            if a.is_zero():
                continue
            s = str(a)
            if len(a.terms) > 1:
                s = f"({s})"
            parts.append(f"d_{nm}" if s == "1" else f"{s}*d_{nm}")
        return " + ".join(parts) if parts else "0"

    __repr__ = __str__


# ---------------------------------------------------------------------------
# ideals attached to h
# ---------------------------------------------------------------------------

def jacobian_ideal(D: DivisorGerm) -> Ideal:
    return Ideal(D.h.gradient(), D.ring)


def singular_locus_ideal(D: DivisorGerm) -> Ideal:
    return Ideal([D.h] + D.h.gradient(), D.ring)


def is_reduced_equation(D: DivisorGerm) -> bool:
    """h squarefree iff its singular locus has codimension >= 2."""
    return singular_locus_ideal(D).dimension() <= D.n - 2


def reducedness_witness(D: DivisorGerm) -> Polynomial | None:
    """A non-constant common factor of h and all its partials, or None if h is reduced."""
    if is_reduced_equation(D):
        return None
    g = D.h
    for p in D.h.gradient():
        if not p.is_zero():
            g = poly_gcd(g, p)
    if g.is_constant():
        raise InternalError(f"{D.h} failed the reducedness test but gcd(h, dh) = 1")
    return g


def require_reduced(D: DivisorGerm) -> None:
    w = reducedness_witness(D)
    if w is not None:
        raise NonReducedError(f"h is not reduced: {w} divides h and all partials", w)


# ---------------------------------------------------------------------------
# logarithmic vector fields and freeness
# ---------------------------------------------------------------------------

def der_log(D: DivisorGerm, minimal: bool = True) -> list[VectorField]:
    """Generators of Der(log D), projected from the syzygies of (dh, h).

    With ``minimal`` a subset minimally generating the module at the origin.
    """
    n = D.n
    syz = gb.syzygies(D.h.gradient() + [D.h])
    fields = [VectorField(s.components[:n]) for s in syz]
    fields = [v for v in fields if not v.is_zero()]
    for v in fields:
        if not v.is_logarithmic(D.h):
            raise InternalError(f"syzygy-derived field {v} is not logarithmic")
    if minimal and fields:
        kept, _ = gb.minimize_at_origin([gb.ModuleElement(v.coeffs) for v in fields])
        fields = [fields[i] for i in kept]
    return fields


@dataclass
class FreenessReport:
    free: bool
    mu: int
    basis: list | None = None
    determinant: Polynomial | None = None
    unit: Polynomial | None = None
    weights: tuple | None = None
    projective_dimension: int | None = None
    generators: list = field(default_factory=list)

    def summary(self) -> str:
        if self.free:
            return f"free: det = ({self.unit})*h with unit value {self.unit.constant_term()} at 0"
        return f"not free: Der(log D) needs {self.mu} > n generators at the origin"


def is_free_at_origin(D: DivisorGerm) -> FreenessReport:
    """Saito's criterion on a local minimal generating set of Der(log D).

    For quasi-homogeneous h the answer is cross-checked against the
    projective dimension of R/((h)+J_h), which must be 2 exactly when D is
    free and singular.
    """
    n = D.n
    fields = der_log(D)
    mu = len(fields)
    rep = FreenessReport(free=False, mu=mu, generators=fields)
    if mu < n:
        raise InternalError(f"Der(log D) has rank n = {n} but {mu} local generators")
    if mu == n:
        M = [list(v.coeffs) for v in fields]
        det = determinant(M)
        u = exact_quotient(det, D.h)
        if u is None or u.constant_term() == 0:
            raise InternalError(f"n local generators of Der(log D) but det = {det} is not a unit times h")
        rep.free, rep.basis, rep.determinant, rep.unit = True, fields, det, u
    sing = [D.h] + D.h.gradient()
    w = find_positive_weights([D.h])
    if w is not None:
        rep.weights = w
        res = gb.free_resolution(sing)
        rep.projective_dimension = res.projective_dimension()
        expected = rep.projective_dimension == 2 or D.is_smooth_at_origin()
        if expected != rep.free:
            raise InternalError(
                f"Saito test says free={rep.free} but pd(R/((h)+J_h)) = {rep.projective_dimension}")
    return rep


# ---------------------------------------------------------------------------
# radicality and special cases
# ---------------------------------------------------------------------------

def is_radical_jacobian(D: DivisorGerm, freeness: FreenessReport | None = None) -> RadicalityReport:
    """Radicality of (h)+J_h at the origin; the Jacobian R0 path is used only for free D."""
    if D.is_smooth_at_origin():
        return RadicalityReport("radical", "monomial", at_origin=True,
                                notes=["smooth at the origin: the singular locus is empty there"])
    if freeness is None:
        freeness = is_free_at_origin(D)
    hint = CMHint(2) if freeness.free else None
    rep = is_radical(singular_locus_ideal(D), hint=hint, at_origin=True)
    if rep.verdict == "radical" and not jacobian_ideal(D).contains_at_origin(D.h):
        raise InternalError("(h)+J_h is radical but h is not in J_h at the origin")
    return rep


def classify_A1(D: DivisorGerm) -> int | None:
    """k if J_h is a complete intersection of codimension k at 0 (D is locally x_1^2+...+x_k^2)."""
    J = jacobian_ideal(D)
    if J.is_unit_at_origin():
        return None
    k = J.codim(local=True)
    return k if minimal_generators_at_origin(J) == k else None


def gorenstein_shortcut(D: DivisorGerm) -> bool | None:
    """True when the singular locus has dim n-2 and J_h needs only two generators at 0."""
    S = singular_locus_ideal(D)
    if S.is_unit_at_origin() or S.dimension(local=True) != D.n - 2:
        return None
    return True if minimal_generators_at_origin(jacobian_ideal(D)) == 2 else None


@dataclass
class ComponentReport:
    factors: list
    smooth: dict  # factor -> bool
    normal_proxy: dict  # factor -> local dim of its singular locus
    pair_dims: dict  # (i, j) -> (dim(hi,hj), dim of non-transversal locus)
    triple_dims: dict  # (i, j, k) -> dim(hi,hj,hk)
    n: int

    @property
    def all_smooth(self) -> bool:
        return all(self.smooth.values())

    @property
    def factors_ok(self) -> bool:
        return all(d <= self.n - 3 for d in self.normal_proxy.values())

    @property
    def pairs_ok(self) -> bool:
        return all(a == self.n - 2 and b <= self.n - 3 for a, b in self.pair_dims.values())

    @property
    def triples_ok(self) -> bool:
        return all(d <= self.n - 3 for d in self.triple_dims.values())

    @property
    def passes(self) -> bool:
        return self.factors_ok and self.pairs_ok and self.triples_ok

    def failing_pairs(self) -> list:
        return [p for p, (a, b) in self.pair_dims.items() if not (a == self.n - 2 and b <= self.n - 3)]

    def failing_triples(self) -> list:
        return [t for t, d in self.triple_dims.items() if d > self.n - 3]


def component_checks(D: DivisorGerm) -> ComponentReport:
    """Smoothness and normality of each component, pairwise transversality, triple intersections."""
    if D.factors is None:
        raise InputError("component checks need a factorization of h")
    facs = D.local_factors()
    R, n = D.ring, D.n
    smooth, proxy = {}, {}
    for f in facs:
        sub = DivisorGerm(f)
        require_reduced(sub)
        smooth[f] = sub.is_smooth_at_origin()
        proxy[f] = singular_locus_ideal(sub).dimension(local=True)
    pairs, triples = {}, {}
    for i, j in combinations(range(len(facs)), 2):
        a, b = facs[i], facs[j]
        meet = Ideal([a, b], R)
        bad = meet + Ideal(minors([a.gradient(), b.gradient()], 2), R)
        pairs[(i, j)] = (meet.dimension(local=True), bad.dimension(local=True))
    for i, j, k in combinations(range(len(facs)), 3):
        triples[(i, j, k)] = Ideal([facs[i], facs[j], facs[k]], R).dimension(local=True)
    return ComponentReport(facs, smooth, proxy, pairs, triples, n)


@dataclass
class SplayedReport:
    product_radical: bool
    g_radical: bool | None
    h_radical: bool | None

    @property
    def passed(self) -> bool:
        return not self.product_radical or (self.g_radical is True and self.h_radical is True)


def _sing_radical(D: DivisorGerm) -> RadicalityReport:
    if D.is_smooth_at_origin():
        return RadicalityReport("radical", "monomial", at_origin=True)
    return is_radical(singular_locus_ideal(D), at_origin=True)


def splayed_factor_property(g: Polynomial, h: Polynomial) -> SplayedReport:
    """If the product has a radical Jacobian ideal, so do both factors."""
    prod = _sing_radical(DivisorGerm(g * h, (g, h)))
    if prod.verdict != "radical":
        return SplayedReport(False, None, None)
    return SplayedReport(True, _sing_radical(DivisorGerm(g)).verdict == "radical",
                         _sing_radical(DivisorGerm(h)).verdict == "radical")


# ---------------------------------------------------------------------------
# Euler homogeneity
# ---------------------------------------------------------------------------

@dataclass
class EulerField:
    field: VectorField
    unit: Polynomial  # field(h) == unit * h, unit(0) != 0

    def check(self, h: Polynomial) -> bool:
        return self.field(h) == self.unit * h and self.unit.constant_term() != 0


def euler_homogeneity(D: DivisorGerm) -> EulerField | None:
    """delta with delta(h) = u*h (u = 1 when h lies in J_h globally), or None if h is not in J_h at 0."""
    grads = D.h.gradient()
    nz = [i for i, g in enumerate(grads) if not g.is_zero()]
    gens = [grads[i] for i in nz]
    cof = gb.lift(D.h, gens)
    unit = D.ring.one()
    if cof is None:
        from .ideal import quotient

        colon = quotient(Ideal(gens, D.ring), D.h)
        units = [g for g in colon.gens if g.constant_term() != 0]
        if not units:
            return None
        unit = min(units, key=lambda g: (len(g.terms), g.degree()))
        cof = gb.lift(unit * D.h, gens)
        if cof is None:
            raise InternalError("unit multiple of h not liftable into J_h")
    coeffs = [D.ring.zero()] * D.n
    for i, c in zip(nz, cof):
        coeffs[i] = c
    ef = EulerField(VectorField(coeffs), unit)
    if not ef.check(D.h):
        raise InternalError("Euler lift failed verification")
    return ef


# ---------------------------------------------------------------------------
# the pipeline
# ---------------------------------------------------------------------------

NORMAL_CROSSING = "normal-crossing"
NOT_NORMAL_CROSSING = "not-normal-crossing"
UNDECIDED = "undecided-needs-normalization"


@dataclass
class Step:
    name: str
    outcome: str  # pass | fail | inconclusive | skipped
    reason: str
    witnesses: dict = field(default_factory=dict)
    seconds: float = 0.0


@dataclass
class NCVerdict:
    steps: list
    final: str
    decided_at: str

    @property
    def failed(self) -> Step | None:
        for s in self.steps:
            if s.outcome == "fail":
                return s
        return None


def _plane_curve_step(D: DivisorGerm) -> Step:
    S = singular_locus_ideal(D)
    xs = D.ring.gens()
    outside = [x for x in xs if not S.contains_at_origin(x)]
    if not outside:
        return Step("plane-curve", "pass",
                    "plane curve germ: free, and (h)+J_h is the maximal ideal, so D is a node",
                    {"singular-locus": [str(g) for g in S.gens]})
    x = outside[0]
    k, p = 1, x
    while not S.contains_at_origin(p):
        p, k = p * x, k + 1
    return Step("plane-curve", "fail",
                f"(h)+J_h is not radical at 0: {x} is outside but {x}^{k} is inside",
                {"witness": str(x), "power": k})


def decide_normal_crossing(D: DivisorGerm) -> NCVerdict:
    require_reduced(D)
    steps: list[Step] = []
    clock = [time.perf_counter()]

    def add(step: Step):
        now = time.perf_counter()
        step.seconds, clock[0] = now - clock[0], now
        steps.append(step)

    def done(final, at):
        return NCVerdict(steps, final, at)

    grad0 = [g.constant_term() for g in D.h.gradient()]
    if any(grad0):
        add(Step("smooth", "pass", "dh(0) != 0, so D is smooth at 0 (one coordinate hyperplane)",
                          {"gradient-at-origin": [str(c) for c in grad0]}))
        return done(NORMAL_CROSSING, "smooth")
    add(Step("smooth", "skipped", "dh(0) = 0: D is singular at the origin"))

    if D.n == 2:
        st = _plane_curve_step(D)
        add(st)
        return done(NORMAL_CROSSING if st.outcome == "pass" else NOT_NORMAL_CROSSING, "plane-curve")

    fr = is_free_at_origin(D)
    if not fr.free:
        add(Step("free", "fail", f"Der(log D) needs {fr.mu} > {D.n} generators at the origin",
                          {"der-log": [str(v) for v in fr.generators]}))
        return done(NOT_NORMAL_CROSSING, "free")
    add(Step("free", "pass", "Saito determinant is a unit times h",
                      {"basis": [str(v) for v in fr.basis], "det": str(fr.determinant), "unit": str(fr.unit)}))

    rr = is_radical_jacobian(D, fr)
    if rr.verdict == "not-radical":
        add(Step("radical-jacobian", "fail", f"(h)+J_h is not radical ({rr.method})",
                          {"witness": str(rr.witness), "power": rr.power}))
        return done(NOT_NORMAL_CROSSING, "radical-jacobian")
    if rr.verdict == "inconclusive":
        add(Step("radical-jacobian", "inconclusive", "radicality could not be decided",
                          {"notes": list(rr.notes)}))
        return done(UNDECIDED, "radical-jacobian")
    add(Step("radical-jacobian", "pass", f"(h)+J_h is radical ({rr.method})"))

    if gorenstein_shortcut(D):
        add(Step("gorenstein", "pass",
                          "singular locus of dim n-2 cut out by two partials: a Gorenstein radical of codim 2"))
        return done(NORMAL_CROSSING, "gorenstein")
    add(Step("gorenstein", "skipped", "J_h needs more than two generators at 0"))

    if D.factors is not None:
        facs = D.local_factors()
        smooth = {str(f): DivisorGerm(f).is_smooth_at_origin() for f in facs}
        if all(smooth.values()):
            add(Step("smooth-components", "pass",
                              "free, radical Jacobian and all components smooth at 0",
                              {"components": list(smooth)}))
            return done(NORMAL_CROSSING, "smooth-components")
        add(Step("smooth-components", "skipped", "some component is singular at 0",
                          {"singular": [f for f, ok in smooth.items() if not ok]}))
    else:
        add(Step("smooth-components", "skipped", "no factorization supplied"))

    add(Step("normalization", "inconclusive",
                      "free with radical Jacobian ideal; normal crossing also needs the normalization "
                      "of D to be smooth over the origin, which is not checked",
                      {"hypothesis": "smooth normalization"}))
    return done(UNDECIDED, "normalization")
