"""Ideals of Q[x_1..x_n]: arithmetic, membership, radicality.

An :class:`Ideal` keeps its generators and lazily caches one Groebner (or
standard) basis per monomial order.  Equality is extensional.

Radicality is decided by a ladder of exact criteria; anything the ladder
cannot settle is reported as ``inconclusive`` rather than guessed.  Every
``not-radical`` verdict carries a witness f with f not in I and f**k in I,
re-verified by independent membership calls.
"""
from __future__ import annotations

import logging
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import gb
from .poly import (
    DEGREVLEX,
    DS,
    MonomialOrder,
    Polynomial,
    RingContext,
    RingMismatch,
    exact_quotient,
    minors,
    order as make_order,
)

log = logging.getLogger(__name__)


class Ideal:
    def __init__(self, gens: Iterable[Polynomial], ring: RingContext | None = None):
        gens = list(gens)
        if ring is None:
            if not gens:
                raise ValueError("empty generator list needs an explicit ring")
            ring = gens[0].ring
        for g in gens:
            if g.ring != ring:
                raise RingMismatch(f"generator {g} not in {ring}")
        seen = []
        for g in gens:
            if not g.is_zero() and g not in seen:
                seen.append(g)
        self.ring = ring
        self.gens: tuple = tuple(seen)
        self._cache: dict = {}
        self._lock = threading.Lock()

    # -- bases ---------------------------------------------------------------
    def groebner(self, ord: MonomialOrder | str = DEGREVLEX) -> gb.GroebnerBasis:
        ord = make_order(ord)
        with self._lock:
            G = self._cache.get(ord)
        if G is None:
            G = gb.buchberger(self.gens or [self.ring.zero()], ord) if self.gens else None
            with self._lock:
                self._cache.setdefault(ord, G)
        return G

    def standard_basis(self) -> gb.GroebnerBasis:
        return self.groebner(DS)

    # -- predicates ------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return bool(self.gens) and self.groebner().is_unit()

    def is_unit_at_origin(self) -> bool:
        return any(g.constant_term() != 0 for g in self.gens)

    def is_monomial(self) -> bool:
        return not self.is_zero() and all(g.is_monomial() for g in self.groebner().elements)

    def contains(self, f: Polynomial) -> bool:
        if f.is_zero():
            return True
        if self.is_zero():
            return False
        return self.groebner().contains(f)

    def contains_at_origin(self, f: Polynomial) -> bool:
        """Membership in the localization at the origin (Mora normal form)."""
        if f.is_zero():
            return True
        if self.is_zero():
            return False
        return gb.normal_form(f, self.standard_basis(), DS).is_zero()

    def __contains__(self, f: Polynomial) -> bool:
        return self.contains(f)

    def __le__(self, other: Ideal) -> bool:
        _same_ring(self, other)
        return all(other.contains(g) for g in self.gens)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return equal(self, other)

    __hash__ = None

    # -- dimension ---------------------------------------------------------------
    def dimension(self, local: bool = False) -> int:
        """Krull dimension of R/I; of the local ring at 0 if ``local``.  -1 for the unit ideal."""
        if self.is_zero():
            return self.ring.n
        if local and self.is_unit_at_origin():
            return -1
        G = self.groebner(DS if local else DEGREVLEX)
        return gb.dimension_from_leading(G.leading_monomials(), self.ring.n)

    def codim(self, local: bool = False) -> int:
        return self.ring.n - self.dimension(local)

    # -- arithmetic ----------------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, Polynomial):
            other = Ideal([other], self.ring)
        _same_ring(self, other)
        return Ideal(self.gens + other.gens, self.ring)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return Ideal([g * other for g in self.gens], self.ring)
        _same_ring(self, other)
        return Ideal([a * b for a in self.gens for b in other.gens], self.ring)

    def reduced_generators(self) -> list[Polynomial]:
        return list(self.groebner().elements) if self.gens else []

    def __repr__(self):
        return "Ideal(" + ", ".join(str(g) for g in self.gens) + ")"

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.gens) + ")"


def _same_ring(I: Ideal, J: Ideal):
    if I.ring != J.ring:
        raise RingMismatch(f"{I.ring} vs {J.ring}")


def ideal(*gens: Polynomial) -> Ideal:
    if len(gens) == 1 and isinstance(gens[0], (list, tuple)):
        gens = tuple(gens[0])
    return Ideal(gens)


# ---------------------------------------------------------------------------
# elimination-based operations
# ---------------------------------------------------------------------------

def _fresh_names(ring: RingContext, count: int, stem: str = "_t") -> list[str]:
    out, k = [], 0
    while len(out) < count:
        nm = f"{stem}{k}"
        if nm not in ring.names:
            out.append(nm)
        k += 1
    return out


def eliminate(I: Ideal, variables: Sequence) -> Ideal:
    """I intersected with the subring without ``variables`` (same ambient ring)."""
    R = I.ring
    idx = [R.index(v) for v in variables]
    rest = [i for i in range(R.n) if i not in idx]
    perm_names = [R.names[i] for i in idx] + [R.names[i] for i in rest]
    S = RingContext(tuple(perm_names))
    pos = {old: new for new, old in enumerate(idx + rest)}
    gens = [g.change_ring(S, [pos[i] for i in range(R.n)]) for g in I.gens]
    if not gens:
        return I
    G = gb.buchberger(gens, MonomialOrder("elim", len(idx)))
    back = [0] * R.n
    for new, old in enumerate(idx + rest):
        back[new] = old
    keep = [g for g in G.elements if all(e[: len(idx)] == (0,) * len(idx) for e in g.terms)]
    return Ideal([g.change_ring(R, back) for g in keep], R)


def intersect(I: Ideal, J: Ideal, *more: Ideal) -> Ideal:
    """I ∩ J via t*I + (1-t)*J, eliminating the tag variable t."""
    if more:
        acc = intersect(I, J)
        for K in more:
            acc = intersect(acc, K)
        return acc
    _same_ring(I, J)
    if I.is_zero() or J.is_zero():
        return Ideal([], I.ring)
    R = I.ring
    (tname,) = _fresh_names(R, 1)
    S = R.extend(tname, front=True)
    shift = list(range(1, R.n + 1))
    t = S.var(0)
    gens = [t * g.change_ring(S, shift) for g in I.gens]
    gens += [(1 - t) * g.change_ring(S, shift) for g in J.gens]
    G = gb.buchberger(gens, MonomialOrder("elim", 1))
    keep = [g for g in G.elements if all(e[0] == 0 for e in g.terms)]
    return Ideal([_drop_first(g, R) for g in keep], R)


def _drop_first(g: Polynomial, R: RingContext) -> Polynomial:
    return Polynomial(R, {e[1:]: c for e, c in g.terms.items()})


def quotient(I: Ideal, f) -> Ideal:
    """Ideal quotient I : f for a polynomial f, or I : J for an ideal J."""
    if isinstance(f, Ideal):
        _same_ring(I, f)
        if f.is_zero():
            return Ideal([I.ring.one()])
        parts = [quotient(I, g) for g in f.gens]
        return intersect(*parts) if len(parts) > 1 else parts[0]
    if f.is_zero():
        raise ValueError("quotient by the zero polynomial")
    if I.is_zero():
        return I
    if I.contains(f):
        return Ideal([I.ring.one()])
    both = intersect(I, Ideal([f]))
    gens = []
    for g in both.gens:
        q = exact_quotient(g, f)
        assert q is not None, "generators of I ∩ (f) must be divisible by f"
        gens.append(q)
    return Ideal(gens, I.ring)


def saturate(I: Ideal, f: Polynomial) -> tuple[Ideal, int]:
    """(I : f^∞, s) with s the least index where I : f^s = I : f^(s+1)."""
    cur, k = I, 0
    while True:
        nxt = quotient(cur, f)
        if equal(nxt, cur):
            return cur, k
        cur, k = nxt, k + 1


def equal(I: Ideal, J: Ideal) -> bool:
    _same_ring(I, J)
    return I <= J and J <= I


def member(f: Polynomial, I: Ideal) -> bool:
    return I.contains(f)


def radical_member(f: Polynomial, I: Ideal) -> bool:
    """f in sqrt(I), via the unit-ideal test of I + (1 - t f) in R[t]."""
    if f.is_zero():
        return True
    if I.is_zero():
        return False
    R = I.ring
    (tname,) = _fresh_names(R, 1)
    S = R.extend(tname)
    emb = list(range(R.n))
    t = S.var(R.n)
    gens = [g.change_ring(S, emb) for g in I.gens] + [1 - t * f.change_ring(S, emb)]
    return gb.buchberger(gens, DEGREVLEX).is_unit()


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd, as a*b / lcm with the lcm generating (a) ∩ (b)."""
    if a.is_zero():
        return b.monic() if not b.is_zero() else b
    if b.is_zero():
        return a.monic()
    (l,) = intersect(Ideal([a]), Ideal([b])).reduced_generators()
    g = exact_quotient(a * b, l)
    assert g is not None
    return g.monic()


def minimal_generators_at_origin(I: Ideal) -> int:
    """mu(I) = dim_Q I / mI at the origin."""
    if I.is_unit_at_origin():
        raise ValueError("ideal contains a unit at the origin")
    if I.is_zero():
        return 0
    return gb.minimal_generator_count(list(I.gens))


def minimal_generating_subset(I: Ideal) -> list[Polynomial]:
    kept, _ = gb.minimize_at_origin(list(I.gens))
    return [I.gens[i] for i in kept]


# ---------------------------------------------------------------------------
# radicality
# ---------------------------------------------------------------------------

@dataclass
class RadicalityReport:
    verdict: str  # radical | not-radical | inconclusive
    method: str  # monomial | zero-dimensional | jacobian-R0 | split | witness
    witness: Polynomial | None = None
    power: int | None = None
    at_origin: bool = False
    notes: list = field(default_factory=list)

    @property
    def radical(self) -> bool | None:
        return {"radical": True, "not-radical": False}.get(self.verdict)


@dataclass(frozen=True)
class CMHint:
    """Caller certifies R/I is Cohen-Macaulay of codimension ``codim`` at the origin."""

    codim: int


def verify_witness(f: Polynomial, I: Ideal, k: int, at_origin: bool = False) -> bool:
    """f not in I (at the origin if asked) and f**k in I."""
    outside = not (I.contains_at_origin(f) if at_origin else I.contains(f))
    return outside and I.contains(f ** k)


def _witness_power(f: Polynomial, I: Ideal, limit: int = 64) -> int | None:
    p = f
    for k in range(1, limit + 1):
        if I.contains(p):
            return k
        p = p * f
    return None


def _monomial_test(I: Ideal) -> RadicalityReport:
    for g in I.groebner().elements:
        (e,) = g.terms
        if any(a > 1 for a in e):
            sq = Polynomial(I.ring, {tuple(min(a, 1) for a in e): Fraction(1)})
            return RadicalityReport("not-radical", "monomial", sq, max(e))
    return RadicalityReport("radical", "monomial")


# univariate helpers on coefficient lists (index = degree)

def _u_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _u_divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(_u_trim(a)) >= len(b):
        c = a[-1] / b[-1]
        d = len(a) - len(b)
        q[d] = c
        for i, v in enumerate(b):
            a[i + d] -= c * v
        a.pop()
    return _u_trim(q), a


def _u_gcd(a, b):
    a, b = _u_trim(list(a)), _u_trim(list(b))
    while b:
        _, r = _u_divmod(a, b)
        a, b = b, r
    return [c / a[-1] for c in a]


def _minimal_polynomial(I: Ideal, i: int) -> list[Fraction]:
    """Monic minimal polynomial of x_i modulo a zero-dimensional I."""
    R = I.ring
    G = I.groebner()
    x = R.var(i)
    basis_rows: list[tuple[dict, list]] = []  # (reduced vector, combination)
    p = R.one()
    k = 0
    while True:
        nf = G.normal_form(p)
        vec = dict(nf.terms)
        comb = [Fraction(0)] * k + [Fraction(1)]
        for pivot, (bvec, bcomb) in basis_rows:
            if pivot in vec:
                c = vec[pivot] / bvec[pivot]
                for e, v in bvec.items():
                    s = vec.get(e, 0) - c * v
                    if s:
                        vec[e] = s
                    else:
                        vec.pop(e, None)
                for j, v in enumerate(bcomb):
                    comb[j] -= c * v
        if not vec:
            return comb
        pivot = max(vec, key=DEGREVLEX.key)
        basis_rows.append((pivot, (vec, comb)))
        basis_rows = [(pv, (bv, bc + [Fraction(0)])) for pv, (bv, bc) in basis_rows]
        p = p * x
        k += 1


def _zero_dim_test(I: Ideal) -> RadicalityReport:
    R = I.ring
    for i in range(R.n):
        mp = _minimal_polynomial(I, i)
        deriv = [j * c for j, c in enumerate(mp)][1:]
        g = _u_gcd(mp, deriv)
        if len(g) > 1:
            sqf, _ = _u_divmod(mp, g)
            x = R.var(i)
            w = R.zero()
            for j, c in enumerate(sqf):
                if c:
                    w = w + x ** j * c
            k = _witness_power(w, I)
            return RadicalityReport("not-radical", "zero-dimensional", w, k)
    return RadicalityReport("radical", "zero-dimensional")


def _jacobian_criterion(I: Ideal, codim: int, local: bool) -> bool:
    """For I unmixed of the given codimension: I radical iff dim(I + I_c) < dim I."""
    jac = [g.gradient() for g in I.gens]
    c = codim
    if c <= 0:
        return True
    mins = minors(jac, c) if c <= min(len(jac), I.ring.n) else []
    J = I + Ideal(mins, I.ring)
    return J.dimension(local) < I.dimension(local)


def _probes(I: Ideal) -> list[Polynomial]:
    R = I.ring
    xs = R.gens()
    cands = list(xs)
    for i in range(R.n):
        for j in range(i + 1, R.n):
            cands.append(xs[i] + xs[j])
            cands.append(xs[i] - xs[j])
    return [c for c in cands if not I.contains(c)]


def _leaf(I: Ideal) -> RadicalityReport | None:
    if I.is_monomial():
        return _monomial_test(I)
    d = I.dimension()
    if d == 0:
        return _zero_dim_test(I)
    # generated by codim-many elements: unmixed (Macaulay), Jacobian criterion applies
    c = I.ring.n - d
    if len(I.gens) == c or len(I.reduced_generators()) == c:
        gens = I.gens if len(I.gens) == c else I.reduced_generators()
        K = Ideal(gens, I.ring)
        if _jacobian_criterion(K, c, local=False):
            return RadicalityReport("radical", "jacobian-R0",
                                    notes=["complete intersection, hence unmixed"])
        return RadicalityReport("inconclusive", "jacobian-R0",
                                notes=["complete intersection fails the Jacobian criterion"])
    return None


def _split(I: Ideal, depth: int, accept=None) -> RadicalityReport:
    """Decide radicality by splitting I = (I : f^∞) ∩ (I : (I : f^∞))."""
    if I.is_unit():
        return RadicalityReport("radical", "split")
    leaf = _leaf(I)
    if leaf is not None and leaf.verdict != "inconclusive":
        if leaf.verdict == "radical" or accept is None or accept(leaf.witness):
            return leaf
    if depth <= 0:
        return RadicalityReport("inconclusive", "split", notes=["recursion depth exhausted"])
    pending_not_radical = leaf is not None and leaf.verdict == "inconclusive"
    for f in _probes(I):
        A, s = saturate(I, f)
        if s == 0:
            continue
        if s >= 2:
            Q1 = quotient(I, f)
            Q2 = quotient(Q1, f)
            for g in Q2.gens:
                if not Q1.contains(g):
                    w = g * f
                    if accept is None or accept(w):
                        return RadicalityReport("not-radical", "witness", w, 2,
                                                notes=[f"saturation index of {f} is {s}"])
                    break
            continue
        if A.is_unit():
            continue
        C = quotient(I, A)
        meet = intersect(A, C)
        if not equal(meet, I):
            for w in meet.gens:
                if not I.contains(w):
                    if accept is None or accept(w):
                        return RadicalityReport("not-radical", "witness", w, 2,
                                                notes=[f"(I:{f}^inf) ∩ (I:(I:{f}^inf)) ≠ I"])
                    break
            continue
        if equal(C, I):
            continue
        rA = _split(A, depth - 1)
        if rA.verdict == "not-radical":
            w = rA.witness * f
            if accept is None or accept(w):
                return RadicalityReport("not-radical", "witness", w, max(rA.power, 1),
                                        notes=[f"lifted from I:{f}^inf"])
            continue
        rC = _split(C, depth - 1)
        if rC.verdict == "not-radical":
            for a in A.gens:
                w = rC.witness * a
                if not I.contains(w) and (accept is None or accept(w)):
                    return RadicalityReport("not-radical", "witness", w, rC.power,
                                            notes=["lifted from I:(I:f^inf)"])
            continue
        if rA.verdict == "radical" and rC.verdict == "radical" and not pending_not_radical:
            return RadicalityReport("radical", "split", notes=[f"split along {f}"])
    return RadicalityReport("inconclusive", "split")


def is_radical(I: Ideal, hint: CMHint | None = None, at_origin: bool = False,
               depth: int = 3) -> RadicalityReport:
    """Radicality ladder: monomial, zero-dimensional, Jacobian R0 (with CM hint), splitting.

    With ``at_origin`` the question is about the localization at 0: a
    ``radical`` answer for the global ideal implies it, and witnesses are
    only accepted if they lie outside I at the origin.
    """
    if I.is_zero():
        return RadicalityReport("radical", "monomial", at_origin=at_origin)
    if I.is_unit() or (at_origin and I.is_unit_at_origin()):
        raise ValueError("radicality test needs a proper ideal")
    accept = (lambda w: not I.contains_at_origin(w)) if at_origin else None

    def finish(rep: RadicalityReport) -> RadicalityReport:
        rep.at_origin = at_origin
        if rep.verdict == "not-radical":
            if rep.power is None:
                rep.power = _witness_power(rep.witness, I)
            ok = rep.power is not None and verify_witness(rep.witness, I, rep.power, at_origin)
            if not ok:
                return RadicalityReport("inconclusive", rep.method, at_origin=at_origin,
                                        notes=rep.notes + ["witness failed re-verification"])
        return rep

    if I.is_monomial():
        return finish(_monomial_test(I))
    if I.dimension() == 0:
        rep = _zero_dim_test(I)
        if rep.verdict == "radical" or accept is None or accept(rep.witness):
            return finish(rep)
    if hint is not None:
        radical = _jacobian_criterion(I, hint.codim, local=True)
        if radical:
            return finish(RadicalityReport("radical", "jacobian-R0", at_origin=at_origin,
                                           notes=[f"CM of codim {hint.codim} at 0; dim(I + I_{hint.codim}) < dim I"]))
        rep = _split(I, depth, accept)
        if rep.verdict == "not-radical":
            rep.notes.insert(0, "Jacobian R0 criterion fails")
            return finish(rep)
        return finish(RadicalityReport("inconclusive", "jacobian-R0",
                                       notes=["Jacobian R0 criterion fails but no witness was found"]))
    return finish(_split(I, depth, accept))
