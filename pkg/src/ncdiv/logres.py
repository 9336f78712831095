"""Logarithmic 1-forms, their residues, closedness and commuting dual fields.

A form is stored as numerators (a_1..a_n) over one denominator.  Any
logarithmic form can be rewritten with denominator u*h, u(0) != 0; most
tests below work in that normalization, where

    omega logarithmic  <=>  h | a_i d_j h - a_j d_i h  (at the origin)
    residue            =    a_j / (u d_j h)  on D, for admissible j.
"""
from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from typing import Sequence

from .divisor import DivisorGerm, FreenessReport, VectorField, is_free_at_origin
from .errors import InputError, InternalError, NoAdmissibleIndexError, NotFreeError
from .ideal import Ideal, poly_gcd
from .poly import Polynomial, adjugate, determinant, exact_quotient

SEED_ENV = "NCDIV_SEED"
DEFAULT_SEED = 1729


def seed_from_env() -> int:
    """Seed for generic directions: $NCDIV_SEED, else 1729."""
    raw = os.environ.get(SEED_ENV)
    return int(raw) if raw not in (None, "") else DEFAULT_SEED


@dataclass(frozen=True)
class LogOneForm:
    numerators: tuple
    denominator: Polynomial

    def __post_init__(self):
        object.__setattr__(self, "numerators", tuple(self.numerators))
        if self.denominator.is_zero():
            raise InputError("zero denominator")

    @property
    def ring(self):
        return self.denominator.ring

    @classmethod
    def dlog(cls, h: Polynomial) -> LogOneForm:
        return cls(h.gradient(), h)

    def is_holomorphic(self) -> bool:
        """All numerators divisible by the denominator at the origin."""
        den = Ideal([self.denominator])
        return all(den.contains_at_origin(a) for a in self.numerators)

    def over_h(self, h: Polynomial) -> tuple[list[Polynomial], Polynomial]:
        """(a', u) with omega = a' / (u h) and u(0) != 0; raises if there are poles off D."""
        den = self.denominator
        q = exact_quotient(h, den)
        if q is not None:
            return [a * q for a in self.numerators], h.ring.one()
        u = exact_quotient(den, h)
        if u is not None and u.constant_term() != 0:
            return list(self.numerators), u
        g = poly_gcd(den, h)
        r = exact_quotient(den, g)
        if r.constant_term() == 0:
            raise InputError(f"denominator {den} has poles off the divisor at the origin")
        hg = exact_quotient(h, g)
        return [a * hg for a in self.numerators], r

    def __str__(self):
        return "[" + ", ".join(str(a) for a in self.numerators) + f"] / ({self.denominator})"


def is_logarithmic(omega: LogOneForm, h: Polynomial) -> bool:
    try:
        a, _ = omega.over_h(h)
    except InputError:
        return False
    grad = h.gradient()
    H = Ideal([h])
    n = len(a)
    for i in range(n):
        for j in range(i + 1, n):
            if not H.contains_at_origin(a[i] * grad[j] - a[j] * grad[i]):
                return False
    return True


def is_closed(omega: LogOneForm) -> bool:
    """d omega = 0, by the cleared identity den*(d_i a_j - d_j a_i) = a_j d_i den - a_i d_j den."""
    a, den = omega.numerators, omega.denominator
    n = len(a)
    for i in range(n):
        for j in range(i + 1, n):
            lhs = den * (a[j].partial(i) - a[i].partial(j))
            rhs = a[j] * den.partial(i) - a[i] * den.partial(j)
            if lhs != rhs:
                return False
    return True


# ---------------------------------------------------------------------------
# dual basis
# ---------------------------------------------------------------------------

def dual_basis(D: DivisorGerm, freeness: FreenessReport | None = None) -> list[LogOneForm]:
    """Forms omega_i with omega_i(delta_j) = [i == j] for the Saito basis delta."""
    if freeness is None:
        freeness = is_free_at_origin(D)
    if not freeness.free:
        raise NotFreeError("dual forms need a free divisor")
    M = [list(v.coeffs) for v in freeness.basis]
    det = freeness.determinant
    adjT = [list(row) for row in zip(*adjugate(M))]
    n = D.n
    for i in range(n):
        for j in range(n):
            s = sum((adjT[i][k] * M[j][k] for k in range(n)), D.ring.zero())
            if s != (det if i == j else D.ring.zero()):
                raise InternalError("adj(M)^T M^T != det(M) Id")
    return [LogOneForm(adjT[i], det) for i in range(n)]


def pair(omega: LogOneForm, delta: VectorField) -> tuple[Polynomial, Polynomial]:
    """omega(delta) as (numerator, denominator)."""
    num = sum((a * c for a, c in zip(omega.numerators, delta.coeffs)), omega.ring.zero())
    return num, omega.denominator


# ---------------------------------------------------------------------------
# residues
# ---------------------------------------------------------------------------

@dataclass
class ResidueClass:
    numerator: Polynomial
    denominator: Polynomial
    modulus: Polynomial
    direction: tuple = ()
    certificate: list = field(default_factory=list)

    def _ideal(self) -> Ideal:
        return Ideal([self.modulus])

    def equals(self, other) -> bool:
        """a/b == c/d on {modulus = 0}: ad - bc in (modulus) at the origin."""
        if isinstance(other, ResidueClass):
            c, d = other.numerator, other.denominator
        else:
            c, d = other
        return self._ideal().contains_at_origin(self.numerator * d - self.denominator * c)

    def is_zero(self) -> bool:
        return self._ideal().contains_at_origin(self.numerator)

    def simplified(self) -> ResidueClass:
        """Reduce modulo the modulus and cancel common factors until stable."""
        G = self._ideal().groebner()
        num, den = self.numerator, self.denominator
        for _ in range(8):
            num, den = G.normal_form(num), G.normal_form(den)
            if num.is_zero():
                return ResidueClass(num, den.ring.one(), self.modulus, self.direction, self.certificate)
            g = poly_gcd(num, den)
            if g.is_constant():
                break
            num, den = exact_quotient(num, g), exact_quotient(den, g)
        # numerator with leading coefficient 1 reads best: 1/(4*y) rather than 1/4/y
        c = num.leading_term()[0]
        if den.leading_term()[0] / c < 0:
            c = -c
        num, den = num / c, den / c
        if den.is_constant():
            num, den = num / den.constant_term(), den.ring.one()
        return ResidueClass(num, den, self.modulus, self.direction, self.certificate)

    def __str__(self):
        if self.denominator.is_constant() and self.denominator.constant_term() == 1:
            return str(self.numerator)
        num, den = str(self.numerator), str(self.denominator)
        if len(self.numerator.terms) > 1:
            num = f"({num})"
        if len(self.denominator.terms) > 1 or "*" in den:
            den = f"({den})"
        return f"{num}/{den}"


def _directions(n: int, seed: int, tries: int = 8):
    for j in range(n):
        yield tuple(1 if k == j else 0 for k in range(n))
    rng = random.Random(seed)
    for _ in range(tries):
        yield tuple(rng.randint(1, 9) * rng.choice((1, -1)) for _ in range(n))


def admissible(h: Polynomial, modulus: Polynomial, v: Sequence[int]) -> bool:
    g = sum((c * d for c, d in zip(v, h.gradient()) if c), h.ring.zero())
    if g.is_zero():
        return False
    return Ideal([modulus, g]).dimension(local=True) <= h.ring.n - 2


def residue(omega: LogOneForm, D: DivisorGerm, modulus: Polynomial | None = None,
            generic: bool = False, seed: int | None = None,
            direction: Sequence[int] | None = None) -> ResidueClass:
    """Residue of omega on D (or on the component ``modulus``).

    Coordinate directions are tried first; with ``generic`` a seeded list of
    integer directions v follows, which amounts to a generic linear change of
    coordinates.  An explicit ``direction`` replaces that search.  The class
    is (v.a) / (u v.dh).
    """
    h = D.h
    modulus = h if modulus is None else modulus
    if exact_quotient(h, modulus) is None:
        raise InputError(f"{modulus} does not divide h")
    a, u = omega.over_h(h)
    n = D.n
    grad = h.gradient()
    H = Ideal([h])
    cert = []
    for i in range(n):
        for j in range(i + 1, n):
            c = a[i] * grad[j] - a[j] * grad[i]
            if not H.contains_at_origin(c):
                raise InputError(f"form is not logarithmic: h does not divide {c} at 0")
            cert.append(str(c))
    if direction is not None:
        dirs = [tuple(direction)]
    else:
        dirs = _directions(n, seed_from_env() if seed is None else seed, 8 if generic else 0)
    for v in dirs:
        if admissible(h, modulus, v):
            num = sum((c * x for c, x in zip(v, a) if c), h.ring.zero())
            den = u * sum((c * x for c, x in zip(v, grad) if c), h.ring.zero())
            return ResidueClass(num, den, modulus, tuple(v), cert)
    raise NoAdmissibleIndexError(
        "no coordinate j makes d_j h a nonzerodivisor on the divisor; "
        "retry with a generic linear coordinate change (generic=True)")


def residue_is_holomorphic_on_smooth_component(omega: LogOneForm, D: DivisorGerm,
                                               component: Polynomial) -> bool:
    if not any(g.constant_term() != 0 for g in component.gradient()):
        raise InputError(f"component {component} is not smooth at the origin")
    rc = residue(omega, D, component, generic=True)
    return Ideal([component, rc.denominator]).contains_at_origin(rc.numerator)


# ---------------------------------------------------------------------------
# vector fields: brackets and duals of forms
# ---------------------------------------------------------------------------

def lie_bracket(delta: VectorField, eps: VectorField) -> VectorField:
    n = len(delta.coeffs)
    out = []
    for k in range(n):
        c = delta.ring.zero()
        for i in range(n):
            c = c + delta.coeffs[i] * eps.coeffs[k].partial(i) - eps.coeffs[i] * delta.coeffs[k].partial(i)
        out.append(c)
    return VectorField(out)


commute = lie_bracket


@dataclass(frozen=True)
class RationalVectorField:
    """(sum P_i d_i) / p."""

    numerators: tuple
    denominator: Polynomial

    def as_polynomial(self) -> VectorField | None:
        qs = [exact_quotient(P, self.denominator) for P in self.numerators]
        return None if any(q is None for q in qs) else VectorField(qs)


def _bracket_vanishes(d: RationalVectorField, e: RationalVectorField) -> bool:
    P, p = d.numerators, d.denominator
    Q, q = e.numerators, e.denominator
    n = len(P)
    for k in range(n):
        c = p.ring.zero()
        for i in range(n):
            c = c + p * P[i] * (q * Q[k].partial(i) - Q[k] * q.partial(i))
            c = c - q * Q[i] * (p * P[k].partial(i) - P[k] * p.partial(i))
        if not c.is_zero():
            return False
    return True


def dual_vector_fields(forms: Sequence[LogOneForm]) -> list[RationalVectorField]:
    """Fields xi_j with omega_i(xi_j) = [i == j]."""
    A = [list(f.numerators) for f in forms]
    d = determinant(A)
    if d.is_zero():
        raise InputError("forms are linearly dependent")
    adj = adjugate(A)  # A adj = d Id
    n = len(forms)
    out = []
    for j in range(n):
        nums = [adj[k][j] * forms[j].denominator for k in range(n)]
        out.append(RationalVectorField(tuple(nums), d))
    return out


def basis_commutes(fields) -> bool:
    fs = [f if isinstance(f, RationalVectorField) else RationalVectorField(f.coeffs, f.ring.one())
          for f in fields]
    return all(_bracket_vanishes(fs[i], fs[j]) for i in range(len(fs)) for j in range(i + 1, len(fs)))


@dataclass
class ClosedBasisCertificate:
    logarithmic: list
    closed: list
    wedge: tuple | None  # (numerator, denominator) of h * wedge
    wedge_is_unit: bool
    duals_commute: bool

    @property
    def issued(self) -> bool:
        return all(self.logarithmic) and all(self.closed) and self.wedge_is_unit


def verify_closed_basis_certificate(D: DivisorGerm, forms: Sequence[LogOneForm]) -> ClosedBasisCertificate:
    """Closed logarithmic forms whose wedge is a unit times dx/h certify normal crossing."""
    if len(forms) != D.n:
        raise InputError(f"need {D.n} forms, got {len(forms)}")
    logs = [is_logarithmic(f, D.h) for f in forms]
    if not all(logs):
        raise InputError("non-logarithmic form in the candidate basis")
    closed = [is_closed(f) for f in forms]
    num = determinant([list(f.numerators) for f in forms]) * D.h
    den = D.ring.one()
    for f in forms:
        den = den * f.denominator
    unit = False
    if not num.is_zero():
        g = poly_gcd(num, den)
        num, den = exact_quotient(num, g), exact_quotient(den, g)
        unit = num.constant_term() != 0 and den.constant_term() != 0
    commutes = basis_commutes(dual_vector_fields(forms)) if not num.is_zero() else False
    if not num.is_zero() and all(closed) != commutes:
        raise InternalError("closedness and commuting duals disagree")
    return ClosedBasisCertificate(logs, closed, (num, den), unit, commutes)
