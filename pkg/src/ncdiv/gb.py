"""Groebner and standard bases for ideals and submodules of free modules.

Internally every element is a *vector*: a dict mapping terms ``(pos, e1..en)``
to nonzero Fractions.  Ideals are rank-1 modules (``pos == 0``).  Global
orders use Buchberger's algorithm (normal strategy with sugar, Gebauer-Moeller
pair elimination); local orders use the same pair loop with Mora's normal form
driven by the ecart.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .poly import DEGREVLEX, DS, ModuleOrder, MonomialOrder, Polynomial, RingContext

log = logging.getLogger(__name__)

ONE = Fraction(1)


# ---------------------------------------------------------------------------
# vector helpers
# ---------------------------------------------------------------------------

def _divides(a: tuple, b: tuple) -> bool:
    if a[0] != b[0]:
        return False
    for x, y in zip(a[1:], b[1:]):
        if x > y:
            return False
    return True


def _lcm(a: tuple, b: tuple) -> tuple:
    return (a[0],) + tuple(x if x > y else y for x, y in zip(a[1:], b[1:]))


def _mono_quo(b: tuple, a: tuple) -> tuple:
    """Exponent of the monomial b/a (positions ignored)."""
    return tuple(y - x for x, y in zip(a[1:], b[1:]))


def _coprime(a: tuple, b: tuple) -> bool:
    return all(not (x and y) for x, y in zip(a[1:], b[1:]))


def _axpy(target: dict, c: Fraction, m: tuple, src: dict) -> None:
    """target -= c * m * src  (in place); m is a plain exponent."""
    for t, v in src.items():
        t2 = (t[0],) + tuple(x + y for x, y in zip(t[1:], m))
        s = target.get(t2, 0) - c * v
        if s:
            target[t2] = s
        else:
            target.pop(t2, None)


def _scale(vec: dict, c: Fraction, m: tuple) -> dict:
    return {(t[0],) + tuple(x + y for x, y in zip(t[1:], m)): c * v for t, v in vec.items()}


def _deg(vec: dict) -> int:
    return max(sum(t[1:]) for t in vec)


def _tdeg(t: tuple) -> int:
    return sum(t[1:])


def poly_to_vec(p: Polynomial, pos: int = 0) -> dict:
    return {(pos,) + e: c for e, c in p.terms.items()}


def vec_to_poly(vec: dict, ring: RingContext, pos: int = 0) -> Polynomial:
    return Polynomial._raw(ring, {t[1:]: c for t, c in vec.items() if t[0] == pos})


def components_to_vec(comps: Sequence[Polynomial]) -> dict:
    out = {}
    for i, p in enumerate(comps):
        out.update(poly_to_vec(p, i))
    return out


def vec_to_components(vec: dict, ring: RingContext, rank: int) -> list[Polynomial]:
    parts: list[dict] = [dict() for _ in range(rank)]
    for t, c in vec.items():
        parts[t[0]][t[1:]] = c
    return [Polynomial._raw(ring, d) for d in parts]


# cofactor vectors: dict index -> polynomial dict (exponent -> coeff)

def _pd_axpy(target: dict, c: Fraction, m: tuple, src: dict) -> None:
    """target -= c*m*src for plain polynomial dicts."""
    for e, v in src.items():
        e2 = tuple(x + y for x, y in zip(e, m))
        s = target.get(e2, 0) - c * v
        if s:
            target[e2] = s
        else:
            target.pop(e2, None)


def _cof_axpy(target: dict, c: Fraction, m: tuple, src: dict) -> None:
    for k, pd in src.items():
        cur = target.setdefault(k, {})
        _pd_axpy(cur, c, m, pd)
        if not cur:
            del target[k]


# ---------------------------------------------------------------------------
# basis elements and reduction
# ---------------------------------------------------------------------------

class _Elem:
    __slots__ = ("vec", "lt", "lc", "sugar", "rep", "ecart")

    def __init__(self, vec: dict, key, sugar: int | None = None, rep: dict | None = None):
        self.vec = vec
        self.lt = max(vec, key=key)
        self.lc = vec[self.lt]
        d = _deg(vec)
        self.sugar = d if sugar is None else sugar
        self.rep = rep
        self.ecart = d - _tdeg(self.lt)


def _reduce(vec: dict, basis: Sequence[_Elem], key, full: bool = True, track: bool = False):
    """Global reduction of ``vec`` by ``basis``.

    Returns ``(remainder, quotients)`` where quotients maps basis index to a
    polynomial dict with ``vec = sum q_k basis_k + remainder``.
    """
    cur = dict(vec)
    rem: dict = {}
    quot: dict = {}
    while cur:
        t = max(cur, key=key)
        for k, g in enumerate(basis):
            if _divides(g.lt, t):
                c = cur[t] / g.lc
                m = _mono_quo(t, g.lt)
                _axpy(cur, c, m, g.vec)
                if track:
                    q = quot.setdefault(k, {})
                    q[m] = q.get(m, 0) + c
                    if not q[m]:
                        del q[m]
                break
        else:
            if not full:
                rem.update(cur)
                break
            rem[t] = cur.pop(t)
    return rem, quot


def _reduce_rep(vec: dict, rep: dict | None, basis: Sequence[_Elem], key, full: bool):
    """Reduction that also carries a representation over the input generators."""
    cur = dict(vec)
    rep = {k: dict(v) for k, v in rep.items()} if rep is not None else None
    rem: dict = {}
    while cur:
        t = max(cur, key=key)
        for g in basis:
            if _divides(g.lt, t):
                c = cur[t] / g.lc
                m = _mono_quo(t, g.lt)
                _axpy(cur, c, m, g.vec)
                if rep is not None:
                    _cof_axpy(rep, c, m, g.rep)
                break
        else:
            if not full:
                rem.update(cur)
                break
            rem[t] = cur.pop(t)
    return rem, rep


def _mora_nf(vec: dict, basis: Sequence[_Elem], key) -> dict:
    """Mora's weak normal form: returns h with u*vec - h in <basis>, u(0) != 0."""
    h = dict(vec)
    T = list(basis)
    while h:
        t = max(h, key=key)
        best = None
        for g in T:
            if _divides(g.lt, t) and (best is None or g.ecart < best.ecart):
                best = g
        if best is None:
            break
        eh = _deg(h) - _tdeg(t)
        if best.ecart > eh:
            T.append(_Elem(dict(h), key))
        c = h[t] / best.lc
        _axpy(h, c, _mono_quo(t, best.lt), best.vec)
    return h


# ---------------------------------------------------------------------------
# Buchberger / Mora pair loop
# ---------------------------------------------------------------------------

@dataclass
class _Pair:
    i: int
    j: int
    lcm: tuple
    sugar: int


def _spoly(f: _Elem, g: _Elem, lcm: tuple):
    mf = _mono_quo(lcm, f.lt)
    mg = _mono_quo(lcm, g.lt)
    s = _scale(f.vec, ONE / f.lc, mf)
    _axpy(s, ONE / g.lc, mg, g.vec)
    return s, mf, mg


def _update(G: list[int], B: list[_Pair], h: int, elems: list[_Elem], product_ok: bool):
    hl = elems[h].lt
    C = [g for g in G if elems[g].lt[0] == hl[0]]
    lcms = {g: _lcm(hl, elems[g].lt) for g in C}
    D: list[int] = []
    for idx, g1 in enumerate(C):
        disjoint = product_ok and _coprime(hl, elems[g1].lt)
        l1 = lcms[g1]
        if disjoint or not (
            any(_divides(lcms[g2], l1) for g2 in C[idx + 1:])
            or any(_divides(lcms[g2], l1) for g2 in D)
        ):
            D.append(g1)
    E = [g for g in D if not (product_ok and _coprime(hl, elems[g].lt))]
    Bn = []
    for p in B:
        if (
            not _divides(hl, p.lcm)
            or _lcm(elems[p.i].lt, hl) == p.lcm
            or _lcm(elems[p.j].lt, hl) == p.lcm
        ):
            Bn.append(p)
    he = elems[h]
    for g in E:
        ge = elems[g]
        l = lcms[g]
        sug = max(he.sugar + _tdeg(l) - _tdeg(he.lt), ge.sugar + _tdeg(l) - _tdeg(ge.lt))
        Bn.append(_Pair(g, h, l, sug))
    Gn = [g for g in G if not _divides(hl, elems[g].lt)] + [h]
    return Gn, Bn


def _basis_vectors(vecs: list[dict], key, local: bool, track: bool, rank1: bool):
    """Run the pair loop; returns list of _Elem (with reps if tracking)."""
    elems: list[_Elem] = []
    G: list[int] = []
    B: list[_Pair] = []
    order_idx = sorted(range(len(vecs)), key=lambda i: (_deg(vecs[i]) if vecs[i] else 0))
    for i in order_idx:
        v = vecs[i]
        if not v:
            continue
        rep = {i: {(0,) * (len(next(iter(v))) - 1): ONE}} if track else None
        e = _Elem(dict(v), key, rep=rep)
        elems.append(e)
        G, B = _update(G, B, len(elems) - 1, elems, rank1)
    while B:
        best = min(range(len(B)), key=lambda k: (B[k].sugar, _tdeg(B[k].lcm), key(B[k].lcm)))
        p = B.pop(best)
        fi, fj = elems[p.i], elems[p.j]
        s, mi, mj = _spoly(fi, fj, p.lcm)
        if not s:
            continue
        basis = [elems[g] for g in G]
        if local:
            h = _mora_nf(s, basis, key)
            rep = None
        else:
            rep = None
            if track:
                rep = {}
                _cof_axpy(rep, -ONE / fi.lc, mi, fi.rep)
                _cof_axpy(rep, ONE / fj.lc, mj, fj.rep)
            h, rep = _reduce_rep(s, rep, basis, key, full=False)
        if not h:
            continue
        e = _Elem(h, key, sugar=p.sugar, rep=rep)
        if not local:
            c = ONE / e.lc
            e.vec = {t: v * c for t, v in e.vec.items()}
            if track:
                e.rep = {k: {x: v * c for x, v in pd.items()} for k, pd in e.rep.items()}
            e.lc = ONE
        elems.append(e)
        G, B = _update(G, B, len(elems) - 1, elems, rank1)
    return [elems[g] for g in G]


def _interreduce(basis: list[_Elem], key, track: bool) -> list[_Elem]:
    """Minimal, tail-reduced, monic basis (global orders only)."""
    basis = sorted(basis, key=lambda e: key(e.lt))
    minimal = []
    for e in basis:
        if not any(_divides(f.lt, e.lt) for f in minimal):
            minimal.append(e)
    out = []
    for i, e in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        # leading term is irreducible by the others, so full reduction keeps it
        vec, rep = _reduce_rep(e.vec, e.rep if track else None, others, key, full=True)
        ne = _Elem(vec, key, sugar=e.sugar, rep=rep)
        c = ONE / ne.lc
        ne.vec = {t: v * c for t, v in ne.vec.items()}
        if track:
            ne.rep = {k: {x: v * c for x, v in pd.items()} for k, pd in ne.rep.items()}
        ne.lc = ONE
        out.append(ne)
    return sorted(out, key=lambda e: key(e.lt), reverse=True)


# ---------------------------------------------------------------------------
# public API
# ---------------------------------------------------------------------------

@dataclass
class GroebnerBasis:
    """Groebner basis (global order) or standard basis (local order) of an ideal."""

    ring: RingContext
    order: MonomialOrder
    elements: list
    reduced: bool
    _elems: list = field(default_factory=list, repr=False)

    def leading_monomials(self) -> list[tuple]:
        return [e.lt[1:] for e in self._elems]

    def is_unit(self) -> bool:
        return any(not any(e.lt[1:]) for e in self._elems)

    def normal_form(self, p: Polynomial) -> Polynomial:
        return normal_form(p, self, self.order)

    def contains(self, p: Polynomial) -> bool:
        return self.normal_form(p).is_zero()

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


def _elems_from_polys(gens, key):
    return [_Elem(poly_to_vec(g), key) for g in gens if not g.is_zero()]


def buchberger(gens: Sequence[Polynomial], ord: MonomialOrder = DEGREVLEX) -> GroebnerBasis:
    """Reduced Groebner basis (global order) or standard basis (local order)."""
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator (use 0 for the zero ideal)")
    R = gens[0].ring
    mo = ModuleOrder(ord, "top")
    key = mo.key
    vecs = [poly_to_vec(g) for g in gens]
    elems = _basis_vectors(vecs, key, ord.is_local, False, True)
    if ord.is_local:
        reduced = False
        # drop elements whose leading term is divisible by another's
        elems = sorted(elems, key=lambda e: (e.ecart, key(e.lt)))
        keep = []
        for e in elems:
            if not any(_divides(f.lt, e.lt) for f in keep):
                keep.append(e)
        elems = sorted(keep, key=lambda e: key(e.lt), reverse=True)
    else:
        reduced = True
        elems = _interreduce(elems, key, False)
    polys = [vec_to_poly(e.vec, R) for e in elems]
    return GroebnerBasis(R, ord, polys, reduced, elems)


def normal_form(p: Polynomial, G, ord: MonomialOrder = DEGREVLEX) -> Polynomial:
    """Remainder of p modulo G.

    For a global order this is full reduction (the canonical representative
    when G is a reduced Groebner basis).  For a local order it is Mora's weak
    normal form: zero iff p lies in the ideal of G localized at the origin,
    provided G is a standard basis.
    """
    key = ModuleOrder(ord, "top").key
    if isinstance(G, GroebnerBasis) and G.order == ord:
        elems = G._elems
    else:
        elems = _elems_from_polys(list(G), key)
    v = poly_to_vec(p)
    if ord.is_local:
        h = _mora_nf(v, elems, key)
    else:
        h, _ = _reduce(v, elems, key, full=True)
    return vec_to_poly(h, p.ring)


def standard_basis(gens: Sequence[Polynomial]) -> GroebnerBasis:
    return buchberger(gens, DS)


def lift(f: Polynomial, gens: Sequence[Polynomial]) -> list[Polynomial] | None:
    """Cofactors c with f = sum c_i gens_i, or None if f is not in the ideal."""
    gens = list(gens)
    R = f.ring
    key = ModuleOrder(DEGREVLEX, "top").key
    vecs = [poly_to_vec(g) for g in gens]
    elems = _basis_vectors(vecs, key, False, True, True)
    rem, rep = _reduce_rep(poly_to_vec(f), {}, elems, key, full=True)
    if rem:
        return None
    # f - sum q_k g_k = 0 and g_k = sum rep ... ; rep accumulated minus signs
    out = [R.zero() for _ in gens]
    for k, pd in rep.items():
        out[k] = -Polynomial._raw(R, pd)
    return out


@dataclass(frozen=True)
class ModuleElement:
    """Element of a free module R^r given by its components."""

    components: tuple

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))

    @property
    def rank(self) -> int:
        return len(self.components)

    @property
    def ring(self) -> RingContext:
        return self.components[0].ring

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def dot(self, gens: Sequence) -> Polynomial | ModuleElement:
        if isinstance(gens[0], ModuleElement):
            r = gens[0].rank
            acc = [self.ring.zero()] * r
            for c, g in zip(self.components, gens):
                acc = [a + c * b for a, b in zip(acc, g.components)]
            return ModuleElement(acc)
        total = self.ring.zero()
        for c, g in zip(self.components, gens):
            total = total + c * g
        return total

    def at_origin(self) -> list[Fraction]:
        return [c.constant_term() for c in self.components]

    def __getitem__(self, i):
        return self.components[i]

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return len(self.components)

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.components) + ")"


def _as_vectors(gens) -> tuple[list[dict], RingContext, int]:
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    if isinstance(gens[0], ModuleElement):
        return [components_to_vec(g.components) for g in gens], gens[0].ring, gens[0].rank
    if isinstance(gens[0], (list, tuple)):
        return [components_to_vec(g) for g in gens], gens[0][0].ring, len(gens[0])
    return [poly_to_vec(g) for g in gens], gens[0].ring, 1


def module_groebner(gens, ord: MonomialOrder = DEGREVLEX, mode: str = "top") -> list[ModuleElement]:
    """Reduced Groebner basis of a submodule of R^r (global order)."""
    vecs, R, r = _as_vectors(gens)
    key = ModuleOrder(ord, mode).key
    elems = _basis_vectors(vecs, key, False, False, r == 1)
    elems = _interreduce(elems, key, False)
    return [ModuleElement(vec_to_components(e.vec, R, r)) for e in elems]


def syzygies(gens, ord: MonomialOrder = DEGREVLEX, reduce: bool = True) -> list[ModuleElement]:
    """Generators of the first syzygy module of ``gens`` (Schreyer's construction).

    ``gens`` may be polynomials or module elements.  Every returned s
    satisfies ``sum s_i gens_i == 0``.  With ``reduce`` the generating set is
    replaced by the reduced Groebner basis of the syzygy module.
    """
    vecs, R, r = _as_vectors(gens)
    s = len(vecs)
    zero_exp = (0,) * R.n
    key = ModuleOrder(ord, "top").key
    nonzero = [i for i, v in enumerate(vecs) if v]
    out_vecs: list[dict] = []
    for i in range(s):
        if not vecs[i]:
            out_vecs.append({(i,) + zero_exp: ONE})
    if nonzero:
        elems = _basis_vectors(vecs, key, False, True, r == 1)
        elems = _interreduce(elems, key, True)
        t = len(elems)
        # Schreyer: S-pairs of the Groebner basis reduce to zero with quotients
        syz_G: list[dict] = []
        for i, j in combinations(range(t), 2):
            gi, gj = elems[i], elems[j]
            if gi.lt[0] != gj.lt[0]:
                continue
            l = _lcm(gi.lt, gj.lt)
            spol, mi, mj = _spoly(gi, gj, l)
            rem, quot = _reduce(spol, elems, key, full=True, track=True)
            assert not rem, "S-polynomial of a Groebner basis must reduce to zero"
            sv: dict = {}
            # spol = mi/lc_i g_i - mj/lc_j g_j ; spol - sum q_k g_k = 0
            sv[i] = {mi: ONE / gi.lc}
            pd = sv.setdefault(j, {})
            pd[mj] = pd.get(mj, 0) - ONE / gj.lc
            for k, q in quot.items():
                cur = sv.setdefault(k, {})
                _pd_axpy(cur, ONE, zero_exp, q)
            syz_G.append({k: v for k, v in sv.items() if v})

        def to_F(comb: dict) -> dict:
            acc: dict = {}
            for k, pd in comb.items():
                for e, c in pd.items():
                    _cof_axpy(acc, -c, e, elems[k].rep)
            return acc

        for comb in syz_G:
            acc = to_F(comb)
            v = {(k,) + e: c for k, pd in acc.items() for e, c in pd.items()}
            if v:
                out_vecs.append(v)
        # f_l - sum_k B_lk g_k  with  f_l = sum_k B_lk g_k
        for l in nonzero:
            rem, quot = _reduce(vecs[l], elems, key, full=True, track=True)
            assert not rem
            acc = to_F(quot)
            tot = {l: {zero_exp: ONE}}
            _cof_axpy(tot, ONE, zero_exp, acc)
            v = {(k,) + e: c for k, pd in tot.items() for e, c in pd.items() if c}
            if v:
                out_vecs.append(v)
    if not out_vecs:
        return []
    if reduce:
        skey = ModuleOrder(ord, "top").key
        elems2 = _basis_vectors(out_vecs, skey, False, False, s == 1)
        elems2 = _interreduce(elems2, skey, False)
        out_vecs = [e.vec for e in elems2]
    return [ModuleElement(vec_to_components(v, R, s)) for v in out_vecs]


# ---------------------------------------------------------------------------
# dimension
# ---------------------------------------------------------------------------

def dimension_from_leading(lead: Sequence[tuple], n: int) -> int:
    """Krull dimension of K[x]/(lead) via maximal independent variable sets."""
    supports = [frozenset(i for i, a in enumerate(e) if a) for e in lead]
    if any(not s for s in supports):
        return -1
    for size in range(n, -1, -1):
        for S in combinations(range(n), size):
            Sset = frozenset(S)
            if not any(sup <= Sset for sup in supports):
                return size
    return 0


def krull_dimension(gens: Sequence[Polynomial], local: bool = False) -> int:
    """dim R/I (global) or dim of the localization at the origin (local)."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("dimension of the zero ideal: pass the ring instead")
    G = buchberger(gens, DS if local else DEGREVLEX)
    return dimension_from_leading(G.leading_monomials(), gens[0].ring.n)


# ---------------------------------------------------------------------------
# minimalization at the origin and free resolutions
# ---------------------------------------------------------------------------

def _rank_and_pivots(rows: list[list[Fraction]], ncols: int) -> list[int]:
    """Pivot columns of the row-reduced form of ``rows``."""
    M = [list(r) for r in rows if any(r)]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(M)) if M[i][c]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = ONE / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return pivots


def minimize_at_origin(gens, syz: list[ModuleElement] | None = None) -> tuple[list[int], list[ModuleElement]]:
    """Indices of a minimal generating subset at the origin (Nakayama).

    A generator is redundant locally iff some syzygy has a unit coefficient
    there, so mu = len(gens) - rank(syzygies evaluated at 0).  Returns the kept
    indices and the syzygies used.
    """
    gens = list(gens)
    if syz is None:
        syz = syzygies(gens)
    rows = [s.at_origin() for s in syz]
    # process later generators first so earlier ones are preferred as keepers
    k = len(gens)
    rev_rows = [list(reversed(r)) for r in rows]
    piv = _rank_and_pivots(rev_rows, k)
    drop = {k - 1 - p for p in piv}
    return [i for i in range(k) if i not in drop], syz


def minimal_generator_count(gens) -> int:
    kept, _ = minimize_at_origin(gens)
    return len(kept)


@dataclass
class FreeResolution:
    """Minimal free resolution of R/I at the origin.

    ``maps[i]`` is the list of columns (ModuleElements) of the i-th
    differential, F_{i+1} -> F_i, with F_0 = R.  ``ranks`` = [1, b1, b2, ...].
    """

    ring: RingContext
    maps: list
    ranks: list
    graded: bool

    @property
    def length(self) -> int:
        return len(self.ranks) - 1

    def projective_dimension(self) -> int:
        return self.length

    def depth(self) -> int:
        return self.ring.n - self.length

    def compose_to_zero(self) -> bool:
        for i in range(1, len(self.maps)):
            prev = self.maps[i - 1]
            for col in self.maps[i]:
                img = col.dot(prev)
                if isinstance(img, ModuleElement):
                    if not img.is_zero():
                        return False
                elif not img.is_zero():
                    return False
        return True

    def has_unit_entries(self) -> bool:
        for cols in self.maps:
            for col in cols:
                if any(c.constant_term() != 0 for c in col.components):
                    return True
        return False


def is_quasi_homogeneous(gens: Sequence[Polynomial]):
    """Positive integer weights making every generator weighted-homogeneous, or None."""
    from .weights import find_positive_weights

    return find_positive_weights(gens)


def free_resolution(gens: Sequence[Polynomial]) -> FreeResolution:
    """Minimal free resolution of R/I localized at the origin.

    For (quasi-)homogeneous generators this is the minimal graded resolution
    (``graded=True``); otherwise it is the minimal resolution over the local
    ring and only its length is meaningful globally.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("zero ideal")
    R = gens[0].ring
    graded = is_quasi_homogeneous(gens) is not None
    if any(g.constant_term() != 0 for g in gens):
        return FreeResolution(R, [], [1], graded)  # unit ideal locally: R/I = 0
    kept, syz = minimize_at_origin(gens)
    cur = [gens[i] for i in kept]
    maps = [[ModuleElement([g]) for g in cur]]
    ranks = [1, len(cur)]
    while True:
        syz = syzygies(cur)
        syz = [s for s in syz if not s.is_zero()]
        if not syz:
            break
        kept, _ = minimize_at_origin(syz)
        nxt = [syz[i] for i in kept]
        maps.append(nxt)
        ranks.append(len(nxt))
        cur = nxt
    return FreeResolution(R, maps, ranks, graded)
