"""Randomised invariants (hypothesis profile from conftest: 200 examples, no deadline)."""
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from hypothesis import assume, event, given
from hypothesis import strategies as st

from ncdiv import gb
from ncdiv.divisor import (
    NORMAL_CROSSING,
    DivisorGerm,
    decide_normal_crossing,
    is_free_at_origin,
    is_radical_jacobian,
    is_reduced_equation,
)
from ncdiv.ideal import Ideal, equal, intersect, is_radical, member, radical_member, saturate
from ncdiv.logres import LogOneForm, admissible, dual_basis, residue
from ncdiv.parse import parse_polynomial
from ncdiv.poly import DEGREVLEX, DS, LEX, Polynomial, exact_quotient, order

from strategies import RINGS, coeffs, exponents, monomial_ideals, polys

ORDERS = [LEX, DEGREVLEX, DS, order("elim(1)")]


# -- polynomial arithmetic -----------------------------------------------------

@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert a + b == b + a and a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a - a).is_zero()


@given(st.sampled_from(ORDERS), exponents(3, 4), exponents(3, 4), exponents(3, 4))
def test_orders_are_total_and_multiplicative(o, a, b, c):
    ka, kb = o.key(a), o.key(b)
    assert (ka == kb) == (a == b)
    shift = lambda e: tuple(x + y for x, y in zip(e, c))
    if ka < kb:
        assert o.key(shift(a)) < o.key(shift(b))


@given(polys(max_deg=4), st.integers(0, 2), st.integers(0, 2))
def test_mixed_partials_commute(p, i, j):
    assert p.partial(i).partial(j) == p.partial(j).partial(i)


@given(polys())
def test_print_parse_round_trip(p):
    assert parse_polynomial(str(p), p.ring) == p


# -- Groebner bases and syzygies -------------------------------------------------

small_gens = st.lists(polys(n=2, max_deg=2, max_terms=3, nonzero=True), min_size=1, max_size=3)


@given(small_gens, st.randoms(use_true_random=False), st.sampled_from([LEX, DEGREVLEX]))
def test_reduced_gb_is_shuffle_invariant(gens, rnd, o):
    shuffled = list(gens)
    rnd.shuffle(shuffled)
    scaled = [Fraction(rnd.choice([1, -2, 3])) * g for g in shuffled]
    a = gb.buchberger(gens, o).elements
    b = gb.buchberger(scaled, o).elements
    assert set(a) == set(b)


@given(small_gens)
def test_syzygies_are_exact(gens):
    for s in gb.syzygies(gens):
        assert s.dot(gens).is_zero()


# -- monomial ideals against brute force -----------------------------------------

def _support(m: Polynomial) -> frozenset:
    (e,) = m.terms
    return frozenset(i for i, k in enumerate(e) if k)


def _brute_dimension(gens, n):
    # largest coordinate subspace on which no generator vanishes identically
    supports = [_support(g) for g in gens]
    return max(len(U) for r in range(n + 1) for U in map(frozenset, combinations(range(n), r))
               if not any(s <= U for s in supports))


@given(st.integers(1, 4).flatmap(lambda n: monomial_ideals(n=n, max_deg=3)))
def test_monomial_dimension(gens):
    n = gens[0].ring.n
    assert Ideal(gens).dimension() == _brute_dimension(gens, n)


def _lcm(a: Polynomial, b: Polynomial) -> Polynomial:
    (ea,), (eb,) = a.terms, b.terms
    return Polynomial(a.ring, {tuple(map(max, ea, eb)): Fraction(1)})


@given(monomial_ideals(max_deg=3, max_gens=3), monomial_ideals(max_deg=3, max_gens=3))
def test_monomial_intersection_is_lcm(I, J):
    expected = Ideal([_lcm(a, b) for a in I for b in J])
    assert equal(intersect(Ideal(I), Ideal(J)), expected)


@given(monomial_ideals(max_deg=3), st.integers(0, 2))
def test_saturation_is_a_fixed_point(gens, i):
    f = RINGS[3].gens()[i]
    S, k = saturate(Ideal(gens), f)
    assert k >= 0
    S2, k2 = saturate(S, f)
    assert k2 == 0 and equal(S, S2)


@given(monomial_ideals(max_deg=3), exponents(3, 3).filter(any))
def test_radical_member_matches_powers(gens, e):
    m = Polynomial(RINGS[3], {e: Fraction(1)})
    # exponents in the generators are at most 3, so m^3 decides membership in the radical
    assert radical_member(m, Ideal(gens)) == member(m**3, Ideal(gens))


def _minimal(gens):
    exps = {next(iter(g.terms)) for g in gens}
    divides = lambda a, b: all(x <= y for x, y in zip(a, b))
    return [e for e in exps if not any(f != e and divides(f, e) for f in exps)]


@given(monomial_ideals(max_deg=3))
def test_is_radical_matches_squarefree_criterion(gens):
    squarefree = all(max(e) <= 1 for e in _minimal(gens))
    rep = is_radical(Ideal(gens))
    assert rep.verdict == ("radical" if squarefree else "not-radical")


# -- divisors ----------------------------------------------------------------------

@st.composite
def plane_germs(draw):
    p = draw(polys(n=2, max_deg=3, max_terms=4, nonzero=True))
    h = p - p.constant_term()
    assume(not h.is_zero())
    D = DivisorGerm(h)
    assume(is_reduced_equation(D))
    return D


@given(plane_germs())
def test_radical_jacobian_implies_h_in_jacobian(D):
    rep = is_radical_jacobian(D)
    event(rep.verdict)
    if rep.verdict == "radical":
        assert Ideal(D.h.gradient()).contains_at_origin(D.h)


@lru_cache(maxsize=None)
def _free_germ(name):
    R = RINGS[3] if name != "node" else RINGS[2]
    h = {
        "nc": "x1*x2*x3",
        "four_lines": "(x1+x2)*x2*(x1+2*x2)*(x1+x2+x2*x3)",
        "hessian": "x2^5+x3^3+x1*x2^3*x3",
        "node": "x1^2-x2^2",
    }[name]
    D = DivisorGerm(R.parse(h))
    return D, tuple(dual_basis(D, is_free_at_origin(D)))


@st.composite
def residue_cases(draw):
    D, basis = _free_germ(draw(st.sampled_from(["nc", "four_lines", "hessian", "node"])))
    n = D.n
    cs = [draw(polys(n=n, max_deg=2, max_terms=2)) for _ in basis]
    assume(any(not c.is_zero() for c in cs))
    # sum of c_i * a_i / (u_i h) over the common denominator (u_1 ... u_n) h
    parts = [w.over_h(D.h) for w in basis]
    units = D.ring.one()
    for _, u in parts:
        units = units * u
    num = [D.ring.zero()] * n
    for c, (a, u) in zip(cs, parts):
        other = exact_quotient(units, u)
        num = [x + c * other * y for x, y in zip(num, a)]
    vec = st.lists(st.integers(-3, 3), min_size=n, max_size=n).filter(any).map(tuple)
    return D, LogOneForm(num, units * D.h), draw(vec), draw(vec)


@given(residue_cases())
def test_residue_is_independent_of_direction(case):
    D, w, v1, v2 = case
    assume(admissible(D.h, D.h, v1) and admissible(D.h, D.h, v2))
    event(str(D.h))
    assert residue(w, D, direction=v1).equals(residue(w, D, direction=v2))


@given(st.integers(2, 5).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n))),
       st.lists(coeffs, min_size=5, max_size=5))
def test_coordinate_hyperplanes_are_normal_crossing(nm, scalars):
    n, m = nm
    xs = RINGS[n].gens()
    factors = [scalars[i] * xs[i] for i in range(m)]
    h = RINGS[n].one()
    for f in factors:
        h = h * f
    D = DivisorGerm(h, factors)
    Jh = Ideal([h] + h.gradient())
    pairs = [Ideal([xs[i], xs[j]]) for i, j in combinations(range(m), 2)]
    if pairs:
        assert equal(Jh, intersect(*pairs) if len(pairs) > 1 else pairs[0])
    assert decide_normal_crossing(D).final == NORMAL_CROSSING
