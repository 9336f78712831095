import pytest

from ncdiv.divisor import DivisorGerm, jacobian_ideal, singular_locus_ideal
from ncdiv.ideal import (
    CMHint,
    Ideal,
    eliminate,
    equal,
    intersect,
    is_radical,
    member,
    minimal_generators_at_origin,
    poly_gcd,
    quotient,
    radical_member,
    saturate,
    verify_witness,
)
from ncdiv.poly import RingMismatch, ring


def test_intersections(xyz):
    R, x, y, z = xyz
    assert equal(intersect(Ideal([x]), Ideal([y])), Ideal([x * y]))
    three = intersect(Ideal([x, y]), Ideal([x, z]), Ideal([y, z]))
    assert equal(three, Ideal([x * y, x * z, y * z]))


def test_four_lines_radical_candidate(xyz):
    R, x, y, z = xyz
    D = DivisorGerm(x * y * (x + y) * (x + y * z))
    cand = intersect(Ideal([x + y, z - 1]), Ideal([x, z]), Ideal([x, y]))
    S = singular_locus_ideal(D)
    assert all(radical_member(g, S) for g in cand.gens)
    assert S <= cand
    assert not equal(cand, S)


def test_ring_mismatch(xy, xyz):
    with pytest.raises(RingMismatch):
        intersect(Ideal([xy[1]]), Ideal([xyz[1]]))
    with pytest.raises(RingMismatch):
        equal(Ideal([xy[1]]), Ideal([xyz[1]]))


def test_quotient_and_saturation(xy):
    R, x, y = xy
    assert equal(quotient(Ideal([x**2, x * y]), x), Ideal([x, y]))
    sat, k = saturate(Ideal([x**2 * y]), x)
    assert equal(sat, Ideal([y])) and k == 2
    assert equal(quotient(Ideal([x * y]), Ideal([x, y])), Ideal([x * y]))
    with pytest.raises(ValueError):
        quotient(Ideal([x]), R.zero())


def test_membership(xyz):
    R, x, y, z = xyz
    assert radical_member(x, Ideal([x**2])) and not member(x, Ideal([x**2]))
    cusp = R.parse("x^3 - y^2")
    J = Ideal(cusp.gradient())
    assert member(cusp, J)
    h = y**5 + z**3 + x * y**3 * z
    Jh = jacobian_ideal(DivisorGerm(h))
    assert radical_member(y, Jh) and radical_member(z, Jh)
    assert not member(y, Jh)


def test_local_membership(xy):
    R, x, y = xy
    I = Ideal([x * (1 + y)])
    assert I.contains_at_origin(x) and not I.contains(x)


def test_equal_examples(xy):
    R, x, y = xy
    assert equal(Ideal([x, y]), Ideal([y, x + y]))
    assert Ideal([x, y]) == Ideal([y, x + y])
    assert Ideal([x]) != Ideal([y])


def test_eliminate(xyz):
    R, x, y, z = xyz
    E = eliminate(Ideal([x - y, y - z**2]), ["y"])
    assert equal(E, Ideal([x - z**2]))


def test_dimension_and_units(xyz):
    R, x, y, z = xyz
    assert Ideal([x, y, z]).dimension() == 0
    assert Ideal([x - 1]).dimension(local=True) == -1
    assert Ideal([], R).dimension() == 3
    assert Ideal([x, x + 1]).is_unit()


@pytest.mark.parametrize("gens, expected", [
    ("x, y, z", "radical"),
    ("x^2, x*y", "not-radical"),
    ("x*y, x*z", "radical"),
    ("x*y - z, x*z", "not-radical"),
    ("x*(x - y^2), x*z", "radical"),
    ("y^2 - x^3, x*z", "not-radical"),
])
def test_is_radical(xyz, gens, expected):
    R = xyz[0]
    I = Ideal([R.parse(s) for s in gens.split(", ")])
    rep = is_radical(I)
    assert rep.verdict == expected
    if expected == "not-radical":
        assert verify_witness(rep.witness, I, rep.power)


def test_is_radical_monomial_witness(xy):
    R, x, y = xy
    rep = is_radical(Ideal([x**2, x * y]))
    assert rep.method == "monomial" and rep.witness == x and rep.power == 2


def test_is_radical_zero_dimensional(xy):
    R, x, y = xy
    assert is_radical(Ideal([x**2 - 1, y**2 - x])).verdict == "radical"
    rep = is_radical(Ideal([(x - 1) ** 2 * (x + 2), y - x]))
    assert rep.method == "zero-dimensional" and rep.verdict == "not-radical"
    assert rep.witness == (x - 1) * (x + 2)


def test_jacobian_path_with_hint(xyz):
    R, x, y, z = xyz
    D = DivisorGerm(x * y * (x + y) * (x + y * z))
    rep = is_radical(singular_locus_ideal(D), hint=CMHint(2), at_origin=True)
    assert rep.verdict == "not-radical"
    cand = intersect(Ideal([x + y, z - 1]), Ideal([x, z]), Ideal([x, y]))
    assert cand.contains(rep.witness)
    assert verify_witness(rep.witness, singular_locus_ideal(D), rep.power, at_origin=True)


def test_splayed_radical():
    R = ring("x, y, z, s, t")
    x, y, z, s, t = R.gens()
    h = (x**2 + y**2 + z**2) * (s**2 - t**2)
    assert is_radical(Ideal(h.gradient())).verdict == "radical"


def test_unit_ideal_rejected(xy):
    R, x, y = xy
    with pytest.raises(ValueError):
        is_radical(Ideal([x, x + 1]))


def test_minimal_generators(xyz):
    R, x, y, z = xyz
    assert minimal_generators_at_origin(Ideal([x, y, z])) == 3
    assert minimal_generators_at_origin(Ideal([z, x, y, x + y, x * z])) == 3
    assert minimal_generators_at_origin(jacobian_ideal(DivisorGerm(z**2 - x * y))) == 3
    R2 = ring("x1, x2")
    a, b = R2.gens()
    assert minimal_generators_at_origin(jacobian_ideal(DivisorGerm(a * b))) == 2
    with pytest.raises(ValueError):
        minimal_generators_at_origin(Ideal([x - 1]))


def test_poly_gcd(xy):
    R, x, y = xy
    assert poly_gcd(x**2 * y, x * y**3) == x * y
    assert poly_gcd(x**2 - y**2, 2 * x + 2 * y) == x + y
    assert poly_gcd(x + 1, y).is_constant()
