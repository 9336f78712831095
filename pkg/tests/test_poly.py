from fractions import Fraction

import pytest

from ncdiv.parse import ParseError, parse_polynomial, split_top_level
from ncdiv.poly import (
    DEGREVLEX,
    DS,
    LEX,
    MonomialOrder,
    ModuleOrder,
    Polynomial,
    RingMismatch,
    adjugate,
    determinant,
    divide,
    exact_quotient,
    minors,
    order,
    ring,
)


def test_ring_context():
    R = ring("x, y, z")
    assert R.n == 3 and R.names == ("x", "y", "z")
    assert R.index("y") == 1 and R.index(2) == 2
    with pytest.raises(ValueError):
        ring("x, x")
    with pytest.raises((ValueError, KeyError, IndexError)):
        R.index("w")


def test_add_examples(xy):
    R, x, y = xy
    assert (x + y) + (x - y) == 2 * x
    p = x**3 - y**2
    assert p + R.zero() == p
    assert p + y**2 == x**3


def test_mul_examples(xyz):
    R, x, y, z = xyz
    assert str(x * y) == "x*y"
    assert (x + y) * (x - y) == x**2 - y**2
    h = x * y * (x + y) * (x + y * z)
    assert h == R.parse("x^3*y + x^2*y^2 + x^2*y^2*z + x*y^3*z")
    assert h.degree() == 5


def test_ring_mismatch(xy, xyz):
    with pytest.raises(RingMismatch):
        xy[1] + xyz[1]


def test_partials(xyz):
    R, x, y, z = xyz
    assert (z**2 - x * y).partial("z") == 2 * z
    assert (x**3 - y**2).partial("x") == 3 * x**2
    assert (x**2 - y**2 * z).partial("y") == -2 * y * z
    with pytest.raises((ValueError, IndexError, KeyError)):
        x.partial(5)


def test_leading_terms(xy):
    R, x, y = xy
    p = x + x**2
    assert p.leading_term(LEX) == (1, (2, 0))
    assert p.leading_term(DS) == (1, (1, 0))
    assert (x**3 - y**2).leading_monomial(DEGREVLEX) == (3, 0)
    with pytest.raises(ValueError):
        R.zero().leading_term()


def test_orders():
    assert order("lex") == LEX and order("ds") == DS
    e = order("elim(1)")
    assert e.key((1, 0, 0)) > e.key((0, 5, 5))
    assert DEGREVLEX.key((0, 0)) < DEGREVLEX.key((0, 1))
    assert DS.key((0, 0)) > DS.key((0, 1))
    assert DS.is_local and not LEX.is_local
    with pytest.raises(ValueError):
        MonomialOrder("banana")
    top, pot = ModuleOrder(DEGREVLEX, "top"), ModuleOrder(DEGREVLEX, "pot")
    # term first: a higher-degree term wins whatever its position
    assert top.key((1, 2, 0)) > top.key((0, 1, 0))
    assert pot.key((0, 1, 0)) > pot.key((1, 2, 0))


def test_constant_term_and_evaluation(xy):
    R, x, y = xy
    p = 3 + x * y - Fraction(1, 2) * y
    assert p.constant_term() == 3 == p(0, 0)
    assert p(2, 4) == 3 + 8 - 2


def test_printer(xyz):
    R, x, y, z = xyz
    p = x**2 * y - Fraction(1, 2) * z + 3
    assert str(p) == "x^2*y - 1/2*z + 3"
    assert str(R.zero()) == "0"
    assert str(-x) == "-x"


def test_parse_examples(xyz):
    R, x, y, z = xyz
    assert parse_polynomial("x*y*(x+y)*(x+y*z)", R) == x * y * (x + y) * (x + y * z)
    assert parse_polynomial("y^5+z^3+x*y^3*z", R) == y**5 + z**3 + x * y**3 * z
    assert parse_polynomial("1/2*x - 1/2*x", R).is_zero()
    assert parse_polynomial("x**2", R) == x**2
    assert parse_polynomial("-(x - 2/3)^2", R) == -((x - Fraction(2, 3)) ** 2)


@pytest.mark.parametrize("text, fragment, position", [
    ("x +", "unexpected end", 3),
    ("x + w", "unknown variable", 4),
    ("x/0", "zero denominator", 2),
    ("x/y", "non-constant", 2),
    ("x^-1", "negative exponent", 2),
    ("x $ y", "unexpected character", 2),
    ("", "empty", 0),
])
def test_parse_errors(xyz, text, fragment, position):
    with pytest.raises(ParseError) as info:
        parse_polynomial(text, xyz[0])
    assert fragment in info.value.message
    assert info.value.position == position


def test_split_top_level():
    assert split_top_level("x, (y, z), [a, b]") == ["x", "(y, z)", "[a, b]"]


def test_division(xy):
    R, x, y = xy
    q, r = divide(x**2 + y, x)
    assert q == x and r == y
    assert exact_quotient(x**2 - y**2, x - y) == x + y
    assert exact_quotient(x**2 + y, x) is None


def test_determinant_and_adjugate(xy):
    R, x, y = xy
    M = [[x, y], [R.one(), x]]
    assert determinant(M) == x**2 - y
    A = adjugate(M)
    prod = [[sum((M[i][k] * A[k][j] for k in range(2)), R.zero()) for j in range(2)] for i in range(2)]
    assert prod == [[x**2 - y, R.zero()], [R.zero(), x**2 - y]]
    assert sorted(map(str, minors([[x, y, R.one()], [y, x, R.zero()]], 2))) == sorted(
        ["x^2 - y^2", "-y", "-x"])


def test_substitute_and_change_ring(xy):
    R, x, y = xy
    p = x**2 + y
    assert p.substitute([x + 1, y]) == x**2 + 2 * x + 1 + y
    S = ring("t, x, y")
    assert str(p.change_ring(S, [1, 2])) == "x^2 + y"


def test_hash_and_equality(xy):
    R, x, y = xy
    assert {x + y: 1}[y + x] == 1
    assert x != y and x == R.parse("x")
