"""Frozen expected values for quantities derived by hand rather than quoted.

Each constant below was worked out by hand (the short derivation sits next
to it) before the engine existed; the tests only compare against them.
"""
from fractions import Fraction

from ncdiv import gb
from ncdiv.divisor import (
    DivisorGerm,
    classify_A1,
    component_checks,
    euler_homogeneity,
    is_free_at_origin,
    is_reduced_equation,
    jacobian_ideal,
    singular_locus_ideal,
)
from ncdiv.ideal import Ideal, minimal_generators_at_origin, quotient
from ncdiv.logres import LogOneForm, is_closed, is_logarithmic, residue
from ncdiv.poly import DEGREVLEX, DS, LEX, ring

R = ring("x, y, z")
x, y, z = R.gens()
R2 = ring("x, y")
a, b = R2.gens()

# x^2-1, xy-1 under lex x > y: S-pair gives y*(x^2-1) - x*(xy-1) = x - y,
# then (x-y) reduces xy-1 to y^2-1.  Reduced basis, descending leading terms:
GB_LEX_EXAMPLE = ["x - y", "y^2 - 1"]

# (x^2, xy): leading ideal itself, {y} is a maximal independent set
DIM_X2_XY = 1

# x^2*y in two variables: (x^2y, 2xy, x^2) = (x^2, xy), dimension 1 = n - 1
DIM_SING_X2Y = 1

# cusp: delta = x/3 d_x + y/2 d_y gives x^3 - y^2 = h
CUSP_EULER = (Fraction(1, 3), Fraction(1, 2))

# Hessian deformation y^5+z^3+xy^3z has weights (1,3,5) of degree 15
HESSIAN_WEIGHTS = (1, 3, 5)

# Tuelle xz(x+z-y^2) has weights (2,1,2); Der(log D) needs 4 generators, pd = 3
TUELLE_WEIGHTS, TUELLE_MU, TUELLE_PD = (2, 1, 2), 4, 3

# (xz, xw, yz, yw) = (x,y)(z,w): Betti numbers 1, 4, 4, 1
SEGRE_BETTI = [1, 4, 4, 1]

# 4-lines factors x, y, x+y, x+yz: every pair meets along a line (dim 1) and
# transversally away from the z-axis; every triple contains the z-axis (dim 1 > 0)
FOUR_LINES_FAILING_TRIPLES = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]

# x^2+y^2 in three variables: J = (2x, 2y), two generators, codim 2
A1_X2Y2 = 2

# x1x2x3: J = (x2x3, x1x3, x1x2) needs three generators
MU_J_XYZ = 3


def test_gb_lex_example():
    G = gb.buchberger([x**2 - 1, x * y - 1], LEX)
    assert [str(g) for g in G.elements] == GB_LEX_EXAMPLE


def test_local_versus_global_normal_form():
    # x + x^2 = x(1+x) and 1+x is a unit at 0
    assert gb.normal_form(x, gb.buchberger([x + x**2], DS), DS).is_zero()
    assert gb.normal_form(x, gb.buchberger([x + x**2], LEX), LEX) == x


def test_dimensions():
    assert Ideal([a**2, a * b]).dimension() == DIM_X2_XY
    assert singular_locus_ideal(DivisorGerm(a**2 * b)).dimension() == DIM_SING_X2Y
    assert not is_reduced_equation(DivisorGerm(a**2 * b))
    assert is_reduced_equation(DivisorGerm(a**3 - b**2))


def test_four_lines_quotient_grows():
    D = DivisorGerm(x * y * (x + y) * (x + y * z))
    S = singular_locus_ideal(D)
    Q = quotient(S, D.h)
    assert S <= Q and not Q <= S


def test_cusp_euler_field():
    ef = euler_homogeneity(DivisorGerm(a**3 - b**2))
    assert ef.unit == R2.one()
    assert ef.field.coeffs == (a * CUSP_EULER[0], b * CUSP_EULER[1])


def test_weights_and_freeness_data():
    hess = is_free_at_origin(DivisorGerm(y**5 + z**3 + x * y**3 * z))
    assert hess.free and hess.weights == HESSIAN_WEIGHTS and hess.projective_dimension == 2
    t = is_free_at_origin(DivisorGerm(x * z * (x + z - y**2)))
    assert (t.weights, t.mu, t.projective_dimension) == (TUELLE_WEIGHTS, TUELLE_MU, TUELLE_PD)


def test_segre_resolution():
    R4 = ring("x, y, z, w")
    X, Y, Z, W = R4.gens()
    res = gb.free_resolution([X * Z, X * W, Y * Z, Y * W])
    assert res.ranks == SEGRE_BETTI


def test_four_lines_component_bookkeeping():
    rep = component_checks(DivisorGerm(x * y * (x + y) * (x + y * z), (x, y, x + y, x + y * z)))
    assert rep.pairs_ok and rep.factors_ok
    assert rep.failing_triples() == FOUR_LINES_FAILING_TRIPLES


def test_generator_counts():
    assert classify_A1(DivisorGerm(x**2 + y**2)) == A1_X2Y2
    assert minimal_generators_at_origin(jacobian_ideal(DivisorGerm(x * y * z))) == MU_J_XYZ


def test_whitney_square_identity():
    h = x**2 - y**2 * z
    assert 4 * (y * z) ** 2 - z * (2 * x) ** 2 == -4 * z * h


def test_non_closed_logarithmic_form():
    # (y dx + x^2 dy)/(xy) = dx/x + x dy/y, and d(x dy/y) = dx^dy/y != 0
    w = LogOneForm([b, a**2], a * b)
    assert is_logarithmic(w, a * b)
    assert not is_closed(w)


def test_four_lines_residue_on_first_line():
    h = (x + y) * y * (x + 2 * y) * (x + y + y * z)
    w3 = LogOneForm([y * (x + y + y * z), -x * (x + y + y * z), R.zero()], 4 * h)
    rc = residue(w3, DivisorGerm(h), x + y)
    assert rc.equals((R.const(-1), 4 * x))
