import pytest

from plucker_lab.scalars import ONE, RHO, ZERO, LambdaPoly, lambda_roots
from plucker_lab.polynomials import (
    X_VARS,
    bl2_sextic,
    parse_poly,
    proportional,
    quadratic_map,
)
from plucker_lab.curve import ProjectivePoint
from plucker_lab.heisenberg import (
    ORDER3_ORBIT_REPRESENTATIVES,
    ProjectiveTransform,
    curve_orbit_obstruction,
    enumerate_group,
    fixed_locus,
    iota,
    orbit,
    sigma,
    tau,
)

RHO2 = RHO * RHO


def P(*coords):
    return ProjectivePoint(coords)


# ---------------------------------------------------------------------------
# transforms


def test_transform_normalization_and_equality():
    g = ProjectiveTransform([[2, 0, 0], [0, 2, 0], [0, 0, 2]])
    assert g == ProjectiveTransform.identity()
    assert g.is_identity()
    h = ProjectiveTransform([[0, 3, 0], [0, 0, 3], [3, 0, 0]])
    assert h == sigma()
    assert hash(h) == hash(sigma())


def test_transform_rejects_singular():
    with pytest.raises(ValueError):
        ProjectiveTransform([[1, 0, 0], [1, 0, 0], [0, 0, 1]])


def test_transform_immutable():
    g = sigma()
    with pytest.raises(AttributeError):
        g.rows = ()


def test_inverse_and_product():
    for g in [sigma(), tau(), iota(), sigma() * tau() * iota()]:
        assert (g * g.inverse()).is_identity()
        assert (g.inverse() * g).is_identity()


def test_generator_relations():
    s, t, i = sigma(), tau(), iota()
    assert (s * s * s).is_identity()
    assert (t * t * t).is_identity()
    assert (i * i).is_identity()
    # the translation subgroup is abelian projectively
    assert s * t == t * s
    # conjugation by the involution inverts both translations
    assert i * s * i == s * s
    assert i * t * i == t * t


def test_apply():
    assert sigma().apply(P(1, 0, 0)) == P(0, 0, 1)
    assert tau().apply(P(1, 1, 1)) == P(1, RHO, RHO2)
    assert iota().apply(P(1, 2, 3)) == P(1, 3, 2)


# ---------------------------------------------------------------------------
# the group


def test_group_order_18():
    group = enumerate_group()
    assert len(group) == 18
    assert len(set(group)) == 18


def test_group_closure_and_inverses():
    group = set(enumerate_group())
    for g in group:
        assert g.inverse() in group
        for h in group:
            assert g * h in group


def test_element_orders():
    orders = sorted(g.order() for g in enumerate_group())
    assert set(orders) == {1, 2, 3}
    assert orders.count(1) == 1
    # nine involutions (the iota coset), eight order-3 elements
    assert orders.count(2) == 9
    assert orders.count(3) == 8


def test_group_enumeration_is_deterministic():
    import plucker_lab.heisenberg as hb

    first = enumerate_group()
    hb._GROUP_CACHE = None
    second = enumerate_group()
    assert first == second


# ---------------------------------------------------------------------------
# orbits


def test_orbit_generic_point():
    assert orbit(P(1, 2, 3)).size == 18


def test_orbit_on_fixed_line():
    # x0 = x1 is fixed by iota composed with sigma; orbit halves
    assert orbit(P(1, 1, 2)).size == 9


def test_orbits_of_size_three():
    table = {
        P(1, 0, 0): {P(1, 0, 0), P(0, 1, 0), P(0, 0, 1)},
        P(1, 1, 1): {P(1, 1, 1), P(1, RHO, RHO2), P(1, RHO2, RHO)},
        P(ONE, ONE, RHO): {P(ONE, ONE, RHO), P(ONE, RHO, ONE), P(RHO, ONE, ONE)},
        P(ONE, ONE, RHO2): {P(ONE, ONE, RHO2), P(ONE, RHO2, ONE), P(RHO2, ONE, ONE)},
    }
    for rep, expect in table.items():
        ob = orbit(rep)
        assert ob.size == 3
        assert set(ob.points) == expect


def test_orbit_membership():
    ob = orbit(P(1, 0, 0))
    assert P(0, 1, 0) in ob
    assert P(1, 1, 1) not in ob


# ---------------------------------------------------------------------------
# fixed locus


def test_fixed_locus_counts():
    fl = fixed_locus()
    assert len(fl.lines) == 9
    assert len(fl.points) == 9
    assert len(fl.triple_points) == 12


def test_fixed_points_are_the_y_points():
    fl = fixed_locus()
    expect = set()
    for i, r in enumerate([ONE, RHO, RHO2]):
        expect.add(P(ONE, -r, ZERO))
        expect.add(P(ZERO, ONE, -r))
        expect.add(P(-r, ZERO, ONE))
    assert set(fl.points) == expect


def test_triple_points_lie_on_three_lines():
    fl = fixed_locus()
    for p in fl.triple_points:
        hits = sum(
            1 for form in fl.lines if form.evaluate(p.coords).is_zero()
        )
        assert hits == 3


def test_triple_points_partition_into_small_orbits():
    fl = fixed_locus()
    seen = set()
    for rep in ORDER3_ORBIT_REPRESENTATIVES:
        pts = set(orbit(rep).points)
        assert pts <= set(fl.triple_points)
        assert not (pts & seen)
        seen |= pts
    assert seen == set(fl.triple_points)


def test_y_points_have_orbit_size_nine():
    fl = fixed_locus()
    for p in fl.points:
        assert orbit(p).size == 9


# ---------------------------------------------------------------------------
# action on curves


def test_act_on_poly_contravariant():
    c = parse_poly("x0^2*x1 + x2^3", X_VARS)
    g, h = sigma(), tau()
    lhs = (g * h).act_on_poly(c)
    rhs = g.act_on_poly(h.act_on_poly(c))
    assert proportional(lhs, rhs)


def test_act_on_poly_moves_zero_sets():
    # the line x0 = 0 maps to the line cut out by the pulled-back form
    g = sigma()
    c = parse_poly("x0", X_VARS)
    moved = g.act_on_poly(c)
    for p in [P(0, 1, 5), P(0, 1, 0)]:
        assert moved.evaluate(g.apply(p).coords).is_zero()


def test_act_on_poly_rejects_wrong_arity():
    g = sigma()
    with pytest.raises(ValueError):
        g.act_on_poly(parse_poly("y0 + y1", ("y0", "y1")))


def test_composed_sextic_is_invariant():
    c = bl2_sextic().substitute(quadratic_map())
    for g in enumerate_group():
        assert proportional(g.act_on_poly(c), c)


# ---------------------------------------------------------------------------
# orbit obstructions


def test_obstruction_simple_line():
    # x0 vanishes at two of the three coordinate points, not all three
    out = curve_orbit_obstruction(parse_poly("x0", X_VARS))
    gcd = out[P(1, 0, 0)]
    assert gcd.degree == 0 and not gcd.is_zero()


def test_obstruction_coordinate_triangle():
    # x0*x1*x2 contains the coordinate-point orbit identically
    out = curve_orbit_obstruction(parse_poly("x0*x1*x2", X_VARS))
    assert out[P(1, 0, 0)].is_zero()
    assert not out[P(1, 1, 1)].is_zero()


def test_obstruction_validates_input():
    with pytest.raises(ValueError):
        curve_orbit_obstruction(parse_poly("x0^2 + x1", X_VARS))
    with pytest.raises(ValueError):
        curve_orbit_obstruction(parse_poly("y0 + y1", ("y0", "y1")))


def test_composed_sextic_obstructions():
    out = curve_orbit_obstruction(bl2_sextic(), use_quadratic_map=True)
    base = out[P(1, 0, 0)]
    assert base.degree == 0 and not base.is_zero()
    # the other three orbits each pin lambda to one cube root of unity
    roots = set()
    for rep in ORDER3_ORBIT_REPRESENTATIVES[1:]:
        search = lambda_roots(out[rep])
        assert search.complete
        roots |= set(search.values)
    assert roots == {ONE, RHO, RHO2}
