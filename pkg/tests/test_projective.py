from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mysticum.errors import (
    DegenerateConfiguration,
    EqualLines,
    EqualPoints,
    NotCollinear,
    SingularMap,
)
from mysticum.projective import (
    ProjLine,
    ProjMap,
    ProjPoint,
    collinear,
    concurrent,
    cross_ratio,
    join,
    meet,
    point,
)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)


def nonzero_triples():
    return st.tuples(rationals, rationals, rationals).filter(lambda t: any(t))


class TestCanonicalForm:
    def test_point_scaling_collapses(self):
        assert ProjPoint(2, 4, 6) == ProjPoint(1, 2, 3)
        assert ProjPoint(F(1, 2), F(1, 3), 1) == ProjPoint(3, 2, 6)

    def test_point_sign_convention(self):
        # last nonzero coordinate positive
        assert ProjPoint(3, -2, -1).coords == (-3, 2, 1)
        assert ProjPoint(-1, -2, 0).coords == (1, 2, 0)
        assert ProjPoint(-5, 0, 0).coords == (1, 0, 0)

    def test_line_sign_convention(self):
        assert ProjLine(0, -1, 2).coords == (0, 1, -2)
        assert ProjLine(0, -3, 0).coords == (0, 1, 0)
        assert ProjLine(-2, 0, 0).coords == (1, 0, 0)

    def test_zero_triple_rejected(self):
        with pytest.raises(ValueError):
            ProjPoint(0, 0, 0)

    @given(nonzero_triples(), st.fractions(min_value=F(1, 7), max_value=7, max_denominator=11))
    def test_canonicalization_idempotent_and_scale_free(self, triple, scale):
        p = ProjPoint(*triple)
        assert ProjPoint(*p.coords) == p
        assert ProjPoint(*(scale * v for v in triple)) == p
        l = ProjLine(*triple)
        assert ProjLine(*(scale * v for v in triple)) == l


class TestJoinMeet:
    def test_axis_through_origin(self):
        assert join(point(0, 0), point(1, 0)) == ProjLine(0, 1, 0)

    def test_hand_cross_products(self):
        assert join(point(1, 0), point(F(3, 5), F(4, 5))) == ProjLine(2, 1, -2)
        assert join(point(0, 1), point(F(-3, 5), F(4, 5))) == ProjLine(1, -3, 3)

    def test_join_incidence(self):
        p, q = point(1, 0), point(F(3, 5), F(4, 5))
        l = join(p, q)
        assert l.contains(p) and l.contains(q)

    def test_join_equal_points(self):
        with pytest.raises(EqualPoints):
            join(point(1, 2), ProjPoint(2, 4, 2))

    def test_meet_of_worked_sides(self):
        assert meet(ProjLine(2, 1, -2), ProjLine(2, -1, 2)) == point(0, 2)

    def test_axes_meet_at_origin(self):
        assert meet(ProjLine(0, 1, 0), ProjLine(1, 0, 0)) == point(0, 0)

    def test_parallels_meet_at_infinity(self):
        p = meet(ProjLine(0, 1, -1), ProjLine(0, 1, -2))
        assert p == ProjPoint(1, 0, 0)
        assert p.at_infinity

    def test_meet_equal_lines(self):
        with pytest.raises(EqualLines):
            meet(ProjLine(1, 1, 1), ProjLine(2, 2, 2))

    @given(nonzero_triples(), nonzero_triples(), nonzero_triples())
    def test_join_meet_duality(self, a, b, c):
        p, q, r = ProjPoint(*a), ProjPoint(*b), ProjPoint(*c)
        if p == q or p == r or collinear(p, q, r):
            return
        assert meet(join(p, q), join(p, r)) == p


class TestCollinearConcurrent:
    def test_worked_pascal_points(self):
        ok, det = collinear(point(0, 2), point(-3, 2), point(3, 2))
        assert ok and det == 0

    def test_triangle_corners(self):
        ok, det = collinear(point(1, 0), point(0, 1), point(0, 0))
        assert not ok and det == 1

    def test_repeated_point_collinear(self):
        p, q = point(1, 2), point(3, 4)
        assert collinear(p, p, q).ok

    def test_worked_polars_concurrent(self):
        assert concurrent(ProjLine(0, 2, -1), ProjLine(-3, 2, -1), ProjLine(3, 2, -1)).ok

    def test_generic_triple_not_concurrent(self):
        assert not concurrent(ProjLine(1, 0, 0), ProjLine(0, 1, 0), ProjLine(1, 1, -1))

    def test_repeated_line_concurrent(self):
        l, m = ProjLine(1, 0, 0), ProjLine(0, 1, -3)
        assert concurrent(l, l, m).ok

    @given(nonzero_triples(), nonzero_triples(), nonzero_triples())
    def test_permutation_invariance(self, a, b, c):
        p, q, r = ProjPoint(*a), ProjPoint(*b), ProjPoint(*c)
        base = collinear(p, q, r).ok
        assert collinear(q, r, p).ok == base
        assert collinear(r, q, p).ok == base


class TestCrossRatio:
    def test_hilbert_bracket_value(self):
        a, b = point(0, -1), point(0, 1)
        p, q = point(0, 0), point(0, F(1, 2))
        assert cross_ratio(a, b, p, q) == 3

    def test_conjugate_pair_gives_minus_one(self):
        a, b = point(0, -1), point(0, 1)
        assert cross_ratio(a, b, point(0, F(1, 2)), point(0, 2)) == -1

    def test_coincident_arguments_give_one(self):
        a, b = point(0, -1), point(0, 1)
        p = point(0, F(1, 3))
        assert cross_ratio(a, b, p, p) == 1

    def test_not_collinear_rejected(self):
        with pytest.raises(NotCollinear):
            cross_ratio(point(0, 0), point(1, 0), point(0, 1), point(2, 0))

    def test_degenerate_zero_length(self):
        a, b = point(0, -1), point(0, 1)
        with pytest.raises(DegenerateConfiguration):
            cross_ratio(a, b, a, point(0, 0))

    def test_equal_base_points_rejected(self):
        a = point(0, -1)
        with pytest.raises(EqualPoints):
            cross_ratio(a, a, point(0, 0), point(0, 1))

    @given(rationals, rationals, rationals, rationals)
    def test_swap_of_base_points_inverts(self, ta, tb, tp, tq):
        # four points on the line y = x
        ts = [ta, tb, tp, tq]
        if len({ta, tb}) < 2 or len({ta, tp}) < 2 or len({tb, tq}) < 2:
            return
        a, b, p, q = (point(t, t) for t in ts)
        if len({ta, tq}) < 2 or len({tb, tp}) < 2:
            return
        assert cross_ratio(a, b, p, q) * cross_ratio(b, a, p, q) == 1

    @given(rationals, rationals, rationals, rationals)
    @settings(max_examples=60)
    def test_invariant_under_projective_maps(self, ta, tb, tp, tq):
        if len({ta, tb, tp, tq}) < 4:
            return
        a, b, p, q = (point(t, 2 * t - 1) for t in (ta, tb, tp, tq))
        value = cross_ratio(a, b, p, q)
        m = ProjMap(((1, 2, 0), (0, 1, 3), (1, 0, 5)))
        imgs = [m.apply_point(x) for x in (a, b, p, q)]
        assert cross_ratio(*imgs) == value


class TestProjMap:
    def test_identity(self):
        p = point(3, 7)
        assert ProjMap.identity().apply_point(p) == p

    def test_scalar_matrices_act_trivially(self):
        m = ProjMap(((2, 0, 0), (0, 2, 0), (0, 0, 2)))
        p = point(F(1, 3), 4)
        assert m.apply_point(p) == p

    def test_singular_rejected(self):
        with pytest.raises(SingularMap):
            ProjMap(((1, 2, 3), (2, 4, 6), (0, 0, 1)))

    def test_reflection_matrix_moves_worked_vertex(self):
        m = ProjMap(((1, 0, 0), (0, F(-5, 3), F(4, 3)), (0, F(-4, 3), F(5, 3))))
        assert m.apply_point(point(1, 0)) == ProjPoint(3, 4, 5)

    def test_incidence_preserved(self):
        m = ProjMap(((1, 2, 0), (0, 1, 3), (1, 0, 5)))
        p, q = point(2, 5), point(-1, F(1, 2))
        l = join(p, q)
        assert m.apply_line(l).contains(m.apply_point(p))
        assert m.apply_line(l).contains(m.apply_point(q))

    def test_inverse_roundtrip(self):
        m = ProjMap(((1, 2, 0), (0, 1, 3), (1, 0, 5)))
        assert m.compose(m.inverse()).is_proportional(ProjMap.identity())

    @given(nonzero_triples(), nonzero_triples(), nonzero_triples())
    @settings(max_examples=50)
    def test_collinearity_invariant_under_maps(self, a, b, c):
        m = ProjMap(((2, 1, 0), (1, 1, 1), (0, 3, 1)))
        p, q, r = ProjPoint(*a), ProjPoint(*b), ProjPoint(*c)
        assert (
            collinear(p, q, r).ok
            == collinear(*(m.apply_point(x) for x in (p, q, r))).ok
        )
