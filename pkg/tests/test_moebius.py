from fractions import Fraction as F

import pytest

from mysticum.campaign import sample_chain_config
from mysticum.conic import INFINITY, param_point
from mysticum.errors import (
    DegenerateDiagonal,
    NotConcurrent,
    OnBoundary,
    RepeatedVertex,
    TangentEncounter,
)
from mysticum.klein import HPoint
from mysticum.moebius import (
    MoebiusConfig,
    SignedLineForm,
    bisector_equidistance_check,
    build_chain_polygon,
    normalized_line_forms,
    region_membership,
    verify_moebius,
    verify_region_lemma,
)
from mysticum.projective import ProjLine, point
from mysticum.sampling import RandomRationalSampler, trial_rng
from mysticum.theorems import IdealPolygon

WORKED_LINE = ProjLine(0, 1, -2)
WORKED_XS = (point(0, 2), point(-3, 2))


def worked_config() -> MoebiusConfig:
    return build_chain_polygon(
        1, WORKED_LINE, WORKED_XS, param_point(F(0)), param_point(F(2))
    )


class TestChainConstruction:
    def test_reproduces_worked_hexagon(self):
        cfg = worked_config()
        assert [v.t for v in cfg.polygon.vertices] == [
            F(0),
            F(1, 2),
            F(1),
            F(2),
            INFINITY,
            F(-1),
        ]

    def test_all_prescribed_meets_on_line(self):
        cfg = worked_config()
        meets = cfg.opposite_meets()
        assert meets[0] == WORKED_XS[0] and meets[1] == WORKED_XS[1]
        assert meets[2] == point(3, 2)

    def test_interior_prescribed_point_rejected(self):
        with pytest.raises(ValueError):
            build_chain_polygon(
                1,
                ProjLine(0, 1, 0),
                (point(0, 0), point(F(1, 2), 0)),
                param_point(F(1)),
                param_point(F(3)),
            )

    def test_off_line_point_rejected(self):
        with pytest.raises(ValueError):
            build_chain_polygon(
                1, WORKED_LINE, (point(0, 2), point(-3, 3)),
                param_point(F(0)), param_point(F(2)),
            )

    def test_tangent_encounter(self):
        # X_1 = (1, 2) lies on the tangent x = 1 at the start vertex (1, 0)
        line = ProjLine(0, 1, -2)
        with pytest.raises(TangentEncounter):
            build_chain_polygon(
                1, line, (point(1, 2), point(-3, 2)),
                param_point(F(0)), param_point(F(2)),
            )

    def test_repeated_vertex(self):
        # a_mid equal to the first chain start revisits A_1
        with pytest.raises(RepeatedVertex):
            build_chain_polygon(
                1, WORKED_LINE, WORKED_XS, param_point(F(0)), param_point(F(0))
            )


class TestVerifyMoebius:
    def test_worked_hexagon_witnesses_zero(self):
        report = verify_moebius(worked_config())
        assert report.passed
        assert report.witnesses == [0, 0, 0]

    def test_seeded_decagon(self):
        sampler = RandomRationalSampler(trial_rng(7, 0), bound=100)
        cfg = sample_chain_config(sampler, 2)
        report = verify_moebius(cfg)
        assert report.passed and all(w == 0 for w in report.witnesses)

    def test_mutated_config_fails(self):
        cfg = worked_config()
        vertices = list(cfg.polygon.vertices)
        vertices[2] = param_point(F(7, 3))  # breaks the alignment hypothesis
        mutated = MoebiusConfig(
            n=1, polygon=IdealPolygon(vertices), line=cfg.line, xs=cfg.xs
        )
        report = verify_moebius(mutated)
        assert not report.passed
        assert any(w != 0 for w in report.witnesses)


class TestSignedLineForms:
    def test_worked_forms(self):
        forms = normalized_line_forms(worked_config())
        assert [f.coeffs for f in forms] == [(1, 2, -1), (-1, 2, -1), (-1, 0, 0)]

    def test_diagonal_incidences(self):
        cfg = worked_config()
        forms = normalized_line_forms(cfg)
        verts = cfg.polygon.vertices
        for i, form in enumerate(forms):
            assert form.eval_at(verts[i].point) == 0
            assert form.eval_at(verts[i + 3].point) == 0
            assert form.eval_at(verts[i + 1].point) > 0

    def test_determinism(self):
        a = normalized_line_forms(worked_config())
        b = normalized_line_forms(worked_config())
        assert [f.coeffs for f in a] == [f.coeffs for f in b]


class TestRegionMembership:
    def test_worked_point_outside_r1(self):
        forms = normalized_line_forms(worked_config())
        assert region_membership(forms, point(F(1, 10), 0), 1) is False

    def test_diagonal_center_on_boundary(self):
        forms = normalized_line_forms(worked_config())
        with pytest.raises(OnBoundary):
            region_membership(forms, point(0, F(1, 2)), 1)

    def test_point_of_bisector_inside_r1(self):
        # (1/5, 1/2) lies on l_1: y = 1/2, off the diagonals
        forms = normalized_line_forms(worked_config())
        assert region_membership(forms, point(F(1, 5), F(1, 2)), 1) is True

    def test_index_out_of_range(self):
        forms = normalized_line_forms(worked_config())
        with pytest.raises(IndexError):
            region_membership(forms, point(F(1, 10), 0), 4)


class TestRegionLemma:
    def test_never_violated_on_seeded_decagons(self):
        sampler = RandomRationalSampler(trial_rng(3, 1), bound=100)
        cfg = sample_chain_config(sampler, 2)
        forms = normalized_line_forms(cfg)
        checked = 0
        while checked < 200:
            p = sampler.interior_point(bound=500)
            try:
                report = verify_region_lemma(forms, p)
            except OnBoundary:
                continue
            checked += 1
            assert report.passed

    def test_vacuous_hypothesis_passes(self):
        forms = normalized_line_forms(worked_config())
        report = verify_region_lemma(forms, point(F(1, 10), 0))
        assert not report.notes["memberships"][0]
        assert report.passed

    def test_even_form_count_can_violate(self):
        # the 4n-gon analogue: with an even number of diagonals the sign
        # product telescopes to the wrong parity
        forms = [
            SignedLineForm((1, 0, 0)),  # x
            SignedLineForm((0, 1, 0)),  # y
            SignedLineForm((1, 1, -1)),  # x + y - 1
            SignedLineForm((1, -1, 1)),  # x - y + 1
        ]
        p = point(F(-1, 4), F(1, 2))
        values = [f.eval_at(p) for f in forms]
        report = verify_region_lemma(forms, p)
        assert not report.notes["odd_parity"]
        assert not report.passed, values

    def test_boundary_point_rejected(self):
        forms = normalized_line_forms(worked_config())
        with pytest.raises(OnBoundary):
            verify_region_lemma(forms, point(0, F(1, 2)))


class TestEquidistance:
    def test_worked_degenerate_concurrent_case(self):
        # the worked hexagon's diagonals all pass through (0, 1/2), so the
        # three distances are zero
        assert bisector_equidistance_check(worked_config(), HPoint.at(0, F(1, 2)))

    def test_point_off_perpendiculars_rejected(self):
        with pytest.raises(NotConcurrent):
            bisector_equidistance_check(worked_config(), HPoint.at(0, 0))

    def test_incenter_of_perturbed_hexagon(self):
        from mysticum.theorems import verify_bisector_concurrency

        hexagon = IdealPolygon.from_params([F(0), F(1, 2), F(1), F(2), F(5), F(-1)])
        report = verify_bisector_concurrency(hexagon)
        incenter = dict(report.points)["incenter"]
        cfg = MoebiusConfig(n=1, polygon=hexagon, line=ProjLine(0, 0, 1), xs=())
        assert bisector_equidistance_check(cfg, HPoint(incenter))
