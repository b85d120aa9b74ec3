"""Tests for splitting and merging surfaces and the curvature and area relations."""

import numpy as np
import pytest

from lorentz_surfaces.core.correspondence import (
    SurfacePair,
    anti_isometry_split,
    area_relation,
    curvature_relation,
    factor_gauss_curvature,
    merge_surfaces,
    relation_from_surface,
    split_curve,
    split_curve_from_jets,
    split_surface,
    swap_split,
)
from lorentz_surfaces.core.expr_jet import parse
from lorentz_surfaces.core.minimal_surfaces import (
    CanonicalSurfaceDataR31,
    SurfaceType,
    classify_type,
    curvature_r31_canonical,
    curvatures,
    interior_grid,
)
from lorentz_surfaces.errors import CrossConditionError, PreconditionError
from lorentz_surfaces.scenes import builtin_scene, scene_surface_data

from .conftest import CATENOID_K, CATENOID_KAPPA, SECOND_KIND_K


class TestSplitMerge:
    def test_catenoid_split(self, catenoid_data):
        pair = split_surface(catenoid_data)
        assert pair.m_g == scene_surface_data(builtin_scene("catenoid-first-kind"))
        assert pair.m_h == scene_surface_data(builtin_scene("catenoid-second-kind"))

    def test_round_trip(self, typed_data):
        pair = split_surface(typed_data)
        assert merge_surfaces(pair, typed_data.omega1, typed_data.omega2) == typed_data

    def test_merge_rejects_coinciding_values(self):
        m = CanonicalSurfaceDataR31(parse("t"), parse("t"), ((0.0, 1.0), (0.0, 1.0)))
        with pytest.raises(CrossConditionError) as exc_info:
            merge_surfaces(SurfacePair(m, m))
        t1, t2 = exc_info.value.witness
        assert t1 == pytest.approx(t2)

    def test_pair_needs_shared_domain(self):
        first = CanonicalSurfaceDataR31(parse("t"), parse("-t"), ((0.0, 1.0), (2.0, 3.0)))
        second = CanonicalSurfaceDataR31(parse("t"), parse("-t"), ((0.0, 1.0), (2.0, 4.0)))
        with pytest.raises(PreconditionError):
            SurfacePair(first, second)

    def test_split_curve(self):
        alpha_g, alpha_h = split_curve(parse("exp(t)"), parse("exp(-t)"), (0.0, 1.0), omega=-1)
        ts = np.linspace(0.0, 1.0, 5)
        assert alpha_g.omega == 1
        np.testing.assert_allclose(alpha_g.accel_norm2(ts), 1.0, atol=1e-9)
        np.testing.assert_allclose(alpha_h.accel_norm2(ts), 1.0, atol=1e-9)

    def test_split_curve_ignores_sign_of_split_curve(self):
        ts = np.linspace(0.0, 1.0, 5)
        plus = split_curve(parse("exp(t)"), parse("t^3 + t"), (0.0, 1.0), omega=1)
        minus = split_curve(parse("exp(t)"), parse("t^3 + t"), (0.0, 1.0), omega=-1)
        for a, b in zip(plus, minus, strict=True):
            assert a.omega == b.omega == 1
            np.testing.assert_array_equal(a.derivative(ts), b.derivative(ts))

    def test_split_curve_rejects_bad_omega(self):
        with pytest.raises(ValueError):
            split_curve(parse("t"), parse("-t"), (0.0, 1.0), omega=0)

    def test_split_curve_from_jets(self, gamma1):
        ts = np.linspace(-1.0, 1.0, 7)
        g, h = split_curve_from_jets(gamma1, ts)
        np.testing.assert_allclose(g.v, np.exp(ts), rtol=1e-10)
        np.testing.assert_allclose(h.d1, np.exp(ts), rtol=1e-10)


class TestCurvatureRelation:
    def test_catenoid_pair_curvatures(self, catenoid_data):
        sample = relation_from_surface(catenoid_data, 1.0, 1.0)
        assert float(sample.K_g) == pytest.approx(-1.0)
        assert float(sample.K_h) == pytest.approx(SECOND_KIND_K)
        assert sample.surface_type is SurfaceType.FIRST

    def test_catenoid_relation_at_reference_point(self, catenoid_data):
        sample = relation_from_surface(catenoid_data, 1.0, 1.0)
        pair = curvature_relation(sample.K_g, sample.K_h, sample.surface_type, sample.eta)
        assert float(pair.K) == pytest.approx(CATENOID_K, rel=1e-9)
        assert float(pair.kappa) == pytest.approx(CATENOID_KAPPA, rel=1e-9)

    def test_relation_reproduces_direct_curvatures(self, typed_data):
        t1, t2 = interior_grid(typed_data.domain, 6)
        sample = relation_from_surface(typed_data, t1, t2)
        pair = curvature_relation(sample.K_g, sample.K_h, sample.surface_type, sample.eta)
        np.testing.assert_allclose(pair.K, sample.direct.K, rtol=1e-9)
        np.testing.assert_allclose(pair.kappa, sample.direct.kappa, rtol=1e-9)

    def test_third_type_exchanges_sum_and_difference(self):
        regular = curvature_relation(-4.0, -1.0, SurfaceType.FIRST, 1.0)
        third = curvature_relation(-4.0, -1.0, SurfaceType.THIRD, 1.0)
        assert float(regular.K) == pytest.approx(np.sqrt(2) * 1.5)
        assert float(third.K) == pytest.approx(float(regular.kappa))
        assert float(third.kappa) == pytest.approx(float(regular.K))

    def test_flat_member_is_rejected(self):
        with pytest.raises(PreconditionError):
            curvature_relation(0.0, -1.0, SurfaceType.FIRST, 1.0)

    def test_factor_gauss_curvature(self):
        K = factor_gauss_curvature(parse("exp(t)").jet(1.0), parse("exp(-t)").jet(1.0))
        assert float(K) == pytest.approx(SECOND_KIND_K)

    def test_factor_curvature_matches_canonical_formula(self, catenoid_data):
        t1, t2 = interior_grid(catenoid_data.domain, 4)
        K = factor_gauss_curvature(catenoid_data.h1.jet(t1), catenoid_data.h2.jet(t2))
        expected = curvature_r31_canonical(split_surface(catenoid_data).m_h, t1, t2).K
        np.testing.assert_allclose(K, expected, rtol=1e-12)


class TestAreaRelation:
    def test_area_element_is_geometric_mean(self, typed_data):
        t1, t2 = interior_grid(typed_data.domain, 5)
        area, mean = area_relation(typed_data, t1, t2)
        np.testing.assert_allclose(area, mean, rtol=1e-12)

    def test_catenoid_area_element(self, catenoid_data):
        area, _ = area_relation(catenoid_data, 1.0, 1.0)
        assert float(area) == pytest.approx(np.sinh(1.0) / 2)


class TestMotionsOfThePair:
    def test_anti_isometry_negates_h(self, catenoid_data):
        pair = anti_isometry_split(catenoid_data)
        assert pair.m_g == split_surface(catenoid_data).m_g
        assert pair.m_h.g1.evaluate(0.5) == pytest.approx(-np.exp(0.5))

    def test_anti_isometry_keeps_pair_curvatures(self, catenoid_data):
        t1, t2 = interior_grid(catenoid_data.domain, 4)
        flipped = curvature_r31_canonical(anti_isometry_split(catenoid_data).m_h, t1, t2).K
        direct = curvature_r31_canonical(split_surface(catenoid_data).m_h, t1, t2).K
        np.testing.assert_allclose(flipped, direct, rtol=1e-12)

    def test_anti_isometric_image_negates_curvatures(self, catenoid_data):
        image = merge_surfaces(anti_isometry_split(catenoid_data))
        t1, t2 = interior_grid(catenoid_data.domain, 4)
        np.testing.assert_allclose(curvatures(image, t1, t2).K, -curvatures(catenoid_data, t1, t2).K, rtol=1e-10)
        np.testing.assert_allclose(
            curvatures(image, t1, t2).kappa, -curvatures(catenoid_data, t1, t2).kappa, rtol=1e-10
        )
        assert classify_type(image) is SurfaceType.SECOND

    def test_swap_exchanges_members(self, catenoid_data):
        pair = swap_split(catenoid_data)
        assert pair.m_g == split_surface(catenoid_data).m_h
        assert pair.m_h == split_surface(catenoid_data).m_g

    def test_reflected_image_keeps_K_and_negates_kappa(self, catenoid_data):
        image = merge_surfaces(swap_split(catenoid_data))
        t1, t2 = interior_grid(catenoid_data.domain, 4)
        direct = curvatures(catenoid_data, t1, t2)
        reflected = curvatures(image, t1, t2)
        np.testing.assert_allclose(reflected.K, direct.K, rtol=1e-10)
        np.testing.assert_allclose(reflected.kappa, -direct.kappa, rtol=1e-10)
