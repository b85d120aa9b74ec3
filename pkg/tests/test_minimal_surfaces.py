"""Tests for minimal Lorentz surfaces: immersion, first form, curvatures and types."""

import numpy as np
import pytest

from lorentz_surfaces.core.expr_jet import parse
from lorentz_surfaces.core.minimal_surfaces import (
    CanonicalSurfaceDataR31,
    CanonicalSurfaceDataR42,
    SurfaceType,
    build_surface,
    canonical_F,
    catenoid_first_kind_residual,
    catenoid_second_kind_residual,
    classify_by_curvature,
    classify_type,
    conjugate_surface,
    curvature_r31,
    curvature_r31_canonical,
    curvatures,
    curvatures_r42_canonical,
    gauss_curvature_oracle,
    interior_grid,
    sample_surface,
    surface_from_data,
)
from lorentz_surfaces.core.null_curves import canonical_r31
from lorentz_surfaces.errors import ConventionError, CrossConditionError, PreconditionError, SpaceMismatchError
from lorentz_surfaces.scenes import builtin_scene, scene_surface_data

from .conftest import CATENOID_K, CATENOID_KAPPA, SECOND_KIND_K


def catenoid_immersion(t1, t2):
    return 0.5 * np.stack(
        np.broadcast_arrays(np.sinh(t1), np.cosh(t1) - t2, np.sinh(t2), t1 - np.cosh(t2))
    )


class TestCatenoid:
    def test_immersion_up_to_constant(self, catenoid):
        ts = np.linspace(0.2, 2.0, 20)
        points = catenoid.grid_points(ts, ts)
        expected = catenoid_immersion(ts[:, np.newaxis], ts[np.newaxis, :])
        offset = points[:, :1, :1] - expected[:, :1, :1]
        np.testing.assert_allclose(points, expected + offset, atol=1e-8)

    def test_first_form_is_isotropic(self, catenoid):
        t1, t2 = interior_grid(catenoid.domain, 6)
        E, F, G = catenoid.first_form(t1, t2)
        np.testing.assert_allclose(E, 0.0, atol=1e-12)
        np.testing.assert_allclose(G, 0.0, atol=1e-12)
        np.testing.assert_allclose(F, -(np.sinh(t1) + np.sinh(t2)) / 4, atol=1e-12)

    def test_canonical_F_matches_tangents(self, catenoid, catenoid_data):
        t1, t2 = interior_grid(catenoid_data.domain, 6)
        np.testing.assert_allclose(canonical_F(catenoid_data, t1, t2), catenoid.first_form_F(t1, t2), rtol=1e-10)

    def test_gauss_curvature_closed_form(self, catenoid_data):
        t1, t2 = interior_grid(catenoid_data.domain, 8)
        expected = -4 * np.cosh(t1) * np.cosh(t2) / (np.sinh(t1) + np.sinh(t2)) ** 3
        np.testing.assert_allclose(curvatures(catenoid_data, t1, t2).K, expected, rtol=1e-6)

    def test_reference_values(self, catenoid_data):
        pair = curvatures(catenoid_data, 1.0, 1.0)
        assert pair.K == pytest.approx(CATENOID_K, rel=1e-6)
        assert pair.kappa == pytest.approx(CATENOID_KAPPA, rel=1e-6)
        assert pair.K == pytest.approx(-0.73351, abs=1e-5)
        assert pair.kappa == pytest.approx(-0.11741, abs=1e-5)

    def test_normal_curvature_closed_form(self, catenoid_data):
        t1, t2 = interior_grid(catenoid_data.domain, 8)
        expected = 4 * (1 - np.sinh(t1) * np.sinh(t2)) / (np.sinh(t1) + np.sinh(t2)) ** 3
        np.testing.assert_allclose(curvatures(catenoid_data, t1, t2).kappa, expected, rtol=1e-6)

    def test_general_and_canonical_formulas_agree(self, catenoid_data, catenoid_general_data):
        t1, t2 = interior_grid(catenoid_data.domain, 6)
        general = curvatures(catenoid_general_data, t1, t2)
        canonical = curvatures_r42_canonical(catenoid_data, t1, t2)
        np.testing.assert_allclose(general.K, canonical.K, rtol=1e-8)
        np.testing.assert_allclose(general.kappa, canonical.kappa, rtol=1e-8)

    def test_oracle_agrees(self, catenoid, catenoid_data):
        t1, t2 = interior_grid(catenoid_data.domain, 10)
        K = curvatures(catenoid_data, t1, t2).K
        oracle = gauss_curvature_oracle(catenoid, t1, t2)
        assert np.all(np.abs(oracle - K) <= 1e-4 * (1 + np.abs(K)))

    def test_type(self, catenoid_data):
        assert classify_type(catenoid_data) is SurfaceType.FIRST

    def test_crossing_domain_is_rejected(self):
        data = CanonicalSurfaceDataR42(
            parse("exp(t)"), parse("exp(t)"), parse("-exp(t)"), parse("exp(-t)"), ((-1.0, 1.0), (-1.0, 1.0))
        )
        with pytest.raises(PreconditionError) as exc_info:
            surface_from_data(data)
        t1, t2 = exc_info.value.witness
        assert t1 + t2 == pytest.approx(0.0, abs=1e-2)


class TestConjugate:
    def test_conjugate_negates_curvatures(self, catenoid, catenoid_data):
        t1, t2 = interior_grid(catenoid_data.domain, 5)
        conjugate = conjugate_surface(catenoid)
        direct = curvatures(catenoid_data, t1, t2)
        flipped = curvatures(conjugate.data, t1, t2)
        np.testing.assert_allclose(flipped.K, -direct.K, rtol=1e-10)
        np.testing.assert_allclose(flipped.kappa, -direct.kappa, rtol=1e-10)

    def test_conjugate_oracle(self, catenoid, catenoid_data):
        t1, t2 = interior_grid(catenoid_data.domain, 5)
        K = curvatures(catenoid_data, t1, t2).K
        oracle = gauss_curvature_oracle(conjugate_surface(catenoid), t1, t2)
        assert np.all(np.abs(oracle + K) <= 1e-4 * (1 + np.abs(K)))

    def test_conjugate_flips_F(self, catenoid):
        t1, t2 = interior_grid(catenoid.domain, 4)
        np.testing.assert_allclose(conjugate_surface(catenoid).first_form_F(t1, t2), -catenoid.first_form_F(t1, t2))


class TestTypes:
    def test_typed_corpus_has_negative_F(self, typed_data):
        t1, t2 = interior_grid(typed_data.domain, 6)
        assert np.all(canonical_F(typed_data, t1, t2) < 0)

    def test_type_matches_curvature_sign(self, typed_data):
        surface_type = classify_type(typed_data)
        t1, t2 = interior_grid(typed_data.domain, 6)
        pair = curvatures(typed_data, t1, t2)
        expected = -1 if surface_type is SurfaceType.THIRD else 1
        assert np.all(classify_by_curvature(pair.K, pair.kappa) == expected)

    @pytest.mark.parametrize(
        "name, expected",
        [
            ("first-type", SurfaceType.FIRST),
            ("second-type", SurfaceType.SECOND),
            ("third-type", SurfaceType.THIRD),
            ("second-type-symmetric", SurfaceType.SECOND),
        ],
    )
    def test_classification(self, name, expected):
        assert classify_type(scene_surface_data(builtin_scene(name))) is expected

    def test_canonical_formulas_need_negative_F(self, catenoid_data):
        flipped = CanonicalSurfaceDataR42(
            catenoid_data.g1, catenoid_data.h1, catenoid_data.g2, catenoid_data.h2, catenoid_data.domain, 1, -1
        )
        with pytest.raises(ConventionError):
            curvatures_r42_canonical(flipped, 1.0, 1.0)

    def test_mixed_sign_factor(self):
        data = CanonicalSurfaceDataR42(parse("t"), parse("t^2"), parse("t"), parse("-t"), ((-1.0, 1.0), (3.0, 4.0)))
        with pytest.raises(PreconditionError):
            classify_type(data)


class TestR31Surfaces:
    def test_first_kind_catenoid(self):
        data = scene_surface_data(builtin_scene("catenoid-first-kind"))
        s = surface_from_data(data, anchor=(0.0, 0.0), base_point=[0.0, 1.0, 0.0])
        ts = np.linspace(0.2, 2.0, 9)
        np.testing.assert_allclose(catenoid_first_kind_residual(s.grid_points(ts, ts)), 0.0, atol=1e-8)
        assert curvatures(data, 1.0, 1.0).K == pytest.approx(-1.0)

    def test_second_kind_catenoid(self):
        data = scene_surface_data(builtin_scene("catenoid-second-kind"))
        s = surface_from_data(data, anchor=(0.0, 0.0), base_point=[0.0, 0.0, 0.0])
        ts = np.linspace(0.2, 2.0, 9)
        np.testing.assert_allclose(catenoid_second_kind_residual(s.grid_points(ts, ts)), 0.0, atol=1e-8)
        assert curvatures(data, 1.0, 1.0).K == pytest.approx(SECOND_KIND_K)

    def test_normal_curvature_vanishes(self):
        data = scene_surface_data(builtin_scene("catenoid-second-kind"))
        t1, t2 = interior_grid(data.domain, 4)
        np.testing.assert_array_equal(curvature_r31(data, t1, t2).kappa, 0.0)

    def test_canonical_and_general_formulas_agree(self):
        data = scene_surface_data(builtin_scene("catenoid-second-kind"))
        t1, t2 = interior_grid(data.domain, 5)
        np.testing.assert_allclose(curvature_r31_canonical(data, t1, t2).K, curvature_r31(data, t1, t2).K, rtol=1e-8)

    def test_oracle_agrees(self):
        data = scene_surface_data(builtin_scene("catenoid-first-kind"))
        s = surface_from_data(data)
        t1, t2 = interior_grid(data.domain, 10)
        K = curvatures(data, t1, t2).K
        assert np.all(np.abs(gauss_curvature_oracle(s, t1, t2) - K) <= 1e-4 * (1 + np.abs(K)))

    def test_coinciding_generators(self):
        data = CanonicalSurfaceDataR31(parse("t"), parse("t"), ((0.0, 1.0), (0.5, 1.5)))
        with pytest.raises(CrossConditionError):
            curvature_r31_canonical(data, np.array([0.75]), np.array([0.75]))


class TestBuildSurface:
    def test_space_mismatch(self, gamma1):
        curve = canonical_r31(parse("exp(t)"), 1, (0.0, 1.0))
        with pytest.raises(SpaceMismatchError):
            build_surface(gamma1, curve)

    def test_base_point_anchoring(self, catenoid_data):
        s = surface_from_data(catenoid_data, base_point=[1.0, 2.0, 3.0, 4.0])
        np.testing.assert_allclose(s.point(*s.anchor), [1.0, 2.0, 3.0, 4.0], atol=1e-12)

    def test_sample_surface(self, catenoid):
        samples = sample_surface(catenoid, np.linspace(0.5, 1.5, 3), np.linspace(0.5, 1.5, 4))
        assert samples.points.shape == (4, 3, 4)
        assert samples.K.shape == (3, 4)
        assert samples.surface_type is SurfaceType.FIRST
        assert samples.K[1, 1] == pytest.approx(curvatures(catenoid.data, 1.0, 0.5 + 1.0 / 3.0).K)
