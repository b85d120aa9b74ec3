"""Tests for the invariant checks and the verification report."""

import json

import numpy as np
import pytest

from lorentz_surfaces.core.pseudo_euclidean import anti_isometry_r42, reflection_r42
from lorentz_surfaces.core.verification import (
    CheckContext,
    CheckStatus,
    Comparison,
    VerificationReport,
    compare,
    expected_curvature_signs,
    verify_curve,
    verify_motion,
    verify_spinor_map,
    verify_surface,
)
from lorentz_surfaces.scenes import builtin_scene, scene_surface_data

from .conftest import CATENOID_KAPPA, PUBLISHED_KAPPA


@pytest.fixture
def ctx():
    return CheckContext(seed=0)


def statuses(results):
    return {(check.name, check.status) for check in results}


class TestCompare:
    def test_scaled_comparison(self):
        assert compare("c", "s", [1.0, 100.0], [1.0, 100.5], 1e-2).status is CheckStatus.PASS
        assert compare("c", "s", [1.0, 100.0], [1.0, 100.5], 1e-3).status is CheckStatus.FAIL

    def test_absolute_comparison(self):
        result = compare("c", "s", [0.0, 2e-9], 0.0, 1e-9, Comparison.ABSOLUTE)
        assert result.status is CheckStatus.FAIL
        assert result.max_abs_error == pytest.approx(2e-9)

    def test_relative_comparison(self):
        assert compare("c", "s", [1e6], [1e6 + 1], 1e-5, Comparison.RELATIVE).passed

    def test_non_finite_values_fail(self):
        result = compare("c", "s", [np.nan], [0.0], 1.0)
        assert result.status is CheckStatus.FAIL
        assert result.max_abs_error is None


class TestSurfaceChecks:
    def test_catenoid_has_no_failures(self, ctx):
        results = verify_surface("catenoid-merged", scene_surface_data(builtin_scene("catenoid-merged")), ctx)
        assert all(check.passed for check in results)
        assert ("catenoid-immersion", CheckStatus.PASS) in statuses(results)
        assert ("merge-after-split", CheckStatus.PASS) in statuses(results)

    def test_published_normal_curvature_is_documented(self, ctx):
        results = verify_surface("catenoid-merged", scene_surface_data(builtin_scene("catenoid-merged")), ctx)
        documented = [check for check in results if check.status is CheckStatus.DOCUMENTED]
        assert [check.name for check in documented] == ["catenoid-published-normal-form"]
        details = documented[0].details
        assert details["published_closed_form"] == pytest.approx(PUBLISHED_KAPPA)
        assert details["curvature_formula"] == pytest.approx(CATENOID_KAPPA)

    @pytest.mark.parametrize("name", ["catenoid-first-kind", "catenoid-second-kind"])
    def test_r31_catenoids(self, ctx, name):
        results = verify_surface(name, scene_surface_data(builtin_scene(name)), ctx)
        assert all(check.passed for check in results)
        assert ("catenoid-residual", CheckStatus.PASS) in statuses(results)

    def test_typed_surfaces(self, ctx, typed_data):
        results = verify_surface("typed", typed_data, ctx)
        assert all(check.passed for check in results)
        assert ("type-vs-curvature-sign", CheckStatus.PASS) in statuses(results)

    def test_construction_error_becomes_failure(self, ctx):
        document = builtin_scene("catenoid-merged").model_dump()
        document["domain"] = [(-1.0, 1.0), (-1.0, 1.0)]
        data = scene_surface_data(builtin_scene("catenoid-merged").model_validate(document))
        results = verify_surface("crossing", data, ctx)
        assert [(check.name, check.status) for check in results] == [("surface-construction", CheckStatus.FAIL)]
        assert results[0].details["error"] == "PreconditionError"

    def test_tiny_tolerance_override_fails(self):
        results = verify_surface(
            "catenoid-merged", scene_surface_data(builtin_scene("catenoid-merged")), CheckContext(override=1e-300)
        )
        assert any(check.status is CheckStatus.FAIL for check in results)
        immersion = next(check for check in results if check.name == "catenoid-immersion")
        assert immersion.tolerance == 1e-300


class TestCurveChecks:
    @pytest.mark.parametrize("fixture", ["gamma1", "gamma2"])
    def test_catenoid_curves(self, ctx, fixture, request):
        results = verify_curve(fixture, request.getfixturevalue(fixture), ctx)
        assert results
        assert all(check.passed for check in results)


class TestMotionChecks:
    def test_expected_signs(self):
        assert expected_curvature_signs(anti_isometry_r42()) == (-1, -1)
        assert expected_curvature_signs(reflection_r42(3)) == (1, -1)

    def test_user_motion(self, ctx, catenoid_data):
        results = verify_motion("catenoid-merged", catenoid_data, reflection_r42(3), ctx)
        assert results
        assert all(check.passed for check in results)


class TestSpinorChecks:
    def test_spinor_suite_passes(self, ctx):
        results = verify_spinor_map(ctx)
        names = {check.name for check in results}
        assert {"spinor-multiplicativity", "spinor-metric", "spinor-kernel", "mobius-consistency"} <= names
        assert all(check.passed for check in results)

    def test_seeded_runs_are_identical(self):
        first = [check.to_dict() for check in verify_spinor_map(CheckContext(seed=3))]
        second = [check.to_dict() for check in verify_spinor_map(CheckContext(seed=3))]
        assert first == second


class TestReport:
    def test_empty_report(self):
        report = VerificationReport(corpus="none", seed=0)
        assert report.ok
        assert report.summary == {"total": 0, "passed": 0, "failed": 0, "documented": 0}

    def test_json_document(self, ctx):
        report = VerificationReport(corpus="spinor", seed=0, checks=verify_spinor_map(ctx))
        document = json.loads(report.to_json())
        assert document["corpus"] == "spinor"
        assert document["summary"]["total"] == len(report.checks)
        assert all(check["status"] == "pass" for check in document["checks"])

    def test_failures(self):
        failing = compare("c", "s", [1.0], [2.0], 1e-3)
        report = VerificationReport(corpus="x", seed=0, checks=[failing])
        assert not report.ok
        assert report.failures() == [failing]
        assert report.summary["failed"] == 1
