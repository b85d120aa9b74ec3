"""Shared fixtures: the catenoid example and one surface of each type."""

import numpy as np
import pytest

from lorentz_surfaces.config import NumericsConfig
from lorentz_surfaces.core.minimal_surfaces import surface_from_data
from lorentz_surfaces.scenes import builtin_scene, scene_curve, scene_surface_data

# Reference values at (t1, t2) = (1, 1)
CATENOID_K = -4 * np.cosh(1.0) ** 2 / (2 * np.sinh(1.0)) ** 3
CATENOID_KAPPA = (1 - np.sinh(1.0) ** 2) / (2 * np.sinh(1.0) ** 3)
PUBLISHED_KAPPA = (4 - 4 * np.cosh(1.0) ** 2) / (2 * np.sinh(1.0)) ** 3
SECOND_KIND_K = -16 / (np.e - 1 / np.e) ** 4

TYPED_SCENES = ("first-type", "second-type", "third-type", "second-type-symmetric")


@pytest.fixture
def gamma1():
    return scene_curve(builtin_scene("catenoid-gamma1"))


@pytest.fixture
def gamma2():
    return scene_curve(builtin_scene("catenoid-gamma2"))


@pytest.fixture
def catenoid_data():
    return scene_surface_data(builtin_scene("catenoid-merged"))


@pytest.fixture
def catenoid_general_data():
    return scene_surface_data(builtin_scene("catenoid-general"))


@pytest.fixture
def catenoid(catenoid_data):
    return surface_from_data(catenoid_data)


@pytest.fixture(params=TYPED_SCENES)
def typed_data(request):
    return scene_surface_data(builtin_scene(request.param))


@pytest.fixture
def config():
    return NumericsConfig(threads=2)
