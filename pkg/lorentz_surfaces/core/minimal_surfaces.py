"""
Minimal Lorentz surfaces x(t1, t2) = (alpha1(t1) + alpha2(t2)) / 2.

Surfaces are assembled from pairs of null curves given by general or canonical
Weierstrass data. The module evaluates the immersion and its conjugate, the
first fundamental form (E = G = 0, F), Gauss and normal curvature from closed
formulas, a finite-difference Gauss curvature oracle and the type of the surface.
"""

import logging
from dataclasses import dataclass
from enum import Enum

import numpy as np

from ..errors import (
    ConventionError,
    CrossConditionError,
    GeometryError,
    PreconditionError,
    SpaceMismatchError,
)
from .expr_jet import Expression, Jet2
from .null_curves import (
    NullCurve,
    WeierstrassR31,
    WeierstrassR42,
    canonical_factor_r31,
    canonical_factor_r42,
    canonical_r31,
    canonical_r42,
    find_vanishing,
    weier_r31,
    weier_r42,
)
from .numerics import DEFAULT_TOLERANCES, NumericTolerances, validation_grid
from .pseudo_euclidean import Space, dot

logger = logging.getLogger(__name__)

Interval = tuple[float, float]
Domain = tuple[Interval, Interval]

# Interior samples per axis for the curvature-sign cross-check of classify_type
TYPE_CHECK_SAMPLES = 5


class SurfaceType(str, Enum):
    FIRST = "first"
    SECOND = "second"
    THIRD = "third"


@dataclass(frozen=True)
class CurvaturePair:
    K: np.ndarray | float
    kappa: np.ndarray | float


def _check_domain(domain) -> Domain:
    (a1, b1), (a2, b2) = domain
    if not (a1 < b1 and a2 < b2):
        raise PreconditionError(f"Empty parameter domain {domain!r}")
    return (float(a1), float(b1)), (float(a2), float(b2))


def _check_omegas(*omegas: int) -> None:
    for omega in omegas:
        if omega not in (1, -1):
            raise ValueError(f"omega must be +1 or -1, got {omega!r}")


# ---------------------------------------------------------------------------
# Surface data
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SurfaceDataR42:
    """General Weierstrass data (f_i, g_i, h_i) of both generating curves"""

    first: WeierstrassR42
    second: WeierstrassR42
    domain: Domain

    def __post_init__(self):
        object.__setattr__(self, "domain", _check_domain(self.domain))

    space = Space.R42


@dataclass(frozen=True)
class SurfaceDataR31:
    first: WeierstrassR31
    second: WeierstrassR31
    domain: Domain

    def __post_init__(self):
        object.__setattr__(self, "domain", _check_domain(self.domain))

    space = Space.R31


@dataclass(frozen=True)
class CanonicalSurfaceDataR42:
    g1: Expression
    h1: Expression
    g2: Expression
    h2: Expression
    domain: Domain
    omega1: int = 1
    omega2: int = 1

    def __post_init__(self):
        _check_omegas(self.omega1, self.omega2)
        object.__setattr__(self, "domain", _check_domain(self.domain))

    space = Space.R42


@dataclass(frozen=True)
class CanonicalSurfaceDataR31:
    g1: Expression
    g2: Expression
    domain: Domain
    omega1: int = 1
    omega2: int = 1

    def __post_init__(self):
        _check_omegas(self.omega1, self.omega2)
        object.__setattr__(self, "domain", _check_domain(self.domain))

    space = Space.R31


SurfaceData = SurfaceDataR42 | SurfaceDataR31 | CanonicalSurfaceDataR42 | CanonicalSurfaceDataR31


def conjugate_data(data: SurfaceData) -> SurfaceData:
    """Data of the conjugate surface: the second curve is negated"""
    if isinstance(data, SurfaceDataR42 | SurfaceDataR31):
        return type(data)(data.first, data.second.negated(), data.domain)
    if isinstance(data, CanonicalSurfaceDataR42):
        return CanonicalSurfaceDataR42(data.g1, data.h1, data.g2, data.h2, data.domain, data.omega1, -data.omega2)
    return CanonicalSurfaceDataR31(data.g1, data.g2, data.domain, data.omega1, -data.omega2)


# ---------------------------------------------------------------------------
# Grid witnesses
# ---------------------------------------------------------------------------


def _point_witness(mask: np.ndarray, t1, t2) -> tuple[float, float] | None:
    mask = np.asarray(mask)
    if not mask.any():
        return None
    index = np.unravel_index(int(np.flatnonzero(mask)[0]), mask.shape)
    t1_b, t2_b = np.broadcast_to(t1, mask.shape), np.broadcast_to(t2, mask.shape)
    return float(t1_b[index]), float(t2_b[index])


def constant_sign_witness(values: np.ndarray, t1, t2, tol: float) -> tuple[float, float] | None:
    """First point where ``values`` is (numerically) zero or differs in sign from the first sample"""
    values = np.asarray(values, dtype=float)
    reference = np.sign(values.flat[0])
    bad = ~(np.abs(values) > tol) | (np.sign(values) != reference)
    return _point_witness(bad, t1, t2)


def check_cross_condition(
    e1: Expression,
    e2: Expression,
    domain: Domain,
    label: str,
    tolerances: NumericTolerances = DEFAULT_TOLERANCES,
) -> None:
    """e1(t1) != e2(t2) on the product of the two validation grids"""
    ts1 = validation_grid(domain[0], tolerances.grid_points)[:, np.newaxis]
    ts2 = validation_grid(domain[1], tolerances.grid_points)[np.newaxis, :]
    difference = e1.evaluate(ts1) - e2.evaluate(ts2)
    witness = constant_sign_witness(difference, ts1, ts2, tolerances.tol_degenerate)
    if witness is not None:
        raise CrossConditionError(f"{label}1(t1) = {label}2(t2) on the domain", witness)


def _require_distinct(values: np.ndarray, t1, t2, label: str) -> None:
    witness = _point_witness(np.asarray(values) == 0, t1, t2)
    if witness is not None:
        raise CrossConditionError(f"{label}1(t1) = {label}2(t2)", witness)


# ---------------------------------------------------------------------------
# Surfaces
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class MinimalSurface:
    space: Space
    alpha1: NullCurve
    alpha2: NullCurve
    domain: Domain
    anchor: tuple[float, float]
    base_point: np.ndarray
    data: SurfaceData | None = None

    @property
    def tolerances(self) -> NumericTolerances:
        return self.alpha1.tolerances

    def point(self, t1, t2) -> np.ndarray:
        """x(t1, t2), broadcasting t1 against t2"""
        return 0.5 * (self.alpha1.points(t1) + self.alpha2.points(t2))

    def grid_points(self, ts1, ts2) -> np.ndarray:
        """x on the product grid; shape (n, len(ts1), len(ts2))"""
        p1 = self.alpha1.points(np.asarray(ts1, dtype=float))
        p2 = self.alpha2.points(np.asarray(ts2, dtype=float))
        return 0.5 * (p1[:, :, np.newaxis] + p2[:, np.newaxis, :])

    def tangents(self, t1, t2) -> tuple[np.ndarray, np.ndarray]:
        """x_t1 = alpha1'/2 and x_t2 = alpha2'/2"""
        return 0.5 * self.alpha1.derivative(t1), 0.5 * self.alpha2.derivative(t2)

    def first_form(self, t1, t2) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        x1, x2 = self.tangents(t1, t2)
        return dot(self.space, x1, x1), dot(self.space, x1, x2), dot(self.space, x2, x2)

    def first_form_F(self, t1, t2) -> np.ndarray:
        return dot(self.space, self.alpha1.derivative(t1), self.alpha2.derivative(t2)) / 4.0


def _default_surface_anchor(domain: Domain) -> tuple[float, float]:
    (a1, b1), (a2, b2) = domain
    if a1 <= 0.0 <= b1 and a2 <= 0.0 <= b2:
        return 0.0, 0.0
    return a1, a2


def build_surface(
    a1: NullCurve,
    a2: NullCurve,
    domain: Domain | None = None,
    anchor: tuple[float, float] | None = None,
    base_point=None,
    data: SurfaceData | None = None,
) -> MinimalSurface:
    """Minimal surface (alpha1(t1) + alpha2(t2)) / 2

    With ``base_point`` both curves are anchored so that x(anchor) = base_point;
    the anchor is (0, 0) when it lies in the domain, else the lower-left corner.
    Without it the curves keep their own base points.
    """
    if a1.space is not a2.space:
        raise SpaceMismatchError(f"Curves live in {a1.space.value} and {a2.space.value}")
    domain = _check_domain((a1.interval, a2.interval) if domain is None else domain)
    anchor = _default_surface_anchor(domain) if anchor is None else (float(anchor[0]), float(anchor[1]))
    tolerances = a1.tolerances

    ts1 = validation_grid(domain[0], tolerances.grid_points)
    ts2 = validation_grid(domain[1], tolerances.grid_points)
    F = dot(a1.space, a1.derivative(ts1)[:, :, np.newaxis], a2.derivative(ts2)[:, np.newaxis, :]) / 4.0
    witness = constant_sign_witness(F, ts1[:, np.newaxis], ts2[np.newaxis, :], tolerances.tol_degenerate)
    if witness is not None:
        raise PreconditionError("F vanishes or changes sign on the domain (degenerate metric)", witness)

    if base_point is not None:
        base = np.asarray(base_point, dtype=float)
        a1, a2 = a1.rebased(anchor[0], base), a2.rebased(anchor[1], base)
    else:
        base = 0.5 * (a1.points(anchor[0]) + a2.points(anchor[1]))
    logger.debug("Built surface in %s on %s anchored at %s", a1.space.value, domain, anchor)
    return MinimalSurface(a1.space, a1, a2, domain, anchor, base, data)


def conjugate_surface(s: MinimalSurface) -> MinimalSurface:
    """y(t1, t2) = (alpha1(t1) - alpha2(t2)) / 2"""
    alpha2 = s.alpha2.negated()
    base = 0.5 * (s.alpha1.points(s.anchor[0]) + alpha2.points(s.anchor[1]))
    data = None if s.data is None else conjugate_data(s.data)
    return MinimalSurface(s.space, s.alpha1, alpha2, s.domain, s.anchor, base, data)


def first_form_F(s: MinimalSurface, t1, t2) -> np.ndarray:
    """F = dot(alpha1'(t1), alpha2'(t2)) / 4"""
    return s.first_form_F(t1, t2)


def surface_from_general_r42(data: SurfaceDataR42, tolerances=DEFAULT_TOLERANCES, **kwargs) -> MinimalSurface:
    a1 = weier_r42(data.first, data.domain[0], tolerances=tolerances)
    a2 = weier_r42(data.second, data.domain[1], tolerances=tolerances)
    return build_surface(a1, a2, data.domain, data=data, **kwargs)


def surface_from_general_r31(data: SurfaceDataR31, tolerances=DEFAULT_TOLERANCES, **kwargs) -> MinimalSurface:
    a1 = weier_r31(data.first, data.domain[0], tolerances=tolerances)
    a2 = weier_r31(data.second, data.domain[1], tolerances=tolerances)
    return build_surface(a1, a2, data.domain, data=data, **kwargs)


def surface_from_canonical_r42(
    data: CanonicalSurfaceDataR42, tolerances=DEFAULT_TOLERANCES, **kwargs
) -> MinimalSurface:
    a1 = canonical_r42(data.g1, data.h1, data.omega1, data.domain[0], tolerances=tolerances)
    a2 = canonical_r42(data.g2, data.h2, data.omega2, data.domain[1], tolerances=tolerances)
    return build_surface(a1, a2, data.domain, data=data, **kwargs)


def surface_from_canonical_r31(
    data: CanonicalSurfaceDataR31, tolerances=DEFAULT_TOLERANCES, **kwargs
) -> MinimalSurface:
    a1 = canonical_r31(data.g1, data.omega1, data.domain[0], tolerances=tolerances)
    a2 = canonical_r31(data.g2, data.omega2, data.domain[1], tolerances=tolerances)
    return build_surface(a1, a2, data.domain, data=data, **kwargs)


def surface_from_data(data: SurfaceData, tolerances=DEFAULT_TOLERANCES, **kwargs) -> MinimalSurface:
    builders = {
        SurfaceDataR42: surface_from_general_r42,
        SurfaceDataR31: surface_from_general_r31,
        CanonicalSurfaceDataR42: surface_from_canonical_r42,
        CanonicalSurfaceDataR31: surface_from_canonical_r31,
    }
    return builders[type(data)](data, tolerances, **kwargs)


# ---------------------------------------------------------------------------
# Curvature formulas
# ---------------------------------------------------------------------------


def _factor_jets_r42(data: SurfaceDataR42 | CanonicalSurfaceDataR42, t1, t2):
    """(f, g, h) jets of both curves; canonical data gets f = omega / (2 sqrt|g'h'|)"""
    if isinstance(data, CanonicalSurfaceDataR42):
        t1, t2 = np.asarray(t1, dtype=float), np.asarray(t2, dtype=float)
        f1 = canonical_factor_r42(data.g1, data.h1, data.omega1)(t1)
        f2 = canonical_factor_r42(data.g2, data.h2, data.omega2)(t2)
        return (f1, data.g1.jet(t1), data.h1.jet(t1)), (f2, data.g2.jet(t2), data.h2.jet(t2))
    first, second = data.first, data.second
    return (first.f.jet(t1), first.g.jet(t1), first.h.jet(t1)), (second.f.jet(t2), second.g.jet(t2), second.h.jet(t2))


def _factor_jets_r31(data: SurfaceDataR31 | CanonicalSurfaceDataR31, t1, t2) -> tuple[tuple[Jet2, Jet2], ...]:
    if isinstance(data, CanonicalSurfaceDataR31):
        t1, t2 = np.asarray(t1, dtype=float), np.asarray(t2, dtype=float)
        f1 = canonical_factor_r31(data.g1, data.omega1)(t1)
        f2 = canonical_factor_r31(data.g2, data.omega2)(t2)
        return (f1, data.g1.jet(t1)), (f2, data.g2.jet(t2))
    return (data.first.f.jet(t1), data.first.g.jet(t1)), (data.second.f.jet(t2), data.second.g.jet(t2))


def curvatures_r42(data: SurfaceDataR42 | CanonicalSurfaceDataR42, t1, t2) -> CurvaturePair:
    """K, kappa = 2/(f1 f2 dg dh) * (g1'g2'/dg^2 +- h1'h2'/dh^2)"""
    first, second = _factor_jets_r42(data, t1, t2)
    return curvatures_r42_from_jets(first, second, t1, t2)


def curvatures_r42_from_jets(first: tuple[Jet2, Jet2, Jet2], second: tuple[Jet2, Jet2, Jet2], t1, t2) -> CurvaturePair:
    """General curvature formulas on sampled (f, g, h) jets of both curves"""
    (f1, g1, h1), (f2, g2, h2) = first, second
    dg, dh = g1.v - g2.v, h1.v - h2.v
    _require_distinct(dg, t1, t2, "g")
    _require_distinct(dh, t1, t2, "h")
    ff = f1.v * f2.v
    witness = _point_witness(ff == 0, t1, t2)
    if witness is not None:
        raise PreconditionError("f1 f2 vanishes", witness)
    prefactor = 2.0 / (ff * dg * dh)
    g_term = g1.d1 * g2.d1 / dg**2
    h_term = h1.d1 * h2.d1 / dh**2
    return CurvaturePair(prefactor * (g_term + h_term), prefactor * (g_term - h_term))


def canonical_F(data: CanonicalSurfaceDataR42 | CanonicalSurfaceDataR31, t1, t2) -> np.ndarray:
    """F in canonical coordinates

    R^4_2: -w1 w2 (g1 - g2)(h1 - h2) / (8 sqrt|g1'h1'g2'h2'|)
    R^3_1: -w1 w2 (g1 - g2)^2 / (8 |g1'g2'|)
    """
    omega = data.omega1 * data.omega2
    g1, g2 = data.g1.jet(t1), data.g2.jet(t2)
    if isinstance(data, CanonicalSurfaceDataR31):
        return -omega * (g1.v - g2.v) ** 2 / (8.0 * np.abs(g1.d1 * g2.d1))
    h1, h2 = data.h1.jet(t1), data.h2.jet(t2)
    root = np.sqrt(np.abs(g1.d1 * h1.d1 * g2.d1 * h2.d1))
    return -omega * (g1.v - g2.v) * (h1.v - h2.v) / (8.0 * root)


def curvatures_r42_canonical(data: CanonicalSurfaceDataR42, t1, t2) -> CurvaturePair:
    """K, kappa = 8 sqrt|g1'h1'g2'h2'| / |dg dh| * (g1'g2'/dg^2 +- h1'h2'/dh^2); requires F < 0"""
    F = canonical_F(data, t1, t2)
    witness = _point_witness(~(np.asarray(F) < 0), t1, t2)
    if witness is not None:
        raise ConventionError(f"Canonical curvature formulas require F < 0 (violated at {witness!r})")
    g1, h1, g2, h2 = data.g1.jet(t1), data.h1.jet(t1), data.g2.jet(t2), data.h2.jet(t2)
    dg, dh = g1.v - g2.v, h1.v - h2.v
    prefactor = 8.0 * np.sqrt(np.abs(g1.d1 * h1.d1 * g2.d1 * h2.d1)) / np.abs(dg * dh)
    g_term = g1.d1 * g2.d1 / dg**2
    h_term = h1.d1 * h2.d1 / dh**2
    return CurvaturePair(prefactor * (g_term + h_term), prefactor * (g_term - h_term))


def _zero_like(values):
    return np.zeros_like(values) if np.ndim(values) else 0.0


def curvature_r31(data: SurfaceDataR31 | CanonicalSurfaceDataR31, t1, t2) -> CurvaturePair:
    """K = 4 g1'g2' / (f1 f2 (g1 - g2)^4), kappa = 0"""
    first, second = _factor_jets_r31(data, t1, t2)
    return curvature_r31_from_jets(first, second, t1, t2)


def curvature_r31_from_jets(first: tuple[Jet2, Jet2], second: tuple[Jet2, Jet2], t1, t2) -> CurvaturePair:
    (f1, g1), (f2, g2) = first, second
    dg = g1.v - g2.v
    _require_distinct(dg, t1, t2, "g")
    K = 4.0 * g1.d1 * g2.d1 / (f1.v * f2.v * dg**4)
    return CurvaturePair(K, _zero_like(K))


def curvature_r31_canonical(data: CanonicalSurfaceDataR31, t1, t2) -> CurvaturePair:
    """K = 16 w1 w2 |g1'g2'| g1'g2' / (g1 - g2)^4, kappa = 0"""
    g1, g2 = data.g1.jet(t1), data.g2.jet(t2)
    dg = g1.v - g2.v
    _require_distinct(dg, t1, t2, "g")
    product = g1.d1 * g2.d1
    K = 16.0 * data.omega1 * data.omega2 * np.abs(product) * product / dg**4
    return CurvaturePair(K, _zero_like(K))


def curvatures(data: SurfaceData, t1, t2) -> CurvaturePair:
    """Closed-form (K, kappa) for any surface data"""
    if isinstance(data, SurfaceDataR42 | CanonicalSurfaceDataR42):
        return curvatures_r42(data, t1, t2)
    return curvature_r31(data, t1, t2)


def classify_by_curvature(K, kappa) -> np.ndarray:
    """Sign of K^2 - kappa^2: positive for first/second type, negative for third"""
    return np.sign(np.asarray(K) ** 2 - np.asarray(kappa) ** 2)


def _factor_sign(g: Expression, h: Expression, interval: Interval, label: str, tol: NumericTolerances) -> int:
    product = lambda t: g.jet(t).d1 * h.jet(t).d1  # noqa: E731
    ts = validation_grid(interval, tol.grid_points)
    witness = find_vanishing(product, ts, tol.tol_degenerate)
    if witness is not None:
        raise PreconditionError(f"{label} vanishes or has mixed signs along the factor", witness)
    return int(np.sign(product(ts[0])))


def classify_type(data: CanonicalSurfaceDataR42, tolerances: NumericTolerances = DEFAULT_TOLERANCES) -> SurfaceType:
    """Type from the signs of g1'h1' and g2'h2', cross-checked against sign(K^2 - kappa^2)"""
    sign1 = _factor_sign(data.g1, data.h1, data.domain[0], "g1'h1'", tolerances)
    sign2 = _factor_sign(data.g2, data.h2, data.domain[1], "g2'h2'", tolerances)
    if sign1 > 0 and sign2 > 0:
        surface_type = SurfaceType.FIRST
    elif sign1 < 0 and sign2 < 0:
        surface_type = SurfaceType.SECOND
    else:
        if sign1 < 0:
            raise ConventionError("Third-type data must have g1'h1' > 0 and g2'h2' < 0")
        surface_type = SurfaceType.THIRD

    t1, t2 = interior_grid(data.domain, TYPE_CHECK_SAMPLES)
    pair = curvatures_r42(data, t1, t2)
    expected = -1 if surface_type is SurfaceType.THIRD else 1
    witness = _point_witness(classify_by_curvature(pair.K, pair.kappa) != expected, t1, t2)
    if witness is not None:
        raise GeometryError(f"Type {surface_type.value} contradicts the sign of K^2 - kappa^2 at {witness!r}")
    return surface_type


def interior_grid(domain: Domain, n: int) -> tuple[np.ndarray, np.ndarray]:
    """n x n grid strictly inside the domain, as broadcastable (n, 1) and (1, n) arrays"""
    (a1, b1), (a2, b2) = domain
    ts1 = np.linspace(a1, b1, n + 2)[1:-1]
    ts2 = np.linspace(a2, b2, n + 2)[1:-1]
    return ts1[:, np.newaxis], ts2[np.newaxis, :]


# ---------------------------------------------------------------------------
# Oracle
# ---------------------------------------------------------------------------


def _mixed_log_derivative(s: MinimalSurface, t1, t2, step: float) -> np.ndarray:
    log_f = lambda u1, u2: np.log(np.abs(s.first_form_F(u1, u2)))  # noqa: E731
    return (
        log_f(t1 + step, t2 + step) - log_f(t1 + step, t2 - step) - log_f(t1 - step, t2 + step) + log_f(t1 - step, t2 - step)
    ) / (4.0 * step * step)


def gauss_curvature_oracle(s: MinimalSurface, t1, t2, step: float | None = None) -> np.ndarray:
    """K = -(1/F) d1 d2 ln|F| by central differences with one Richardson level"""
    step = s.tolerances.fd_step if step is None else step
    t1, t2 = np.asarray(t1, dtype=float), np.asarray(t2, dtype=float)
    F = s.first_form_F(t1, t2)
    reference = np.sign(F)
    for d1 in (-step, 0.0, step):
        for d2 in (-step, 0.0, step):
            witness = _point_witness(np.sign(s.first_form_F(t1 + d1, t2 + d2)) != reference, t1, t2)
            if witness is not None:
                raise PreconditionError("F changes sign within the finite-difference stencil", witness)
    coarse = _mixed_log_derivative(s, t1, t2, step)
    fine = _mixed_log_derivative(s, t1, t2, step / 2.0)
    return -((4.0 * fine - coarse) / 3.0) / F


# ---------------------------------------------------------------------------
# Sampling and Lorentz catenoids
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class SurfaceSamples:
    t1: np.ndarray
    t2: np.ndarray
    points: np.ndarray
    F: np.ndarray
    K: np.ndarray
    kappa: np.ndarray
    surface_type: SurfaceType | None = None


def surface_curvatures(s: MinimalSurface, t1, t2) -> CurvaturePair:
    """Closed-form curvatures when data is attached, else the oracle (kappa unknown in R^4_2)"""
    if s.data is not None:
        return curvatures(s.data, t1, t2)
    K = gauss_curvature_oracle(s, t1, t2)
    return CurvaturePair(K, _zero_like(K) if s.space is Space.R31 else np.full_like(K, np.nan))


def sample_surface(s: MinimalSurface, ts1, ts2) -> SurfaceSamples:
    ts1, ts2 = np.asarray(ts1, dtype=float), np.asarray(ts2, dtype=float)
    t1, t2 = ts1[:, np.newaxis], ts2[np.newaxis, :]
    pair = surface_curvatures(s, t1, t2)
    shape = (ts1.size, ts2.size)
    surface_type = classify_type(s.data, s.tolerances) if isinstance(s.data, CanonicalSurfaceDataR42) else None
    return SurfaceSamples(
        t1=ts1,
        t2=ts2,
        points=s.grid_points(ts1, ts2),
        F=np.broadcast_to(s.first_form_F(t1, t2), shape),
        K=np.broadcast_to(pair.K, shape),
        kappa=np.broadcast_to(pair.kappa, shape),
        surface_type=surface_type,
    )


def catenoid_first_kind_residual(points) -> np.ndarray:
    """x2^2 - x1^2 - cosh^2(x3), zero on the Lorentz catenoid with timelike axis"""
    x1, x2, x3 = np.asarray(points, dtype=float)
    return x2**2 - x1**2 - np.cosh(x3) ** 2


def catenoid_second_kind_residual(points) -> np.ndarray:
    """x1^2 - x2^2 - sinh^2(x3), zero on the Lorentz catenoid with spacelike axis"""
    x1, x2, x3 = np.asarray(points, dtype=float)
    return x1**2 - x2**2 - np.sinh(x3) ** 2
