"""
Null curves in R^3_1 and R^4_2.

Curves are built from Weierstrass-type generating functions (general or
canonical form), can be turned back into sampled generating data, checked for
nondegeneracy, reparametrized by the natural parameter and integrated to points.

A ``NullCurve`` is driven by a jet function ``t -> Jet2`` of its tangent: for a
batch of parameters of shape (k,) it returns value alpha', first derivative
alpha'' and second derivative alpha''' stacked with shape (n, k).
"""

import dataclasses
import logging
from collections.abc import Callable
from dataclasses import dataclass
from typing import ClassVar

import numpy as np
from scipy import optimize

from ..errors import DegenerateCurveError, PreconditionError, SpaceMismatchError
from .expr_jet import Expression, Jet2
from .numerics import (
    DEFAULT_TOLERANCES,
    NumericTolerances,
    integrate_many,
    invert_monotone,
    refine_minimum,
    validation_grid,
)
from .pseudo_euclidean import Motion, Space, dot, embed_r31

logger = logging.getLogger(__name__)

JetFunction = Callable[[np.ndarray], Jet2]

# Step for the central difference giving the third derivative of canonical curves
THIRD_DERIVATIVE_STEP = 1e-5
# Upper bound on refined local minima per degeneracy check
MAX_REFINED_MINIMA = 8


@dataclass(frozen=True)
class WeierstrassR42:
    """alpha' = f (gh + 1, gh - 1, h - g, h + g)"""

    f: Expression
    g: Expression
    h: Expression
    space: ClassVar[Space] = Space.R42

    def negated(self) -> "WeierstrassR42":
        return WeierstrassR42(-self.f, self.g, self.h)


@dataclass(frozen=True)
class WeierstrassR31:
    """alpha' = f (g^2 + 1, g^2 - 1, 2g)"""

    f: Expression
    g: Expression
    space: ClassVar[Space] = Space.R31

    def negated(self) -> "WeierstrassR31":
        return WeierstrassR31(-self.f, self.g)


WeierstrassData = WeierstrassR42 | WeierstrassR31


@dataclass(frozen=True, eq=False)
class WeierstrassJets:
    """Weierstrass data sampled at ``t`` with derivatives; ``h`` is None in R^3_1"""

    t: np.ndarray
    f: Jet2
    g: Jet2
    h: Jet2 | None = None


@dataclass(frozen=True, eq=False)
class CurveSamples:
    t: np.ndarray
    points: np.ndarray
    velocity: np.ndarray
    accel_norm2: np.ndarray
    s: np.ndarray | None = None


def default_anchor(interval: tuple[float, float]) -> float:
    """0 when it lies in the interval, else the lower end"""
    a, b = interval
    return 0.0 if a <= 0.0 <= b else float(a)


@dataclass(frozen=True, eq=False)
class NullCurve:
    space: Space
    interval: tuple[float, float]
    jet_fn: JetFunction
    t0: float
    base_point: np.ndarray
    data: WeierstrassData | None = None
    generators: tuple[Expression, ...] | None = None
    omega: int | None = None
    tolerances: NumericTolerances = DEFAULT_TOLERANCES

    def __post_init__(self):
        a, b = (float(x) for x in self.interval)
        if not a < b:
            raise PreconditionError(f"Empty parameter interval [{a}, {b}]")
        base = np.asarray(self.base_point, dtype=float)
        if base.shape != (Space(self.space).dimension,):
            raise SpaceMismatchError(f"Base point {base.tolist()} does not live in {Space(self.space).value}")
        object.__setattr__(self, "space", Space(self.space))
        object.__setattr__(self, "interval", (a, b))
        object.__setattr__(self, "base_point", base)

    def jets(self, t) -> Jet2:
        """Jets of alpha' at t; shape (n,) for scalar t, (n, k) for arrays"""
        scalar = np.ndim(t) == 0
        ts = np.atleast_1d(np.asarray(t, dtype=float))
        with np.errstate(all="ignore"):
            jet = self.jet_fn(ts.ravel())
        if scalar:
            return jet[:, 0]
        shape = (self.space.dimension,) + ts.shape
        return Jet2(jet.v.reshape(shape), jet.d1.reshape(shape), jet.d2.reshape(shape))

    def derivative(self, t) -> np.ndarray:
        return self.jets(t).v

    def acceleration(self, t) -> np.ndarray:
        return self.jets(t).d1

    def accel_norm2(self, t) -> np.ndarray:
        acceleration = self.acceleration(t)
        return dot(self.space, acceleration, acceleration)

    def points(self, t) -> np.ndarray:
        """alpha(t) with alpha(t0) = base point"""
        targets = np.asarray(t, dtype=float)
        displacement = integrate_many(lambda u: self.jets(u).v, self.t0, targets, self.tolerances)
        return displacement + self.base_point.reshape((-1,) + (1,) * targets.ndim)

    def negated(self) -> "NullCurve":
        """The curve -alpha"""
        source = self.jet_fn
        return dataclasses.replace(
            self,
            jet_fn=lambda t: -source(t),
            base_point=-self.base_point,
            data=None if self.data is None else self.data.negated(),
            omega=None if self.omega is None else -self.omega,
        )

    def rebased(self, t0: float, base_point) -> "NullCurve":
        return dataclasses.replace(self, t0=float(t0), base_point=np.asarray(base_point, dtype=float))

    def with_tolerances(self, tolerances: NumericTolerances) -> "NullCurve":
        return dataclasses.replace(self, tolerances=tolerances)

    def sample(self, ts, natural: "NaturalParamMap | None" = None) -> CurveSamples:
        ts = np.asarray(ts, dtype=float)
        jets = self.jets(ts)
        return CurveSamples(
            t=ts,
            points=self.points(ts),
            velocity=jets.v,
            accel_norm2=dot(self.space, jets.d1, jets.d1),
            s=None if natural is None else natural.forward(ts),
        )


# ---------------------------------------------------------------------------
# Precondition helpers
# ---------------------------------------------------------------------------


def _scalar(fn: Callable[[np.ndarray], np.ndarray]) -> Callable[[float], float]:
    return lambda t: float(np.asarray(fn(np.array([t])))[0])


def find_vanishing(
    fn: Callable[[np.ndarray], np.ndarray], ts: np.ndarray, tol: float, refine_minima: bool = False
) -> float | None:
    """Parameter where ``fn`` vanishes or changes sign on the grid ``ts``, else None

    With ``refine_minima`` the smallest strict local minima of |fn| between grid
    points are refined by bounded minimization.
    """
    values = np.asarray(fn(ts), dtype=float)
    magnitude = np.abs(values)
    small = np.flatnonzero(~(magnitude > tol))
    if small.size:
        return float(ts[small[0]])

    signs = np.sign(values)
    changes = np.flatnonzero(signs[:-1] != signs[1:])
    if changes.size:
        i = int(changes[0])
        return float(optimize.brentq(_scalar(fn), ts[i], ts[i + 1]))

    if refine_minima and ts.size > 2:
        inner = magnitude[1:-1]
        minima = np.flatnonzero((inner < magnitude[:-2]) & (inner <= magnitude[2:])) + 1
        minima = minima[np.argsort(magnitude[minima])][:MAX_REFINED_MINIMA]
        scalar = _scalar(fn)
        for i in minima:
            t_min, value = refine_minimum(lambda t: abs(scalar(t)), ts[i - 1], ts[i + 1])
            if value <= tol:
                return t_min
    return None


def _require_nonvanishing(
    fn: Callable[[np.ndarray], np.ndarray], interval: tuple[float, float], label: str, tol: NumericTolerances
) -> None:
    witness = find_vanishing(fn, validation_grid(interval, tol.grid_points), tol.tol_degenerate)
    if witness is not None:
        raise DegenerateCurveError(f"{label} vanishes on the parameter interval", witness)


def _curve_defaults(interval, t0, base_point, space: Space) -> tuple[float, np.ndarray]:
    t0 = default_anchor(interval) if t0 is None else float(t0)
    base = np.zeros(space.dimension) if base_point is None else np.asarray(base_point, dtype=float)
    return t0, base


# ---------------------------------------------------------------------------
# General Weierstrass representations
# ---------------------------------------------------------------------------


def _r42_tangent(f: Jet2, g: Jet2, h: Jet2) -> Jet2:
    gh = g * h
    return Jet2.stack([f * (gh + 1.0), f * (gh - 1.0), f * (h - g), f * (h + g)])


def _r31_tangent(f: Jet2, g: Jet2) -> Jet2:
    gg = g * g
    return Jet2.stack([f * (gg + 1.0), f * (gg - 1.0), 2.0 * (f * g)])


def weier_r42(
    data: WeierstrassR42,
    interval: tuple[float, float],
    t0: float | None = None,
    base_point=None,
    tolerances: NumericTolerances = DEFAULT_TOLERANCES,
) -> NullCurve:
    """Null curve of R^4_2 with alpha' = f (gh + 1, gh - 1, h - g, h + g)"""
    _require_nonvanishing(data.f.evaluate, interval, "f", tolerances)
    t0, base = _curve_defaults(interval, t0, base_point, Space.R42)

    def jet_fn(t: np.ndarray) -> Jet2:
        return _r42_tangent(data.f.jet(t), data.g.jet(t), data.h.jet(t))

    return NullCurve(Space.R42, interval, jet_fn, t0, base, data=data, tolerances=tolerances)


def weier_r31(
    data: WeierstrassR31,
    interval: tuple[float, float],
    t0: float | None = None,
    base_point=None,
    tolerances: NumericTolerances = DEFAULT_TOLERANCES,
) -> NullCurve:
    """Null curve of R^3_1 with alpha' = f (g^2 + 1, g^2 - 1, 2g)"""
    _require_nonvanishing(data.f.evaluate, interval, "f", tolerances)
    t0, base = _curve_defaults(interval, t0, base_point, Space.R31)

    def jet_fn(t: np.ndarray) -> Jet2:
        return _r31_tangent(data.f.jet(t), data.g.jet(t))

    return NullCurve(Space.R31, interval, jet_fn, t0, base, data=data, tolerances=tolerances)


def weier_curve(data: WeierstrassData, interval: tuple[float, float], **kwargs) -> NullCurve:
    if isinstance(data, WeierstrassR42):
        return weier_r42(data, interval, **kwargs)
    return weier_r31(data, interval, **kwargs)


def _extraction_denominator(c: NullCurve, ts: np.ndarray) -> tuple[Jet2, Jet2]:
    jets = c.jets(ts)
    denominator = jets[0] - jets[1]
    vanishing = np.flatnonzero(~(np.abs(denominator.v) > c.tolerances.tol_degenerate))
    if vanishing.size:
        raise PreconditionError("xi1 - xi2 vanishes; Weierstrass data is undefined", float(ts[vanishing[0]]))
    return jets, denominator


def weier_data_r42(c: NullCurve, ts=None) -> WeierstrassJets:
    """f = (xi1 - xi2)/2, g = (xi4 - xi3)/(xi1 - xi2), h = (xi4 + xi3)/(xi1 - xi2)"""
    if c.space is not Space.R42:
        raise SpaceMismatchError("weier_data_r42 expects a curve in R42")
    ts = validation_grid(c.interval, c.tolerances.grid_points) if ts is None else np.asarray(ts, dtype=float)
    jets, denominator = _extraction_denominator(c, ts)
    return WeierstrassJets(
        t=ts,
        f=0.5 * denominator,
        g=(jets[3] - jets[2]) / denominator,
        h=(jets[3] + jets[2]) / denominator,
    )


def weier_data_r31(c: NullCurve, ts=None) -> WeierstrassJets:
    """f = (xi1 - xi2)/2, g = xi3/(xi1 - xi2)"""
    if c.space is not Space.R31:
        raise SpaceMismatchError("weier_data_r31 expects a curve in R31")
    ts = validation_grid(c.interval, c.tolerances.grid_points) if ts is None else np.asarray(ts, dtype=float)
    jets, denominator = _extraction_denominator(c, ts)
    return WeierstrassJets(t=ts, f=0.5 * denominator, g=jets[2] / denominator)


def weier_data(c: NullCurve, ts=None) -> WeierstrassJets:
    return weier_data_r42(c, ts) if c.space is Space.R42 else weier_data_r31(c, ts)


# ---------------------------------------------------------------------------
# Acceleration and nondegeneracy
# ---------------------------------------------------------------------------


def accel_norm2(c: NullCurve, t) -> np.ndarray:
    """alpha''^2 = dot(alpha'', alpha'')"""
    return c.accel_norm2(t)


def accel_norm2_from_data(data: WeierstrassData, t) -> np.ndarray:
    """4 f^2 g'h' in R^4_2 and 4 f^2 g'^2 in R^3_1"""
    f, g = data.f.jet(t), data.g.jet(t)
    h_prime = data.h.jet(t).d1 if isinstance(data, WeierstrassR42) else g.d1
    return 4.0 * f.v * f.v * g.d1 * h_prime


@dataclass(frozen=True)
class NondegeneracyReport:
    nondegenerate: bool
    witness: float | None = None
    sign: int = 0

    def __bool__(self) -> bool:
        return self.nondegenerate


def is_nondegenerate(c: NullCurve) -> NondegeneracyReport:
    """alpha''^2 != 0 on the validation grid (and between grid points at local minima)"""
    ts = validation_grid(c.interval, c.tolerances.grid_points)
    witness = find_vanishing(c.accel_norm2, ts, c.tolerances.tol_degenerate, refine_minima=True)
    if witness is not None:
        logger.debug("Degenerate curve, witness t=%r", witness)
        return NondegeneracyReport(False, witness)
    return NondegeneracyReport(True, sign=int(np.sign(c.accel_norm2(ts[0]))))


# ---------------------------------------------------------------------------
# Natural parameter
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class NaturalParamMap:
    """s = sign * integral from t0 of |alpha''^2|^(1/4)"""

    curve: NullCurve
    t0: float
    sign: int = 1

    def density(self, t) -> np.ndarray:
        return np.abs(self.curve.accel_norm2(t)) ** 0.25

    def forward(self, t) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        values = integrate_many(lambda u: self.density(u)[np.newaxis, :], self.t0, t, self.curve.tolerances)[0]
        return self.sign * values

    def inverse(self, s) -> np.ndarray:
        return invert_monotone(
            self.forward,
            lambda t: self.sign * self.density(t),
            s,
            self.curve.interval,
            self.curve.tolerances.root_tol,
        )

    @property
    def s_interval(self) -> tuple[float, float]:
        ends = self.forward(np.array(self.curve.interval))
        return float(np.min(ends)), float(np.max(ends))


def natural_param(c: NullCurve, t0: float | None = None, sign: int = 1) -> NaturalParamMap:
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    report = is_nondegenerate(c)
    if not report:
        raise DegenerateCurveError("Natural parameter requires a nondegenerate curve", report.witness)
    return NaturalParamMap(c, c.t0 if t0 is None else float(t0), sign)


def reparametrize(c: NullCurve, nmap: NaturalParamMap) -> NullCurve:
    """The same curve in the natural parameter s of ``nmap``"""
    s_low, s_high = nmap.s_interval

    def tangent_and_acceleration(s: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        t = nmap.inverse(s)
        jets = c.jets(t)
        a2 = dot(c.space, jets.d1, jets.d1)
        a2_prime = 2.0 * dot(c.space, jets.d1, jets.d2)
        density = np.abs(a2) ** 0.25
        density_prime = 0.25 * np.abs(a2) ** -0.75 * np.sign(a2) * a2_prime
        t_prime = nmap.sign / density
        t_second = -nmap.sign * density_prime / density**2 * t_prime
        return jets.v * t_prime, jets.d1 * t_prime**2 + jets.v * t_second

    def jet_fn(s: np.ndarray) -> Jet2:
        tangent, acceleration = tangent_and_acceleration(s)
        upper = np.minimum(s + THIRD_DERIVATIVE_STEP, s_high)
        lower = np.maximum(s - THIRD_DERIVATIVE_STEP, s_low)
        third = (tangent_and_acceleration(upper)[1] - tangent_and_acceleration(lower)[1]) / (upper - lower)
        return Jet2(tangent, acceleration, third)

    return NullCurve(
        c.space,
        (s_low, s_high),
        jet_fn,
        float(nmap.forward(c.t0)),
        c.base_point,
        tolerances=c.tolerances,
    )


# ---------------------------------------------------------------------------
# Canonical representations
# ---------------------------------------------------------------------------


def _check_omega(omega: int) -> int:
    if omega not in (1, -1):
        raise ValueError(f"omega must be +1 or -1, got {omega!r}")
    return int(omega)


def _canonical_factor(
    product: Callable[[np.ndarray], tuple[np.ndarray, np.ndarray]], omega: int
) -> Callable[[np.ndarray], Jet2]:
    """Jet of f = omega / (2 sqrt|P|) from P and P'; f'' by central difference of f'"""

    def first(t: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        p, p_prime = product(t)
        f = omega / (2.0 * np.sqrt(np.abs(p)))
        return f, -f * p_prime / (2.0 * p)

    def jet(t: np.ndarray) -> Jet2:
        f, f_prime = first(t)
        step = THIRD_DERIVATIVE_STEP
        f_second = (first(t + step)[1] - first(t - step)[1]) / (2.0 * step)
        return Jet2(f, f_prime, f_second)

    return jet


def canonical_factor_r42(g: Expression, h: Expression, omega: int) -> Callable[[np.ndarray], Jet2]:
    """Jet of f = omega / (2 sqrt|g'h'|)"""

    def product(t: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        gj, hj = g.jet(t), h.jet(t)
        return gj.d1 * hj.d1, gj.d2 * hj.d1 + gj.d1 * hj.d2

    return _canonical_factor(product, _check_omega(omega))


def canonical_factor_r31(g: Expression, omega: int) -> Callable[[np.ndarray], Jet2]:
    """Jet of f = omega / (2 |g'|)"""

    def product(t: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        gj = g.jet(t)
        return gj.d1 * gj.d1, 2.0 * gj.d1 * gj.d2

    return _canonical_factor(product, _check_omega(omega))


def canonical_r42(
    g: Expression,
    h: Expression,
    omega: int,
    interval: tuple[float, float],
    t0: float | None = None,
    base_point=None,
    tolerances: NumericTolerances = DEFAULT_TOLERANCES,
) -> NullCurve:
    """Naturally parametrized null curve alpha' = omega/(2 sqrt|g'h'|) (gh + 1, gh - 1, h - g, h + g)"""
    omega = _check_omega(omega)
    _require_nonvanishing(lambda t: g.jet(t).d1 * h.jet(t).d1, interval, "g'h'", tolerances)
    t0, base = _curve_defaults(interval, t0, base_point, Space.R42)
    factor = canonical_factor_r42(g, h, omega)

    def jet_fn(t: np.ndarray) -> Jet2:
        return _r42_tangent(factor(t), g.jet(t), h.jet(t))

    return NullCurve(Space.R42, interval, jet_fn, t0, base, generators=(g, h), omega=omega, tolerances=tolerances)


def canonical_r31(
    g: Expression,
    omega: int,
    interval: tuple[float, float],
    t0: float | None = None,
    base_point=None,
    tolerances: NumericTolerances = DEFAULT_TOLERANCES,
) -> NullCurve:
    """Naturally parametrized null curve alpha' = omega/(2|g'|) (g^2 + 1, g^2 - 1, 2g)"""
    omega = _check_omega(omega)
    _require_nonvanishing(lambda t: g.jet(t).d1, interval, "g'", tolerances)
    t0, base = _curve_defaults(interval, t0, base_point, Space.R31)
    factor = canonical_factor_r31(g, omega)

    def jet_fn(t: np.ndarray) -> Jet2:
        return _r31_tangent(factor(t), g.jet(t))

    return NullCurve(Space.R31, interval, jet_fn, t0, base, generators=(g,), omega=omega, tolerances=tolerances)


# ---------------------------------------------------------------------------
# Points and motions
# ---------------------------------------------------------------------------


def integrate_curve(c: NullCurve, t) -> np.ndarray:
    """alpha(t) by adaptive quadrature of alpha' from t0"""
    return c.points(t)


def apply_motion_to_curve(c: NullCurve, m: Motion) -> NullCurve:
    """Curve A alpha + b; Weierstrass data is dropped and must be re-extracted"""
    if m.space is not c.space:
        raise SpaceMismatchError(f"Cannot apply a motion of {m.space.value} to a curve in {c.space.value}")
    source = c.jet_fn

    def jet_fn(t: np.ndarray) -> Jet2:
        jet = source(t)
        return Jet2(m.apply_linear(jet.v), m.apply_linear(jet.d1), m.apply_linear(jet.d2))

    return NullCurve(c.space, c.interval, jet_fn, c.t0, m.apply(c.base_point), tolerances=c.tolerances)


def embed_curve(c: NullCurve) -> NullCurve:
    """R^3_1 curve as a curve in the hyperplane x3 = 0 of R^4_2"""
    if c.space is not Space.R31:
        raise SpaceMismatchError("Only curves in R31 can be embedded")
    source = c.jet_fn

    def jet_fn(t: np.ndarray) -> Jet2:
        jet = source(t)
        return Jet2(embed_r31(jet.v), embed_r31(jet.d1), embed_r31(jet.d2))

    return NullCurve(Space.R42, c.interval, jet_fn, c.t0, embed_r31(c.base_point), tolerances=c.tolerances)
