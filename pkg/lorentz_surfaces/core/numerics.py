"""
Shared numerical kernels: validation grids, vectorized adaptive quadrature,
inversion of monotone maps and bounded minimization.
"""

import logging
import warnings
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
from scipy import integrate, optimize

from ..errors import IntegrationError, RootFindingError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NumericTolerances:
    """Immutable tolerance set consumed by the library"""

    grid_points: int = 512
    tol_degenerate: float = 1e-9
    quad_abs_tol: float = 1e-10
    quad_rel_tol: float = 1e-12
    quad_limit: int = 100_000
    root_tol: float = 1e-12
    fd_step: float = 1e-4


DEFAULT_TOLERANCES = NumericTolerances()


def validation_grid(interval: tuple[float, float], n: int = DEFAULT_TOLERANCES.grid_points) -> np.ndarray:
    """Uniform grid of ``n`` points including both endpoints"""
    a, b = interval
    if n < 2:
        raise ValueError("A validation grid needs at least two points")
    return np.linspace(a, b, n)


def integrate_many(
    fn: Callable[[np.ndarray], np.ndarray],
    t0: float,
    targets,
    tol: NumericTolerances = DEFAULT_TOLERANCES,
) -> np.ndarray:
    """Integrate a vectorized integrand from ``t0`` to every target at once

    ``fn`` maps an array of parameters of shape (k,) to values of shape (m, k).
    Each segment [t0, T] is mapped onto [0, 1] so that one adaptive
    Gauss-Kronrod run covers all targets. Returns shape (m, *targets.shape).
    """
    targets = np.asarray(targets, dtype=float)
    flat = targets.ravel()
    if flat.size == 0:
        sample = np.asarray(fn(np.array([t0])))
        return np.zeros((sample.shape[0],) + targets.shape)
    lengths = flat - t0

    def integrand(u: float) -> np.ndarray:
        values = np.asarray(fn(t0 + u * lengths), dtype=float)
        return (values * lengths).ravel()

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        result, error, info = integrate.quad_vec(
            integrand,
            0.0,
            1.0,
            epsabs=tol.quad_abs_tol,
            epsrel=tol.quad_rel_tol,
            norm="max",
            limit=tol.quad_limit,
            full_output=True,
        )
    if not info.success:
        raise IntegrationError(f"Adaptive quadrature did not converge (status {info.status}, error {error:.3e})")
    if not np.all(np.isfinite(result)):
        raise IntegrationError("Adaptive quadrature produced non-finite values")

    values = np.asarray(result).reshape(-1, flat.size)
    logger.debug("Integrated %d targets with %d intervals", flat.size, info.intervals.shape[0])
    return values.reshape((values.shape[0],) + targets.shape)


def invert_monotone(
    fn: Callable[[np.ndarray], np.ndarray],
    dfn: Callable[[np.ndarray], np.ndarray],
    targets,
    bracket: tuple[float, float],
    tol: float = DEFAULT_TOLERANCES.root_tol,
    accept: float = 1e-9,
    table_size: int = 257,
) -> np.ndarray:
    """Solve fn(t) = s for every target s of a strictly monotone ``fn`` on ``bracket``

    Newton iterations start from a linear interpolation of a value table; any
    element that fails to converge inside the bracket, or whose residual exceeds
    ``accept`` relative to the target, is solved by Brent's method.
    """
    targets = np.asarray(targets, dtype=float)
    flat = targets.ravel()
    a, b = bracket
    table_t = np.linspace(a, b, table_size)
    table_s = np.asarray(fn(table_t), dtype=float)
    increasing = table_s[-1] >= table_s[0]
    order = slice(None) if increasing else slice(None, None, -1)

    low, high = min(table_s[0], table_s[-1]), max(table_s[0], table_s[-1])
    slack = accept * (1.0 + max(abs(low), abs(high)))
    outside = (flat < low - slack) | (flat > high + slack)
    if np.any(outside):
        bad = float(flat[np.flatnonzero(outside)[0]])
        raise RootFindingError(f"Value {bad!r} lies outside the image [{low!r}, {high!r}] of the bracket")
    flat = np.clip(flat, low, high)

    guess = np.interp(flat, table_s[order], table_t[order])
    if flat.size == 0:
        return guess.reshape(targets.shape)

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        newton = optimize.newton(
            lambda t: np.asarray(fn(np.clip(t, a, b)), dtype=float) - flat,
            guess,
            fprime=lambda t: np.asarray(dfn(np.clip(t, a, b)), dtype=float),
            tol=tol,
            maxiter=50,
            full_output=True,
            disp=False,
        )
    roots = np.asarray(newton.root, dtype=float)
    residual = np.abs(np.asarray(fn(np.clip(roots, a, b)), dtype=float) - flat)
    good = np.asarray(newton.converged) & (roots >= a) & (roots <= b) & (residual <= accept * (1.0 + np.abs(flat)))

    for index in np.flatnonzero(~good):
        roots[index] = _brent_root(fn, float(flat[index]), a, b, tol, accept)
    if np.any(~good):
        logger.debug("Brent fallback used for %d of %d values", int(np.sum(~good)), flat.size)
    return np.clip(roots, a, b).reshape(targets.shape)


def refine_minimum(fn: Callable[[float], float], a: float, b: float, xatol: float = 1e-12) -> tuple[float, float]:
    """Bounded scalar minimization of ``fn`` on [a, b]; returns (argmin, minimum)"""
    result = optimize.minimize_scalar(fn, bounds=(a, b), method="bounded", options={"xatol": xatol})
    return float(result.x), float(result.fun)


def _brent_root(fn: Callable[[np.ndarray], np.ndarray], target: float, a: float, b: float, tol: float, accept: float) -> float:
    """Scalar fallback of ``invert_monotone``; targets at the image ends may miss the sign change by quadrature noise"""
    residual = lambda t: float(np.asarray(fn(np.array([t])))[0]) - target  # noqa: E731
    low, high = residual(a), residual(b)
    if low * high > 0:
        end, value = (a, low) if abs(low) <= abs(high) else (b, high)
        if abs(value) <= accept * (1.0 + abs(target)):
            return end
        raise RootFindingError(f"Could not invert the map at value {target!r}")
    return float(optimize.brentq(residual, a, b, xtol=tol))
