"""
Correspondence between minimal Lorentz surfaces in R^4_2 and ordered pairs of
minimal Lorentz surfaces in R^3_1.

A canonical surface with data (g1, h1, g2, h2) splits into the R^3_1 surfaces
generated by (g1, g2) and by (h1, h2); merging reverses this. The curvature and
area relations between a surface and its pair are evaluated here.
"""

import logging
from dataclasses import dataclass

import numpy as np

from ..errors import PreconditionError
from .expr_jet import Expression, Jet2
from .minimal_surfaces import (
    CanonicalSurfaceDataR31,
    CanonicalSurfaceDataR42,
    CurvaturePair,
    SurfaceType,
    canonical_F,
    check_cross_condition,
    classify_type,
    curvature_r31_canonical,
    curvatures_r42,
)
from .null_curves import NullCurve, canonical_r31, weier_data_r42
from .numerics import DEFAULT_TOLERANCES, NumericTolerances

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SurfacePair:
    """Ordered pair (M_g, M_h) of canonical R^3_1 surfaces on a shared domain"""

    m_g: CanonicalSurfaceDataR31
    m_h: CanonicalSurfaceDataR31

    def __post_init__(self):
        if self.m_g.domain != self.m_h.domain:
            raise PreconditionError(f"Pair members have different domains {self.m_g.domain} and {self.m_h.domain}")

    @property
    def domain(self):
        return self.m_g.domain


def split_curve(
    g: Expression,
    h: Expression,
    interval: tuple[float, float],
    omega: int = 1,
    tolerances: NumericTolerances = DEFAULT_TOLERANCES,
) -> tuple[NullCurve, NullCurve]:
    """Canonical R^3_1 curves generated by g and by h

    ``omega`` is the sign of the R^4_2 curve being split. It is validated but
    does not enter the result: the pair is only defined up to a non-proper
    motion of R^3_1, and both factors are emitted with omega = +1.
    """
    if omega not in (1, -1):
        raise ValueError(f"omega must be +1 or -1, got {omega!r}")
    return canonical_r31(g, 1, interval, tolerances=tolerances), canonical_r31(h, 1, interval, tolerances=tolerances)


def split_curve_from_jets(curve: NullCurve, ts=None) -> tuple[Jet2, Jet2]:
    """Sampled (g, h) of an arbitrary R^4_2 curve, re-extracted from its tangent"""
    data = weier_data_r42(curve, ts)
    return data.g, data.h


def factor_gauss_curvature(first: Jet2, second: Jet2) -> np.ndarray:
    """Gauss curvature 16 |g1'g2'| g1'g2' / (g1 - g2)^4 of the canonical R^3_1 surface of two factors"""
    product = first.d1 * second.d1
    return 16.0 * np.abs(product) * product / (first.v - second.v) ** 4


def split_surface(data: CanonicalSurfaceDataR42) -> SurfacePair:
    """(M, p) -> ((M_g, p_g), (M_h, p_h)) with omega = +1 factors"""
    return SurfacePair(
        CanonicalSurfaceDataR31(data.g1, data.g2, data.domain),
        CanonicalSurfaceDataR31(data.h1, data.h2, data.domain),
    )


def merge_surfaces(
    pair: SurfacePair,
    omega1: int = 1,
    omega2: int = 1,
    tolerances: NumericTolerances = DEFAULT_TOLERANCES,
) -> CanonicalSurfaceDataR42:
    """Canonical R^4_2 data whose split is ``pair``"""
    check_cross_condition(pair.m_g.g1, pair.m_g.g2, pair.domain, "g", tolerances)
    check_cross_condition(pair.m_h.g1, pair.m_h.g2, pair.domain, "h", tolerances)
    return CanonicalSurfaceDataR42(
        g1=pair.m_g.g1,
        h1=pair.m_h.g1,
        g2=pair.m_g.g2,
        h2=pair.m_h.g2,
        domain=pair.domain,
        omega1=omega1,
        omega2=omega2,
    )


def anti_isometry_split(data: CanonicalSurfaceDataR42) -> SurfacePair:
    """Split of the anti-isometric image: ((M_g, p_g), (M_-h, p_-h))"""
    pair = split_surface(data)
    m_h = pair.m_h
    return SurfacePair(pair.m_g, CanonicalSurfaceDataR31(-m_h.g1, -m_h.g2, m_h.domain, m_h.omega1, m_h.omega2))


def swap_split(data: CanonicalSurfaceDataR42) -> SurfacePair:
    """Split after a non-proper motion of R^4_2, which exchanges the roles of g and h"""
    pair = split_surface(data)
    return SurfacePair(pair.m_h, pair.m_g)


def curvature_relation(K_g, K_h, surface_type: SurfaceType, eta) -> CurvaturePair:
    """(K, kappa) of the R^4_2 surface from the Gauss curvatures of its pair

    First and second type: K = eta |K_g K_h|^(1/4) (sqrt|K_g| + sqrt|K_h|) / 2 and
    kappa with the difference. Third type exchanges the two expressions.
    """
    K_g, K_h = np.asarray(K_g, dtype=float), np.asarray(K_h, dtype=float)
    if np.any(K_g == 0) or np.any(K_h == 0):
        raise PreconditionError("Curvature relation requires nonzero K_g and K_h")
    scale = np.abs(K_g * K_h) ** 0.25
    root_g, root_h = np.sqrt(np.abs(K_g)), np.sqrt(np.abs(K_h))
    total = eta * scale * (root_g + root_h) / 2.0
    difference = eta * scale * (root_g - root_h) / 2.0
    if SurfaceType(surface_type) is SurfaceType.THIRD:
        return CurvaturePair(difference, total)
    return CurvaturePair(total, difference)


@dataclass(frozen=True, eq=False)
class RelationSample:
    K_g: np.ndarray
    K_h: np.ndarray
    surface_type: SurfaceType
    eta: np.ndarray
    direct: CurvaturePair


def relation_from_surface(
    data: CanonicalSurfaceDataR42, t1, t2, tolerances: NumericTolerances = DEFAULT_TOLERANCES
) -> RelationSample:
    """Pair curvatures, type and eta of a canonical surface, next to its directly computed (K, kappa)"""
    pair = split_surface(data)
    surface_type = classify_type(data, tolerances)
    direct = curvatures_r42(data, t1, t2)
    eta = np.sign(direct.kappa if surface_type is SurfaceType.THIRD else direct.K)
    return RelationSample(
        K_g=np.asarray(curvature_r31_canonical(pair.m_g, t1, t2).K),
        K_h=np.asarray(curvature_r31_canonical(pair.m_h, t1, t2).K),
        surface_type=surface_type,
        eta=eta,
        direct=direct,
    )


def area_relation(data: CanonicalSurfaceDataR42, t1, t2) -> tuple[np.ndarray, np.ndarray]:
    """(|F|, sqrt|F_g F_h|) from canonical data"""
    pair = split_surface(data)
    F = canonical_F(data, t1, t2)
    F_g, F_h = canonical_F(pair.m_g, t1, t2), canonical_F(pair.m_h, t1, t2)
    return np.abs(F), np.sqrt(np.abs(F_g * F_h))
