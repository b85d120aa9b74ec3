"""
Pseudo-Euclidean spaces R^3_1 and R^4_2.

Indefinite inner products, rigid motions of both spaces, the spinor map
SL(2,R) -> SO+(2,1) and the Moebius action of 2x2 matrices on R^3_1
Weierstrass data.

Vectors are numpy arrays with the coordinate index on axis 0, so a batch of
points has shape (n, ...).
"""

import logging
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from ..errors import MotionError, SpaceMismatchError
from .expr_jet import Expression

logger = logging.getLogger(__name__)

ISOMETRY_TOL = 1e-10


class Space(str, Enum):
    """Ambient pseudo-Euclidean space"""

    R31 = "R31"
    R42 = "R42"

    @property
    def dimension(self) -> int:
        return 3 if self is Space.R31 else 4

    @property
    def signature(self) -> np.ndarray:
        return SIGNATURES[self]


SIGNATURES = {
    Space.R31: np.array([-1.0, 1.0, 1.0]),
    Space.R42: np.array([-1.0, 1.0, -1.0, 1.0]),
}


def metric(space: Space) -> np.ndarray:
    """Gram matrix of the standard basis"""
    return np.diag(Space(space).signature)


def dot(space: Space, a, b) -> np.ndarray:
    """Indefinite inner product along axis 0, broadcasting over the remaining axes"""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    signature = Space(space).signature
    if a.shape[0] != signature.size or b.shape[0] != signature.size:
        raise SpaceMismatchError(f"Vectors of length {a.shape[0]} and {b.shape[0]} do not live in {Space(space).value}")
    weights = signature.reshape((-1,) + (1,) * (max(a.ndim, b.ndim) - 1))
    return np.sum(weights * a * b, axis=0)


def dot3(a, b) -> np.ndarray:
    """-a1 b1 + a2 b2 + a3 b3"""
    return dot(Space.R31, a, b)


def dot4(a, b) -> np.ndarray:
    """-a1 b1 + a2 b2 - a3 b3 + a4 b4"""
    return dot(Space.R42, a, b)


def embed_r31(v) -> np.ndarray:
    """(v1, v2, v3) -> (v1, v2, 0, v3), the hyperplane x3 = 0 of R^4_2"""
    v = np.asarray(v, dtype=float)
    if v.shape[0] != 3:
        raise SpaceMismatchError("embed_r31 expects vectors of R31")
    return np.stack([v[0], v[1], np.zeros_like(v[0]), v[2]])


# ---------------------------------------------------------------------------
# Motions
# ---------------------------------------------------------------------------


def _gram_defect(matrix: np.ndarray, space: Space, sign: float) -> float:
    eta = metric(space)
    scale = max(1.0, float(np.max(np.abs(matrix))) ** 2)
    return float(np.max(np.abs(matrix.T @ eta @ matrix - sign * eta))) / scale


def _as_matrix(matrix, size: int) -> np.ndarray:
    matrix = np.array(matrix, dtype=float)
    if matrix.shape != (size, size):
        raise MotionError(f"Expected a {size}x{size} matrix, got shape {matrix.shape}")
    return matrix


def _as_translation(translation, size: int) -> np.ndarray:
    if translation is None:
        return np.zeros(size)
    translation = np.array(translation, dtype=float)
    if translation.shape != (size,):
        raise MotionError(f"Expected a translation of length {size}, got shape {translation.shape}")
    return translation


class _Motion:
    """Affine map x -> A x + b shared by both spaces"""

    space: Space
    matrix: np.ndarray
    translation: np.ndarray

    @property
    def determinant(self) -> float:
        return float(np.linalg.det(self.matrix))

    def apply(self, points) -> np.ndarray:
        """Apply to points with the coordinate index on axis 0"""
        points = np.asarray(points, dtype=float)
        if points.shape[0] != self.space.dimension:
            raise SpaceMismatchError(f"Points of dimension {points.shape[0]} cannot be moved in {self.space.value}")
        moved = np.tensordot(self.matrix, points, axes=(1, 0))
        return moved + self.translation.reshape((-1,) + (1,) * (points.ndim - 1))

    def apply_linear(self, vectors) -> np.ndarray:
        """Apply the linear part only (tangent vectors)"""
        return np.tensordot(self.matrix, np.asarray(vectors, dtype=float), axes=(1, 0))


@dataclass(frozen=True, eq=False)
class MotionR31(_Motion):
    """Isometry x -> A x + b of R^3_1 with A^T eta A = eta"""

    matrix: np.ndarray
    translation: np.ndarray = field(default_factory=lambda: np.zeros(3))
    proper: bool = field(init=False)
    orthochronous: bool = field(init=False)
    space: Space = field(init=False, default=Space.R31)

    def __post_init__(self):
        matrix = _as_matrix(self.matrix, 3)
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "translation", _as_translation(self.translation, 3))
        defect = _gram_defect(matrix, Space.R31, 1.0)
        if defect > ISOMETRY_TOL:
            raise MotionError(f"Matrix is not an isometry of R31 (defect {defect:.3e})")
        object.__setattr__(self, "proper", bool(np.linalg.det(matrix) > 0))
        object.__setattr__(self, "orthochronous", bool(matrix[0, 0] >= 1.0 - ISOMETRY_TOL))

    def compose(self, other: "MotionR31") -> "MotionR31":
        """self after other"""
        return MotionR31(self.matrix @ other.matrix, self.matrix @ other.translation + self.translation)


@dataclass(frozen=True, eq=False)
class MotionR42(_Motion):
    """Isometry (A^T eta A = eta) or anti-isometry (A^T eta A = -eta) of R^4_2"""

    matrix: np.ndarray
    translation: np.ndarray = field(default_factory=lambda: np.zeros(4))
    proper: bool = field(init=False)
    anti_isometry: bool = field(init=False)
    space: Space = field(init=False, default=Space.R42)

    def __post_init__(self):
        matrix = _as_matrix(self.matrix, 4)
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "translation", _as_translation(self.translation, 4))
        if _gram_defect(matrix, Space.R42, 1.0) <= ISOMETRY_TOL:
            anti = False
        elif _gram_defect(matrix, Space.R42, -1.0) <= ISOMETRY_TOL:
            anti = True
        else:
            raise MotionError("Matrix is neither an isometry nor an anti-isometry of R42")
        object.__setattr__(self, "anti_isometry", anti)
        object.__setattr__(self, "proper", bool(np.linalg.det(matrix) > 0))

    def compose(self, other: "MotionR42") -> "MotionR42":
        """self after other"""
        return MotionR42(self.matrix @ other.matrix, self.matrix @ other.translation + self.translation)


Motion = MotionR31 | MotionR42


def motion_from_matrix(space: Space, matrix, translation=None) -> Motion:
    if Space(space) is Space.R31:
        return MotionR31(matrix, _as_translation(translation, 3))
    return MotionR42(matrix, _as_translation(translation, 4))


def plane_boost_r42(i: int, j: int, parameter: float) -> np.ndarray:
    """One-parameter motion in the (i, j) coordinate plane, 0-based indices

    Rotation when the plane is definite, boost when it has mixed signature.
    """
    if i == j or not (0 <= i < 4 and 0 <= j < 4):
        raise ValueError(f"Invalid coordinate plane ({i}, {j})")
    signature = Space.R42.signature
    matrix = np.eye(4)
    if signature[i] == signature[j]:
        c, s = np.cos(parameter), np.sin(parameter)
        matrix[i, i], matrix[i, j], matrix[j, i], matrix[j, j] = c, -s, s, c
    else:
        c, s = np.cosh(parameter), np.sinh(parameter)
        matrix[i, i], matrix[i, j], matrix[j, i], matrix[j, j] = c, s, s, c
    return matrix


# Mixed planes (1,2), (3,4), (1,4), (2,3) in 0-based indices
RANDOM_MOTION_PLANES = ((0, 1), (2, 3), (0, 3), (1, 2))


def proper_motion_r42(parameters, translation=None) -> MotionR42:
    """Product of plane boosts in RANDOM_MOTION_PLANES with the given parameters"""
    parameters = np.asarray(parameters, dtype=float)
    if parameters.shape != (len(RANDOM_MOTION_PLANES),):
        raise ValueError(f"Expected {len(RANDOM_MOTION_PLANES)} plane parameters")
    matrix = np.eye(4)
    for (i, j), parameter in zip(RANDOM_MOTION_PLANES, parameters, strict=True):
        matrix = plane_boost_r42(i, j, parameter) @ matrix
    return MotionR42(matrix, _as_translation(translation, 4))


def random_proper_motion_r42(seed: int, scale: float = 1.0) -> MotionR42:
    """Seeded random proper isometry of R^4_2 with a random translation"""
    rng = np.random.default_rng(seed)
    parameters = rng.uniform(-scale, scale, size=len(RANDOM_MOTION_PLANES))
    translation = rng.normal(size=4)
    return proper_motion_r42(parameters, translation)


def anti_isometry_r42() -> MotionR42:
    """Orientation-preserving anti-isometry swapping x1<->x2 and x3<->x4"""
    return MotionR42(np.eye(4)[[1, 0, 3, 2]])


def reflection_r42(axis: int) -> MotionR42:
    """Non-proper isometry x_axis -> -x_axis (0-based axis)"""
    matrix = np.eye(4)
    matrix[axis, axis] = -1.0
    return MotionR42(matrix)


# ---------------------------------------------------------------------------
# Spinor map
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SpinMatrix:
    """Real 2x2 matrix [[a, b], [c, d]]"""

    a: float
    b: float
    c: float
    d: float

    @classmethod
    def from_array(cls, matrix) -> "SpinMatrix":
        matrix = np.asarray(matrix, dtype=float)
        return cls(float(matrix[0, 0]), float(matrix[0, 1]), float(matrix[1, 0]), float(matrix[1, 1]))

    @classmethod
    def identity(cls) -> "SpinMatrix":
        return cls(1.0, 0.0, 0.0, 1.0)

    @property
    def det(self) -> float:
        return self.a * self.d - self.b * self.c

    def as_array(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]])

    def __matmul__(self, other: "SpinMatrix") -> "SpinMatrix":
        return SpinMatrix.from_array(self.as_array() @ other.as_array())

    def __neg__(self) -> "SpinMatrix":
        return SpinMatrix(-self.a, -self.b, -self.c, -self.d)


def to_spinor(x) -> np.ndarray:
    """x in R^3_1 -> [[-x3, x2 + x1], [x2 - x1, x3]]"""
    x1, x2, x3 = np.asarray(x, dtype=float)
    return np.array([[-x3, x2 + x1], [x2 - x1, x3]])


def from_spinor(s) -> np.ndarray:
    """Inverse of ``to_spinor`` on traceless matrices"""
    s = np.asarray(s, dtype=float)
    return np.array([(s[0, 1] - s[1, 0]) / 2.0, (s[0, 1] + s[1, 0]) / 2.0, s[1, 1]])


def _check_unit_det(B: SpinMatrix) -> None:
    if abs(abs(B.det) - 1.0) > ISOMETRY_TOL * max(1.0, float(np.max(np.abs(B.as_array()))) ** 2):
        raise MotionError(f"Spinor map requires det B = +-1, got {B.det!r}")


def spinor_to_so21(B: SpinMatrix) -> MotionR31:
    """Linear motion of R^3_1 induced by the conjugation S -> B S B^-1"""
    _check_unit_det(B)
    matrix = B.as_array()
    inverse = np.linalg.inv(matrix)
    columns = [from_spinor(matrix @ to_spinor(basis) @ inverse) for basis in np.eye(3)]
    return MotionR31(np.column_stack(columns))


class MotionKind(str, Enum):
    """Components of the Lorentz group of R^3_1 reached from a 2x2 matrix"""

    PROPER_ORTHOCHRONOUS = "proper-orthochronous"
    PROPER_NON_ORTHOCHRONOUS = "proper-non-orthochronous"
    NON_PROPER_ORTHOCHRONOUS = "non-proper-orthochronous"
    NON_PROPER_NON_ORTHOCHRONOUS = "non-proper-non-orthochronous"

    @property
    def proper(self) -> bool:
        return self in (MotionKind.PROPER_ORTHOCHRONOUS, MotionKind.PROPER_NON_ORTHOCHRONOUS)

    @property
    def orthochronous(self) -> bool:
        return self in (MotionKind.PROPER_ORTHOCHRONOUS, MotionKind.NON_PROPER_ORTHOCHRONOUS)

    @property
    def required_det(self) -> int:
        return 1 if self.proper == self.orthochronous else -1


def _check_kind(B: SpinMatrix, kind: MotionKind) -> MotionKind:
    kind = MotionKind(kind)
    _check_unit_det(B)
    if np.sign(B.det) != kind.required_det:
        raise MotionError(f"Motion kind {kind.value} requires det B = {kind.required_det:+d}, got {B.det!r}")
    return kind


def motion_for_kind(B: SpinMatrix, kind: MotionKind) -> MotionR31:
    """R^3_1 motion realizing the Moebius law of ``kind`` for the matrix B"""
    kind = _check_kind(B, kind)
    conjugation = spinor_to_so21(B)
    if kind.proper:
        return conjugation
    return MotionR31(-conjugation.matrix)


def mobius_on_weierstrass(
    f: Expression, g: Expression, B: SpinMatrix, kind: MotionKind
) -> tuple[Expression, Expression]:
    """Weierstrass data (f, g) of the curve moved by ``motion_for_kind(B, kind)``

    g -> (a g + b)/(c g + d) and f -> +-f (c g + d)^2, with the plus sign for
    the orthochronous kinds.
    """
    kind = _check_kind(B, kind)
    g_hat = (B.a * g + B.b) / (B.c * g + B.d)
    factor = f * (B.c * g + B.d) ** 2
    f_hat = factor if kind.orthochronous else -factor
    logger.debug("Moebius transform %s: g -> %s", kind.value, g_hat)
    return f_hat, g_hat


def random_spin_matrix(rng: np.random.Generator, det: int = 1, scale: float = 1.0) -> SpinMatrix:
    """Random 2x2 matrix with determinant ``det`` (+1 or -1)"""
    while True:
        a, b, c = rng.normal(scale=scale, size=3)
        if abs(a) > 1e-3:
            d = (det + b * c) / a
            return SpinMatrix(float(a), float(b), float(c), float(d))
