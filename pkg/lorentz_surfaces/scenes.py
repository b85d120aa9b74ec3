"""
Scene files.

A scene is a JSON document describing one null curve or a surface built from
two null curves, in general (f, g, h) or canonical (g, h, omega) Weierstrass
form. Schema errors and expression errors are reported with JSON pointers
into the document.
"""

import json
import logging
from pathlib import Path
from typing import Annotated, Any, Literal

from pydantic import BaseModel, ConfigDict, Field
from pydantic import ValidationError as PydanticValidationError

from .core.correspondence import SurfacePair
from .core.expr_jet import FUNCTIONS, Expression, parse
from .core.minimal_surfaces import (
    CanonicalSurfaceDataR31,
    CanonicalSurfaceDataR42,
    SurfaceData,
    SurfaceDataR31,
    SurfaceDataR42,
)
from .core.null_curves import (
    NullCurve,
    WeierstrassR31,
    WeierstrassR42,
    canonical_r31,
    canonical_r42,
    weier_curve,
)
from .core.numerics import DEFAULT_TOLERANCES, NumericTolerances
from .core.pseudo_euclidean import Motion, Space, motion_from_matrix
from .errors import ExpressionError, LorentzError
from .utils.error_handling import first_error_pointer, format_pydantic_errors
from .validators import ValidationError

logger = logging.getLogger(__name__)

Resolution = Annotated[int, Field(ge=2, le=4096)]
SPLIT_SUFFIXES = ("-g", "-h")


class CurveSpec(BaseModel):
    """Generating functions of one null curve"""

    model_config = ConfigDict(extra="forbid", frozen=True)

    f: str | None = Field(default=None, description="Factor f (general form only)")
    g: str = Field(description="Generating function g")
    h: str | None = Field(default=None, description="Generating function h (R42 only)")
    omega: Literal[1, -1] = Field(default=1, description="Sign of the canonical factor")


class SceneFile(BaseModel):
    """One curve or one surface with its sampling options"""

    model_config = ConfigDict(extra="forbid", frozen=True)

    name: str = Field(default="scene", min_length=1)
    space: Literal["R31", "R42"]
    kind: Literal["general", "canonical"] = "canonical"
    variable: str = Field(default="t", pattern=r"^[A-Za-z_][A-Za-z0-9_]*$")
    curves: list[CurveSpec] = Field(min_length=1, max_length=2)
    domain: list[tuple[float, float]] = Field(min_length=1, max_length=2)
    grid: tuple[Resolution, Resolution] = (20, 20)
    base_point: list[float] | None = None
    anchor: tuple[float, float] | None = None
    projection: Literal["drop1", "drop2", "drop3", "drop4"] = "drop3"

    @property
    def is_surface(self) -> bool:
        return len(self.curves) == 2

    @property
    def ambient(self) -> Space:
        return Space(self.space)

    def expression(self, index: int, field: str) -> Expression | None:
        source = getattr(self.curves[index], field)
        return None if source is None else parse(source, self.variable)

    def to_json(self) -> str:
        """Deterministic JSON text of the scene"""
        return json.dumps(self.model_dump(mode="json", exclude_none=True), indent=2) + "\n"


class MotionSpec(BaseModel):
    """Affine motion x -> A x + b of R31 or R42"""

    model_config = ConfigDict(extra="forbid", frozen=True)

    space: Literal["R31", "R42"]
    matrix: list[list[float]]
    translation: list[float] | None = None

    def to_motion(self) -> Motion:
        return motion_from_matrix(Space(self.space), self.matrix, self.translation)


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


def _check_semantics(scene: SceneFile) -> SceneFile:
    if scene.variable in FUNCTIONS:
        raise ValidationError(f"Variable name '{scene.variable}' shadows a function", "/variable")
    if len(scene.domain) != len(scene.curves):
        raise ValidationError(f"Expected {len(scene.curves)} domain interval(s), got {len(scene.domain)}", "/domain")
    for i, (a, b) in enumerate(scene.domain):
        if not a < b:
            raise ValidationError(f"Empty interval [{a}, {b}]", f"/domain/{i}")

    for i, curve in enumerate(scene.curves):
        if scene.kind == "general" and curve.f is None:
            raise ValidationError("General Weierstrass data needs f", f"/curves/{i}/f")
        if scene.kind == "canonical" and curve.f is not None:
            raise ValidationError("Canonical data is fixed by g, h and omega; drop f", f"/curves/{i}/f")
        if scene.space == "R42" and curve.h is None:
            raise ValidationError("Curves in R42 need h", f"/curves/{i}/h")
        if scene.space == "R31" and curve.h is not None:
            raise ValidationError("Curves in R31 take no h", f"/curves/{i}/h")
        for field in ("f", "g", "h"):
            try:
                scene.expression(i, field)
            except ExpressionError as e:
                raise ValidationError(str(e), f"/curves/{i}/{field}") from e

    if scene.base_point is not None and len(scene.base_point) != scene.ambient.dimension:
        raise ValidationError(f"Base point must have {scene.ambient.dimension} coordinates", "/base_point")
    return scene


def validate_scene(document: Any) -> SceneFile:
    """Schema and semantic validation of a decoded scene document"""
    try:
        scene = SceneFile.model_validate(document)
    except PydanticValidationError as e:
        raise ValidationError(format_pydantic_errors(e), first_error_pointer(e)) from e
    return _check_semantics(scene)


def load_scene(source: str) -> SceneFile:
    """Built-in scene name or path of a JSON scene file"""
    if source in BUILTIN_SCENES:
        return builtin_scene(source)
    path = Path(source)
    if not path.is_file():
        raise ValidationError(f"No built-in scene or scene file named '{source}'")
    try:
        document = json.loads(path.read_text())
    except json.JSONDecodeError as e:
        raise ValidationError(f"Invalid JSON in scene file: {e}", "/") from e
    logger.debug("Loaded scene file %s", path)
    return validate_scene(document)


def load_motion(path: str) -> MotionSpec:
    try:
        document = json.loads(Path(path).read_text())
        return MotionSpec.model_validate(document)
    except FileNotFoundError as e:
        raise ValidationError(f"Motion file not found: {path}") from e
    except json.JSONDecodeError as e:
        raise ValidationError(f"Invalid JSON in motion file: {e}", "/") from e
    except PydanticValidationError as e:
        raise ValidationError(format_pydantic_errors(e), first_error_pointer(e)) from e


# ---------------------------------------------------------------------------
# Scene <-> data
# ---------------------------------------------------------------------------


def _interval(scene: SceneFile, index: int) -> tuple[float, float]:
    a, b = scene.domain[index]
    return float(a), float(b)


def _domain(scene: SceneFile) -> tuple[tuple[float, float], tuple[float, float]]:
    return _interval(scene, 0), _interval(scene, 1)


def scene_curve(scene: SceneFile, index: int = 0, tolerances: NumericTolerances = DEFAULT_TOLERANCES) -> NullCurve:
    """Null curve of the ``index``-th curve of the scene on its own interval"""
    interval = _interval(scene, index)
    omega = scene.curves[index].omega
    g, h = scene.expression(index, "g"), scene.expression(index, "h")
    if scene.kind == "canonical":
        if scene.ambient is Space.R42:
            return canonical_r42(g, h, omega, interval, base_point=scene.base_point, tolerances=tolerances)
        return canonical_r31(g, omega, interval, base_point=scene.base_point, tolerances=tolerances)
    f = scene.expression(index, "f")
    data = WeierstrassR42(f, g, h) if scene.ambient is Space.R42 else WeierstrassR31(f, g)
    return weier_curve(data, interval, base_point=scene.base_point, tolerances=tolerances)


def scene_surface_data(scene: SceneFile) -> SurfaceData:
    if not scene.is_surface:
        raise ValidationError("Scene describes a single curve, not a surface", "/curves")
    domain = _domain(scene)
    first, second = scene.curves
    expr = scene.expression
    if scene.kind == "canonical":
        if scene.ambient is Space.R42:
            return CanonicalSurfaceDataR42(
                expr(0, "g"), expr(0, "h"), expr(1, "g"), expr(1, "h"), domain, first.omega, second.omega
            )
        return CanonicalSurfaceDataR31(expr(0, "g"), expr(1, "g"), domain, first.omega, second.omega)
    if scene.ambient is Space.R42:
        return SurfaceDataR42(
            WeierstrassR42(expr(0, "f"), expr(0, "g"), expr(0, "h")),
            WeierstrassR42(expr(1, "f"), expr(1, "g"), expr(1, "h")),
            domain,
        )
    return SurfaceDataR31(
        WeierstrassR31(expr(0, "f"), expr(0, "g")), WeierstrassR31(expr(1, "f"), expr(1, "g")), domain
    )


def _source(e: Expression | None) -> str | None:
    return None if e is None else e.to_source()


def surface_data_to_scene(data: SurfaceData, name: str, **options) -> SceneFile:
    """Scene document reproducing ``data``; ``options`` carries grid, projection and base point"""
    domain = [list(interval) for interval in data.domain]
    if isinstance(data, CanonicalSurfaceDataR42):
        curves = [
            {"g": _source(data.g1), "h": _source(data.h1), "omega": data.omega1},
            {"g": _source(data.g2), "h": _source(data.h2), "omega": data.omega2},
        ]
        kind = "canonical"
    elif isinstance(data, CanonicalSurfaceDataR31):
        curves = [{"g": _source(data.g1), "omega": data.omega1}, {"g": _source(data.g2), "omega": data.omega2}]
        kind = "canonical"
    else:
        curves = [
            {"f": _source(w.f), "g": _source(w.g), "h": _source(getattr(w, "h", None))}
            for w in (data.first, data.second)
        ]
        kind = "general"
    document = {
        "name": name,
        "space": data.space.value,
        "kind": kind,
        "curves": [{k: v for k, v in curve.items() if v is not None} for curve in curves],
        "domain": domain,
        **{k: v for k, v in options.items() if v is not None},
    }
    return validate_scene(document)


def split_scene_names(name: str) -> tuple[str, str]:
    return name + SPLIT_SUFFIXES[0], name + SPLIT_SUFFIXES[1]


def merged_scene_name(first: str, second: str) -> str:
    """Common stem of a split pair, e.g. X-g and X-h -> X"""
    g_suffix, h_suffix = SPLIT_SUFFIXES
    if first.endswith(g_suffix) and second.endswith(h_suffix) and first[: -len(g_suffix)] == second[: -len(h_suffix)]:
        return first[: -len(g_suffix)]
    return f"{first}+{second}"


def pair_from_scenes(first: SceneFile, second: SceneFile) -> SurfacePair:
    """SurfacePair from two canonical R31 surface scenes"""
    members = []
    for i, scene in enumerate((first, second)):
        data = scene_surface_data(scene)
        if not isinstance(data, CanonicalSurfaceDataR31):
            raise ValidationError("Merging needs canonical R31 surface scenes", f"/{i}/kind")
        members.append(data)
    try:
        return SurfacePair(*members)
    except LorentzError as e:
        raise ValidationError(str(e), "/1/domain") from e


# ---------------------------------------------------------------------------
# Built-in scenes and corpora
# ---------------------------------------------------------------------------

CATENOID_DOMAIN = [[0.2, 2.0], [0.2, 2.0]]

BUILTIN_SCENES: dict[str, dict[str, Any]] = {
    "catenoid-gamma1": {
        "space": "R42",
        "kind": "general",
        "curves": [{"f": "0.5*exp(-t)", "g": "exp(t)", "h": "exp(t)"}],
        "domain": [[-2.0, 2.0]],
    },
    "catenoid-gamma2": {
        "space": "R42",
        "kind": "general",
        "curves": [{"f": "0.5", "g": "-exp(t)", "h": "exp(-t)"}],
        "domain": [[-2.0, 2.0]],
    },
    "catenoid-merged": {
        "space": "R42",
        "kind": "canonical",
        "curves": [{"g": "exp(t)", "h": "exp(t)"}, {"g": "-exp(t)", "h": "exp(-t)"}],
        "domain": CATENOID_DOMAIN,
    },
    "catenoid-general": {
        "space": "R42",
        "kind": "general",
        "curves": [
            {"f": "0.5*exp(-t)", "g": "exp(t)", "h": "exp(t)"},
            {"f": "0.5", "g": "-exp(t)", "h": "exp(-t)"},
        ],
        "domain": CATENOID_DOMAIN,
    },
    "catenoid-first-kind": {
        "space": "R31",
        "kind": "canonical",
        "curves": [{"g": "exp(t)"}, {"g": "-exp(t)"}],
        "domain": CATENOID_DOMAIN,
    },
    "catenoid-second-kind": {
        "space": "R31",
        "kind": "canonical",
        "curves": [{"g": "exp(t)"}, {"g": "exp(-t)"}],
        "domain": CATENOID_DOMAIN,
    },
    "first-type": {
        "space": "R42",
        "kind": "canonical",
        "curves": [{"g": "t", "h": "exp(t)"}, {"g": "t", "h": "2*exp(t)"}],
        "domain": [[0.0, 0.5], [1.0, 1.5]],
    },
    "second-type": {
        "space": "R42",
        "kind": "canonical",
        "curves": [{"g": "t", "h": "-t"}, {"g": "sinh(t)", "h": "-2*t", "omega": -1}],
        "domain": [[-0.5, 0.5], [2.0, 2.5]],
    },
    "third-type": {
        "space": "R42",
        "kind": "canonical",
        "curves": [{"g": "t", "h": "t"}, {"g": "t", "h": "-t", "omega": -1}],
        "domain": [[1.0, 2.0], [3.0, 4.0]],
    },
    "second-type-symmetric": {
        "space": "R42",
        "kind": "canonical",
        "curves": [{"g": "t", "h": "-t"}, {"g": "t", "h": "-t", "omega": -1}],
        "domain": [[1.0, 2.0], [3.0, 4.0]],
    },
}

CORPORA: dict[str, tuple[str, ...]] = {
    "catenoid-example": ("catenoid-merged", "catenoid-general", "catenoid-first-kind", "catenoid-second-kind"),
    "typed": ("first-type", "second-type", "third-type", "second-type-symmetric"),
    "curves": ("catenoid-gamma1", "catenoid-gamma2"),
    "none": (),
}
CORPORA["all"] = CORPORA["curves"] + CORPORA["catenoid-example"] + CORPORA["typed"]
CORPORA["paper-example"] = CORPORA["catenoid-example"]


def builtin_scene(name: str) -> SceneFile:
    if name not in BUILTIN_SCENES:
        raise ValidationError(f"Unknown built-in scene '{name}'")
    return validate_scene({"name": name, **BUILTIN_SCENES[name]})


def corpus_scenes(name: str) -> list[SceneFile]:
    if name not in CORPORA:
        raise ValidationError(f"Unknown corpus '{name}'; available: {', '.join(sorted(CORPORA))}")
    return [builtin_scene(scene) for scene in CORPORA[name]]
