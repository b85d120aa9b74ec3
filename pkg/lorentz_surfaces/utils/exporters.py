"""Exporters for curve tables, surface tables, meshes and JSON documents.

All writers format floats with ``repr``-exact ``.17g`` so identical inputs give
byte-identical files.
"""

import json
import logging
from pathlib import Path
from typing import Any

import numpy as np

from ..core.minimal_surfaces import SurfaceSamples, classify_by_curvature
from ..core.null_curves import CurveSamples
from ..validators import InputValidator

logger = logging.getLogger(__name__)


def format_float(value: float) -> str:
    value = float(value)
    if np.isnan(value):
        return "nan"
    if np.isinf(value):
        return "inf" if value > 0 else "-inf"
    return f"{value:.17g}"


def _row(values) -> str:
    return ",".join(v if isinstance(v, str) else format_float(v) for v in values)


def curve_csv(samples: CurveSamples) -> str:
    """Columns t, x1..xn, dx1..dxn, accel_norm2, s (empty for degenerate curves)"""
    n = samples.points.shape[0]
    header = ["t", *(f"x{i + 1}" for i in range(n)), *(f"dx{i + 1}" for i in range(n)), "accel_norm2", "s"]
    lines = [",".join(header)]
    for k, t in enumerate(samples.t):
        s = "" if samples.s is None else format_float(samples.s[k])
        values = [t, *samples.points[:, k], *samples.velocity[:, k], samples.accel_norm2[k], s]
        lines.append(_row(values))
    return "\n".join(lines) + "\n"


def _type_labels(samples: SurfaceSamples) -> np.ndarray:
    shape = samples.F.shape
    if samples.surface_type is not None:
        return np.full(shape, samples.surface_type.value, dtype=object)
    if samples.points.shape[0] == 3:
        return np.full(shape, "", dtype=object)
    # Without canonical data only the sign of K^2 - kappa^2 is known
    sign = classify_by_curvature(samples.K, samples.kappa)
    labels = np.full(shape, "degenerate", dtype=object)
    labels[sign > 0] = "first-or-second"
    labels[sign < 0] = "third"
    return labels


def surface_csv(samples: SurfaceSamples) -> str:
    """Columns t1, t2, x1..xn, F, K, kappa, type in row-major grid order"""
    n = samples.points.shape[0]
    header = ["t1", "t2", *(f"x{i + 1}" for i in range(n)), "F", "K", "kappa", "type"]
    labels = _type_labels(samples)
    lines = [",".join(header)]
    for i, t1 in enumerate(samples.t1):
        for j, t2 in enumerate(samples.t2):
            point = samples.points[:, i, j]
            values = [t1, t2, *point, samples.F[i, j], samples.K[i, j], samples.kappa[i, j], labels[i, j]]
            lines.append(_row(values))
    return "\n".join(lines) + "\n"


def project_points(points: np.ndarray, projection: str) -> np.ndarray:
    """Drop one coordinate of R42 points; R31 points pass through"""
    if points.shape[0] == 3:
        return points
    InputValidator.validate_projection(projection)
    dropped = int(projection[-1]) - 1
    return np.delete(points, dropped, axis=0)


def surface_obj(samples: SurfaceSamples, projection: str = "drop3", name: str = "surface") -> str:
    """Triangle mesh of the sampled grid: n*m vertices and 2(n-1)(m-1) faces"""
    xyz = project_points(samples.points, projection)
    n, m = samples.F.shape
    lines = [f"# {name}", f"# grid {n}x{m}", f"o {name}"]
    for i in range(n):
        for j in range(m):
            lines.append("v " + " ".join(format_float(c) for c in xyz[:, i, j]))
    for i in range(n - 1):
        for j in range(m - 1):
            a = i * m + j + 1
            b, c, d = a + m, a + 1, a + m + 1
            lines.append(f"f {a} {b} {d}")
            lines.append(f"f {a} {d} {c}")
    return "\n".join(lines) + "\n"


def _json_default(value: Any) -> Any:
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    raise TypeError(f"Cannot serialize {type(value).__name__}")


def to_json(document: Any) -> str:
    return json.dumps(document, indent=2, sort_keys=True, default=_json_default) + "\n"


def curve_json(samples: CurveSamples) -> str:
    return to_json(
        {
            "t": samples.t,
            "points": samples.points.T,
            "velocity": samples.velocity.T,
            "accel_norm2": samples.accel_norm2,
            "s": samples.s,
        }
    )


def surface_json(samples: SurfaceSamples) -> str:
    return to_json(
        {
            "t1": samples.t1,
            "t2": samples.t2,
            "points": np.moveaxis(samples.points, 0, -1),
            "F": samples.F,
            "K": samples.K,
            "kappa": samples.kappa,
            "type": None if samples.surface_type is None else samples.surface_type.value,
        }
    )


def write_output(directory: Path, filename: str, content: str) -> Path:
    """Write ``content`` under ``directory``, creating it if needed"""
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / filename
    with path.open("w", encoding="utf-8", newline="\n") as fh:
        fh.write(content)
    logger.info("Wrote %s (%d bytes)", path, len(content))
    return path
