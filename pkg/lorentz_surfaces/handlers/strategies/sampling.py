"""Curve and surface sampling command handlers using Strategy pattern"""

import argparse

from ...utils.exporters import curve_csv, curve_json, surface_csv, surface_json, surface_obj
from ...validators import ValidationError
from .base import CommandResult, CommandStrategy


class CurveHandler(CommandStrategy):
    """Handler for null curve tables"""

    async def handle(self, args: argparse.Namespace) -> CommandResult:
        scene = self._single_scene(args)
        index = args.curve - 1
        if index >= len(scene.curves):
            raise ValidationError(f"Scene '{scene.name}' has no curve {args.curve}", f"/curves/{index}")
        fmt = args.format or "csv"
        if fmt == "obj":
            raise ValidationError("OBJ export needs a surface, use the surface command")

        grid = self._grid(args)
        table = await self.toolkit.curve_table(scene, None if grid is None else grid[0], index)
        stem = scene.name if index == 0 else f"{scene.name}-curve{args.curve}"
        if fmt == "json":
            return self._emit(args, [(f"{stem}.json", curve_json(table.samples))])
        return self._emit(args, [(f"{stem}.csv", curve_csv(table.samples))])


class SurfaceHandler(CommandStrategy):
    """Handler for surface tables and meshes"""

    async def handle(self, args: argparse.Namespace) -> CommandResult:
        scene = self._single_scene(args)
        if not scene.is_surface:
            raise ValidationError(f"Scene '{scene.name}' describes a single curve", "/curves")
        projection = self._projection(args, scene)
        samples = await self.toolkit.surface_samples(scene, self._grid(args))

        writers = {
            "obj": lambda: (f"{scene.name}.obj", surface_obj(samples, projection, scene.name)),
            "csv": lambda: (f"{scene.name}.csv", surface_csv(samples)),
            "json": lambda: (f"{scene.name}.json", surface_json(samples)),
        }
        if args.format:
            formats = [args.format]
        else:
            # Mesh and table together when writing to a directory, the table alone on stdout
            formats = ["obj", "csv"] if args.out else ["csv"]
        return self._emit(args, [writers[fmt]() for fmt in formats])
