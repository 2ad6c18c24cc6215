"""Deterministic SVG figures: one filled square per lattice point, grays
darkening with the layer's scale factor, byte-identical for fixed inputs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .phi import preimage_points
from .regions import Region, octagon


@dataclass(frozen=True)
class RenderStyle:
    """Marker geometry and the light-to-dark layer palette.

    Layer j is filled with lightness base_lightness - j * lightness_step
    percent, clamped from below at min_lightness, so deeper layers are
    darker.  Coordinates are kept integral: cell is the pixel pitch of the
    lattice and markers are even-sided squares centred on grid points.
    """

    cell: int = 10
    base_lightness: int = 85
    lightness_step: int = 20
    min_lightness: int = 25
    axis_cross: bool = False

    def __post_init__(self):
        if self.cell < 2:
            raise ValueError(f"cell must be >= 2 user units, got {self.cell}")
        if self.lightness_step < 1:
            raise ValueError("lightness must strictly decrease per layer")
        if not 0 < self.min_lightness <= self.base_lightness <= 100:
            raise ValueError(
                "lightness bounds must satisfy 0 < min <= base <= 100")

    def layer_fill(self, j: int) -> str:
        """Hex gray fill for scale layer j."""
        light = max(self.base_lightness - j * self.lightness_step,
                    self.min_lightness)
        v = round(255 * light / 100)
        return f"#{v:02x}{v:02x}{v:02x}"


def _document(style: RenderStyle, extent: int,
              markers: Iterable[tuple[int, int, str]]) -> str:
    half = (extent + 1) * style.cell
    size = 2 * half
    side = max(2, (4 * style.cell // 5) & ~1)
    off = side // 2
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
    ]
    if style.axis_cross:
        lines.append(f'<line x1="0" y1="{half}" x2="{size}" y2="{half}" '
                     f'stroke="#cccccc" stroke-width="1"/>')
        lines.append(f'<line x1="{half}" y1="0" x2="{half}" y2="{size}" '
                     f'stroke="#cccccc" stroke-width="1"/>')
    for x, y, fill in markers:
        px = half + x * style.cell - off
        py = half - y * style.cell - off  # positive imaginary axis points up
        lines.append(f'<rect x="{px}" y="{py}" width="{side}" '
                     f'height="{side}" fill="{fill}"/>')
    lines.append('</svg>')
    return "\n".join(lines) + "\n"


def render_region(region: Region, style: Optional[RenderStyle] = None) -> str:
    """SVG document with one marker per lattice point of the region."""
    style = style or RenderStyle()
    fill = style.layer_fill(0)
    markers = ((z.x, z.y, fill) for z in region.points())
    return _document(style, region.a, markers)


def render_decomposition(n: int, style: Optional[RenderStyle] = None) -> str:
    """SVG document of phi^{-1}([0, n]) coloured by scale layer.

    The origin, which belongs to no layer, takes the deepest layer's gray
    (so a level-0 figure is a single gray, as are its four units).
    """
    style = style or RenderStyle()
    origin_fill = style.layer_fill(n // 2)

    def markers() -> Iterator[tuple[int, int, str]]:
        for z, j in preimage_points(n):
            fill = origin_fill if j is None else style.layer_fill(j)
            yield z.x, z.y, fill

    return _document(style, octagon(n).a, markers())
