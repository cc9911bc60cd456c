"""Deterministic SVG output for patterns, arm colourings and nested arcs.

Rects are written in row-major order starting from the top row, so output
for a fixed input is byte-identical and diffs cleanly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from labyrinth import _kernels
from labyrinth.errors import BadParameter, TooLarge
from labyrinth.grid import Pattern
from labyrinth.paths import ArcApproximation, TreePath
from labyrinth.props import PatternGraph, find_exits

MAX_SIDE_PX = 1 << 15
MAX_CELLS = 1 << 22

# arm order: the centre's neighbour towards top, bottom, left, right
ARM_NAMES = ("top", "bottom", "left", "right")


@dataclass(frozen=True)
class RenderSpec:
    cell_px: int = 10
    white: str = "#ffffff"
    black: str = "#000000"
    path: str = "#d62728"
    arms: tuple[str, str, str, str] = ("#98df8a", "#ffbb78", "#aec7e8", "#ff9896")
    exits: tuple[str, str, str, str] = ("#2ca02c", "#ff7f0e", "#1f77b4", "#d62728")
    center: str = "#c7c7c7"
    overlay: TreePath | None = None
    grid_lines: bool = False
    color_arms: bool = False

    def __post_init__(self):
        if self.cell_px < 1:
            raise BadParameter("cell_px must be >= 1")


def _check_size(width: int, cell_px: int) -> int:
    side = width * cell_px
    if side > MAX_SIDE_PX or width * width > MAX_CELLS:
        raise TooLarge(f"{width}x{width} grid at {cell_px}px is above the rendering cap")
    return side


def _header(side: int) -> list[str]:
    return [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{side}" height="{side}" '
        f'viewBox="0 0 {side} {side}" shape-rendering="crispEdges">',
    ]


def _rects(cls: str, cells: np.ndarray, width: int, size: int, fill: str) -> list[str]:
    """One rect per ``[col, row]`` entry, sorted top row first then left to right."""
    if cells.size == 0:
        return []
    order = np.lexsort((cells[:, 0], -cells[:, 1]))
    out = []
    for col, row in cells[order]:
        x = int(col) * size
        y = (width - 1 - int(row)) * size
        out.append(f'<rect class="{cls}" x="{x}" y="{y}" width="{size}" height="{size}" fill="{fill}"/>')
    return out


def _grid_lines(width: int, px: int, side: int) -> list[str]:
    d = " ".join(f"M{i * px} 0V{side}M0 {i * px}H{side}" for i in range(1, width))
    return [f'<path class="grid" d="{d}" stroke="#808080" stroke-width="1" fill="none"/>'] if d else []


def arm_labels(pattern: Pattern) -> dict[str, np.ndarray]:
    """Split the white squares into the four arms hanging off the central square.

    Returns ``[col, row]`` arrays keyed by arm name, plus ``"center"``. Squares
    not connected to the centre are left out.
    """
    m = pattern.width
    c = m // 2
    if not pattern.cells[c, c]:
        raise BadParameter("arm colouring needs a white central square")
    graph = PatternGraph(pattern)
    centre = graph.index_of((c, c))
    out = {"center": graph.addrs(np.array([centre]))}
    slots = {"top": _kernels.NORTH, "bottom": _kernels.SOUTH, "left": _kernels.WEST, "right": _kernels.EAST}
    # cut the centre out and search from each of its neighbours
    nbr = graph.nbr.copy()
    for s in range(4):
        u = nbr[centre, s]
        if u >= 0:
            nbr[u, (s + 2) % 4] = -1
    nbr[centre] = -1
    for name in ARM_NAMES:
        start = graph.nbr[centre, slots[name]]
        if start < 0:
            out[name] = np.empty((0, 2), dtype=np.int64)
            continue
        dist, _ = _kernels.bfs(nbr, int(start))
        out[name] = graph.addrs(np.flatnonzero(dist >= 0))
    return out


def render_pattern(pattern: Pattern, spec: RenderSpec | None = None) -> str:
    spec = spec or RenderSpec()
    m = pattern.width
    px = spec.cell_px
    side = _check_size(m, px)
    parts = _header(side)
    parts.append(f'<rect class="background" x="0" y="0" width="{side}" height="{side}" fill="{spec.white}"/>')
    rows, cols = np.nonzero(~pattern.cells)
    parts += _rects("black", np.stack([cols, rows], axis=1), m, px, spec.black)
    if spec.color_arms:
        labels = arm_labels(pattern)
        parts += _rects("center", labels["center"], m, px, spec.center)
        for name, colour in zip(ARM_NAMES, spec.arms):
            parts += _rects(f"arm-{name}", labels[name], m, px, colour)
        vertical, horizontal = find_exits(pattern)
        if len(vertical) == 1 and len(horizontal) == 1:
            (top, bottom), (left, right) = vertical[0], horizontal[0]
            for name, cell, colour in zip(ARM_NAMES, (top, bottom, left, right), spec.exits):
                parts += _rects(f"exit-{name}", np.array([cell]), m, px, colour)
    if spec.overlay is not None:
        if spec.overlay.width != m:
            raise BadParameter(f"overlay is for width {spec.overlay.width}, pattern has width {m}")
        parts += _rects("path", spec.overlay.cells, m, px, spec.path)
    if spec.grid_lines:
        parts += _grid_lines(m, px, side)
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def level_opacity(level: int, n_levels: int) -> float:
    """Level 1 is the most opaque; later levels fade towards 0.2."""
    if n_levels <= 1:
        return 0.9
    return round(0.9 - 0.7 * (level - 1) / (n_levels - 1), 3)


def render_arc(arc: ArcApproximation | None, spec: RenderSpec | None = None, base: Pattern | None = None) -> str:
    """Draw each level's exit-to-exit path as its own layer, coarsest first.

    Every layer uses the pixel grid of the finest level. With `base` the black
    squares of that (finest) level set are drawn underneath.
    """
    spec = spec or RenderSpec()
    if arc is None or not arc.levels:
        if base is None:
            raise BadParameter("nothing to render")
        return render_pattern(base, spec)
    finest = arc.widths[-1]
    px = spec.cell_px
    side = _check_size(finest, px)
    parts = _header(side)
    parts.append(f'<rect class="background" x="0" y="0" width="{side}" height="{side}" fill="{spec.white}"/>')
    if base is not None:
        if base.width != finest:
            raise BadParameter(f"base pattern has width {base.width}, finest level has {finest}")
        rows, cols = np.nonzero(~base.cells)
        parts += _rects("black", np.stack([cols, rows], axis=1), finest, px, spec.black)
    n_levels = len(arc.levels)
    for n, (path, width) in enumerate(zip(arc.levels, arc.widths), start=1):
        scale = finest // width
        opacity = level_opacity(n, n_levels)
        parts.append(f'<g class="level" data-level="{n}" data-width="{width}" fill-opacity="{opacity}">')
        parts += _rects(f"level-{n}", path.cells, width, scale * px, spec.path)
        parts.append("</g>")
    if spec.grid_lines:
        parts += _grid_lines(finest, px, side)
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
