"""Paths in pattern trees, exit-to-exit lengths, and nested arc approximations.

Path lengths count squares (vertices), not edges.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from labyrinth import _config, _kernels
from labyrinth.errors import BadParameter, NotLabyrinth, NotTree, NotWhite, TooLarge, Unreachable
from labyrinth.grid import CellAddr, Pattern, compose
from labyrinth.props import EXIT_NAMES, ExitSet, PatternGraph, check_tree, exit_set, validate

# fixed order of the six unordered exit pairs
EXIT_PAIRS = (
    ("top", "bottom"),
    ("left", "right"),
    ("top", "left"),
    ("top", "right"),
    ("bottom", "left"),
    ("bottom", "right"),
)
PAIR_LABELS = ("TB", "LR", "TL", "TR", "BL", "BR")

# unit step from a square towards the named side
_SIDE_STEP = {"top": (0, 1), "bottom": (0, -1), "left": (-1, 0), "right": (1, 0)}
_STEP_SIDE = {v: k for k, v in _SIDE_STEP.items()}


@dataclass(frozen=True, eq=False)
class TreePath:
    """Squares of a path in a width-`width` grid, as an ``(L, 2)`` array of ``[col, row]``."""

    cells: np.ndarray
    width: int

    @property
    def length(self) -> int:
        return int(self.cells.shape[0])

    def __len__(self) -> int:
        return self.length

    @property
    def squares(self) -> list[CellAddr]:
        return [CellAddr(int(c), int(r)) for c, r in self.cells]

    @property
    def start(self) -> CellAddr:
        return CellAddr(*map(int, self.cells[0]))

    @property
    def end(self) -> CellAddr:
        return CellAddr(*map(int, self.cells[-1]))

    def reversed(self) -> "TreePath":
        return TreePath(self.cells[::-1].copy(), self.width)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TreePath):
            return NotImplemented
        return self.width == other.width and np.array_equal(self.cells, other.cells)


def _endpoint(graph: PatternGraph, addr) -> int:
    try:
        return graph.index_of(addr)
    except KeyError:
        raise NotWhite(f"{tuple(addr)} is a black square") from None


def tree_path(pattern: Pattern, start: tuple[int, int], end: tuple[int, int]) -> TreePath:
    """The unique path between two white squares of a tree pattern."""
    if not check_tree(pattern):
        raise NotTree("the pattern graph is not a tree")
    graph = PatternGraph(pattern)
    s = _endpoint(graph, start)
    t = _endpoint(graph, end)
    dist, parent = _kernels.bfs(graph.nbr, s)
    return TreePath(graph.addrs(_kernels.trace(parent, dist, t)), pattern.width)


def _labyrinth_exits(pattern: Pattern) -> ExitSet:
    report = validate(pattern)
    if not report.is_labyrinth():
        raise NotLabyrinth("; ".join(report.failures) or "not a labyrinth pattern")
    return report.exits


def exit_paths(pattern: Pattern) -> dict[tuple[str, str], TreePath]:
    """The six exit-to-exit paths of a labyrinth pattern, keyed by exit names."""
    exits = _labyrinth_exits(pattern)
    graph = PatternGraph(pattern)
    out: dict[tuple[str, str], TreePath] = {}
    for source in ("top", "bottom", "left"):
        s = graph.index_of(exits[source])
        dist, parent = _kernels.bfs(graph.nbr, s)
        for a, b in EXIT_PAIRS:
            if a == source and (a, b) not in out:
                t = graph.index_of(exits[b])
                out[(a, b)] = TreePath(graph.addrs(_kernels.trace(parent, dist, t)), pattern.width)
    return {pair: out[pair] for pair in EXIT_PAIRS}


def exit_path_lengths(pattern: Pattern) -> tuple[int, int, int, int, int, int]:
    """Square counts of the exit paths in the order TB, LR, TL, TR, BL, BR."""
    paths = exit_paths(pattern)
    return tuple(paths[pair].length for pair in EXIT_PAIRS)


def arm_square_count(k: int) -> int:
    """Squares on one arm of the k-th snake cross, excluding the centre."""
    if k < 1:
        raise BadParameter(f"k must be >= 1, got {k}")
    return 2 * k * k + 2 * k + 3


def snake_path_count(k: int) -> int:
    """Exit-to-exit path length of the k-th snake cross: two arms plus the centre."""
    return 2 * arm_square_count(k) + 1


def bfs_oracle(pattern: Pattern, start: tuple[int, int], end: tuple[int, int]) -> int:
    """Shortest-path square count by a plain grid BFS.

    Deliberately shares nothing with the kernel-based path code so it can
    serve as an independent check of it.
    """
    m = pattern.width
    white = pattern.cells.tobytes()
    s = start[1] * m + start[0]
    t = end[1] * m + end[0]
    for idx, addr in ((s, start), (t, end)):
        if not (0 <= addr[0] < m and 0 <= addr[1] < m) or not white[idx]:
            raise NotWhite(f"{tuple(addr)} is not a white square")
    seen = bytearray(m * m)
    seen[s] = 1
    frontier = [s]
    depth = 1
    while frontier:
        if t in frontier:
            return depth
        nxt = []
        for v in frontier:
            col = v % m
            if col + 1 < m and white[v + 1] and not seen[v + 1]:
                seen[v + 1] = 1
                nxt.append(v + 1)
            if col > 0 and white[v - 1] and not seen[v - 1]:
                seen[v - 1] = 1
                nxt.append(v - 1)
            if v + m < m * m and white[v + m] and not seen[v + m]:
                seen[v + m] = 1
                nxt.append(v + m)
            if v >= m and white[v - m] and not seen[v - m]:
                seen[v - m] = 1
                nxt.append(v - m)
        frontier = nxt
        depth += 1
    raise Unreachable(f"{tuple(start)} and {tuple(end)} lie in different components")


def _check_exit_name(name: str) -> str:
    if name not in EXIT_NAMES:
        raise BadParameter(f"exit must be one of {EXIT_NAMES}, got {name!r}")
    return name


def substitute_path(outer: TreePath, start: str, end: str, inner: Pattern) -> TreePath:
    """Refine an exit-to-exit path of a labyrinth set by one more pattern.

    Every square of `outer` is replaced by the path through `inner` joining the
    exit on the side the arc enters to the exit on the side it leaves; the arc
    enters the first square through exit `start` and leaves the last through
    `end`.
    """
    _check_exit_name(start)
    _check_exit_name(end)
    if start == end:
        raise BadParameter("start and end exits must differ")
    inner_paths = exit_paths(inner)
    table: dict[tuple[str, str], np.ndarray] = {}
    for (a, b), p in inner_paths.items():
        table[(a, b)] = p.cells
        table[(b, a)] = p.cells[::-1]
    cells = outer.cells
    n = cells.shape[0]
    steps = np.diff(cells, axis=0)
    sides_out = [_STEP_SIDE[(int(dx), int(dy))] for dx, dy in steps]
    sides_in = [_STEP_SIDE[(-int(dx), -int(dy))] for dx, dy in steps]
    entries = [start] + sides_in
    leaves = sides_out + [end]
    pieces = [table[(entries[i], leaves[i])] for i in range(n)]
    counts = np.fromiter((p.shape[0] for p in pieces), dtype=np.int64, count=n)
    w = inner.width
    base = np.repeat(cells * w, counts, axis=0)
    return TreePath(base + np.concatenate(pieces), outer.width * w)


@dataclass
class ArcApproximation:
    """Exit-to-exit paths of the level sets W_1..W_N of a pattern sequence."""

    start: str
    end: str
    levels: list[TreePath]
    widths: list[int]
    methods: list[str] = field(default_factory=list)

    def nesting(self) -> list[bool]:
        """For each consecutive pair of levels: is every finer square inside a coarser one?"""
        out = []
        for n in range(len(self.levels) - 1):
            coarse, fine = self.levels[n], self.levels[n + 1]
            ratio = fine.width // coarse.width
            parent = fine.cells // ratio
            coarse_codes = coarse.cells[:, 0] * coarse.width + coarse.cells[:, 1]
            fine_codes = parent[:, 0] * coarse.width + parent[:, 1]
            out.append(bool(np.isin(fine_codes, coarse_codes).all()))
        return out


def arc_approximation(
    patterns: Sequence[Pattern],
    start: str,
    end: str,
    method: str = "auto",
) -> ArcApproximation:
    """Nested exit-to-exit paths for every prefix of `patterns`.

    ``method="bfs"`` materializes each level set and searches it, raising
    TooLarge past the width cap. ``"substitution"`` refines the previous level's
    path without building grids. ``"auto"`` searches while the grid fits under
    the cap and substitutes beyond it.
    """
    _check_exit_name(start)
    _check_exit_name(end)
    if start == end:
        raise BadParameter("start and end exits must differ")
    if method not in ("auto", "bfs", "substitution"):
        raise BadParameter(f"unknown method {method!r}")
    if not patterns:
        raise BadParameter("need at least one pattern")
    for p in patterns:
        _labyrinth_exits(p)
    cap = _config.max_width()
    levels: list[TreePath] = []
    widths: list[int] = []
    methods: list[str] = []
    level_set: Pattern | None = None
    width = 1
    for n, p in enumerate(patterns):
        width *= p.width
        use_bfs = n == 0 or method == "bfs" or (method == "auto" and width <= cap and level_set is not None)
        if use_bfs:
            if width > cap:
                raise TooLarge(f"level {n + 1} has width {width}, above the cap {cap}")
            level_set = p if level_set is None else compose(level_set, p)
            exits = exit_set(level_set)
            path = tree_path(level_set, exits[start], exits[end])
            methods.append("bfs")
        else:
            level_set = None
            path = substitute_path(levels[-1], start, end, p)
            methods.append("substitution")
        levels.append(path)
        widths.append(width)
    return ArcApproximation(start=start, end=end, levels=levels, widths=widths, methods=methods)
