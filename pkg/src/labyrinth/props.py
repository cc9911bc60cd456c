"""Labyrinth properties: tree, exits, corner, blockedness, and the core."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from labyrinth import _kernels
from labyrinth.errors import BadAddress, MissingExits, NotLabyrinth
from labyrinth.grid import CellAddr, Pattern

EXIT_NAMES = ("top", "bottom", "left", "right")


class PatternGraph:
    """Read-only graph view G(P): white squares joined when they share a side."""

    def __init__(self, pattern: Pattern):
        self.pattern = pattern
        self.flat, self.nbr = _kernels.white_graph(pattern.cells)

    @property
    def n_vertices(self) -> int:
        return int(self.flat.size)

    @property
    def n_edges(self) -> int:
        return int(np.count_nonzero(self.nbr >= 0)) // 2

    def index_of(self, addr: tuple[int, int]) -> int:
        col, row = addr
        m = self.pattern.width
        if not (0 <= col < m and 0 <= row < m):
            raise BadAddress(f"{tuple(addr)} outside a width-{m} grid")
        key = row * m + col
        pos = int(np.searchsorted(self.flat, key))
        if pos >= self.flat.size or self.flat[pos] != key:
            raise KeyError(addr)
        return pos

    def addr_of(self, v: int) -> CellAddr:
        row, col = divmod(int(self.flat[v]), self.pattern.width)
        return CellAddr(col, row)

    def addrs(self, vertices: np.ndarray) -> np.ndarray:
        """``(k, 2)`` array of ``[col, row]`` for an array of vertex ids."""
        row, col = np.divmod(self.flat[vertices], self.pattern.width)
        return np.stack([col, row], axis=1)

    def degree(self, addr: tuple[int, int]) -> int:
        return int(np.count_nonzero(self.nbr[self.index_of(addr)] >= 0))

    def neighbors(self, addr: tuple[int, int]) -> list[CellAddr]:
        v = self.index_of(addr)
        return [self.addr_of(u) for u in self.nbr[v] if u >= 0]

    def edges(self) -> list[tuple[CellAddr, CellAddr]]:
        out = []
        for v in range(self.n_vertices):
            for u in self.nbr[v]:
                if u > v:
                    out.append((self.addr_of(v), self.addr_of(u)))
        return out


def adjacency(pattern: Pattern) -> PatternGraph:
    return PatternGraph(pattern)


def check_tree(pattern: Pattern) -> bool:
    n = pattern.white_count
    if _kernels.edge_count(pattern.cells) != n - 1:
        return False
    graph = PatternGraph(pattern)
    dist, _ = _kernels.bfs(graph.nbr, 0)
    return bool((dist >= 0).all())


def find_exits(pattern: Pattern) -> tuple[list[tuple[CellAddr, CellAddr]], list[tuple[CellAddr, CellAddr]]]:
    """All vertical ``(top, bottom)`` and horizontal ``(left, right)`` exit pairs."""
    c = pattern.cells
    m = pattern.width
    cols = np.flatnonzero(c[m - 1, :] & c[0, :])
    rows = np.flatnonzero(c[:, 0] & c[:, m - 1])
    vertical = [(CellAddr(int(i), m - 1), CellAddr(int(i), 0)) for i in cols]
    horizontal = [(CellAddr(0, int(j)), CellAddr(m - 1, int(j))) for j in rows]
    return vertical, horizontal


@dataclass(frozen=True)
class ExitSet:
    top: CellAddr
    bottom: CellAddr
    left: CellAddr
    right: CellAddr

    @property
    def exit_col(self) -> int:
        return self.top.col

    @property
    def exit_row(self) -> int:
        return self.left.row

    def __getitem__(self, name: str) -> CellAddr:
        if name not in EXIT_NAMES:
            raise KeyError(name)
        return getattr(self, name)


def exit_set(pattern: Pattern) -> ExitSet:
    vertical, horizontal = find_exits(pattern)
    if len(vertical) != 1 or len(horizontal) != 1:
        raise MissingExits(
            f"need exactly one exit pair per direction, found {len(vertical)} vertical "
            f"and {len(horizontal)} horizontal"
        )
    (top, bottom), (left, right) = vertical[0], horizontal[0]
    return ExitSet(top=top, bottom=bottom, left=left, right=right)


def check_corner(pattern: Pattern) -> bool:
    c = pattern.cells
    m = pattern.width
    return not (c[0, 0] and c[m - 1, m - 1]) and not (c[m - 1, 0] and c[0, m - 1])


class Blockedness(NamedTuple):
    h_blocked: bool
    v_blocked: bool
    row_black: int
    col_black: int


def check_blocked(pattern: Pattern) -> Blockedness:
    exits = exit_set(pattern)
    row_black = int(np.count_nonzero(~pattern.cells[exits.exit_row, :]))
    col_black = int(np.count_nonzero(~pattern.cells[:, exits.exit_col]))
    return Blockedness(row_black > 0, col_black > 0, row_black, col_black)


@dataclass
class ValidationReport:
    width: int
    is_tree: bool
    vertical_pairs: int
    horizontal_pairs: int
    corner_ok: bool
    h_blocked: bool = False
    v_blocked: bool = False
    row_black: int | None = None
    col_black: int | None = None
    exits: ExitSet | None = None
    failures: list[str] = field(default_factory=list)

    def is_labyrinth(self) -> bool:
        return (
            self.is_tree
            and self.vertical_pairs == 1
            and self.horizontal_pairs == 1
            and self.corner_ok
            and self.width >= 3
        )

    def to_dict(self) -> dict:
        return {
            "tree": self.is_tree,
            "v_pairs": self.vertical_pairs,
            "h_pairs": self.horizontal_pairs,
            "corner": self.corner_ok,
            "h_blocked": self.h_blocked,
            "v_blocked": self.v_blocked,
            "exit_col": None if self.exits is None else self.exits.exit_col,
            "exit_row": None if self.exits is None else self.exits.exit_row,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)

    def to_text(self) -> str:
        lines = [f"{key}: {_fmt(value)}" for key, value in self.to_dict().items()]
        lines.append(f"is_labyrinth: {_fmt(self.is_labyrinth())}")
        lines.extend(f"failure: {msg}" for msg in self.failures)
        return "\n".join(lines) + "\n"


def _fmt(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _tree_diagnostics(graph: PatternGraph) -> tuple[bool, list[str]]:
    n = graph.n_vertices
    e = graph.n_edges
    failures = []
    dist, _ = _kernels.bfs(graph.nbr, 0)
    unreached = np.flatnonzero(dist < 0)
    if unreached.size:
        failures.append(
            f"disconnected: {unreached.size} of {n} white squares unreachable from "
            f"{tuple(graph.addr_of(0))}, e.g. {tuple(graph.addr_of(unreached[0]))}"
        )
    if unreached.size == 0 and e == n - 1:
        return True, failures
    # what survives leaf stripping is the 2-core; non-empty iff there is a cycle
    two_core = np.flatnonzero(_kernels.prune(graph.nbr, np.zeros(n, dtype=bool)))
    if two_core.size:
        failures.append(f"cycle: {n} white squares, {e} edges, e.g. through {tuple(graph.addr_of(two_core[0]))}")
    return False, failures


def validate(pattern: Pattern) -> ValidationReport:
    graph = PatternGraph(pattern)
    is_tree, failures = _tree_diagnostics(graph)
    vertical, horizontal = find_exits(pattern)
    corner_ok = check_corner(pattern)
    report = ValidationReport(
        width=pattern.width,
        is_tree=is_tree,
        vertical_pairs=len(vertical),
        horizontal_pairs=len(horizontal),
        corner_ok=corner_ok,
        failures=failures,
    )
    m = pattern.width
    if m < 3:
        failures.append(f"width {m} < 3")
    if len(vertical) != 1:
        failures.append(f"{len(vertical)} vertical exit pairs, columns {[t.col for t, _ in vertical]}")
    if len(horizontal) != 1:
        failures.append(f"{len(horizontal)} horizontal exit pairs, rows {[l.row for l, _ in horizontal]}")
    if not corner_ok:
        failures.append("white squares at diagonally opposite corners")
    if len(vertical) == 1 and len(horizontal) == 1:
        blocked = check_blocked(pattern)
        report.exits = exit_set(pattern)
        report.h_blocked = blocked.h_blocked
        report.v_blocked = blocked.v_blocked
        report.row_black = blocked.row_black
        report.col_black = blocked.col_black
    return report


def _require_labyrinth(pattern: Pattern) -> ExitSet:
    report = validate(pattern)
    if not report.is_labyrinth():
        raise NotLabyrinth("; ".join(report.failures) or "not a labyrinth pattern")
    return report.exits


def _from_vertices(pattern: Pattern, graph: PatternGraph, keep: np.ndarray) -> Pattern:
    arr = np.zeros(pattern.cells.size, dtype=bool)
    arr[graph.flat[keep]] = True
    return Pattern(arr.reshape(pattern.cells.shape))


def core(pattern: Pattern) -> Pattern:
    """Minimal labyrinth sub-pattern: the subtree spanning the four exits.

    In a tree the union of the paths from one exit to the other three is the
    smallest connected subgraph containing all four, so one BFS suffices.
    """
    exits = _require_labyrinth(pattern)
    graph = PatternGraph(pattern)
    source = graph.index_of(exits.top)
    dist, parent = _kernels.bfs(graph.nbr, source)
    keep = np.zeros(graph.n_vertices, dtype=bool)
    keep[source] = True
    for name in ("bottom", "left", "right"):
        keep[_kernels.trace(parent, dist, graph.index_of(exits[name]))] = True
    return _from_vertices(pattern, graph, keep)


def core_by_pruning(pattern: Pattern) -> Pattern:
    """Same result as :func:`core`, by stripping non-exit leaves until none remain."""
    exits = _require_labyrinth(pattern)
    graph = PatternGraph(pattern)
    keep = np.zeros(graph.n_vertices, dtype=bool)
    for name in EXIT_NAMES:
        keep[graph.index_of(exits[name])] = True
    return _from_vertices(pattern, graph, _kernels.prune(graph.nbr, keep))
