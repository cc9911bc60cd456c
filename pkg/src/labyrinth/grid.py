"""Pattern representation, composition of pattern sequences, and the text format.

Coordinates are ``(col, row)`` with row 0 at the *bottom* of the square. The
backing array is indexed ``cells[row, col]``. Only the text reader/writer and
the SVG renderer know about top-to-bottom order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from labyrinth import _config
from labyrinth.errors import BadAddress, BadParameter, EmptyPattern, ParseError, TooLarge

WHITE_CHAR = "."
BLACK_CHAR = "#"


class CellAddr(NamedTuple):
    col: int
    row: int


class Pattern:
    """An m x m black/white grid; True marks a white square.

    Instances are immutable: the array handed in is copied and frozen.
    """

    __slots__ = ("_cells", "_hash")

    def __init__(self, cells: np.ndarray):
        arr = np.array(cells, dtype=bool, copy=True)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
            raise BadParameter(f"pattern must be a non-empty square grid, got shape {arr.shape}")
        if not arr.any():
            raise EmptyPattern("a pattern needs at least one white square")
        arr.setflags(write=False)
        self._cells = arr
        self._hash = None

    @classmethod
    def _trusted(cls, arr: np.ndarray) -> "Pattern":
        # skips the copy; caller guarantees a fresh, square, non-empty bool array
        obj = cls.__new__(cls)
        arr.setflags(write=False)
        obj._cells = arr
        obj._hash = None
        return obj

    @property
    def cells(self) -> np.ndarray:
        """Read-only ``[row, col]`` boolean view, row 0 at the bottom."""
        return self._cells

    @property
    def width(self) -> int:
        return self._cells.shape[0]

    @property
    def white_count(self) -> int:
        return int(self._cells.sum())

    @property
    def black_count(self) -> int:
        return self.width * self.width - self.white_count

    def is_white(self, addr: tuple[int, int]) -> bool:
        col, row = addr
        if not (0 <= col < self.width and 0 <= row < self.width):
            raise BadAddress(f"{tuple(addr)} outside a width-{self.width} grid")
        return bool(self._cells[row, col])

    def white_cells(self) -> list[CellAddr]:
        rows, cols = np.nonzero(self._cells)
        return [CellAddr(int(c), int(r)) for r, c in zip(rows, cols)]

    def with_color(self, addr: tuple[int, int], white: bool) -> "Pattern":
        col, row = addr
        arr = self._cells.copy()
        arr[row, col] = white
        return Pattern(arr)

    def mirrored(self) -> "Pattern":
        """Reflect left-right (column i goes to column m-1-i)."""
        return Pattern._trusted(self._cells[:, ::-1].copy())

    def rotated(self, quarter_turns: int = 1) -> "Pattern":
        """Rotate counter-clockwise by 90 degrees per quarter turn."""
        arr = self._cells
        for _ in range(quarter_turns % 4):
            # (col, row) -> (m-1-row, col)
            arr = arr.T[:, ::-1]
        return Pattern._trusted(np.ascontiguousarray(arr))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Pattern):
            return NotImplemented
        return self._cells.shape == other._cells.shape and bool(np.array_equal(self._cells, other._cells))

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.width, np.packbits(self._cells).tobytes()))
        return self._hash

    def __repr__(self) -> str:
        return f"Pattern(width={self.width}, white={self.white_count})"


@dataclass(frozen=True)
class LevelSet:
    level: int
    pattern: Pattern
    widths: tuple[int, ...]


def make_pattern(width: int, white_cells: Iterable[tuple[int, int]]) -> Pattern:
    if width < 1:
        raise BadParameter(f"width must be >= 1, got {width}")
    arr = np.zeros((width, width), dtype=bool)
    count = 0
    for col, row in white_cells:
        if not (0 <= col < width and 0 <= row < width):
            raise BadAddress(f"({col}, {row}) outside a width-{width} grid")
        arr[row, col] = True
        count += 1
    if count == 0:
        raise EmptyPattern("a pattern needs at least one white square")
    return Pattern._trusted(arr)


def _check_width(width: int) -> None:
    cap = _config.max_width()
    if width > cap:
        raise TooLarge(f"width {width} exceeds the materialization cap {cap} (LABY_MAX_WIDTH)")


def compose(outer: Pattern, inner: Pattern) -> Pattern:
    """Replace every white square of `outer` by a copy of `inner`.

    Black squares of `outer` become all-black blocks, so the result has width
    ``outer.width * inner.width`` and ``outer.white_count * inner.white_count``
    white squares.
    """
    w = inner.width
    _check_width(outer.width * w)
    a = outer.cells
    b = inner.cells
    big = a[:, None, :, None] & b[None, :, None, :]
    return Pattern._trusted(big.reshape(a.shape[0] * w, a.shape[1] * w))


def compose_sequence(patterns: Sequence[Pattern]) -> LevelSet:
    if not patterns:
        raise BadParameter("need at least one pattern")
    widths = tuple(p.width for p in patterns)
    total = 1
    for w in widths:
        total *= w
    _check_width(total)
    result = patterns[0]
    for p in patterns[1:]:
        result = compose(result, p)
    return LevelSet(level=len(patterns), pattern=result, widths=widths)


_WIDTH_RE = re.compile(r"[0-9]+")


def read_pattern(text: str) -> Pattern:
    """Parse the text format.

    Line 1 is the decimal width m, followed by exactly m lines of m characters
    (``.`` white, ``#`` black) listed top row first, each newline-terminated.
    """
    has_final_newline = text.endswith("\n")
    body = text[:-1] if has_final_newline else text
    lines = body.split("\n")
    header = lines[0]
    if not _WIDTH_RE.fullmatch(header):
        raise ParseError(f"expected a decimal width, got {header!r}", 1, 1)
    m = int(header)
    if m < 1:
        raise ParseError("width must be at least 1", 1, 1)
    rows = lines[1:]
    arr = np.zeros((m, m), dtype=bool)
    for t, line in enumerate(rows[:m]):
        lineno = t + 2
        for col, ch in enumerate(line[:m]):
            if ch == WHITE_CHAR:
                arr[m - 1 - t, col] = True
            elif ch != BLACK_CHAR:
                raise ParseError(f"bad character {ch!r}", lineno, col + 1)
        if len(line) != m:
            raise ParseError(f"row length {len(line)}, expected {m}", lineno, min(len(line), m) + 1)
    if len(rows) < m:
        raise ParseError(f"expected {m} rows, got {len(rows)}", len(lines) + 1, 1)
    if len(rows) > m:
        raise ParseError("unexpected line after the last row", m + 2, 1)
    if not has_final_newline:
        raise ParseError("missing final newline", len(lines), len(lines[-1]) + 1)
    if not arr.any():
        raise EmptyPattern("a pattern needs at least one white square")
    return Pattern._trusted(arr)


def write_pattern(pattern: Pattern) -> str:
    chars = np.where(pattern.cells[::-1], WHITE_CHAR, BLACK_CHAR)
    rows = ["".join(r) for r in chars]
    return f"{pattern.width}\n" + "\n".join(rows) + "\n"
