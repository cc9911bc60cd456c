"""Pattern families: snake crosses, plain crosses, and decorated labyrinths."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from labyrinth.errors import BadParameter, NotLabyrinth
from labyrinth.grid import Pattern
from labyrinth.props import validate


class Chirality(str, Enum):
    RIGHT = "right"
    LEFT = "left"


@dataclass(frozen=True)
class SnakeSpec:
    k: int
    chirality: Chirality = Chirality.RIGHT

    def __post_init__(self):
        if self.k < 1:
            raise BadParameter(f"snake cross index k must be >= 1, got {self.k}")
        object.__setattr__(self, "chirality", Chirality(self.chirality))

    @property
    def width(self) -> int:
        return 4 * self.k + 7

    @property
    def center(self) -> int:
        return 2 * self.k + 3


def _turn(heading: tuple[int, int], side: str) -> tuple[int, int]:
    dx, dy = heading
    return (dy, -dx) if side == "right" else (-dy, dx)


def snake_arm(k: int, chirality: Chirality | str = Chirality.RIGHT) -> list[tuple[int, int]]:
    """Cells of the arm running from the centre to the bottom exit.

    Offsets are relative to the central square, the exit cell comes last. A
    straight run stops before stepping onto a diagonal through the centre, or
    once it lands next to the exit (which ends the arm).
    """
    spec = SnakeSpec(k, chirality)
    first = "right" if spec.chirality is Chirality.RIGHT else "left"
    second = "left" if first == "right" else "right"
    c = spec.center
    exit_cell = (0, -c)
    x, y = 0, 0
    heading = (0, -1)
    cells: list[tuple[int, int]] = []

    def step():
        nonlocal x, y
        x, y = x + heading[0], y + heading[1]
        if abs(x) >= abs(y) or y <= -c:
            raise AssertionError(f"arm left its quadrant at {(x, y)}")
        cells.append((x, y))

    def next_to_exit() -> bool:
        return abs(x - exit_cell[0]) + abs(y - exit_cell[1]) == 1

    def run() -> bool:
        while True:
            nx, ny = x + heading[0], y + heading[1]
            if abs(nx) == abs(ny):
                return False
            step()
            if next_to_exit():
                return True

    step()
    step()
    turn_order = (first, second, second, first)
    for _ in range(c):  # each pass descends four rows, so this bound is never hit
        for i, side in enumerate(turn_order):
            heading = _turn(heading, side)
            if i % 2 == 0:
                if run():
                    cells.append(exit_cell)
                    return cells
            else:
                step()
                step()
    raise AssertionError("arm construction did not reach the exit")


def snake_cross(spec: SnakeSpec | int, chirality: Chirality | str = Chirality.RIGHT) -> Pattern:
    """The k-th snake cross pattern, of width 4k+7.

    The bottom arm is built step by step and the other three are its quarter
    turns about the central square.
    """
    if not isinstance(spec, SnakeSpec):
        spec = SnakeSpec(int(spec), chirality)
    m, c = spec.width, spec.center
    arm = np.array(snake_arm(spec.k, spec.chirality), dtype=np.int64)
    arr = np.zeros((m, m), dtype=bool)
    arr[c, c] = True
    dx, dy = arm[:, 0], arm[:, 1]
    for _ in range(4):
        arr[c + dy, c + dx] = True
        dx, dy = -dy, dx
    return Pattern(arr)


def plain_cross(k: int) -> Pattern:
    """Width 2k+1 cross: the full middle row and the full middle column."""
    if k < 1:
        raise BadParameter(f"plain cross index k must be >= 1, got {k}")
    m = 2 * k + 1
    arr = np.zeros((m, m), dtype=bool)
    arr[k, :] = True
    arr[:, k] = True
    return Pattern(arr)


def _white_neighbours(arr: np.ndarray, row: int, col: int) -> int:
    m = arr.shape[0]
    n = 0
    if row > 0 and arr[row - 1, col]:
        n += 1
    if row < m - 1 and arr[row + 1, col]:
        n += 1
    if col > 0 and arr[row, col - 1]:
        n += 1
    if col < m - 1 and arr[row, col + 1]:
        n += 1
    return n


def _keeps_exits_and_corners(arr: np.ndarray, row: int, col: int) -> bool:
    m = arr.shape[0]
    last = m - 1
    # a new boundary square may complete a second exit pair
    if row == 0 and arr[last, col]:
        return False
    if row == last and arr[0, col]:
        return False
    if col == 0 and arr[row, last]:
        return False
    if col == last and arr[row, 0]:
        return False
    if (row, col) in ((0, 0), (last, last)) and arr[last - row, last - col]:
        return False
    if (row, col) in ((0, last), (last, 0)) and arr[last - row, last - col]:
        return False
    return True


def decorate(pattern: Pattern, seed: int, attempts: int) -> Pattern:
    """Grow dead-end branches onto a labyrinth pattern without changing its core.

    Each attempt picks a random black square; it is whitened when it touches
    exactly one white square (so the graph stays a tree) and creates neither a
    new exit pair nor a white diagonal corner pair.
    """
    if not validate(pattern).is_labyrinth():
        raise NotLabyrinth("decorate needs a labyrinth pattern")
    rng = np.random.default_rng(seed)
    arr = pattern.cells.copy()
    m = pattern.width
    for _ in range(attempts):
        black = np.flatnonzero(~arr)
        if black.size == 0:
            break
        row, col = divmod(int(black[rng.integers(black.size)]), m)
        if _white_neighbours(arr, row, col) == 1 and _keeps_exits_and_corners(arr, row, col):
            arr[row, col] = True
    return Pattern(arr)
