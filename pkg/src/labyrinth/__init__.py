"""Labyrinth patterns, mixed labyrinth sets and their exit-to-exit arcs."""

from labyrinth.errors import (
    BadAddress,
    BadParameter,
    EmptyPattern,
    LabyrinthError,
    MissingExits,
    NotLabyrinth,
    NotTree,
    NotWhite,
    ParseError,
    PreconditionViolated,
    TooLarge,
    Unreachable,
)
from labyrinth.grid import (
    CellAddr,
    LevelSet,
    Pattern,
    compose,
    compose_sequence,
    make_pattern,
    read_pattern,
    write_pattern,
)
from labyrinth.props import ExitSet, ValidationReport, core, validate
from labyrinth.generators import SnakeSpec, decorate, plain_cross, snake_cross
from labyrinth.paths import (
    ArcApproximation,
    TreePath,
    arc_approximation,
    bfs_oracle,
    exit_path_lengths,
    tree_path,
)
from labyrinth.dimension import (
    Schedule,
    dim_quotient,
    lemma3_schedule,
    level_estimate,
    star_pattern,
    target_dimension,
)

__version__ = "0.1.0"

__all__ = [
    "ArcApproximation",
    "BadAddress",
    "BadParameter",
    "CellAddr",
    "EmptyPattern",
    "ExitSet",
    "LabyrinthError",
    "LevelSet",
    "MissingExits",
    "NotLabyrinth",
    "NotTree",
    "NotWhite",
    "ParseError",
    "Pattern",
    "PreconditionViolated",
    "Schedule",
    "SnakeSpec",
    "TooLarge",
    "TreePath",
    "Unreachable",
    "ValidationReport",
    "arc_approximation",
    "bfs_oracle",
    "compose",
    "compose_sequence",
    "core",
    "decorate",
    "dim_quotient",
    "exit_path_lengths",
    "lemma3_schedule",
    "level_estimate",
    "make_pattern",
    "plain_cross",
    "read_pattern",
    "snake_cross",
    "star_pattern",
    "target_dimension",
    "tree_path",
    "validate",
    "write_pattern",
]
