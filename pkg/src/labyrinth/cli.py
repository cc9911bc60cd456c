"""Command line entry point: ``laby <subcommand> ...``.

Exit codes: 0 success, 1 validation failed, 2 usage or parse error,
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from labyrinth import dimension, errors
from labyrinth.generators import Chirality, SnakeSpec, plain_cross, snake_cross
from labyrinth.grid import Pattern, compose_sequence, read_pattern, write_pattern
from labyrinth.paths import arc_approximation, bfs_oracle, tree_path
from labyrinth.props import EXIT_NAMES, core, exit_set, validate
from labyrinth.render import RenderSpec, render_arc, render_pattern

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_TOO_LARGE = 0, 1, 2, 3


def _num(x: float) -> str:
    return f"{x:.12g}"


def _read_text(path: str | None) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    with open(path, encoding="utf-8", newline="") as fh:
        return fh.read()


def _write_text(path: str | None, text: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _load(path: str | None) -> Pattern:
    return read_pattern(_read_text(path))


def _load_many(paths: Sequence[str]) -> list[Pattern]:
    if list(paths).count("-") > 1:
        raise errors.BadParameter("stdin can be used for at most one pattern")
    return [_load(p) for p in paths]


def _endpoint(spec: str, pattern: Pattern | None):
    """An exit name, or ``col,row`` for a square of a materialized pattern."""
    if spec in EXIT_NAMES:
        return spec
    try:
        col, row = (int(v) for v in spec.split(","))
    except ValueError:
        raise errors.BadParameter(f"expected an exit name {EXIT_NAMES} or 'col,row', got {spec!r}") from None
    if pattern is None:
        raise errors.BadParameter("square coordinates need a single materialized pattern")
    return (col, row)


# ---------------------------------------------------------------------------
# subcommands


def cmd_gen(args) -> int:
    if args.family == "snake":
        chirality = Chirality.LEFT if args.left else Chirality.RIGHT
        pattern = snake_cross(SnakeSpec(args.k, chirality))
    else:
        pattern = plain_cross(args.k)
    _write_text(args.out, write_pattern(pattern))
    return EXIT_OK


def cmd_validate(args) -> int:
    report = validate(_load(args.file))
    sys.stdout.write(report.to_json() + "\n" if args.json else report.to_text())
    return EXIT_OK if report.is_labyrinth() else EXIT_INVALID


def cmd_compose(args) -> int:
    level = compose_sequence(_load_many(args.files))
    _write_text(args.out, write_pattern(level.pattern))
    return EXIT_OK


def cmd_path(args) -> int:
    patterns = _load_many(args.pattern)
    single = patterns[0] if len(patterns) == 1 else None
    start = _endpoint(args.start, single)
    end = _endpoint(args.end, single)
    if isinstance(start, str) and isinstance(end, str):
        arc = arc_approximation(patterns, start, end, method=args.method)
        path = arc.levels[-1]
        print(f"width {arc.widths[-1]}")
        print(f"length {path.length}")
        if args.levels:
            for n, (p, w, how) in enumerate(zip(arc.levels, arc.widths, arc.methods), start=1):
                print(f"level {n} width {w} length {p.length} via {how}")
    else:
        pattern = single if single is not None else compose_sequence(patterns).pattern
        a = exit_set(pattern)[start] if isinstance(start, str) else start
        b = exit_set(pattern)[end] if isinstance(end, str) else end
        path = tree_path(pattern, a, b)
        print(f"width {pattern.width}")
        print(f"length {path.length}")
    if args.squares:
        for col, row in path.cells:
            print(f"{col} {row}")
    return EXIT_OK


def cmd_oracle(args) -> int:
    pattern = compose_sequence(_load_many(args.pattern)).pattern
    start = _endpoint(args.start, pattern)
    end = _endpoint(args.end, pattern)
    a = exit_set(pattern)[start] if isinstance(start, str) else start
    b = exit_set(pattern)[end] if isinstance(end, str) else end
    via_tree = tree_path(pattern, a, b).length
    via_bfs = bfs_oracle(pattern, a, b)
    print(f"tree_path {via_tree}")
    print(f"bfs_oracle {via_bfs}")
    print("agree" if via_tree == via_bfs else "MISMATCH")
    return EXIT_OK if via_tree == via_bfs else EXIT_INVALID


def cmd_core(args) -> int:
    _write_text(args.out, write_pattern(core(_load(args.file))))
    return EXIT_OK


def cmd_dim_quotient(args) -> int:
    print(_num(dimension.dim_quotient(args.k)))
    return EXIT_OK


def cmd_dim_estimate(args) -> int:
    terms = dimension.read_schedule(_read_text(args.schedule))
    estimates = dimension.schedule_estimates(terms)
    print(f"estimate {_num(estimates[-1])}")
    tail = estimates[len(estimates) // 2 :]
    print(f"tail_min {_num(min(tail))}")
    print(f"tail_max {_num(max(tail))}")
    if args.trace:
        for j, e in enumerate(estimates, start=1):
            print(f"{j} {_num(e)}")
    return EXIT_OK


def cmd_dim_target(args) -> int:
    schedule = dimension.target_dimension(args.delta, args.tol, args.max_terms)
    _write_text(args.out, schedule.to_text())
    table = schedule.trace_table()
    if args.trace_out:
        _write_text(args.trace_out, table)
    else:
        sys.stderr.write(table)
    for line in schedule.diagnostics:
        sys.stderr.write(f"# {line}\n")
    return EXIT_OK if schedule.converged else EXIT_INVALID


def cmd_render(args) -> int:
    patterns = _load_many(args.inputs)
    spec_kw = dict(cell_px=args.cell_px, grid_lines=args.grid, color_arms=args.arms)
    if args.path:
        start, _, end = args.path.partition(":")
        if start not in EXIT_NAMES or end not in EXIT_NAMES:
            raise errors.BadParameter(f"--path expects e.g. top:bottom, got {args.path!r}")
        arc = arc_approximation(patterns, start, end, method="bfs")
        base = compose_sequence(patterns).pattern
        if len(patterns) == 1:
            svg = render_pattern(base, RenderSpec(overlay=arc.levels[0], **spec_kw))
        else:
            svg = render_arc(arc, RenderSpec(**spec_kw), base=base)
    else:
        svg = render_pattern(compose_sequence(patterns).pattern, RenderSpec(**spec_kw))
    _write_text(args.out, svg)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="laby", description="Labyrinth patterns, arcs and dimensions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a pattern family member")
    p.add_argument("family", choices=("snake", "cross"))
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--left", action="store_true", help="left snake cross (mirror image)")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("validate", help="check the labyrinth properties")
    p.add_argument("file", nargs="?")
    p.add_argument("--json", action="store_true", help="key/value JSON instead of the text report")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("compose", help="compose patterns into a level set")
    p.add_argument("files", nargs="+")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_compose)

    for name, func in (("path", cmd_path), ("oracle", cmd_oracle)):
        p = sub.add_parser(name, help="exit-to-exit path" if name == "path" else "cross-check path lengths by plain BFS")
        p.add_argument("--from", dest="start", default="top")
        p.add_argument("--to", dest="end", default="bottom")
        p.add_argument("--pattern", nargs="+", required=True)
        if name == "path":
            p.add_argument("--squares", action="store_true", help="list the squares, one 'col row' per line")
            p.add_argument("--levels", action="store_true", help="report every level of the composition")
            p.add_argument("--method", choices=("auto", "bfs", "substitution"), default="auto")
        p.set_defaults(func=func)

    p = sub.add_parser("core", help="minimal labyrinth sub-pattern")
    p.add_argument("file", nargs="?")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_core)

    dim = sub.add_parser("dim", help="dimension quotients, estimates and schedules")
    dsub = dim.add_subparsers(dest="dim_command", required=True)
    p = dsub.add_parser("quotient")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_dim_quotient)
    p = dsub.add_parser("estimate")
    p.add_argument("--schedule", required=True, help="schedule file, one 'k p q' line per term ('-' for stdin)")
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=cmd_dim_estimate)
    p = dsub.add_parser("target")
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-3)
    p.add_argument("--max-terms", type=int, default=64)
    p.add_argument("-o", "--out", help="schedule file (default stdout)")
    p.add_argument("--trace-out", help="trace table file (default stderr)")
    p.set_defaults(func=cmd_dim_target)

    p = sub.add_parser("render", help="SVG rendering")
    p.add_argument("--in", dest="inputs", nargs="+", required=True)
    p.add_argument("--out")
    p.add_argument("--path", help="overlay an exit path, e.g. top:bottom")
    p.add_argument("--arms", action="store_true", help="colour the four arms around the centre")
    p.add_argument("--cell-px", type=int, default=10)
    p.add_argument("--grid", action="store_true")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except errors.TooLarge as exc:
        print(f"laby: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except (errors.ParseError, errors.BadParameter, errors.BadAddress, errors.EmptyPattern, ValueError, OSError) as exc:
        print(f"laby: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except errors.LabyrinthError as exc:
        print(f"laby: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
