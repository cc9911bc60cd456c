import re

import numpy as np
import pytest

from labyrinth import BadParameter, TooLarge
from labyrinth.generators import plain_cross, snake_cross
from labyrinth.grid import make_pattern
from labyrinth.paths import arc_approximation
from labyrinth.render import RenderSpec, arm_labels, level_opacity, render_arc, render_pattern

from conftest import FIXTURES, load_fixture

RECT = re.compile(r'<rect class="([^"]+)" x="(\d+)" y="(\d+)" width="(\d+)" height="(\d+)"')


def rects(svg, cls):
    return [tuple(map(int, m[1:])) for m in RECT.findall(svg) if m[0] == cls]


def test_plain_cross_render():
    svg = render_pattern(plain_cross(1), RenderSpec(cell_px=10))
    assert 'width="30" height="30"' in svg
    black = rects(svg, "black")
    assert sorted((x, y) for x, y, _, _ in black) == [(0, 0), (0, 20), (20, 0), (20, 20)]


def test_top_row_drawn_at_top():
    svg = render_pattern(make_pattern(3, [(0, 2), (1, 2), (2, 2), (0, 1), (1, 1), (2, 1)]), RenderSpec(cell_px=1))
    assert {y for _, y, _, _ in rects(svg, "black")} == {2}


@pytest.mark.parametrize("path", sorted(FIXTURES.glob("*.txt")), ids=lambda p: p.name)
def test_black_count_parity(path):
    p = load_fixture(path.name)
    assert len(rects(render_pattern(p), "black")) == p.black_count


def test_determinism():
    a = render_pattern(snake_cross(3), RenderSpec(color_arms=True, grid_lines=True))
    b = render_pattern(snake_cross(3), RenderSpec(color_arms=True, grid_lines=True))
    assert a == b


def test_golden_arms():
    svg = render_pattern(snake_cross(2), RenderSpec(cell_px=20, color_arms=True))
    assert svg == (FIXTURES / "golden" / "snake_k2_arms.svg").read_text()


@pytest.mark.parametrize("k", range(1, 5))
def test_arm_labels(k):
    labels = arm_labels(snake_cross(k))
    sizes = {name: len(cells) for name, cells in labels.items()}
    assert sizes.pop("center") == 1
    # each arm runs from the centre's neighbour out to its exit
    assert set(sizes.values()) == {2 * k * k + 2 * k + 3}
    bottom = {tuple(c) for c in labels["bottom"]}
    c = 2 * k + 3
    right = {(c - (r - c), c + (col - c)) for col, r in bottom}
    assert right == {tuple(x) for x in labels["right"]}


def test_arm_labels_need_white_centre():
    with pytest.raises(BadParameter):
        arm_labels(make_pattern(3, [(0, 0)]))


def test_overlay():
    arc = arc_approximation([snake_cross(1)], "top", "bottom")
    svg = render_pattern(snake_cross(1), RenderSpec(overlay=arc.levels[0]))
    assert len(rects(svg, "path")) == 15
    with pytest.raises(BadParameter):
        render_pattern(snake_cross(2), RenderSpec(overlay=arc.levels[0]))


def test_render_arc_single_level():
    arc = arc_approximation([snake_cross(1)], "top", "bottom")
    svg = render_arc(arc)
    assert len(rects(svg, "level-1")) == 15


def test_render_arc_without_levels_is_plain_render():
    assert render_arc(None, base=snake_cross(1)) == render_pattern(snake_cross(1))
    with pytest.raises(BadParameter):
        render_arc(None)


def test_render_arc_nesting_from_svg():
    seq = [snake_cross(1), snake_cross(2)]
    arc = arc_approximation(seq, "top", "bottom")
    svg = render_arc(arc, RenderSpec(cell_px=2))
    coarse = rects(svg, "level-1")
    fine = rects(svg, "level-2")
    assert len(coarse) == 15 and len(fine) == 465
    boxes = np.array(coarse)
    for x, y, w, _ in fine:
        inside = (boxes[:, 0] <= x) & (x + w <= boxes[:, 0] + boxes[:, 2]) & (boxes[:, 1] <= y) & (y + w <= boxes[:, 1] + boxes[:, 3])
        assert inside.any()
    assert '<g class="level" data-level="1" data-width="11" fill-opacity="0.9">' in svg
    assert '<g class="level" data-level="2" data-width="165" fill-opacity="0.2">' in svg


def test_level_opacity_decreasing():
    ops = [level_opacity(n, 5) for n in range(1, 6)]
    assert all(a > b for a, b in zip(ops, ops[1:]))
    assert level_opacity(1, 1) == 0.9


def test_caps():
    with pytest.raises(TooLarge):
        render_pattern(plain_cross(2000), RenderSpec(cell_px=10))
    with pytest.raises(BadParameter):
        RenderSpec(cell_px=0)
