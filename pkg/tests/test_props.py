import json

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from labyrinth import MissingExits, NotLabyrinth
from labyrinth.generators import decorate, plain_cross, snake_cross
from labyrinth.grid import CellAddr, Pattern, compose, make_pattern
from labyrinth.props import (
    adjacency,
    check_blocked,
    check_corner,
    check_tree,
    core,
    core_by_pruning,
    exit_set,
    find_exits,
    validate,
)

from conftest import load_fixture

ALL_WHITE_2 = Pattern(np.ones((2, 2), bool))
ALL_WHITE_3 = Pattern(np.ones((3, 3), bool))


def nx_graph(p: Pattern) -> nx.Graph:
    g = nx.grid_2d_graph(p.width, p.width)
    g.remove_nodes_from([(c, r) for c, r in list(g.nodes) if not p.is_white((c, r))])
    return g


def test_adjacency_examples():
    g = adjacency(plain_cross(1))
    assert (g.n_vertices, g.n_edges) == (5, 4)
    assert g.degree((1, 1)) == 4
    assert sorted(g.neighbors((1, 1))) == [(0, 1), (1, 0), (1, 2), (2, 1)]
    g = adjacency(ALL_WHITE_2)
    assert (g.n_vertices, g.n_edges) == (4, 4)
    g = adjacency(make_pattern(3, [(2, 2)]))
    assert (g.n_vertices, g.n_edges) == (1, 0)


def test_diagonal_contact_is_not_an_edge():
    g = adjacency(make_pattern(2, [(0, 0), (1, 1)]))
    assert g.n_edges == 0 and g.edges() == []


def test_check_tree_examples():
    assert check_tree(plain_cross(1))
    assert not check_tree(ALL_WHITE_2)
    for k in range(1, 6):
        assert check_tree(snake_cross(k))


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 6).flatmap(lambda m: arrays(bool, (m, m))))
def test_check_tree_matches_networkx(arr):
    if not arr.any():
        return
    p = Pattern(arr)
    assert check_tree(p) == nx.is_tree(nx_graph(p))
    assert adjacency(p).n_edges == nx_graph(p).number_of_edges()


def test_find_exits_examples():
    v, h = find_exits(plain_cross(1))
    assert v == [(CellAddr(1, 2), CellAddr(1, 0))]
    assert h == [(CellAddr(0, 1), CellAddr(2, 1))]
    assert find_exits(make_pattern(4, [(0, 0)])) == ([], [])


@pytest.mark.parametrize("k", range(1, 6))
def test_snake_exits(k):
    e = exit_set(snake_cross(k))
    c = 2 * k + 3
    assert (e.exit_col, e.exit_row) == (c, c)
    m = 4 * k + 7
    assert e.top == (c, m - 1) and e.bottom == (c, 0)
    assert e.left == (0, c) and e.right == (m - 1, c)


def test_exit_set_requires_unique_pairs():
    with pytest.raises(MissingExits):
        exit_set(ALL_WHITE_3)
    with pytest.raises(MissingExits):
        check_blocked(ALL_WHITE_3)


def test_corner():
    assert not check_corner(make_pattern(3, [(0, 0), (2, 2)]))
    assert not check_corner(make_pattern(3, [(0, 2), (2, 0)]))
    assert check_corner(make_pattern(3, [(0, 0), (2, 0)]))
    assert check_corner(plain_cross(1))
    for k in range(1, 6):
        assert check_corner(snake_cross(k))


def test_blockedness():
    for k in range(1, 6):
        b = check_blocked(snake_cross(k))
        assert b.h_blocked and b.v_blocked
        assert b.row_black == b.col_black == 2 * k
    b = check_blocked(plain_cross(1))
    assert not b.h_blocked and not b.v_blocked
    b = check_blocked(load_fixture("pair_w4.txt"))
    assert b.h_blocked and b.v_blocked


def test_validate_examples():
    r = validate(snake_cross(3))
    assert r.is_labyrinth() and r.h_blocked and r.v_blocked
    assert validate(compose(snake_cross(1), snake_cross(2))).is_labyrinth()
    r = validate(ALL_WHITE_3)
    assert not r.is_labyrinth()
    assert not r.is_tree and r.vertical_pairs == 3 and r.horizontal_pairs == 3 and not r.corner_ok
    assert any("cycle" in f for f in r.failures)


@pytest.mark.parametrize("name", ["pair_w4.txt", "pair_w5.txt", "pair_w20.txt", "special_cross_w11.txt",
                                  "decorated_w15.txt", "snake_k2.txt", "snake_k3.txt"])
def test_fixtures_are_labyrinths(name):
    assert validate(load_fixture(name)).is_labyrinth()


def test_small_width_is_not_labyrinth():
    r = validate(make_pattern(2, [(0, 0), (0, 1), (1, 1)]))
    assert not r.is_labyrinth()
    assert any("width 2" in f for f in r.failures)


def test_disconnected_diagnostic():
    p = make_pattern(5, [(2, j) for j in range(5)] + [(i, 2) for i in range(5)] + [(0, 0)])
    r = validate(p)
    assert not r.is_tree
    assert any("disconnected" in f for f in r.failures)


def test_report_serialization():
    r = validate(snake_cross(2))
    d = json.loads(r.to_json())
    assert list(d) == ["tree", "v_pairs", "h_pairs", "corner", "h_blocked", "v_blocked", "exit_col", "exit_row"]
    assert d == {"tree": True, "v_pairs": 1, "h_pairs": 1, "corner": True, "h_blocked": True,
                 "v_blocked": True, "exit_col": 7, "exit_row": 7}
    text = r.to_text()
    assert "is_labyrinth: true" in text and "exit_col: 7" in text
    bad = validate(ALL_WHITE_3).to_dict()
    assert bad["exit_col"] is None


@pytest.mark.parametrize("k", range(1, 6))
def test_core_of_snake_is_itself(k):
    assert core(snake_cross(k)) == snake_cross(k)


def test_core_examples():
    assert core(plain_cross(1)) == plain_cross(1)
    fig = load_fixture("decorated_w15.txt")
    assert core(fig) == snake_cross(2) == load_fixture("snake_k2.txt")
    assert core_by_pruning(fig) == core(fig)
    with pytest.raises(NotLabyrinth):
        core(ALL_WHITE_3)


def test_core_matches_networkx_steiner_tree():
    p = decorate(snake_cross(3), seed=5, attempts=300)
    g = nx_graph(p)
    e = exit_set(p)
    terminals = [tuple(e[n]) for n in ("top", "bottom", "left", "right")]
    nodes = set()
    for t in terminals[1:]:
        nodes |= set(nx.shortest_path(g, terminals[0], t))
    assert set(map(tuple, core(p).white_cells())) == nodes


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 4), st.integers(0, 2**32 - 1), st.integers(0, 400))
def test_core_properties_on_decorated(k, seed, attempts):
    p = decorate(snake_cross(k), seed, attempts)
    c = core(p)
    assert validate(c).is_labyrinth()
    assert not (c.cells & ~p.cells).any()
    assert core(c) == c
    assert core_by_pruning(p) == c


@pytest.mark.parametrize("name", ["pair_w4.txt", "pair_w5.txt", "special_cross_w11.txt", "decorated_w15.txt"])
def test_core_minimality(name):
    c = core(load_fixture(name))
    for cell in c.white_cells():
        assert not validate(c.with_color(cell, False)).is_labyrinth()
