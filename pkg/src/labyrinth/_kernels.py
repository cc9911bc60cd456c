"""Graph kernels over the white squares of a pattern.

The white squares are numbered 0..N-1 in row-major order of the backing
array and their side-neighbours stored in an ``(N, 4)`` int table (-1 for
none). The traversal kernels exist twice: plain loops compiled with numba,
and a vectorized numpy path. ``LABY_BACKEND=numpy`` forces the second one;
it is also used when numba cannot be imported.
"""

from __future__ import annotations

import warnings
from types import SimpleNamespace

import numpy as np

from labyrinth import _config

# neighbour slots: east, north, west, south
EAST, NORTH, WEST, SOUTH = 0, 1, 2, 3


def white_graph(cells: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Index the white squares of `cells` and build the neighbour table.

    Returns ``(flat, nbr)``: ``flat[v]`` is the row-major flat index of white
    square v, ``nbr[v, s]`` the white neighbour in slot s or -1.
    """
    m = cells.shape[1]
    flat = np.flatnonzero(cells)
    n = flat.size
    cols = flat % m
    nbr = np.full((n, 4), -1, dtype=np.int64)
    if n == 0:
        return flat, nbr
    for slot, delta, ok in (
        (EAST, 1, cols < m - 1),
        (NORTH, m, flat < cells.size - m),
        (WEST, -1, cols > 0),
        (SOUTH, -m, flat >= m),
    ):
        cand = flat + delta
        pos = np.searchsorted(flat, cand)
        pos_clipped = np.minimum(pos, n - 1)
        hit = ok & (pos < n) & (flat[pos_clipped] == cand)
        nbr[hit, slot] = pos_clipped[hit]
    return flat, nbr


def edge_count(cells: np.ndarray) -> int:
    horiz = np.count_nonzero(cells[:, 1:] & cells[:, :-1])
    vert = np.count_nonzero(cells[1:, :] & cells[:-1, :])
    return int(horiz + vert)


# ---------------------------------------------------------------------------
# loop implementations (compiled by numba when available)


def _bfs_loop(nbr, source):
    n = nbr.shape[0]
    dist = np.full(n, -1, np.int64)
    parent = np.full(n, -1, np.int64)
    queue = np.empty(n, np.int64)
    queue[0] = source
    dist[source] = 0
    head = 0
    tail = 1
    while head < tail:
        u = queue[head]
        head += 1
        for s in range(4):
            v = nbr[u, s]
            if v >= 0 and dist[v] < 0:
                dist[v] = dist[u] + 1
                parent[v] = u
                queue[tail] = v
                tail += 1
    return dist, parent


def _trace_loop(parent, dist, target):
    length = dist[target] + 1
    out = np.empty(length, np.int64)
    v = target
    for i in range(length - 1, -1, -1):
        out[i] = v
        v = parent[v]
    return out


def _prune_loop(nbr, keep):
    n = nbr.shape[0]
    alive = np.ones(n, np.bool_)
    degree = np.zeros(n, np.int64)
    for u in range(n):
        for s in range(4):
            if nbr[u, s] >= 0:
                degree[u] += 1
    stack = np.empty(n, np.int64)
    top = 0
    for u in range(n):
        if degree[u] <= 1 and not keep[u]:
            stack[top] = u
            top += 1
    while top > 0:
        top -= 1
        u = stack[top]
        if not alive[u]:
            continue
        alive[u] = False
        for s in range(4):
            v = nbr[u, s]
            if v >= 0 and alive[v]:
                degree[v] -= 1
                if degree[v] <= 1 and not keep[v]:
                    stack[top] = v
                    top += 1
    return alive


# ---------------------------------------------------------------------------
# vectorized numpy implementations


def _bfs_numpy(nbr, source):
    n = nbr.shape[0]
    dist = np.full(n, -1, np.int64)
    parent = np.full(n, -1, np.int64)
    dist[source] = 0
    frontier = np.array([source], dtype=np.int64)
    level = 0
    while frontier.size:
        level += 1
        cand = nbr[frontier]  # (F, 4)
        owners = np.repeat(frontier, 4)
        cand = cand.ravel()
        ok = cand >= 0
        cand, owners = cand[ok], owners[ok]
        fresh = dist[cand] < 0
        cand, owners = cand[fresh], owners[fresh]
        cand, first = np.unique(cand, return_index=True)
        dist[cand] = level
        parent[cand] = owners[first]
        frontier = cand
    return dist, parent


def _trace_numpy(parent, dist, target):
    length = int(dist[target]) + 1
    out = np.empty(length, np.int64)
    v = int(target)
    for i in range(length - 1, -1, -1):
        out[i] = v
        v = int(parent[v])
    return out


def _prune_numpy(nbr, keep):
    n = nbr.shape[0]
    alive = np.ones(n, dtype=bool)
    degree = (nbr >= 0).sum(axis=1)
    leaves = np.flatnonzero((degree <= 1) & ~keep)
    # peel one layer of leaves per round, touching only their neighbours
    while leaves.size:
        alive[leaves] = False
        touched = nbr[leaves].ravel()
        touched = touched[touched >= 0]
        touched = touched[alive[touched]]
        np.subtract.at(degree, touched, 1)
        cand = np.unique(touched)
        leaves = cand[(degree[cand] <= 1) & ~keep[cand]]
    return alive


def _make_numba():
    import numba

    jit = numba.njit(cache=True, nogil=True)
    return SimpleNamespace(
        name="numba",
        bfs=jit(_bfs_loop),
        trace=jit(_trace_loop),
        prune=jit(_prune_loop),
    )


def _make_numpy():
    return SimpleNamespace(name="numpy", bfs=_bfs_numpy, trace=_trace_numpy, prune=_prune_numpy)


_CACHE: dict[str, SimpleNamespace] = {}


def get_backend(name: str | None = None) -> SimpleNamespace:
    """Return the kernel namespace for `name` (default: from ``LABY_BACKEND``)."""
    name = (name or _config.backend_name())
    if name in _CACHE:
        return _CACHE[name]
    if name == "numba":
        try:
            ns = _make_numba()
        except ImportError:
            warnings.warn("numba is not importable; using the numpy kernels", RuntimeWarning)
            ns = _make_numpy()
    elif name == "numpy":
        ns = _make_numpy()
    else:
        raise ValueError(f"unknown LABY_BACKEND {name!r} (expected 'numba' or 'numpy')")
    _CACHE[name] = ns
    return ns


def bfs(nbr: np.ndarray, source: int) -> tuple[np.ndarray, np.ndarray]:
    """Distances (edges) and BFS parents from `source`; -1 where unreached."""
    return get_backend().bfs(nbr, np.int64(source))


def trace(parent: np.ndarray, dist: np.ndarray, target: int) -> np.ndarray:
    """Vertex sequence from the BFS source to `target`, both included."""
    return get_backend().trace(parent, dist, np.int64(target))


def prune(nbr: np.ndarray, keep: np.ndarray) -> np.ndarray:
    """Repeatedly drop vertices of degree <= 1 that are not in `keep`."""
    return get_backend().prune(nbr, keep)
