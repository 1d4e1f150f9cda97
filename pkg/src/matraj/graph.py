"""Grid discretization and the fixed-hop shortest-path solver.

For channels with more than two paths the rail is discretized into ``N``
grid centers and the trajectory problem becomes a shortest-path problem
on a layered graph: vertices are grid centers, an edge joins two centers
whenever one slot of movement can bridge them (at most ``d_max`` steps,
self-loops included), and a dummy terminal vertex absorbs every center so
a whole trajectory is one path with a fixed number of hops.  Every edge
is weighted with the negated rate at its *source* center, so minimizing
path cost maximizes the rate accumulated over the horizon.

The dynamic program sweeps one hop layer at a time, keeping only the
current cost vector plus one predecessor row per layer for path
reconstruction.  Ties between predecessors always go to the smaller
vertex index; the brute-force oracle applies the identical rule so the
two solvers agree on paths, not just costs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from .model import (
    ChannelRealization,
    SystemParams,
    Trajectory,
    _require,
    achievable_rate,
)

# Enumeration guard for the brute-force oracle.
_ORACLE_MAX_SEQUENCES = 10_000_000


def nearest_center_index(x: float, spacing_m: float, num_grids: int) -> int:
    """1-based index of the grid center closest to ``x``.

    Exact halves round toward the smaller index; the result is clamped to
    ``[1, num_grids]``.
    """
    y = x / spacing_m
    i = math.floor(y)
    idx = i if (y - i) <= 0.5 else i + 1
    return min(max(idx, 1), num_grids)


@dataclass(frozen=True, eq=False)
class Grid:
    """Uniform discretization of the rail into ``N`` centers ``n * D / N``."""

    spacing_m: float
    centers_m: np.ndarray
    start_index: int

    def __post_init__(self) -> None:
        centers = np.asarray(self.centers_m, dtype=float)
        centers.setflags(write=False)
        object.__setattr__(self, "centers_m", centers)
        _require(1 <= self.start_index <= len(centers),
                 "start_index must lie in [1, num_grids]")

    @property
    def num_grids(self) -> int:
        return len(self.centers_m)

    def position_of(self, vertex: int) -> float:
        """Position of a 1-based grid vertex."""
        return float(self.centers_m[vertex - 1])


def discretize(p: SystemParams) -> Grid:
    """Build the grid for ``p`` and snap the start position onto it."""
    _require(p.num_grids >= 2, "num_grids must be >= 2 for discretization")
    spacing = p.grid_spacing_m
    centers = (np.arange(1, p.num_grids + 1, dtype=float) * p.region_length_m
               / p.num_grids)
    start = nearest_center_index(p.start_pos_m, spacing, p.num_grids)
    return Grid(spacing, centers, start)


def max_grid_step(p: SystemParams) -> int:
    """Largest number of grid steps one slot of movement can cover.

    Floored so the velocity cap is never violated when mapping paths back
    to positions; the 1e-9 nudge only absorbs floating-point noise in the
    ratio (e.g. 0.12 * 0.01 / 0.0006 landing a hair under 2).
    """
    return int(math.floor(p.max_step_m / p.grid_spacing_m + 1e-9))


@dataclass(frozen=True, eq=False)
class MovementGraph:
    """Banded movement graph over ``num_grid`` centers plus a dummy terminal.

    Edges exist between centers at most ``d_max`` indices apart (self-loops
    included) and from every center to the dummy vertex ``num_grid + 1``.
    ``vertex_weight[i]`` is the negated rate at center ``i + 1``; every edge
    costs the weight of its source vertex.
    """

    num_grid: int
    d_max: int
    vertex_weight: np.ndarray
    start_index: int

    def __post_init__(self) -> None:
        weight = np.asarray(self.vertex_weight, dtype=float)
        weight.setflags(write=False)
        object.__setattr__(self, "vertex_weight", weight)
        _require(self.d_max >= 1, "d_max must be >= 1")
        _require(len(weight) == self.num_grid,
                 "vertex_weight must have one entry per grid center")
        _require(bool(np.all(weight <= 0.0)), "every vertex_weight must be <= 0")
        _require(1 <= self.start_index <= self.num_grid,
                 "start_index must lie in [1, num_grid]")

    @property
    def num_vertices(self) -> int:
        return self.num_grid + 1

    @property
    def dummy_index(self) -> int:
        return self.num_grid + 1

    def has_edge(self, i: int, j: int) -> bool:
        if j == self.dummy_index:
            return 1 <= i <= self.num_grid
        return (1 <= i <= self.num_grid and 1 <= j <= self.num_grid
                and abs(i - j) <= self.d_max)


@dataclass(frozen=True)
class HopPath:
    """A start-to-dummy path with a fixed number of edges.

    ``vertices`` holds 1-based indices, ending at the dummy vertex;
    ``total_cost`` is the sum of source-vertex weights along the edges.
    """

    vertices: tuple[int, ...]
    total_cost: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(int(v) for v in self.vertices))

    @property
    def num_hops(self) -> int:
        return len(self.vertices) - 1


def build_graph(g: Grid, ch: ChannelRealization, p: SystemParams) -> MovementGraph:
    """Weight the grid with negated rates and attach the motion band."""
    d_max = max_grid_step(p)
    _require(d_max >= 1,
             "d_max must be >= 1: v_max_mps * slot_s covers less than one grid step")
    weights = -achievable_rate(g.centers_m, ch, p)
    return MovementGraph(g.num_grids, d_max, weights, g.start_index)


def fixed_hop_shortest_path(mg: MovementGraph, hops: int) -> HopPath:
    """Cheapest path from the start vertex to the dummy using exactly
    ``hops`` edges.

    Layered recurrence: ``f_0`` is zero at the start vertex, and each layer
    takes the best predecessor within the motion band, charging the
    predecessor's weight.  The final hop into the dummy is open to every
    center.  Predecessor ties go to the smaller vertex index.
    """
    _require(hops >= 1, "hops must be >= 1")
    n, d = mg.num_grid, mg.d_max
    weight = mg.vertex_weight
    window = 2 * d + 1
    pad = np.full(d, np.inf)

    f = np.full(n, np.inf)
    f[mg.start_index - 1] = 0.0
    preds = np.empty((hops - 1, n), dtype=np.int32)  # 0-based predecessor rows

    for m in range(1, hops):
        cand = f + weight
        windows = sliding_window_view(np.concatenate((pad, cand, pad)), window)
        offset = np.argmin(windows, axis=1)
        f = windows[np.arange(n), offset]
        preds[m - 1] = np.arange(n) + offset - d

    final = f + weight
    last = int(np.argmin(final))
    total = float(final[last])
    if not np.isfinite(total):
        raise RuntimeError("no feasible fixed-hop path; the movement graph "
                           "always has one via self-loops")

    chain = [last]
    v = last
    for m in range(hops - 1, 0, -1):
        v = int(preds[m - 1][v])
        chain.append(v)
    chain.reverse()
    if chain[0] != mg.start_index - 1:
        raise RuntimeError("path reconstruction did not end at the start vertex")
    vertices = tuple(v + 1 for v in chain) + (mg.dummy_index,)
    return HopPath(vertices, total)


def brute_force_oracle(mg: MovementGraph, hops: int) -> HopPath:
    """Exhaustive reference solver for small instances.

    Enumerates every feasible vertex sequence, accumulating costs in the
    same left-to-right order as the dynamic program, and keeps the
    cheapest; cost ties are resolved by comparing vertices from the end of
    the path backward, smaller index first, which reproduces the DP's
    per-layer tie-break exactly.
    """
    _require(hops >= 1, "hops must be >= 1")
    n, d = mg.num_grid, mg.d_max
    size = (2 * d + 1) ** (hops - 1)
    if size > _ORACLE_MAX_SEQUENCES:
        raise ValueError(
            f"instance too large for brute force: (2*d_max+1)**(hops-1) = {size} "
            f"exceeds {_ORACLE_MAX_SEQUENCES}")

    weight = mg.vertex_weight.tolist()
    start = mg.start_index
    best_cost = math.inf
    best_key: tuple | None = None
    best_path: list[int] | None = None
    path = [start]

    def descend(cost: float, left: int) -> None:
        nonlocal best_cost, best_key, best_path
        if left == 0:
            if cost < best_cost:
                best_cost, best_key, best_path = cost, None, list(path)
            elif cost == best_cost:
                key = tuple(reversed(path))
                if best_key is None:
                    best_key = tuple(reversed(best_path))
                if key < best_key:
                    best_key, best_path = key, list(path)
            return
        v = path[-1]
        for u in range(max(1, v - d), min(n, v + d) + 1):
            path.append(u)
            descend(cost + weight[u - 1], left - 1)
            path.pop()

    descend(weight[start - 1], hops - 1)
    assert best_path is not None
    return HopPath(tuple(best_path) + (mg.dummy_index,), best_cost)


def path_to_trajectory(hp: HopPath, g: Grid, p: SystemParams) -> Trajectory:
    """Map a hop path back to antenna positions, dropping the dummy vertex.

    The trajectory is anchored at the snapped start center, which may
    differ from ``p.start_pos_m`` by up to half a grid step.
    """
    verts = np.asarray(hp.vertices[:-1], dtype=int)
    _require(bool(np.all((verts >= 1) & (verts <= g.num_grids))),
             "path contains vertices outside the grid")
    _require(verts[0] == g.start_index, "path must begin at the grid start index")
    positions = g.centers_m[verts - 1]
    return Trajectory(positions, replace(p, start_pos_m=float(positions[0])))


def snap_to_grid(t: Trajectory, g: Grid) -> Trajectory:
    """Round every trajectory position to its nearest grid center.

    Feasibility of the result is validated on construction; with a
    per-slot step that is an integer number of grid steps the snapped
    trajectory always stays within the motion band.
    """
    idx = np.array([nearest_center_index(x, g.spacing_m, g.num_grids)
                    for x in t.positions_m])
    positions = g.centers_m[idx - 1]
    return Trajectory(positions, replace(t.params, start_pos_m=float(positions[0])))
