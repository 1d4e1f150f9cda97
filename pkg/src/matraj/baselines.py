"""Benchmark movement policies the graph solver is compared against.

All three policies move on the same grid as the graph solver (at most
``d_max`` grid steps per slot), so the solver's dominance over them is a
guarantee rather than an empirical trend.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .graph import Grid, max_grid_step, nearest_center_index
from .model import ChannelRealization, SystemParams, Trajectory, _require, channel_gain


@dataclass(frozen=True)
class CrestSet:
    """1-based grid indices of the local maxima of the power gain."""

    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "indices", tuple(int(i) for i in self.indices))


def _grid_gains(g: Grid, ch: ChannelRealization, p: SystemParams) -> np.ndarray:
    return np.abs(channel_gain(g.centers_m, ch, p.wavelength_m)) ** 2


def find_crests(g: Grid, ch: ChannelRealization, p: SystemParams) -> CrestSet:
    """Local maxima of the gain over the grid.

    Runs of equal gain (1e-12 relative) count as one plateau and
    contribute their midpoint index, the left one for even-length runs;
    boundary centers compare one-sided.
    """
    gains = _grid_gains(g, ch, p)
    n = len(gains)

    # Split into plateau runs of approximately equal gain.
    runs: list[tuple[int, int, float]] = []  # (first, last, value), 0-based
    first = 0
    for i in range(1, n):
        if abs(gains[i] - gains[i - 1]) > 1e-12 * max(abs(gains[i]),
                                                      abs(gains[i - 1])):
            runs.append((first, i - 1, float(gains[first])))
            first = i
    runs.append((first, n - 1, float(gains[first])))

    crests = []
    for r, (lo, hi, value) in enumerate(runs):
        left_ok = r == 0 or runs[r - 1][2] < value
        right_ok = r == len(runs) - 1 or runs[r + 1][2] < value
        if left_ok and right_ok:
            mid = lo + (hi - lo) // 2
            crests.append(mid + 1)
    return CrestSet(tuple(crests))


def _grid_ramp(start: int, target: int, num_slots: int, d_max: int) -> np.ndarray:
    """Index sequence moving ``d_max`` steps per slot toward ``target``,
    holding after arrival."""
    seq = np.empty(num_slots + 1, dtype=int)
    seq[0] = start
    v = start
    for k in range(1, num_slots + 1):
        v += int(np.clip(target - v, -d_max, d_max))
        seq[k] = v
    return seq


def _indices_to_trajectory(seq: np.ndarray, g: Grid, p: SystemParams) -> Trajectory:
    positions = g.centers_m[seq - 1]
    return Trajectory(positions, replace(p, start_pos_m=float(positions[0])))


def myopic_trajectory(g: Grid, ch: ChannelRealization, p: SystemParams) -> Trajectory:
    """Run at full grid speed to the crest nearest the start and stop there.

    Distance ties between crests go to the smaller coordinate.
    """
    crests = find_crests(g, ch, p)
    _require(len(crests.indices) >= 1, "gain scan found no crest")
    x0 = p.start_pos_m
    target = min(crests.indices, key=lambda i: (abs(g.position_of(i) - x0), i))
    seq = _grid_ramp(g.start_index, target, p.num_slots, max_grid_step(p))
    return _indices_to_trajectory(seq, g, p)


def farsighted_trajectory(g: Grid, ch: ChannelRealization,
                          p: SystemParams) -> Trajectory:
    """Run at full grid speed to the highest-gain center reachable within
    the horizon and stop there.

    Reachability is measured in grid steps (at most ``num_slots * d_max``
    indices away).  Gain ties prefer the closer center, then the smaller
    coordinate, so a flat landscape keeps the antenna where it started.
    """
    gains = _grid_gains(g, ch, p)
    d_max = max_grid_step(p)
    s = g.start_index
    reach = p.num_slots * d_max
    lo = max(1, s - reach)
    hi = min(g.num_grids, s + reach)
    target = min(range(lo, hi + 1),
                 key=lambda i: (-gains[i - 1], abs(i - s), i))
    seq = _grid_ramp(s, target, p.num_slots, d_max)
    return _indices_to_trajectory(seq, g, p)


def fpa_trajectory(g: Grid, p: SystemParams) -> Trajectory:
    """Fixed antenna at the grid center nearest the middle of the rail."""
    center = nearest_center_index(p.region_length_m / 2.0, g.spacing_m,
                                  g.num_grids)
    seq = np.full(p.num_slots + 1, center, dtype=int)
    return _indices_to_trajectory(seq, g, p)
