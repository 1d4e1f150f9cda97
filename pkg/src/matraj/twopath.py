"""Closed-form optimal trajectory for two-path channels.

With exactly two propagation paths the power gain along the rail is a
single cosine of the position, so the best the antenna can do is run at
full speed to a position where the two paths add in phase (a "coherent
position", usually the nearest one) and stay there.  This module
enumerates those positions and builds that trajectory without any
discretization.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .model import (
    ChannelRealization,
    FEAS_EPS_M,
    SystemParams,
    Trajectory,
    _require,
    achievable_rate,
)


@dataclass(frozen=True, eq=False)
class CoherentSet:
    """All positions on the rail where a two-path channel peaks.

    ``period_m`` is the spacing between consecutive peaks; ``None`` marks
    the degenerate channel whose gain does not depend on position at all
    (equal path cosines), where no peak exists.
    """

    positions_m: np.ndarray
    period_m: float | None

    def __post_init__(self) -> None:
        pos = np.asarray(self.positions_m, dtype=float)
        pos.setflags(write=False)
        object.__setattr__(self, "positions_m", pos)
        if self.period_m is not None:
            _require(self.period_m > 0, "period_m must be > 0")

    @property
    def is_degenerate(self) -> bool:
        return self.period_m is None

    def __len__(self) -> int:
        return len(self.positions_m)


def _peak_lattice(ch: ChannelRealization,
                  wavelength_m: float) -> tuple[float, float] | None:
    """(anchor, period) of the full in-phase position lattice, or ``None``
    for a degenerate channel.  ``anchor`` is one lattice member; peaks sit
    at ``anchor + n * period`` for every integer ``n``, on the rail or not.
    """
    delta_cos = float(ch.cos_aod[0] - ch.cos_aod[1])
    if delta_cos == 0.0:
        return None
    a1, a2 = ch.coeff
    delta_phase = float(np.angle(a2) - np.angle(a1))
    # x(n) = (n - delta_phase/(2*pi)) * step with signed step wavelength/dcos.
    step = wavelength_m / delta_cos
    anchor = -(delta_phase / (2.0 * np.pi)) * step
    if not (np.isfinite(step) and np.isfinite(anchor)):
        # cosine difference below float resolution: flat for all purposes
        return None
    return anchor, abs(step)


def coherent_positions(ch: ChannelRealization, p: SystemParams) -> CoherentSet:
    """Enumerate the in-phase positions of a two-path channel on the rail.

    The peaks sit at ``x = (2*n*pi - dphi) * wavelength / (2*pi*dcos)`` for
    integer ``n``, where ``dphi`` is the coefficient phase offset and
    ``dcos`` the difference of the path cosines; only those inside
    ``[0, region_length_m]`` are returned, sorted ascending.
    """
    _require(ch.num_paths == 2, "coherent_positions requires exactly 2 paths")
    lattice = _peak_lattice(ch, p.wavelength_m)
    if lattice is None:
        return CoherentSet(np.empty(0), None)
    anchor, period = lattice
    n_lo = int(np.ceil((0.0 - anchor) / period - 1e-9))
    n_hi = int(np.floor((p.region_length_m - anchor) / period + 1e-9))
    xs = anchor + np.arange(n_lo, n_hi + 1, dtype=float) * period
    xs = xs[(xs >= -FEAS_EPS_M) & (xs <= p.region_length_m + FEAS_EPS_M)]
    xs = np.clip(np.sort(xs), 0.0, p.region_length_m)
    return CoherentSet(xs, period)


def nearest_coherent(x0: float, cs: CoherentSet) -> float | None:
    """Closest coherent position to ``x0``; ties go to the smaller
    coordinate.  Returns ``None`` when the set is empty."""
    _require(not cs.is_degenerate, "nearest_coherent requires a non-degenerate set")
    if len(cs) == 0:
        return None
    dist = np.abs(cs.positions_m - x0)
    return float(cs.positions_m[int(np.argmin(dist))])


def closed_form_trajectory(x0: float, x_star: float, p: SystemParams) -> Trajectory:
    """Full-speed run from ``x0`` to ``x_star``, then hold.

    The last moving slot is clipped so the antenna lands exactly on
    ``x_star``; if the distance cannot be covered within the horizon the
    antenna simply moves at maximum speed for all slots.
    """
    _require(0.0 <= x0 <= p.region_length_m, "x0 must lie in [0, region_length_m]")
    _require(0.0 <= x_star <= p.region_length_m,
             "x_star must lie in [0, region_length_m]")
    dist = abs(x_star - x0)
    sign = 1.0 if x_star >= x0 else -1.0
    ks = np.arange(p.num_slots + 1, dtype=float)
    positions = x0 + sign * np.minimum(ks * p.max_step_m, dist)
    return Trajectory(positions, replace(p, start_pos_m=float(x0)))


def _mean_rate(t: Trajectory, ch: ChannelRealization, p: SystemParams) -> float:
    return float(np.mean(achievable_rate(t.positions_m[1:], ch, p)))


def solve_twopath(ch: ChannelRealization, p: SystemParams) -> Trajectory:
    """Optimal trajectory for a two-path channel.

    The gain along the rail is one cosine, so an optimal trajectory is a
    full-speed run toward the nearest in-phase peak in one of the two
    directions (clipped at the rail end when that peak lies outside the
    rail), then holding.  Usually the nearest peak overall wins, but when
    the rail cuts off one side of the lattice the start can sit beyond the
    valley, where running away from the nearest on-rail peak earns more;
    both directional candidates are therefore evaluated exactly and the
    better average rate decides, ties toward the smaller coordinate.  A
    degenerate channel (position-independent gain) yields the constant
    trajectory.
    """
    _require(ch.num_paths == 2, "solve_twopath requires exactly 2 paths")
    x0 = p.start_pos_m
    lattice = _peak_lattice(ch, p.wavelength_m)
    if lattice is None:
        return closed_form_trajectory(x0, x0, p)
    anchor, period = lattice
    peak_right = anchor + period * np.ceil((x0 - anchor) / period - 1e-12)
    peak_left = anchor + period * np.floor((x0 - anchor) / period + 1e-12)
    targets = sorted({max(float(peak_left), 0.0),
                      min(float(peak_right), p.region_length_m)})
    best = None
    best_rate = -np.inf
    for target in targets:  # ascending: ties resolve to the smaller coordinate
        t = closed_form_trajectory(x0, target, p)
        rate = _mean_rate(t, ch, p)
        if rate > best_rate:
            best, best_rate = t, rate
    return best
