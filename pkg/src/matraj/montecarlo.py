"""Random channel generation, the rate objective and sweep experiments.

A realization draws a start position and a channel; all movement schemes
are then solved on that shared realization (common random numbers), which
makes scheme comparisons exact per realization instead of merely
statistical.  Sweeps reuse the same per-realization random streams at
every sweep value, so trends along a sweep are not blurred by resampling
noise.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .baselines import farsighted_trajectory, fpa_trajectory, myopic_trajectory
from .graph import Grid, build_graph, discretize, fixed_hop_shortest_path, \
    path_to_trajectory
from .model import (
    ChannelRealization,
    FEAS_EPS_M,
    SystemParams,
    Trajectory,
    _require,
    achievable_rate,
    channel_gain,
)

SCHEMES = ("proposed", "myopic", "farsighted", "fpa")

SWEEP_VARIABLES = ("duration_T", "num_paths", "v_max")

COEFF_MODELS = ("complex_gaussian", "uniform_phase")


def freespace_reference_gain(wavelength_m: float) -> float:
    """Free-space power gain at 1 m for the given carrier wavelength."""
    return (wavelength_m / (4.0 * np.pi)) ** 2


@dataclass(frozen=True)
class ChannelModelConfig:
    """Statistical model the random channels are drawn from.

    The total average power gain is ``reference_gain *
    link_distance_m ** -pathloss_exponent``, split equally across paths.
    ``complex_gaussian`` draws circularly-symmetric Gaussian coefficients;
    ``uniform_phase`` fixes the per-path magnitude and randomizes only the
    phase.
    """

    num_paths: int
    link_distance_m: float = 100.0
    pathloss_exponent: float = 2.8
    reference_gain: float = freespace_reference_gain(0.06)
    coeff_model: str = "complex_gaussian"

    def __post_init__(self) -> None:
        _require(float(self.num_paths) == int(self.num_paths)
                 and int(self.num_paths) >= 1,
                 "num_paths must be a positive integer")
        object.__setattr__(self, "num_paths", int(self.num_paths))
        _require(self.link_distance_m > 0, "link_distance_m must be > 0")
        _require(self.pathloss_exponent >= 0, "pathloss_exponent must be >= 0")
        _require(self.reference_gain > 0, "reference_gain must be > 0")
        _require(self.coeff_model in COEFF_MODELS,
                 f"coeff_model must be one of {COEFF_MODELS}")

    @property
    def total_power_gain(self) -> float:
        return self.reference_gain * self.link_distance_m ** (-self.pathloss_exponent)


def sample_channel(rng: np.random.Generator,
                   cfg: ChannelModelConfig) -> ChannelRealization:
    """Draw one channel: uniform departure angles on [0, pi] plus complex
    coefficients per ``cfg.coeff_model``.  Deterministic given the
    generator state.

    Draws are consumed path by path (angle, then coefficient), so two
    configs that differ only in ``num_paths`` share their common paths up
    to the power normalization; path-count sweeps under common random
    numbers then compare nested channels instead of independent ones.
    """
    num = cfg.num_paths
    per_path = cfg.total_power_gain / num
    aod = np.empty(num)
    coeff = np.empty(num, dtype=complex)
    for l in range(num):
        aod[l] = rng.uniform(0.0, np.pi)
        if cfg.coeff_model == "complex_gaussian":
            coeff[l] = np.sqrt(per_path / 2.0) * complex(rng.standard_normal(),
                                                         rng.standard_normal())
        else:
            coeff[l] = np.sqrt(per_path) * np.exp(1j * rng.uniform(0.0, 2.0 * np.pi))
    return ChannelRealization(aod, coeff)


def sample_realization(rng: np.random.Generator, params: SystemParams,
                       cfg: ChannelModelConfig, randomize_start: bool = True
                       ) -> tuple[SystemParams, ChannelRealization]:
    """Draw one (start position, channel) realization.

    With ``randomize_start`` the antenna starts on a uniformly random grid
    center; otherwise ``params.start_pos_m`` is kept as-is.  The start is
    drawn before the channel so the same stream yields the same start
    regardless of the number of paths.
    """
    if randomize_start:
        s0 = int(rng.integers(1, params.num_grids + 1))
        start = s0 * params.region_length_m / params.num_grids
        params = replace(params, start_pos_m=start)
    ch = sample_channel(rng, cfg)
    return params, ch


def average_rate(t: Trajectory, ch: ChannelRealization, p: SystemParams) -> float:
    """Mean rate over slots 1..K; the slot-0 position does not transmit."""
    pos = t.positions_m
    _require(len(pos) == p.num_slots + 1,
             "trajectory length does not match num_slots")
    steps = np.abs(np.diff(pos))
    _require(bool(np.all(steps <= p.max_step_m + FEAS_EPS_M)),
             "trajectory violates the velocity cap for these parameters")
    _require(bool(np.all((pos >= -FEAS_EPS_M)
                         & (pos <= p.region_length_m + FEAS_EPS_M))),
             "trajectory leaves the movement region")
    return float(np.mean(achievable_rate(pos[1:], ch, p)))


def solve_scheme(scheme: str, g: Grid, ch: ChannelRealization,
                 p: SystemParams) -> Trajectory:
    """Trajectory of one movement scheme on a shared grid and channel."""
    if scheme == "proposed":
        mg = build_graph(g, ch, p)
        hp = fixed_hop_shortest_path(mg, p.num_slots + 1)
        return path_to_trajectory(hp, g, p)
    if scheme == "myopic":
        return myopic_trajectory(g, ch, p)
    if scheme == "farsighted":
        return farsighted_trajectory(g, ch, p)
    if scheme == "fpa":
        return fpa_trajectory(g, p)
    raise ValueError(f"unknown scheme {scheme!r}; expected one of {SCHEMES}")


@dataclass(frozen=True, eq=False)
class SweepResult:
    """Aggregated rates of every scheme along one sweep variable.

    ``rate_matrix[scheme]`` has shape (num values, num realizations);
    infeasible sweep values keep NaN rates and a False ``feasible`` flag.
    """

    sweep_name: str
    sweep_values: tuple[float, ...]
    schemes: tuple[str, ...]
    num_realizations: int
    seed: int
    feasible: tuple[bool, ...]
    rate_matrix: dict[str, np.ndarray]
    mean_rate: dict[str, np.ndarray]
    std_rate: dict[str, np.ndarray]

    def __post_init__(self) -> None:
        nv = len(self.sweep_values)
        for scheme in self.schemes:
            _require(self.rate_matrix[scheme].shape
                     == (nv, self.num_realizations),
                     "rate matrix shape must match values x realizations")
            _require(len(self.mean_rate[scheme]) == nv
                     and len(self.std_rate[scheme]) == nv,
                     "mean/std must have one entry per sweep value")
            finite = self.std_rate[scheme][np.isfinite(self.std_rate[scheme])]
            _require(bool(np.all(finite >= 0.0)), "std_rate must be >= 0")


def _apply_sweep_value(variable: str, value: float, params: SystemParams,
                       cfg: ChannelModelConfig
                       ) -> tuple[SystemParams, ChannelModelConfig]:
    if variable == "duration_T":
        num_slots = int(round(value / params.slot_s))
        _require(num_slots >= 1 and abs(num_slots * params.slot_s - value)
                 <= 1e-9 * max(value, 1.0),
                 "duration_T must be a positive multiple of slot_s")
        return replace(params, num_slots=num_slots), cfg
    if variable == "num_paths":
        _require(abs(value - round(value)) < 1e-9,
                 "num_paths sweep values must be integers")
        return params, replace(cfg, num_paths=int(round(value)))
    if variable == "v_max":
        return replace(params, v_max_mps=float(value)), cfg
    raise ValueError(f"unknown sweep variable {variable!r}; "
                     f"expected one of {SWEEP_VARIABLES}")


def run_sweep(variable: str, values, params: SystemParams,
              cfg: ChannelModelConfig, num_realizations: int, seed: int,
              randomize_start: bool = True) -> SweepResult:
    """Solve all schemes over ``values`` x ``num_realizations`` and aggregate.

    Realization ``r`` uses the random stream seeded by ``(seed, r)`` at
    every sweep value, so values are compared on identical draws.  A value
    whose parameters are infeasible (e.g. a velocity below one grid step
    per slot) is reported with NaN statistics instead of aborting the
    sweep.
    """
    _require(variable in SWEEP_VARIABLES,
             f"unknown sweep variable {variable!r}; "
             f"expected one of {SWEEP_VARIABLES}")
    values = tuple(float(v) for v in values)
    _require(len(values) >= 1, "values must be non-empty")
    _require(num_realizations >= 1, "num_realizations must be >= 1")

    rates = {s: np.full((len(values), num_realizations), np.nan) for s in SCHEMES}
    feasible = []
    for vi, value in enumerate(values):
        try:
            params_v, cfg_v = _apply_sweep_value(variable, value, params, cfg)
        except ValueError:
            feasible.append(False)
            continue
        feasible.append(True)
        for r in range(num_realizations):
            rng = np.random.default_rng([seed, r])
            params_r, ch = sample_realization(rng, params_v, cfg_v,
                                              randomize_start)
            grid = discretize(params_r)
            for scheme in SCHEMES:
                traj = solve_scheme(scheme, grid, ch, params_r)
                rates[scheme][vi, r] = average_rate(traj, ch, params_r)

    mean = {s: rates[s].mean(axis=1) for s in SCHEMES}
    std = {s: rates[s].std(axis=1) for s in SCHEMES}
    return SweepResult(variable, values, SCHEMES, num_realizations, seed,
                       tuple(feasible), rates, mean, std)


@dataclass(frozen=True, eq=False)
class TraceResult:
    """Per-slot record of one scheme plus the gain landscape for plotting."""

    scheme: str
    slot: np.ndarray
    time_s: np.ndarray
    position_m: np.ndarray
    gain: np.ndarray
    rate_bpshz: np.ndarray
    grid_index: np.ndarray
    grid_position_m: np.ndarray
    grid_gain: np.ndarray


def trajectory_trace(scheme: str, ch: ChannelRealization,
                     p: SystemParams) -> TraceResult:
    """Solve one scheme and tabulate position, gain and rate per slot,
    together with the gain at every grid center."""
    grid = discretize(p)
    traj = solve_scheme(scheme, grid, ch, p)
    pos = traj.positions_m
    gain = np.abs(channel_gain(pos, ch, p.wavelength_m)) ** 2
    rate = achievable_rate(pos, ch, p)
    grid_gain = np.abs(channel_gain(grid.centers_m, ch, p.wavelength_m)) ** 2
    slots = np.arange(p.num_slots + 1)
    return TraceResult(scheme=scheme, slot=slots, time_s=slots * p.slot_s,
                       position_m=pos, gain=gain, rate_bpshz=rate,
                       grid_index=np.arange(1, p.num_grids + 1),
                       grid_position_m=grid.centers_m, grid_gain=grid_gain)
