"""Physical model of a movable antenna on a linear rail.

A single transmit antenna slides along a rail of length ``region_length_m``
while the multipath environment stays fixed for the whole transmission
block.  Moving the antenna changes the phase with which the individual
propagation paths combine at the receiver, so the channel gain and the
achievable rate both depend on the antenna position.

All container types are immutable after construction and every operation
is a pure function, so everything here can be shared freely across
parallel workers.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

# Slack absorbed by the feasibility checks; covers rounding of repeated
# maximum-speed steps, never a real constraint violation.
FEAS_EPS_M = 1e-12


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ValueError(message)


@dataclass(frozen=True)
class SystemParams:
    """Physical and discretization constants shared by all solvers.

    Distances are in meters, times in seconds, powers in watts.  The
    antenna starts at ``start_pos_m`` and can move at most
    ``v_max_mps * slot_s`` per slot while staying inside
    ``[0, region_length_m]``.
    """

    wavelength_m: float
    region_length_m: float
    v_max_mps: float
    slot_s: float
    num_slots: int
    num_grids: int
    tx_power_w: float
    noise_power_w: float
    start_pos_m: float

    def __post_init__(self) -> None:
        for name in ("wavelength_m", "region_length_m", "v_max_mps", "slot_s",
                     "tx_power_w", "noise_power_w"):
            _require(getattr(self, name) > 0, f"{name} must be > 0")
        for name in ("num_slots", "num_grids"):
            value = getattr(self, name)
            _require(float(value) == int(value) and int(value) >= 1,
                     f"{name} must be a positive integer")
            object.__setattr__(self, name, int(value))
        _require(0.0 <= self.start_pos_m <= self.region_length_m,
                 "start_pos_m must lie in [0, region_length_m]")
        spacing = self.region_length_m / self.num_grids
        _require(self.v_max_mps * self.slot_s >= spacing * (1.0 - 1e-12),
                 "v_max_mps * slot_s must be at least region_length_m / num_grids "
                 "(the antenna must be able to cross one grid step per slot)")

    @property
    def duration_s(self) -> float:
        return self.num_slots * self.slot_s

    @property
    def grid_spacing_m(self) -> float:
        return self.region_length_m / self.num_grids

    @property
    def max_step_m(self) -> float:
        """Largest per-slot displacement allowed by the velocity cap."""
        return self.v_max_mps * self.slot_s


@dataclass(frozen=True, eq=False)
class ChannelRealization:
    """Departure angles and complex gains of the propagation paths.

    ``cos_aod`` is precomputed once because the position solvers evaluate
    the channel at every grid point in every slot; it is derived state,
    not an input.
    """

    aod_rad: np.ndarray
    coeff: np.ndarray
    cos_aod: np.ndarray = field(init=False, repr=False)

    def __post_init__(self) -> None:
        aod = np.atleast_1d(np.asarray(self.aod_rad, dtype=float))
        coeff = np.atleast_1d(np.asarray(self.coeff, dtype=complex))
        _require(aod.ndim == 1 and coeff.ndim == 1, "aod_rad and coeff must be 1-D")
        _require(len(aod) == len(coeff),
                 "aod_rad and coeff must have the same number of paths")
        _require(len(aod) >= 1, "at least one path is required")
        _require(bool(np.all((aod >= 0.0) & (aod <= np.pi))),
                 "every aod_rad entry must lie in [0, pi]")
        aod.setflags(write=False)
        coeff.setflags(write=False)
        cos_aod = np.cos(aod)
        cos_aod.setflags(write=False)
        object.__setattr__(self, "aod_rad", aod)
        object.__setattr__(self, "coeff", coeff)
        object.__setattr__(self, "cos_aod", cos_aod)

    @property
    def num_paths(self) -> int:
        return len(self.aod_rad)


@dataclass(frozen=True, eq=False)
class Trajectory:
    """Antenna position per slot, ``positions_m[k]`` for k = 0..num_slots.

    Construction validates feasibility: the trajectory starts at the
    configured start position, never moves faster than the velocity cap
    and never leaves the rail.
    """

    positions_m: np.ndarray
    params: SystemParams

    def __post_init__(self) -> None:
        pos = np.asarray(self.positions_m, dtype=float)
        _require(pos.ndim == 1, "positions_m must be 1-D")
        _require(len(pos) == self.params.num_slots + 1,
                 "positions_m must contain num_slots + 1 entries")
        _require(abs(pos[0] - self.params.start_pos_m) <= FEAS_EPS_M,
                 "positions_m[0] must equal start_pos_m")
        steps = np.abs(np.diff(pos))
        _require(bool(np.all(steps <= self.params.max_step_m + FEAS_EPS_M)),
                 "per-slot movement must not exceed v_max_mps * slot_s")
        _require(bool(np.all((pos >= -FEAS_EPS_M)
                             & (pos <= self.params.region_length_m + FEAS_EPS_M))),
                 "every position must lie in [0, region_length_m]")
        pos.setflags(write=False)
        object.__setattr__(self, "positions_m", pos)

    @property
    def num_slots(self) -> int:
        return len(self.positions_m) - 1

    @property
    def final_position_m(self) -> float:
        return float(self.positions_m[-1])


def field_response_vector(x: float, ch: ChannelRealization,
                          wavelength_m: float) -> np.ndarray:
    """Per-path unit-modulus phase factors at position ``x``.

    Entry ``l`` is ``exp(j * 2*pi/wavelength * x * cos(aod_l))``, the phase
    accumulated by path ``l`` relative to the rail origin.
    """
    _require(wavelength_m > 0, "wavelength_m must be > 0")
    phase = (2.0 * np.pi / wavelength_m) * x * ch.cos_aod
    return np.exp(1j * phase)


def channel_gain(x, ch: ChannelRealization, wavelength_m: float):
    """Complex channel at position ``x``: the coefficient vector applied
    (conjugated) to the per-path phase factors.

    ``x`` may be a scalar or an array; the result matches its shape.
    """
    _require(wavelength_m > 0, "wavelength_m must be > 0")
    xarr = np.asarray(x, dtype=float)
    phase = (2.0 * np.pi / wavelength_m) * np.multiply.outer(xarr, ch.cos_aod)
    out = np.exp(1j * phase) @ np.conj(ch.coeff)
    return complex(out) if out.ndim == 0 else out


def achievable_rate(x, ch: ChannelRealization, p: SystemParams):
    """Shannon rate log2(1 + SNR) in bits/s/Hz at position ``x``.

    ``x`` may be a scalar or an array; the result matches its shape.
    """
    h = channel_gain(x, ch, p.wavelength_m)
    snr = p.tx_power_w * np.abs(h) ** 2 / p.noise_power_w
    out = np.log2(1.0 + snr)
    return float(out) if np.ndim(out) == 0 else out


def two_path_gain(x, ch: ChannelRealization, wavelength_m: float):
    """Channel power gain for a two-path channel, in interference form.

    Equals ``|channel_gain(x)|**2`` but written as
    ``|a1|^2 + |a2|^2 + 2|a1||a2| cos(phi(x))`` with
    ``phi(x) = 2*pi/wavelength * x * (cos(aod_1) - cos(aod_2)) + (ang(a2) - ang(a1))``,
    which makes the position dependence a single cosine.
    """
    _require(wavelength_m > 0, "wavelength_m must be > 0")
    _require(ch.num_paths == 2, "two_path_gain requires exactly 2 paths")
    a1, a2 = ch.coeff
    m1, m2 = abs(a1), abs(a2)
    delta_phase = np.angle(a2) - np.angle(a1)
    delta_cos = ch.cos_aod[0] - ch.cos_aod[1]
    xarr = np.asarray(x, dtype=float)
    phi = (2.0 * np.pi / wavelength_m) * xarr * delta_cos + delta_phase
    out = m1 * m1 + m2 * m2 + 2.0 * m1 * m2 * np.cos(phi)
    return float(out) if out.ndim == 0 else out
