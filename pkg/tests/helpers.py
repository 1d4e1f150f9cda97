"""Shared builders for the test suite."""

from __future__ import annotations

import numpy as np

from matraj.model import ChannelRealization, SystemParams

# Default simulation setup used throughout the tests: 6 cm carrier on a
# 36 cm rail split into 600 grids, 0.12 m/s velocity cap, 10 ms slots.
DEFAULTS = dict(
    wavelength_m=0.06,
    region_length_m=0.36,
    v_max_mps=0.12,
    slot_s=0.01,
    num_slots=100,
    num_grids=600,
    tx_power_w=40.0,
    noise_power_w=1e-11,
    start_pos_m=0.18,
)


def make_params(**overrides) -> SystemParams:
    cfg = dict(DEFAULTS)
    cfg.update(overrides)
    return SystemParams(**cfg)


def random_channel(rng: np.random.Generator, num_paths: int,
                   power: float = 1.0) -> ChannelRealization:
    """Random channel with uniform departure angles and Gaussian gains."""
    aod = rng.uniform(0.0, np.pi, num_paths)
    scale = np.sqrt(power / (2.0 * num_paths))
    coeff = scale * (rng.standard_normal(num_paths)
                     + 1j * rng.standard_normal(num_paths))
    return ChannelRealization(aod, coeff)
