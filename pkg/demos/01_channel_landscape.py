"""How channel gain varies with antenna position on the rail.

Samples a multipath channel, evaluates the gain at every grid center and
locates the crests a movement policy would aim for.
"""

import numpy as np

from matraj import (
    ChannelModelConfig,
    SystemParams,
    achievable_rate,
    channel_gain,
    discretize,
    field_response_vector,
    find_crests,
    sample_channel,
)

params = SystemParams(wavelength_m=0.06, region_length_m=0.36, v_max_mps=0.12,
                      slot_s=0.01, num_slots=100, num_grids=600,
                      tx_power_w=40.0, noise_power_w=1e-11, start_pos_m=0.18)
cfg = ChannelModelConfig(num_paths=4)
rng = np.random.default_rng(7)

ch = sample_channel(rng, cfg)
print("one 4-path channel realization")
print("  departure angles (rad):", np.round(ch.aod_rad, 3))
print("  |coefficients|:", np.round(np.abs(ch.coeff), 9))

x = 0.123
frv = field_response_vector(x, ch, params.wavelength_m)
print(f"\nper-path phase factors at x = {x} m (all unit modulus):")
print(" ", np.round(frv, 3))
print("  channel there:", np.round(channel_gain(x, ch, params.wavelength_m), 9))

grid = discretize(params)
gains = np.abs(channel_gain(grid.centers_m, ch, params.wavelength_m)) ** 2
rates = achievable_rate(grid.centers_m, ch, params)
print(f"\ngain landscape over {grid.num_grids} grid centers:")
print(f"  min / mean / max gain: {gains.min():.3e} / {gains.mean():.3e} / "
      f"{gains.max():.3e}")
print(f"  rate at worst / best position: {rates.min():.2f} / {rates.max():.2f} "
      f"bit/s/Hz  (deep fades cost real rate)")

crests = find_crests(grid, ch, params)
print(f"\n{len(crests.indices)} crests (local gain maxima):")
for i in crests.indices:
    print(f"  index {i:3d}  position {grid.position_of(i):.4f} m  "
          f"rate {rates[i - 1]:.2f} bit/s/Hz")
