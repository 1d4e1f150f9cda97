"""Trajectory optimization for a movable transmit antenna on a linear rail.

The antenna transmits while it moves, so the planner trades time spent
traveling against the channel gain available at the destination.  Two
solvers cover all cases: a closed form for two-path channels and a
fixed-hop shortest-path dynamic program on a discretized rail for the
general multipath case, compared against three benchmark policies via
Monte-Carlo sweeps.
"""

from .baselines import (
    CrestSet,
    farsighted_trajectory,
    find_crests,
    fpa_trajectory,
    myopic_trajectory,
)
from .graph import (
    Grid,
    HopPath,
    MovementGraph,
    brute_force_oracle,
    build_graph,
    discretize,
    fixed_hop_shortest_path,
    max_grid_step,
    path_to_trajectory,
    snap_to_grid,
)
from .model import (
    ChannelRealization,
    SystemParams,
    Trajectory,
    achievable_rate,
    channel_gain,
    field_response_vector,
    two_path_gain,
)
from .montecarlo import (
    SCHEMES,
    ChannelModelConfig,
    SweepResult,
    TraceResult,
    average_rate,
    freespace_reference_gain,
    run_sweep,
    sample_channel,
    sample_realization,
    solve_scheme,
    trajectory_trace,
)
from .twopath import (
    CoherentSet,
    closed_form_trajectory,
    coherent_positions,
    nearest_coherent,
    solve_twopath,
)

__version__ = "0.1.0"

__all__ = [
    "ChannelModelConfig",
    "ChannelRealization",
    "CoherentSet",
    "CrestSet",
    "Grid",
    "HopPath",
    "MovementGraph",
    "SCHEMES",
    "SweepResult",
    "SystemParams",
    "TraceResult",
    "Trajectory",
    "achievable_rate",
    "average_rate",
    "brute_force_oracle",
    "build_graph",
    "channel_gain",
    "closed_form_trajectory",
    "coherent_positions",
    "discretize",
    "farsighted_trajectory",
    "field_response_vector",
    "find_crests",
    "fixed_hop_shortest_path",
    "fpa_trajectory",
    "freespace_reference_gain",
    "max_grid_step",
    "myopic_trajectory",
    "nearest_coherent",
    "path_to_trajectory",
    "run_sweep",
    "sample_channel",
    "sample_realization",
    "snap_to_grid",
    "solve_scheme",
    "solve_twopath",
    "trajectory_trace",
    "two_path_gain",
]
