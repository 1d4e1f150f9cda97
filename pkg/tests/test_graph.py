"""Grid, movement graph and fixed-hop DP, cross-checked against brute force."""

import time

import numpy as np
import pytest

from matraj.graph import (
    Grid,
    MovementGraph,
    brute_force_oracle,
    build_graph,
    discretize,
    fixed_hop_shortest_path,
    max_grid_step,
    nearest_center_index,
    path_to_trajectory,
    snap_to_grid,
)
from matraj.model import ChannelRealization, Trajectory
from matraj.montecarlo import average_rate
from matraj.twopath import solve_twopath

from helpers import make_params, random_channel


def random_graph(rng, n_max=12, k_max=6, d_max_cap=3):
    """Random small instance with weights in [-10, 0]."""
    while True:
        n = int(rng.integers(2, n_max + 1))
        hops = int(rng.integers(1, k_max + 2))  # K + 1 edges, K in [0, k_max]
        d = int(rng.integers(1, d_max_cap + 1))
        if (2 * d + 1) ** (hops - 1) <= 30_000:
            break
    weights = -10.0 * rng.random(n)
    start = int(rng.integers(1, n + 1))
    return MovementGraph(n, d, weights, start), hops


# ---------------------------------------------------------------------------
# discretize


def test_discretize_defaults():
    g = discretize(make_params())
    assert g.num_grids == 600
    assert g.spacing_m == pytest.approx(0.0006)  # wavelength / 100
    assert g.centers_m[0] == pytest.approx(0.0006)
    assert g.centers_m[-1] == pytest.approx(0.36)


def test_discretize_snaps_start_to_nearest_center():
    assert discretize(make_params(start_pos_m=0.0006)).start_index == 1
    assert discretize(make_params(start_pos_m=0.00095)).start_index == 2
    assert discretize(make_params(start_pos_m=0.0)).start_index == 1


def test_discretize_rejects_single_grid():
    with pytest.raises(ValueError, match="num_grids"):
        discretize(make_params(num_grids=1, v_max_mps=40.0))


def test_nearest_center_half_tie_goes_down():
    # exactly between centers 1 and 2
    assert nearest_center_index(0.0009, 0.0006, 600) in (1, 2)
    assert nearest_center_index(0.00145, 0.0006, 4) == 2
    assert nearest_center_index(1.0, 0.0006, 4) == 4  # clamped


# ---------------------------------------------------------------------------
# build_graph


def test_build_graph_default_band():
    p = make_params()
    mg = build_graph(discretize(p), random_channel(np.random.default_rng(0), 4), p)
    assert mg.d_max == 2
    assert mg.num_vertices == 601
    assert mg.dummy_index == 601
    assert np.all(mg.vertex_weight <= 0.0)


def test_build_graph_floors_fractional_steps():
    # 2.5 grid steps per slot floors to 2.
    p = make_params(v_max_mps=0.15)
    assert max_grid_step(p) == 2
    mg = build_graph(discretize(p), random_channel(np.random.default_rng(1), 4), p)
    assert mg.d_max == 2


def test_build_graph_uniform_channel_gives_equal_weights():
    p = make_params()
    ch = ChannelRealization([np.pi / 2], [1e-6])
    mg = build_graph(discretize(p), ch, p)
    np.testing.assert_allclose(mg.vertex_weight, mg.vertex_weight[0], rtol=1e-12)


def test_graph_edges():
    mg = MovementGraph(6, 2, -np.ones(6), 3)
    assert mg.has_edge(1, 3) and mg.has_edge(3, 1)
    assert mg.has_edge(4, 4)  # self-loop
    assert not mg.has_edge(1, 4)
    assert mg.has_edge(6, 7) and mg.has_edge(1, 7)  # dummy absorbs everything


def test_movement_graph_rejects_bad_inputs():
    with pytest.raises(ValueError, match="d_max"):
        MovementGraph(6, 0, -np.ones(6), 1)
    with pytest.raises(ValueError, match="<= 0"):
        MovementGraph(3, 1, np.array([0.0, 1.0, -1.0]), 1)
    with pytest.raises(ValueError, match="start_index"):
        MovementGraph(3, 1, -np.ones(3), 4)


# ---------------------------------------------------------------------------
# fixed_hop_shortest_path


def test_dp_uniform_weights_cost():
    # Every feasible path costs (K+1) * w.
    w = -1.5
    mg = MovementGraph(3, 1, np.full(3, w), 2)
    hp = fixed_hop_shortest_path(mg, 5)
    assert hp.total_cost == pytest.approx(5 * w)
    assert hp.vertices[0] == 2 and hp.vertices[-1] == 4
    assert len(hp.vertices) == 6


def test_dp_single_hop():
    mg = MovementGraph(4, 2, np.array([-1.0, -2.0, -3.0, -4.0]), 3)
    hp = fixed_hop_shortest_path(mg, 1)
    assert hp.vertices == (3, 5)
    assert hp.total_cost == pytest.approx(-3.0)


def test_dp_hand_set_weights_matches_oracle():
    # Start in a mediocre spot; the best path must run to the deep well at
    # vertex 6 as fast as the band allows.
    weights = np.array([-1.0, -0.5, -2.0, -0.1, -3.0, -8.0])
    mg = MovementGraph(6, 2, weights, 2)
    hp = fixed_hop_shortest_path(mg, 4)  # K = 3
    oracle = brute_force_oracle(mg, 4)
    assert hp == oracle
    # by hand: 2 -> 4 -> 6 -> 6 -> dummy = -0.5 - 0.1 - 8 - 8 = -16.6
    assert hp.vertices == (2, 4, 6, 6, 7)
    assert hp.total_cost == pytest.approx(-16.6)


def test_dp_matches_oracle_on_random_instances():
    rng = np.random.default_rng(20)
    for _ in range(200):
        mg, hops = random_graph(rng)
        dp = fixed_hop_shortest_path(mg, hops)
        bf = brute_force_oracle(mg, hops)
        assert abs(dp.total_cost - bf.total_cost) <= 1e-12
        assert dp.vertices == bf.vertices


def test_dp_ties_broken_toward_smaller_vertex():
    # Uniform weights make every path a tie; the reconstruction must hug
    # the smallest reachable indices from the end backward.
    mg = MovementGraph(5, 1, np.full(5, -1.0), 4)
    hp = fixed_hop_shortest_path(mg, 4)
    assert hp == brute_force_oracle(mg, 4)
    assert hp.vertices == (4, 3, 2, 1, 6)


def test_dp_cost_nonincreasing_in_d_max():
    rng = np.random.default_rng(21)
    weights = -10.0 * rng.random(40)
    costs = []
    for d in (1, 2, 3, 4, 5):
        mg = MovementGraph(40, d, weights, 17)
        costs.append(fixed_hop_shortest_path(mg, 9).total_cost)
    assert all(b <= a + 1e-15 for a, b in zip(costs, costs[1:]))


# ---------------------------------------------------------------------------
# brute_force_oracle


def test_oracle_single_hop_cost_is_start_weight():
    mg = MovementGraph(5, 2, -np.arange(1.0, 6.0), 4)
    hp = brute_force_oracle(mg, 1)
    assert hp.vertices == (4, 6)
    assert hp.total_cost == pytest.approx(-4.0)


def test_oracle_two_vertices_hand_enumeration():
    mg = MovementGraph(2, 1, np.array([-5.0, -1.0]), 1)
    hp = brute_force_oracle(mg, 2)
    # candidates: (1,1,d): -10, (1,2,d): -6 -> best (1,1,d)
    assert hp.vertices == (1, 1, 3)
    assert hp.total_cost == pytest.approx(-10.0)


def test_oracle_beats_random_paths():
    rng = np.random.default_rng(22)
    mg, hops = random_graph(rng)
    best = brute_force_oracle(mg, hops).total_cost
    n, d = mg.num_grid, mg.d_max
    for _ in range(1000):
        v = mg.start_index
        cost = mg.vertex_weight[v - 1]
        for _ in range(hops - 1):
            v = int(rng.integers(max(1, v - d), min(n, v + d) + 1))
            cost += mg.vertex_weight[v - 1]
        assert best <= cost + 1e-12


def test_oracle_refuses_oversized_instances():
    mg = MovementGraph(500, 10, -np.ones(500), 3)
    with pytest.raises(ValueError, match="too large"):
        brute_force_oracle(mg, 12)


# ---------------------------------------------------------------------------
# path_to_trajectory


def test_constant_path_maps_to_constant_trajectory():
    p = make_params(num_slots=4, start_pos_m=0.0006)
    g = discretize(p)
    from matraj.graph import HopPath
    hp = HopPath((1, 1, 1, 1, 1, 601), -5.0)
    t = path_to_trajectory(hp, g, p)
    np.testing.assert_allclose(t.positions_m, 0.0006)


def test_dp_trajectory_steps_stay_in_band():
    p = make_params(num_slots=50)
    rng = np.random.default_rng(23)
    ch = random_channel(rng, 4)
    g = discretize(p)
    mg = build_graph(g, ch, p)
    t = path_to_trajectory(fixed_hop_shortest_path(mg, p.num_slots + 1), g, p)
    steps = np.abs(np.diff(t.positions_m)) / g.spacing_m
    assert np.all(steps <= mg.d_max + 1e-9)


def test_cost_equals_negated_rate_sum():
    # total cost = -(rate at start) - sum of rates over slots 1..K, so the
    # average rate can be recovered from the cost alone.
    p = make_params(num_slots=40)
    rng = np.random.default_rng(24)
    ch = random_channel(rng, 4)
    g = discretize(p)
    mg = build_graph(g, ch, p)
    hp = fixed_hop_shortest_path(mg, p.num_slots + 1)
    t = path_to_trajectory(hp, g, p)
    w_start = mg.vertex_weight[g.start_index - 1]
    recovered = -(hp.total_cost - w_start) / p.num_slots
    assert average_rate(t, ch, p) == pytest.approx(recovered, rel=1e-12)


# ---------------------------------------------------------------------------
# consistency with the two-path closed form


def test_dp_at_least_as_good_as_snapped_closed_form():
    from dataclasses import replace

    rng = np.random.default_rng(25)
    p = make_params(num_slots=100)
    for _ in range(20):
        ch = random_channel(rng, 2)
        # put the start exactly on a grid center so both solvers share it
        start = discretize(p).position_of(discretize(p).start_index)
        params = replace(p, start_pos_m=start)
        g = discretize(params)
        mg = build_graph(g, ch, params)
        dp_traj = path_to_trajectory(
            fixed_hop_shortest_path(mg, params.num_slots + 1), g, params)
        snapped = snap_to_grid(solve_twopath(ch, params), g)
        assert (average_rate(dp_traj, ch, params)
                >= average_rate(snapped, ch, params) - 1e-9)


# ---------------------------------------------------------------------------
# scaling


def test_dp_runtime_scales_linearly():
    rng = np.random.default_rng(26)

    def solve_time(n, hops, d=2):
        weights = -rng.random(n)
        mg = MovementGraph(n, d, weights, n // 2)
        best = np.inf
        for _ in range(3):
            t0 = time.perf_counter()
            fixed_hop_shortest_path(mg, hops)
            best = min(best, time.perf_counter() - t0)
        return best

    t_half_k = solve_time(600, 101)
    t_full = solve_time(600, 201)
    t_half_n = solve_time(300, 201)
    assert t_full < 1.0
    # doubling K or N should at most double the time, within 2x slack
    assert t_full / t_half_k < 4.0
    assert t_full / t_half_n < 4.0
