"""The general case: a fixed-hop shortest path on a tiny movement graph.

Eight grid centers, hand-set weights (negated rates), a band of one grid
step per slot, and a five-slot horizon.  Small enough to print every
layer and to confirm the dynamic program against brute-force enumeration.
"""

import numpy as np

from matraj import MovementGraph, brute_force_oracle, fixed_hop_shortest_path

weights = np.array([-2.0, -1.0, -4.0, -0.5, -3.0, -6.0, -1.5, -5.0])
mg = MovementGraph(num_grid=8, d_max=1, vertex_weight=weights, start_index=3)
hops = 6  # five movement slots plus the final hop into the dummy terminal

print("vertex weights (cost of transmitting one slot from each center):")
for i, w in enumerate(weights, start=1):
    marker = "  <- start" if i == mg.start_index else ""
    print(f"  vertex {i}: {w:+.1f}{marker}")

dp = fixed_hop_shortest_path(mg, hops)
print(f"\nbest {hops}-hop path to the dummy terminal {mg.dummy_index}:")
print("  vertices:", dp.vertices)
print(f"  total cost: {dp.total_cost:+.1f} "
      f"(average rate {-(dp.total_cost - weights[mg.start_index - 1]) / (hops - 1):.2f})")

bf = brute_force_oracle(mg, hops)
print("\nbrute force over all", (2 * mg.d_max + 1) ** (hops - 1),
      "candidate sequences agrees:")
print("  vertices:", bf.vertices, " cost:", f"{bf.total_cost:+.1f}")
assert dp == bf

print("\nwiden the band to two steps per slot and the well at vertex 6 "
      "is reachable sooner:")
mg2 = MovementGraph(num_grid=8, d_max=2, vertex_weight=weights, start_index=3)
dp2 = fixed_hop_shortest_path(mg2, hops)
print("  vertices:", dp2.vertices, " cost:", f"{dp2.total_cost:+.1f}")
assert dp2.total_cost <= dp.total_cost
