"""Parse the bundled arrangements and walk through their combinatorics.

Everything downstream (characteristic polynomials, zeta functions, bounds)
is a function of the data printed here: vertices with incident lines and
weight sums, direction classes, and the multiplicity histogram.
"""

from pathlib import Path

from linemono import compute_combinatorics, load_arrangement

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

for name in (
    "two_axes.json",
    "triangle.json",
    "weighted_triangle.json",
    "concurrent_four.json",
    "eight_line_normal_crossing.json",
    "complex_pencil.json",
):
    arr = load_arrangement(FIXTURES / name)
    cs = compute_combinatorics(arr)
    print(f"=== {name}")
    print(f"  lines d={cs.d}, total weight d_e={cs.d_e}, weights={list(cs.weights)}")
    print(f"  direction classes p={cs.p}: sizes {[g.count for g in cs.directions]}, "
          f"weight sums {[g.weight_sum for g in cs.directions]}")
    print(f"  multiplicity histogram n_m = { {m: n for m, n in sorted(cs.histogram.items())} }")
    print(f"  vertices on each line v_j = {list(cs.line_vertex_counts)}")
    for v in cs.vertices[:4]:
        x, y = v.point
        print(f"    vertex ({x}, {y}): lines {sorted(v.incident)}, "
              f"multiplicity {v.multiplicity}, weight sum {v.weight_sum}")
    if len(cs.vertices) > 4:
        print(f"    ... and {len(cs.vertices) - 4} more vertices")
    # the incidence double count ties the three views together
    assert sum(cs.line_vertex_counts) == sum(v.multiplicity for v in cs.vertices)
    print()
