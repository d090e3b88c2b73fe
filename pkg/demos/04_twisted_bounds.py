"""Upper bounds for twisted first cohomology of the complement.

A rank-one local system with monodromy exp(2*pi*i*e_j/N) about the j-th
line admits the bound dim H^1 <= min(N0, NInfinity), the multiplicities of
exp(2*pi*i/N) in the two characteristic polynomials built with weights e.
Either side can be the strictly smaller one; the two showcase inputs below
exhibit both directions.
"""

from pathlib import Path

from linemono import LocalSystem, delta_f, compute_combinatorics, h1_upper_bound, load_arrangement

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

eight = load_arrangement(FIXTURES / "eight_line_normal_crossing.json")
print("eight lines, only double points, cube root of unity on every line:")
report = h1_upper_bound(eight, LocalSystem.equimonodromical(3, eight.d))
print(f"  N0 = {report.n0} (no vertex weight sum divisible by 3: "
      f"shortcut={report.normal_crossing_shortcut})")
print(f"  NInfinity = {report.n_infinity} (every direction class has weight 6 short of 8)")
print(f"  bound = {report.bound}  -- the zero side wins")
print()

concurrent = load_arrangement(FIXTURES / "concurrent_four.json")
print("four lines, three through one point, cube root of unity:")
report = h1_upper_bound(concurrent, LocalSystem.equimonodromical(3, concurrent.d))
print(f"  N0 = {report.n0} (the triple point has weight sum 3)")
print(f"  NInfinity = {report.n_infinity}")
print(f"  bound = {report.bound}  -- the infinity side wins")
print()

triangle = load_arrangement(FIXTURES / "triangle.json")
print("triangle with non-equimonodromical residues (1, 1, 2) at order 4:")
report = h1_upper_bound(triangle, LocalSystem.create(4, [1, 1, 2]))
print(f"  N0 = {report.n0}, NInfinity = {report.n_infinity}, bound = {report.bound}")
print(f"  vertex sum at infinity unavailable (4 divides the total weight): "
      f"{report.vertex_sum_infinity}")
print()

print("gcd of the two characteristic polynomials stores every bound at once:")
for name in ("triangle.json", "concurrent_four.json"):
    cs = compute_combinatorics(load_arrangement(FIXTURES / name))
    print(f"  {name}: {delta_f(cs)}")
