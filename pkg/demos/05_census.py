"""A small deterministic census of bound comparisons.

Arrangements are drawn from a fixed splitmix64 stream (same seed, same
rows, byte for byte, on every platform), each draw passes the full
identity battery, and every order from 2 to max_order contributes one row
recording which side of the twisted-cohomology bound is tighter.
"""

from linemono import RunConfig, run_census, summarize

config = RunConfig(seed=1, count=60, max_lines=8, max_order=6)
rows = list(run_census(config))
summary = summarize(config, rows)

print(f"{summary['arrangements']} arrangements, {summary['rows']} rows")
print(f"tighter at zero: {summary['tighterZero']}, "
      f"tighter at infinity: {summary['tighterInfinity']}, ties: {summary['ties']}")
print()

strict_zero = next(r for r in rows if r.tighter == "zero")
strict_infinity = next(r for r in rows if r.tighter == "infinity")
for label, row in (("zero side tighter", strict_zero), ("infinity side tighter", strict_infinity)):
    print(f"example with the {label}:")
    print(f"  draw {row.index}: d={row.d}, p={row.p}, histogram={row.histogram}")
    print(f"  order {row.order}: N0={row.n0}, NInfinity={row.n_infinity}, bound={row.bound}")
    print(f"  lines: {list(row.digest)}")
    print()
