#!/usr/bin/env python3
"""Census of the sixteen binary 2x2 seed blocks under both-axis Fibonacci
rules, and which positions suffice to pin such a grid down."""

from linrec import (
    MultiSpec,
    ZZ,
    block_sequence,
    classify_orbits,
    enumerate_blocks,
    format_block,
    format_shift,
    generation_certificate,
    positions_determine,
)

# Each seed block (x00, x10, x01, x11) of zeros and ones grows into a grid
# under x[n+2,k] = x[n+1,k] + x[n,k] and x[n,k+2] = x[n,k+1] + x[n,k].
# Two grids are considered the same when one is an index shift of the other;
# the census groups the 16 blocks into shift orbits.

blocks = enumerate_blocks()
print(len(blocks), "seed blocks; the first two grids:")
for block in blocks[1:3]:
    seq = block_sequence(block)
    print()
    for k in (3, 2, 1, 0):
        print("  " + " ".join(f"{seq.term((n, k)).scalar()}" for n in range(6)))

orbits = classify_orbits()
print("\ncensus:", len(orbits), "orbits, sizes",
      sorted(o.size for o in orbits))
for orbit in orbits:
    print()
    print(format_block(orbit.primitive).replace("\n", " / "),
          "generates", orbit.size, "block(s):")
    for member, shift in orbit.members:
        print(f"  {format_shift(shift):>6} -> {member}")

# One block generates them all: the 2x2 windows of the (1,0,0,0) grid at
# shifts (0,0), (1,0), (0,1), (1,1) stack into a unimodular matrix, so every
# integer seed block is an integer combination of shifted copies of that grid.
matrix, det = generation_certificate()
print("\nshifted-window matrix of the (1,0,0,0) grid:")
for row in matrix:
    print("  ", row)
print("determinant:", det)

# Four generic positions determine a grid with these rules; four positions
# on one line do not.
spec = MultiSpec(ZZ, [[1, 1], [1, 1]])
square = [(0, 0), (1, 0), (0, 1), (1, 1)]
row = [(0, 0), (1, 0), (2, 0), (3, 0)]
print("\nvalues at", square, "determine the grid:",
      positions_determine(spec, square))
print("values at", row, "determine the grid:",
      positions_determine(spec, row))
