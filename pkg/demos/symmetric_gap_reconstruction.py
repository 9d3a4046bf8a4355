"""The reconstruction game for <7,8>: starting from only the symmetric and
self-symmetric gaps, rebuild the entire gap set with two reflections and a
complement inside a rectangle.

Run: python3 demos/symmetric_gap_reconstruction.py
"""

from gapsym import (
    cell_values,
    gap_partition,
    infer_semigroup,
    make_semigroup,
    reconstruct_from_symmetric,
    reflect_beta,
    self_symmetric_gaps,
    supersymmetric_gaps,
)

S = make_semigroup([7, 8])
T = S.two_gen()

side, sg = supersymmetric_gaps(T)
ssg = self_symmetric_gaps(T)
print(f"<7,8>: the smaller triangle is {side} with gaps {cell_values(T, sg)}")
print(f"self-symmetric gaps (Wilf number zero): {cell_values(T, ssg)}")

# Step 1: reflect the triangle across the vertical midline.
step1 = reflect_beta(T, sg)
print(f"\nreflected triangle: {cell_values(T, step1)}")

# Step 2: together with the self-symmetric column this tiles part of the
# rectangle of cells whose doubled gap lies in the semigroup; the complement
# inside that rectangle is the reflection of the other triangle.
rect = {(a, b) for a in range(1, T.beta // 2 + 1) for b in range(1, T.alpha // 2 + 1)}
complement = rect - step1 - ssg
print(f"complement in the rectangle: {cell_values(T, complement)}")

# Step 3: reflect the complement back up and take the union of all blocks.
gaps = reconstruct_from_symmetric(7, 8, sg, side, ssg)
print(f"\nreconstructed gaps: {gaps}")
print(f"actual gaps       : {list(S.gaps)}")
assert gaps == list(S.gaps)

# The five blocks of the underlying partition.
part = gap_partition(T)
print(f"partition block sizes: {part.block_sizes()} (sum {sum(part.block_sizes())})")

# The symmetric values alone even pin down the generator pair.
values = set(cell_values(T, sg)) | set(cell_values(T, ssg))
print(f"\nsearching for the pair matching {sorted(values)} ...")
print(f"found: {infer_semigroup(values, 20)}")
