"""Walk through the seven cohomology tables of the triangle of lines.

Three lines in the plane in general position: the complement is a torus
up to homotopy in the mixed sense, the relative and local tables are the
two sides of one duality, and both relative models land on the same
answer.

Run: python3 demos/tables.py
"""

from nchodge import SELECTORS, build, builtin_atlas, compute_table

atlas = builtin_atlas("triangle")

print("strata of the triangle:")
for key in atlas.keys_sorted():
    stratum = atlas.strata[key]
    kind = {0: "ambient plane", 1: "line", 2: "point"}[len(stratum.indices)]
    print(f"  {key} -> {kind}, dim {stratum.dim}")
print()

for selector in SELECTORS:
    table = compute_table(build(atlas, selector))
    print(table.to_text())
    print()

print("reading the tables:")
print("  H(U) has betti (1, 2, 1) with weights (0, 2, 4): the complement")
print("  of the triangle carries the mixed structure of a 2-torus.")
print("  H(X,D) is H(U) shifted into degrees 2..4 by duality, and H_D(X)")
print("  mirrors H(D) the same way.")
