"""Both duality pairings, including the disconnected divisor subtlety.

The global pairing couples the complement with the relative theory; the
local one couples local cohomology with the divisor.  For a divisor with
several connected components the top local group is not a line: it has
one dimension per component, and perfectness means the pairing matrices
are injective from both sides into that block.

Run: python3 demos/duality.py
"""

from nchodge import builtin_atlas, fujiki_duality_report

for name in ("p1_2pts", "triangle"):
    atlas = builtin_atlas(name)
    pieces = atlas.divisor_connected_components()
    print(f"=== {name} (divisor has {pieces} connected component(s)) ===")
    print(fujiki_duality_report(atlas))
    print()

print("note the p1_2pts local orientation line: H^2_D is 2-dimensional")
print("because the divisor is two disjoint points, one orientation class")
print("per point.")
