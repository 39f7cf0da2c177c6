"""Punctured neighborhood tables for strata of different depths.

The deleted neighborhood of a stratum (a small tube around it, minus the
divisor) only depends on the combinatorics near the stratum.  Three
classics:

  * a point on a curve: the punctured disk, a homotopy circle whose
    degree-1 class carries weight 2;
  * a smooth hyperplane in the plane: the unit circle bundle, here the
    3-sphere of the Hopf fibration;
  * a crossing point of two lines: a 2-torus.

Run: python3 demos/neighborhoods.py
"""

from nchodge import build, builtin_atlas, compute_table, generic_arrangement

cases = [
    ("point on the projective line", builtin_atlas("p1_1pt"), "nbhd:0"),
    ("line in the projective plane", generic_arrangement(2, 1), "nbhd:0"),
    ("line in projective 3-space", generic_arrangement(3, 1), "nbhd:0"),
    ("crossing point of the triangle", builtin_atlas("triangle"), "nbhd:0,1"),
    ("one edge of the triangle", builtin_atlas("triangle"), "nbhd:0"),
]

for title, atlas, selector in cases:
    table = compute_table(build(atlas, selector))
    print(f"=== {title} ===")
    print(table.to_text())
    print()

print("the smooth-divisor rows reproduce the sphere patterns S^1, S^3, S^5")
print("with the top class in weight 2n; the crossing point gives the torus")
print("(1, 2, 1) with weights (0, 2, 4); the edge case is a torus as well,")
print("a punctured line times a punctured disk.")
