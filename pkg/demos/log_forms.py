"""Logarithmic forms in one chart: differentials, weights, residues.

Chart language: n coordinates, the first l cut divisor branches, the
first k of those are the branches we take residues along, and the ideal
names the branches a local section must vanish on.

Run: python3 demos/log_forms.py
"""

from nchodge import (
    LogChart,
    claim_forward_check,
    claim_witness,
    dz_form,
    exterior_d,
    form,
    poly_const,
    residue,
    wedge,
    weight_level,
    xi,
)
from nchodge.logforms import monomial

chart = LogChart(n=3, l=3, k=1, ideal=frozenset({1, 2}))
print(f"chart: n={chart.n}, l={chart.l}, k={chart.k}, ideal={sorted(chart.ideal)}")
print(f"residue branches {sorted(chart.residue_set)}, J2 = {sorted(chart.j2)}")
print()

a = form(chart, {frozenset({2}): monomial(3, {1: 1})})  # z_1 xi_2
print(f"a        = {a}")
print(f"d(a)     = {exterior_d(a)}")
print(f"weight   = {weight_level(a)} (z_1 would only cancel a pole of xi_1)")
print()

omega2 = xi(chart, 1, 2)
print(f"omega2   = {omega2}, weight {weight_level(omega2)}")
b = wedge(dz_form(chart, 1), xi(chart, 2))
print(f"b        = {b}, weight {weight_level(b)}")
print(f"R_2(b)   = {residue(b, {2})} (sign from moving xi_2 to the front)")
print()

# the witness construction: an ideal form of weight <= k with prescribed
# residue along the marked branches and no residue anywhere else
eta = {2: form(chart, {frozenset(): poly_const(3, 1)})}
result = claim_witness(chart, 2, eta, {})
print("witness omega =", result.omega)
print(result.checks)
print()

print("forward inclusion of the residue claim on this chart:")
for p in range(chart.k, chart.n + 1):
    ok = claim_forward_check(chart, p, seed=0)
    print(f"  degree {p}: {'ok' if ok else 'FAIL'}")
