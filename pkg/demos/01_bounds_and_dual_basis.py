"""Bounds and the dual basis for a small evaluation code over F_5.

Monomials 1, X, Y, X^2, ... are evaluated on the 3 x 3 grid {1,2,3}^2.
We print which pairs are well-behaving, the resulting sigma values, the
bound for the [9, 4] code spanned by 1, X, Y, XY, and the dual basis that
turns that code into a dual-code description.
"""

from fengrao import (GF, CodeHandle, IndexSet, WBStatus, build_algebra, build_wb_table,
                     check_duality_condition, dualize, ghw_bound, min_distance_bound,
                     semigroup_wb_table, sigma_vector)

F = GF(5)
A = build_algebra(F, 2, "graded-lex", [[1, 2, 3], [1, 2, 3]])
G = A.basis

print("monomial exponents in order:", A.delta)

# pairs certified by adding exponents, shown as the rho value of g_i * g_j
T = semigroup_wb_table(A)
print("\nWB pairs from the exponent semigroup (rho of g_i * g_j):")
for row in T.grid("WB"):
    print("  " + " ".join(f"{x:2d}" if x is not None else " ." for x in row))

# a full classification agrees here, and also for the weaker OWB notion
full = build_wb_table(G, G)
print("\nsigma (WB): ", sigma_vector(full, WBStatus.WB))
print("sigma (OWB):", sigma_vector(full, WBStatus.OWB))

C = CodeHandle(G, IndexSet(9, (1, 2, 3, 5)))
print(f"\n[9, {C.dim}] code, Feng-Rao bound:", min_distance_bound(C, full))
print("generalized Hamming weight bounds:", [ghw_bound(C, full, "WB", t) for t in range(1, 5)])

H = dualize(G)
print("\ndual basis h_1..h_9 (g_i . h_j = 1 iff i + j = 10):")
for k in range(1, 10):
    print(f"  h_{k} =", H[k].tolist())
print("duality condition:", check_duality_condition(G, H))
