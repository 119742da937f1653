"""Order bounds from a numerical semigroup.

For a one-point code the pole orders of the basis functions form a
numerical semigroup.  Here we take the semigroup generated by 4 and 5
(gaps 1, 2, 3, 6, 7, 11) and compare two dual codes for each target
distance: the usual one, which checks against the first s basis vectors, and
the improved one, which checks only against those whose mu value is
too small.
"""

from fengrao import IndexSet, NumericalSemigroup, SemigroupData, order_bound, order_mu, order_sigma

S = NumericalSemigroup([4, 5])
print("gaps:", S.gaps(), " Frobenius number:", S.frobenius())

n = 20
delta = [x for x in range(60) if x in S][:n]
D = SemigroupData.numerical([4, 5], delta)
sig = [order_sigma(D, x) for x in delta]
mu = [order_mu(D, x) for x in delta]
print("\n  i  alpha  sigma  mu")
for i, (a, s, m) in enumerate(zip(delta, sig, mu), 1):
    print(f"{i:3d} {a:6d} {s:6d} {m:3d}")

print("\n d  usual dim  improved dim")
for d in range(2, 13):
    # usual: smallest s with mu >= d beyond position s
    s_min = next(s for s in range(n) if all(m >= d for m in mu[s:]))
    usual = n - s_min
    I = IndexSet(n, tuple(l for l in range(1, n + 1) if mu[l - 1] < d))
    improved = n - len(I)
    assert order_bound(D, I, "dual") >= d
    print(f"{d:2d} {usual:10d} {improved:13d}")
