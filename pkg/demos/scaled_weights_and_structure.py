"""Walkthrough: non-coprime weights, the scaling transform, and the
structure of coefficient periods.

With W = [2,4,8,16,32] every weight is even, so H(n) = 0 for odd n.
Normalize to W' = W/2, solve there, then dilate: P_i(x) comes from
P'_{i/2}(x/2) for even i and vanishes otherwise.
"""

from hilbertqp import (
    WeightVector,
    compute_delta,
    compute_delta_r,
    hilbert_ring_dp,
    interpolate_ring,
    normalize_weights,
    root_structure,
    scale_transform,
    structure_report,
)

w = (2, 4, 8, 16, 32)
norm, a = normalize_weights(w)
print(f"W = {list(w)} has gcd {a}; normalized W' = {list(norm.weights)}")

p_norm = interpolate_ring(norm)
p = scale_transform(p_norm, a)
print(f"period lifts from {p_norm.period} to {p.period}")
print("odd-residue polynomials vanish:",
      all(p.polys[i].is_zero() for i in range(1, 32, 2)))

big = WeightVector(w)
table = hilbert_ring_dp(big, 80)
for n in (31, 32, 64, 80):
    print(f"  P({n}) = {p.evaluate(n)},  H({n}) = {table[n]}")

# delta governs which coefficient slots are constant across residues:
# slots delta..k-1 never move, lower slots repeat with period delta_r.
print("\ndelta(W') =", compute_delta(norm), "of k =", norm.k, "variables")
print("delta_r(W') =", [compute_delta_r(norm, r) for r in range(norm.k)])

rs = root_structure(norm)
print("multiple-root multiplicity sets |T_r| =",
      [len(t) for t in rs.t_sets])

report = structure_report(p_norm, norm)
print("observed coefficient periods:", report.observed_periods)
print("predicted bounds (delta_r):  ", report.predicted_periods)
print("constant slots hold coefficients",
      [str(c) for c in report.fixed_part.coefficients[compute_delta(norm):]])
