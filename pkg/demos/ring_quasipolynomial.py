"""Walkthrough: the Hilbert quasi-polynomial of a weighted polynomial ring.

Grade Q[x1..x5] by W = [1,2,3,4,6].  The Hilbert function H(n) counts
monomials of weighted degree n; it is eventually given by one of
d = lcm(W) = 12 polynomials, selected by n mod 12.
"""

from hilbertqp import (
    WeightVector,
    closed_leading_coefficient,
    hilbert_ring_dp,
    interpolate_ring,
    structure_report,
)

w = WeightVector((1, 2, 3, 4, 6))
print(f"weights {list(w.weights)}: k = {w.k}, period d = {w.d}")

table = hilbert_ring_dp(w, 30)
print("H(0..30) =", list(table.values))

p = interpolate_ring(w)
print(f"\nquasi-polynomial of period {p.period} "
      f"(stabilizes at n = {p.stabilization_index}):")
for i, poly in enumerate(p.polys):
    terms = " + ".join(f"{c}*x^{r}" if r else str(c)
                       for r, c in enumerate(poly.coefficients))
    print(f"  P_{i}(x) = {terms}")

print("\nevery P_i has degree k-1 =", p.polys[0].degree,
      "and leading coefficient", closed_leading_coefficient(w))

for n in (12, 25, 100):
    print(f"P(n={n}) = {p.evaluate(n)}  "
          f"(H({n}) = {hilbert_ring_dp(w, n)[n]})")

report = structure_report(p, w)
print("\ncoefficient periodicity across the 12 residues:")
for r, (obs, pred) in enumerate(zip(report.observed_periods,
                                    report.predicted_periods)):
    print(f"  degree {r}: observed period {obs}, predicted delta_{r} = {pred}")
print("fixed part Q(x) has coefficients",
      [str(c) for c in report.fixed_part.coefficients])
