"""Walkthrough: Hilbert quasi-polynomial of a quotient by a monomial ideal.

Take R = Q[x1..x5] with weights W = [1,2,3,4,6] and quotient by
I = (x1^3, x2*x3).  The Hilbert-Poincare series of R/I is
h(t) / prod_i (1 - t^{d_i}) with h a polynomial, so the quotient's
quasi-polynomial is a shifted combination of the ring's.
"""

from hilbertqp import (
    MonomialIdeal,
    WeightVector,
    hilbert_quotient,
    hvector,
    interpolate_quotient_direct,
    interpolate_ring,
    quotient_from_ring,
)

w = WeightVector((1, 2, 3, 4, 6))
ideal = MonomialIdeal.from_generators([(3, 0, 0, 0, 0), (0, 1, 1, 0, 0)], w)
print("ideal generators (exponent vectors):",
      [g.exponents for g in ideal.generators])

h = hvector(ideal)
print("h-vector:", list(h.coefficients))
print("h(1) =", h(1), " (always 0: the quotient has lower dimension)")

table = hilbert_quotient(w, ideal, 15)
print("H_{R/I}(0..15) =", list(table.values))

# Route 1: transform the ring's quasi-polynomial by the h-vector.
ring = interpolate_ring(w)
q = quotient_from_ring(ring, h)

# Route 2: interpolate the quotient's Hilbert table directly.
direct = interpolate_quotient_direct(w, ideal)
assert q == direct
print("\ntransform and direct interpolation agree; period", q.period)

for i in (0, 5):
    terms = " + ".join(f"{c}*x^{r}" if r else str(c)
                       for r, c in enumerate(q.polys[i].coefficients))
    print(f"  P_{i}(x) = {terms}")
print("degrees drop from k-1 =", ring.polys[0].degree,
      "to", max(p.degree for p in q.polys))

n = q.stabilization_index + 7
print(f"\nspot check at n = {n}: P(n) = {q.evaluate(n)}, "
      f"table gives {hilbert_quotient(w, ideal, n)[n]}")
