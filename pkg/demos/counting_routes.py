"""Walkthrough: three independent ways to compute Hilbert values.

All three count monomials of weighted degree n in Q[x1..xk]:

* brute-force enumeration over exponent vectors (slow, unarguable),
* restricted-partition dynamic programming, O(k*N),
* the power-series recursion n*H(n) = sum_r c(r) H(n-r) with
  c(r) the sum of the weights dividing r.

The last runs in exact integer arithmetic far past where enumeration
gives up.
"""

import time

from hilbertqp import (
    WeightVector,
    hilbert_enum_oracle,
    hilbert_ring_dp,
    hilbert_ring_recursive,
    weight_divisor_sum,
)

w = WeightVector((1, 2, 3, 4, 6))

print("c(r) for r = 1..12:",
      [weight_divisor_sum(w, r) for r in range(1, 13)])

dp = hilbert_ring_dp(w, 40)
rec = hilbert_ring_recursive(w, 40)
enum = [hilbert_enum_oracle(w, None, n) for n in range(41)]
assert list(dp.values) == list(rec.values) == enum
print("all three routes agree on H(0..40)")
print("H(0..20) =", list(dp.values[:21]))

for n_max in (1000, 4000):
    t0 = time.perf_counter()
    big = hilbert_ring_recursive(w, n_max)
    dt = time.perf_counter() - t0
    print(f"recursion to N={n_max}: {dt:.2f} s, "
          f"H({n_max}) = {big[n_max]}")
