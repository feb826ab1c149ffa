"""Exact Hilbert-function values for weighted polynomial rings and their
quotients by monomial ideals.

Three independent routes are provided for the full ring:

* hilbert_enum_oracle -- brute-force enumeration of exponent vectors,
  exponential but unarguable; used as the ground-truth oracle in tests;
* hilbert_ring_dp     -- restricted-partition convolution, O(k*N);
* hilbert_ring_recursive -- the power-series recursion
  n*H(n) = sum_r c(r) H(n-r), where the root-of-unity bracket collapses
  to the integer divisor sum c(r) = sum of the weights dividing r.

Quotients go through the h-vector (numerator of the Hilbert-Poincare
series over prod(1 - t^{d_i})), computed by the colon-ideal recursion
<(m_1..m_s)> = <(m_1..m_{s-1})> - t^deg(m_s) <(m_1..m_{s-1}) : (m_s)>.
"""

from dataclasses import dataclass

from .grading import WeightVector


class ResourceLimitError(Exception):
    """Raised when an enumeration would exceed its node budget."""


@dataclass(frozen=True)
class Monomial:
    exponents: tuple

    def __post_init__(self):
        e = tuple(int(x) for x in self.exponents)
        if any(x < 0 for x in e):
            raise ValueError(f"exponents must be non-negative, got {e}")
        object.__setattr__(self, "exponents", e)

    def degree(self, w):
        return sum(d * a for d, a in zip(w.weights, self.exponents))

    def divides(self, other):
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def is_unit(self):
        return not any(self.exponents)


def _minimalize(monomials):
    """Drop every monomial divisible by another one."""
    out = []
    for m in monomials:
        if any(g.divides(m) for g in out):
            continue
        out = [g for g in out if not m.divides(g)]
        out.append(m)
    return out


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by its minimal generators, kept in a
    deterministic order (W-degree, then exponents).  An empty generator
    list is the zero ideal; a unit generator means the whole ring."""

    generators: tuple
    ambient: WeightVector

    @classmethod
    def from_generators(cls, monomials, ambient):
        ambient = (ambient if isinstance(ambient, WeightVector)
                   else WeightVector(tuple(ambient)))
        mons = [m if isinstance(m, Monomial) else Monomial(tuple(m))
                for m in monomials]
        for m in mons:
            if len(m.exponents) != ambient.k:
                raise ValueError(
                    f"monomial {m.exponents} has wrong length for k={ambient.k}")
        mons = _minimalize(mons)
        mons.sort(key=lambda m: (m.degree(ambient), m.exponents))
        return cls(tuple(mons), ambient)

    def is_zero(self):
        return not self.generators

    def contains_unit(self):
        return any(m.is_unit() for m in self.generators)


@dataclass(frozen=True)
class HVector:
    """Integer numerator h(t) of the Hilbert-Poincare series; h(1) = 0
    for every nonzero proper ideal."""

    coefficients: tuple

    def __post_init__(self):
        c = list(int(x) for x in self.coefficients)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coefficients", tuple(c))

    @property
    def degree(self):
        return len(self.coefficients) - 1

    def __call__(self, t):
        return sum(a * t**j for j, a in enumerate(self.coefficients))


@dataclass(frozen=True)
class HilbertTable:
    values: tuple
    weights: WeightVector
    source: str = "ring"   # "ring" or "quotient"

    def __getitem__(self, n):
        return self.values[n]

    def __len__(self):
        return len(self.values)


def hilbert_enum_oracle(w, ideal, n, node_budget=10**8):
    """Count monomials of W-degree n outside the ideal, by exhaustive
    search over exponent vectors.  Slow on purpose: this is the oracle
    the fast routes are checked against."""
    w = w if isinstance(w, WeightVector) else WeightVector(tuple(w))
    if n < 0:
        raise ValueError("degree must be non-negative")
    gens = () if ideal is None or ideal.is_zero() else ideal.generators
    k = w.k
    # branch on the largest weights first: same exhaustive search,
    # drastically fewer interior nodes
    order = sorted(range(k), key=lambda i: -w.weights[i])
    weights = [w.weights[i] for i in order]
    exps = [tuple(g.exponents[i] for i in order) for g in gens]
    budget = node_budget

    def count(i, rem, active):
        # active: generator rows whose first i exponents are already covered
        nonlocal budget
        budget -= 1
        if budget < 0:
            raise ResourceLimitError(
                f"enumeration exceeded {node_budget} nodes")
        if i == k - 1:
            q, r = divmod(rem, weights[i])
            if r != 0:
                return 0
            return 0 if any(g[i] <= q for g in active) else 1
        d = weights[i]
        total = 0
        for e in range(rem // d + 1):
            still = [g for g in active if g[i] <= e]
            if any(not any(g[i + 1:]) for g in still):
                continue   # some generator already divides every completion
            total += count(i + 1, rem - e * d, still)
        return total

    return count(0, n, exps)


def hilbert_ring_dp(w, n_max):
    """H_R(0..N) by restricted-partition convolution, one weight at a time."""
    w = w if isinstance(w, WeightVector) else WeightVector(tuple(w))
    if n_max < 0:
        raise ValueError("N must be non-negative")
    h = [0] * (n_max + 1)
    h[0] = 1
    for d in w.weights:
        for n in range(d, n_max + 1):
            h[n] += h[n - d]
    return HilbertTable(tuple(h), w, "ring")


def weight_divisor_sum(w, r):
    """c(r) = sum of the weights d_s dividing r: the integer value of the
    root-of-unity bracket in the series recursion (each exponent of a
    d-th root of unity in M_s contributes through the full d_s-th root
    subgroup, whose power sums telescope to d_s or 0)."""
    return sum(d for d in w.weights if r % d == 0)


def hilbert_ring_recursive(w, n_max):
    """H_R(0..N) via n*H(n) = sum_{r=1..n} c(r) H(n-r), exact integers."""
    w = w if isinstance(w, WeightVector) else WeightVector(tuple(w))
    if w.g != 1:
        raise ValueError("recursion requires gcd(weights) = 1")
    if n_max < 0:
        raise ValueError("N must be non-negative")
    # sieve c(1..N) in O(k*N)
    c = [0] * (n_max + 1)
    for d in w.weights:
        for r in range(d, n_max + 1, d):
            c[r] += d
    h = [1]
    for n in range(1, n_max + 1):
        s = 0
        for r in range(1, n + 1):
            s += c[r] * h[n - r]
        q, rem = divmod(s, n)
        if rem:
            raise ArithmeticError(f"recursion gave non-integer H({n})")
        h.append(q)
    return HilbertTable(tuple(h), w, "ring")


def colon_by_monomial(ideal, m):
    """(I : m) for monomial I and monomial m: divide each generator by
    gcd with m (exponent subtraction clamped at 0), then minimalize."""
    m = m if isinstance(m, Monomial) else Monomial(tuple(m))
    gens = [Monomial(tuple(max(a - b, 0)
                           for a, b in zip(g.exponents, m.exponents)))
            for g in ideal.generators]
    return MonomialIdeal.from_generators(gens, ideal.ambient)


def _poly_sub_shifted(p, q, shift):
    """p(t) - t^shift * q(t) on integer coefficient lists."""
    out = list(p) + [0] * max(0, shift + len(q) - len(p))
    for j, a in enumerate(q):
        out[shift + j] -= a
    return out


def hvector(ideal):
    """h(t) with HP_{R/I} = h(t)/prod(1 - t^{d_i}), via the colon-ideal
    recursion over the minimal generators."""
    w = ideal.ambient

    def h_of(gens):
        if not gens:
            return [1]
        last = gens[-1]
        rest = MonomialIdeal.from_generators(gens[:-1], w)
        h_rest = h_of(rest.generators)
        h_col = h_of(colon_by_monomial(rest, last).generators)
        return _poly_sub_shifted(h_rest, h_col, last.degree(w))

    return HVector(tuple(h_of(ideal.generators)))


def hilbert_quotient(w, ideal, n_max):
    """H_{R/I}(0..N) = sum_j a_j H_R(n-j) with the h-vector coefficients."""
    w = w if isinstance(w, WeightVector) else WeightVector(tuple(w))
    ring = hilbert_ring_dp(w, n_max)
    h = hvector(ideal)
    vals = []
    for n in range(n_max + 1):
        vals.append(sum(a * ring[n - j]
                        for j, a in enumerate(h.coefficients) if j <= n))
    return HilbertTable(tuple(vals), w, "quotient")
