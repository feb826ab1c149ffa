"""Weight vectors and the period/root data attached to them.

A weight vector W = [d_1, ..., d_k] of positive integers grades the
polynomial ring in k variables by deg(x_i) = d_i.  Everything downstream
(series expansion, interpolation, coefficient periodicity) is driven by a
handful of quantities derived from W:

* d     -- lcm of the weights, the period of the quasi-polynomial;
* delta -- largest size of an index subset whose gcd exceeds 1;
* M_s   -- the multiples of d/d_s below d (one set per weight);
* T_r   -- elements of union(M_s) lying in exactly r of the M_s;
* delta_r -- lcm over all (r+1)-subsets of the subset gcd, the period
  with which the degree-r coefficient repeats across residues.
"""

from dataclasses import dataclass
from itertools import combinations
from math import gcd, lcm

MAX_VARIABLES = 24


@dataclass(frozen=True)
class WeightVector:
    """Positive integer weights with their lcm and gcd precomputed."""

    weights: tuple

    def __post_init__(self):
        w = tuple(int(x) for x in self.weights)
        if len(w) < 1:
            raise ValueError("need at least one weight")
        if len(w) > MAX_VARIABLES:
            raise ValueError(f"at most {MAX_VARIABLES} weights supported")
        if any(x < 1 for x in w):
            raise ValueError(f"weights must be positive, got {w}")
        object.__setattr__(self, "weights", w)

    @property
    def k(self):
        return len(self.weights)

    @property
    def d(self):
        return lcm(*self.weights)

    @property
    def g(self):
        return gcd(*self.weights)

    def is_normalized(self):
        return self.g == 1

    def __iter__(self):
        return iter(self.weights)


@dataclass(frozen=True)
class RootStructure:
    """Root bookkeeping for prod(1 - t^{d_i}) in terms of a primitive
    d-th root of unity: M_s lists the exponents contributed by weight s,
    T_r those of multiplicity exactly r (t=1 itself excluded)."""

    delta: int
    m_sets: tuple      # m_sets[s-1] for s = 1..k, sorted tuples
    t_sets: tuple      # t_sets[r-1] for r = 1..k, sorted tuples
    delta_r: tuple     # delta_0 .. delta_{k-1}


def normalize_weights(w):
    """Divide out the gcd; returns (normalized WeightVector, scale)."""
    w = w if isinstance(w, WeightVector) else WeightVector(tuple(w))
    a = w.g
    return WeightVector(tuple(x // a for x in w.weights)), a


def compute_delta(w):
    """Largest |I| with gcd(d_i, i in I) > 1; 0 if every weight is 1.

    For non-coprime weights this is trivially k.  Subset enumeration,
    largest sizes first; fine for the small k this library targets.
    """
    w = w if isinstance(w, WeightVector) else WeightVector(tuple(w))
    if w.g != 1:
        return w.k
    for size in range(w.k, 0, -1):
        for subset in combinations(w.weights, size):
            if gcd(*subset) != 1:
                return size
    return 0


def compute_delta_r(w, r):
    """Period of the degree-r coefficient: lcm of gcd(d_i, i in I) over
    all subsets I of size r+1.  delta_0 is the lcm of the weights."""
    w = w if isinstance(w, WeightVector) else WeightVector(tuple(w))
    if not 0 <= r <= w.k - 1:
        raise ValueError(f"r must be in 0..{w.k - 1}, got {r}")
    return lcm(*(gcd(*s) for s in combinations(w.weights, r + 1)))


def root_structure(w):
    """M_s, T_r and the coefficient periods for a normalized weight vector."""
    w = w if isinstance(w, WeightVector) else WeightVector(tuple(w))
    if w.g != 1:
        raise ValueError("root_structure requires gcd(weights) = 1; "
                         "normalize_weights first")
    d = w.d
    m_sets = []
    for ds in w.weights:
        step = d // ds
        m_sets.append(tuple(step * j for j in range(1, ds)))
    # multiplicity of exponent p = number of M_s containing it;
    # p is in M_s exactly when d/d_s divides p, i.e. p*d_s = 0 mod d
    t_sets = [[] for _ in range(w.k)]
    for p in sorted(set().union(*map(set, m_sets))):
        mult = sum(1 for ds in w.weights if (p * ds) % d == 0)
        t_sets[mult - 1].append(p)
    return RootStructure(
        delta=compute_delta(w),
        m_sets=tuple(m_sets),
        t_sets=tuple(tuple(t) for t in t_sets),
        delta_r=tuple(compute_delta_r(w, r) for r in range(w.k)),
    )
