import random
from math import gcd, lcm

import pytest

from hilbertqp import (
    MonomialIdeal,
    WeightVector,
    hilbert_quotient,
    hilbert_ring_dp,
    hilbert_ring_recursive,
    hvector,
    interpolate_ring,
    quotient_from_ring,
)

SWEEP_SIZE = 200
SWEEP_SEED = 20260823
# sampling caps keeping the brute-force oracle window affordable;
# all draws stay inside k in 2..6, d_i in 1..12, <= 4 generators of
# exponent <= 4
MAX_LCM = 36
MAX_GENERATOR_DEGREE = 30


class SweepInstance:
    """One random problem: normalized weights, optional monomial ideal,
    and a scale factor for the unnormalized variant.  Heavy artifacts
    are computed lazily and cached so the acceptance criteria share them."""

    def __init__(self, index, weights, ideal, scale):
        self.index = index
        self.weights = weights
        self.ideal = ideal            # None for the full ring
        self.scale = scale
        self._cache = {}

    def _get(self, key, make):
        if key not in self._cache:
            self._cache[key] = make()
        return self._cache[key]

    @property
    def ring_qp(self):
        return self._get("ring_qp", lambda: interpolate_ring(self.weights))

    @property
    def hvec(self):
        return self._get("hvec", lambda: hvector(self.ideal))

    @property
    def quotient_qp(self):
        return self._get(
            "quotient_qp",
            lambda: quotient_from_ring(self.ring_qp, self.hvec))

    @property
    def qp(self):
        return self.ring_qp if self.ideal is None else self.quotient_qp

    def dp_table(self, n_max):
        t = self._cache.get("dp")
        if t is None or len(t) <= n_max:
            t = hilbert_ring_dp(self.weights, n_max)
            self._cache["dp"] = t
        return t

    def recursion_table(self, n_max):
        t = self._cache.get("rec")
        if t is None or len(t) <= n_max:
            t = hilbert_ring_recursive(self.weights, n_max)
            self._cache["rec"] = t
        return t

    def quotient_table(self, n_max):
        t = self._cache.get("quot")
        if t is None or len(t) <= n_max:
            t = hilbert_quotient(self.weights, self.ideal, n_max)
            self._cache["quot"] = t
        return t


def _random_weights(rng):
    while True:
        k = rng.randint(2, 6)
        raw = tuple(rng.randint(1, 12) for _ in range(k))
        g = gcd(*raw)
        norm = tuple(x // g for x in raw)
        if lcm(*norm) <= MAX_LCM:
            return norm


def _random_ideal(rng, w):
    gens = []
    for _ in range(rng.randint(1, 4)):
        support = rng.sample(range(w.k), rng.randint(1, min(2, w.k)))
        exps = [0] * w.k
        for i in support:
            exps[i] = rng.randint(1, 4)
        m = tuple(exps)
        if sum(d * e for d, e in zip(w.weights, m)) <= MAX_GENERATOR_DEGREE:
            gens.append(m)
    if not gens:
        return None
    return MonomialIdeal.from_generators(gens, w)


@pytest.fixture(scope="session")
def sweep():
    rng = random.Random(SWEEP_SEED)
    instances = []
    for i in range(SWEEP_SIZE):
        w = WeightVector(_random_weights(rng))
        ideal = _random_ideal(rng, w) if rng.random() < 0.7 else None
        scale = rng.randint(2, 4)
        instances.append(SweepInstance(i, w, ideal, scale))
    assert any(inst.ideal is not None for inst in instances)
    assert any(inst.ideal is None for inst in instances)
    return instances
