"""Hilbert quasi-polynomials by exact interpolation, plus the quotient,
scaling and structure transforms.

A quasi-polynomial of period s is a list of s polynomials with exact
rational coefficients; evaluation at n dispatches on n mod s.  For the
full ring the period is d = lcm(weights), every polynomial has degree
k-1 and leading coefficient 1/((k-1)! * prod(weights)); quotients by a
nonzero ideal drop to degree <= k-2.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, gcd, lcm, prod

from .grading import WeightVector, compute_delta, compute_delta_r
from .series import hilbert_ring_dp, hilbert_quotient, hvector

MAX_STABILIZATION_RETRIES = 16


class VerificationError(Exception):
    """Interpolated polynomials failed the post-hoc check window."""


class StructureViolationError(Exception):
    """A coefficient pattern contradicts the structure theorems."""


@dataclass(frozen=True)
class RationalPolynomial:
    """Dense polynomial over Q, coefficients ascending, trailing zeros
    trimmed (so the zero polynomial has no coefficients at all)."""

    coefficients: tuple

    def __post_init__(self):
        c = [Fraction(x) for x in self.coefficients]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coefficients", tuple(c))

    @property
    def degree(self):
        return len(self.coefficients) - 1

    def __call__(self, x):
        val = Fraction(0)
        for c in reversed(self.coefficients):
            val = val * x + c
        return val

    def __add__(self, other):
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for j, c in enumerate(b):
            out[j] += c
        return RationalPolynomial(tuple(out))

    def scale(self, c):
        c = Fraction(c)
        return RationalPolynomial(tuple(c * x for x in self.coefficients))

    def shift_argument(self, j):
        """Compose with x -> x - j by binomial re-expansion."""
        out = [Fraction(0)] * len(self.coefficients)
        for r, c in enumerate(self.coefficients):
            for i in range(r + 1):
                out[i] += c * comb(r, i) * Fraction(-j) ** (r - i)
        return RationalPolynomial(tuple(out))

    def dilate_argument(self, a):
        """Compose with x -> x / a."""
        return RationalPolynomial(
            tuple(c / Fraction(a) ** r
                  for r, c in enumerate(self.coefficients)))

    def coefficient(self, r):
        return self.coefficients[r] if r < len(self.coefficients) else Fraction(0)

    def is_zero(self):
        return not self.coefficients


ZERO_POLY = RationalPolynomial(())


@dataclass(frozen=True, eq=False)
class QuasiPolynomial:
    period: int
    polys: tuple
    stabilization_index: int
    weights: WeightVector = None

    def evaluate(self, n):
        return self.polys[n % self.period](n)

    def __eq__(self, other):
        return (isinstance(other, QuasiPolynomial)
                and self.period == other.period
                and self.polys == other.polys)


@dataclass(frozen=True)
class StructureReport:
    fixed_part: RationalPolynomial      # coefficients of degrees delta..k-1
    periodic_part_degree: int           # delta - 1
    observed_periods: tuple             # minimal period per coefficient slot
    predicted_periods: tuple            # delta_r per slot


def evaluate(p, n):
    return p.evaluate(n)


def closed_leading_coefficient(w):
    """1 / ((k-1)! * prod(weights)) for the full ring, gcd(weights)=1."""
    w = w if isinstance(w, WeightVector) else WeightVector(tuple(w))
    _require_normalized(w)
    return Fraction(1, factorial(w.k - 1) * prod(w.weights))


def closed_c_k2(w):
    """Degree-(k-2) coefficient: sum(d_i) / (2 (k-2)! prod(d_i)); only
    asserted when delta <= k-2."""
    w = w if isinstance(w, WeightVector) else WeightVector(tuple(w))
    _require_normalized(w)
    if compute_delta(w) > w.k - 2:
        raise ValueError("closed formula for c_{k-2} needs delta <= k-2")
    return Fraction(sum(w.weights),
                    2 * factorial(w.k - 2) * prod(w.weights))


def closed_c_k3(w):
    """Degree-(k-3) coefficient: (3 (sum d_i)^2 - sum d_i^2) over
    (24 (k-3)! prod(d_i)); only asserted when delta <= k-3."""
    w = w if isinstance(w, WeightVector) else WeightVector(tuple(w))
    _require_normalized(w)
    if compute_delta(w) > w.k - 3:
        raise ValueError("closed formula for c_{k-3} needs delta <= k-3")
    s = sum(w.weights)
    s2 = sum(d * d for d in w.weights)
    return Fraction(3 * s * s - s2,
                    24 * factorial(w.k - 3) * prod(w.weights))


def _require_normalized(w):
    if w.g != 1:
        raise ValueError("gcd(weights) must be 1; use normalize_weights "
                         "and scale_transform for the general case")


def solve_linear_system(matrix, rhs):
    """Gaussian elimination over exact rationals; matrix must be square
    and nonsingular."""
    n = len(rhs)
    a = [[Fraction(x) for x in row] + [Fraction(rhs[i])]
         for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular system")
        a[col], a[pivot] = a[pivot], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


def _interpolate_points(xs, ys, extra_high=()):
    """Polynomial through (xs, ys) with optional pinned high-order
    coefficients: extra_high lists (degree, value) pairs already known,
    subtracted from the right-hand side before solving."""
    m = len(xs)
    known = list(extra_high)
    rhs = []
    for x, y in zip(xs, ys):
        rhs.append(Fraction(y) - sum(c * Fraction(x) ** r for r, c in known))
    if m == 0:
        coeffs = []
    else:
        matrix = [[Fraction(x) ** j for j in range(m)] for x in xs]
        coeffs = solve_linear_system(matrix, rhs)
    top = [Fraction(0)] * ((max((r for r, _ in known), default=-1) + 1) - m)
    out = list(coeffs) + top
    for r, c in known:
        out[r] = c
    return RationalPolynomial(tuple(out))


def _find_stabilization(quasi, table, check_end):
    """Smallest n0 such that quasi(n) = table[n] for all n0 <= n <= check_end;
    None if even the top of the window disagrees."""
    n0 = check_end + 1
    for n in range(check_end, -1, -1):
        if quasi.polys[n % quasi.period](n) != table[n]:
            break
        n0 = n
    return None if n0 == check_end + 1 else n0


def _interpolate_from_table(w, table_for, degree_bound, start_at, known=()):
    """Shared interpolation driver: for each residue j mod d, fit a
    polynomial of the given degree bound through sample points
    x_r = j + beta*d + r*d (beta chosen so x_0 >= start_at), then verify
    over one full extra period.  On a verification miss the sample window
    shifts up by d and we retry: the quasi-polynomial is only guaranteed
    to match the Hilbert function eventually."""
    d = w.d
    n_unknown = degree_bound + 1 - len(known)
    n_points = max(n_unknown, 0)
    for attempt in range(MAX_STABILIZATION_RETRIES):
        shift = attempt * d
        top = start_at + shift + (n_points + 1) * d + d
        table = table_for(top)
        polys = []
        for j in range(d):
            beta = max(0, -(-(start_at + shift - j) // d))
            xs = [j + beta * d + r * d for r in range(n_points)]
            ys = [table[x] for x in xs]
            polys.append(_interpolate_points(xs, ys, known))
        quasi = QuasiPolynomial(d, tuple(polys), 0, w)
        check_start = start_at + shift + n_points * d
        ok = all(quasi.polys[n % d](n) == table[n]
                 for n in range(check_start, check_start + d))
        if ok:
            n0 = _find_stabilization(quasi, table, check_start + d - 1)
            return QuasiPolynomial(d, tuple(polys), n0, w)
    raise VerificationError(
        "interpolation did not stabilize within "
        f"{MAX_STABILIZATION_RETRIES} window shifts")


def interpolate_ring(w, table=None):
    """Quasi-polynomial of the full ring (gcd(weights) = 1) by exact
    interpolation on k points per residue; when delta <= k-3 the three
    closed coefficient formulas shrink the linear system to k-3 unknowns."""
    w = w if isinstance(w, WeightVector) else WeightVector(tuple(w))
    _require_normalized(w)
    k = w.k
    if compute_delta(w) <= k - 3:
        known = [(k - 1, closed_leading_coefficient(w)),
                 (k - 2, closed_c_k2(w)), (k - 3, closed_c_k3(w))]
    else:
        known = []

    cache = {"table": table}

    def table_for(top):
        if cache["table"] is None or len(cache["table"]) <= top:
            cache["table"] = hilbert_ring_dp(w, top)
        return cache["table"]

    return _interpolate_from_table(w, table_for, k - 1, k - 1, known)


def interpolate_quotient_direct(w, ideal, table=None):
    """Quasi-polynomial of R/I interpolated straight from the quotient
    Hilbert function with degree bound k-2; independent cross-check of
    quotient_from_ring."""
    w = w if isinstance(w, WeightVector) else WeightVector(tuple(w))
    _require_normalized(w)
    if ideal.is_zero():
        raise ValueError("use interpolate_ring for the zero ideal")
    if ideal.contains_unit():
        return QuasiPolynomial(w.d, (ZERO_POLY,) * w.d, 0, w)
    h = hvector(ideal)
    start = max(w.k - 1, h.degree)

    cache = {"table": table}

    def table_for(top):
        if cache["table"] is None or len(cache["table"]) <= top:
            cache["table"] = hilbert_quotient(w, ideal, top)
        return cache["table"]

    return _interpolate_from_table(w, table_for, w.k - 2, start)


def quotient_from_ring(p, h, table=None):
    """Transform the ring quasi-polynomial through the h-vector:
    Q_i(x) = sum_j a_j P_{(i-j) mod d}(x - j)."""
    d = p.period
    if not h.coefficients:   # h = 0: the quotient is the zero ring
        return QuasiPolynomial(d, (ZERO_POLY,) * d, 0, p.weights)
    polys = []
    for i in range(d):
        q = ZERO_POLY
        for j, a in enumerate(h.coefficients):
            if a:
                q = q + p.polys[(i - j) % d].shift_argument(j).scale(a)
        polys.append(q)
    n0 = 0
    if p.weights is not None:
        w = p.weights
        top = max(p.stabilization_index + h.degree, w.k) + 2 * d
        if table is None or len(table) <= top:
            ring = hilbert_ring_dp(w, top)
            vals = tuple(sum(a * ring[n - j]
                             for j, a in enumerate(h.coefficients) if j <= n)
                         for n in range(top + 1))
            table = vals
        quasi = QuasiPolynomial(d, tuple(polys), 0, w)
        n0 = _find_stabilization(quasi, table, top)
        # P_ring(n-j) is exact for n-j beyond the ring's stabilization,
        # so the transform must agree from stab + deg(h) on
        if n0 is None or n0 > p.stabilization_index + h.degree:
            raise VerificationError(
                "quotient transform disagrees with the Hilbert function")
    return QuasiPolynomial(d, tuple(polys), n0, p.weights)


def scale_transform(p, a):
    """Quasi-polynomial for weights a*W from the one for W: period grows
    to a*d, indices not divisible by a get the zero polynomial, index a*i
    gets P_i(x/a)."""
    if a < 1:
        raise ValueError("scale must be a positive integer")
    if a == 1:
        return p
    d = p.period
    polys = []
    for i in range(a * d):
        if i % a:
            polys.append(ZERO_POLY)
        else:
            polys.append(p.polys[(i // a) % d].dilate_argument(a))
    weights = None
    if p.weights is not None:
        weights = WeightVector(tuple(a * x for x in p.weights))
    return QuasiPolynomial(a * d, tuple(polys),
                           a * p.stabilization_index, weights)


def _minimal_period(values):
    n = len(values)
    for p in range(1, n + 1):
        if n % p == 0 and all(values[i] == values[(i + p) % n]
                              for i in range(n)):
            return p
    return n


def structure_report(p, w=None):
    """Split the ring quasi-polynomial into its fixed part Q (coefficient
    slots delta..k-1, constant across residues) and report per-slot
    observed periods against the predicted delta_r."""
    w = w if w is not None else p.weights
    w = w if isinstance(w, WeightVector) else WeightVector(tuple(w))
    k = w.k
    if p.period != w.d:
        raise ValueError("quasi-polynomial period does not match lcm(weights)")
    delta = compute_delta(w)
    predicted = tuple(compute_delta_r(w, r) for r in range(k))
    observed = []
    for r in range(k):
        slot = [q.coefficient(r) for q in p.polys]
        period = _minimal_period(slot)
        if predicted[r] % period != 0:
            raise StructureViolationError(
                f"slot {r}: observed period {period} does not divide "
                f"predicted {predicted[r]}")
        observed.append(period)
    fixed = [Fraction(0)] * k
    for r in range(delta, k):
        slot = {q.coefficient(r) for q in p.polys}
        if len(slot) != 1:
            raise StructureViolationError(
                f"slot {r} should be constant across residues")
        fixed[r] = slot.pop()
    return StructureReport(
        fixed_part=RationalPolynomial(tuple(fixed)),
        periodic_part_degree=delta - 1,
        observed_periods=tuple(observed),
        predicted_periods=predicted,
    )
