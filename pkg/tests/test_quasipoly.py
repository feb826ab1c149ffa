import random
from fractions import Fraction as F

import pytest

from hilbertqp import (
    MonomialIdeal,
    RationalPolynomial,
    WeightVector,
    closed_c_k2,
    closed_c_k3,
    closed_leading_coefficient,
    hilbert_ring_dp,
    hvector,
    interpolate_quotient_direct,
    interpolate_ring,
    quotient_from_ring,
    scale_transform,
    structure_report,
)
from hilbertqp.quasipoly import ZERO_POLY, solve_linear_system


def poly(*coeffs):
    return RationalPolynomial(tuple(F(c) for c in coeffs))


def test_polynomial_trims_and_evaluates():
    p = poly(1, F(1, 2), 0, 0)
    assert p.degree == 1
    assert p(4) == 3
    assert ZERO_POLY.degree == -1
    assert ZERO_POLY(7) == 0


def test_polynomial_shift_and_dilate():
    p = poly(1, 2, 3)             # 3x^2 + 2x + 1
    q = p.shift_argument(5)       # p(x - 5)
    for x in range(-3, 8):
        assert q(x) == p(x - 5)
    r = p.dilate_argument(3)      # p(x / 3)
    for x in range(-6, 7):
        assert r(x) == p(F(x, 3))


def test_solve_linear_system():
    sol = solve_linear_system([[2, 1], [1, -1]], [5, 1])
    assert sol == [2, 1]
    with pytest.raises(ValueError):
        solve_linear_system([[1, 1], [2, 2]], [1, 2])


@pytest.mark.parametrize("weights, expected", [
    ((1, 2, 3, 4, 6), F(1, 3456)),
    ((1, 1), F(1)),
    ((1, 2), F(1, 2)),
])
def test_closed_leading_coefficient(weights, expected):
    assert closed_leading_coefficient(weights) == expected


@pytest.mark.parametrize("weights, expected", [
    ((1, 2, 3, 4, 6), F(1, 108)),
    ((1, 1), F(1)),
    ((1, 1, 2, 3), F(7, 24)),   # independently re-derived; see notes
])
def test_closed_c_k2(weights, expected):
    assert closed_c_k2(weights) == expected


def test_closed_c_k2_rejects_large_delta():
    with pytest.raises(ValueError):
        closed_c_k2((1, 2))      # delta = 1 > k-2 = 0


@pytest.mark.parametrize("weights, expected", [
    ((1, 1, 2, 3), F(11, 12)),
    ((1, 1, 1), F(1)),
    ((1, 1, 1, 1, 2), F(25, 24)),  # (3*36-8)/(24*2*2), re-derived
])
def test_closed_c_k3(weights, expected):
    assert closed_c_k3(weights) == expected


def test_closed_c_k3_rejects_large_delta():
    with pytest.raises(ValueError):
        closed_c_k3((1, 2, 3, 4, 6))     # delta = 3 > k-3 = 2


def test_interpolate_ring_example1_rows():
    p = interpolate_ring((1, 2, 3, 4, 6))
    assert p.period == 12
    assert p.polys[0].coefficients == \
        (F(1), F(1, 2), F(5, 48), F(1, 108), F(1, 3456))
    assert p.polys[5].coefficient(0) == F(1001, 3456)


def test_interpolate_ring_standard_grading():
    p = interpolate_ring((1, 1, 1))
    assert p.period == 1
    assert p.polys[0].coefficients == (F(1), F(3, 2), F(1, 2))


def test_interpolate_ring_rejects_non_coprime():
    with pytest.raises(ValueError):
        interpolate_ring((2, 4))


def test_interpolate_ring_reduced_system_path():
    # delta <= k-3 engages the closed-formula-reduced system
    w = (1, 1, 2, 3)
    p = interpolate_ring(w)
    table = hilbert_ring_dp(w, 60)
    for n in range(p.stabilization_index, 61):
        assert p.evaluate(n) == table[n]
    assert all(q.coefficient(3) == closed_leading_coefficient(w)
               for q in p.polys)
    assert all(q.coefficient(2) == closed_c_k2(w) for q in p.polys)
    assert all(q.coefficient(1) == closed_c_k3(w) for q in p.polys)


def test_quotient_from_ring_identity():
    w = (1, 2, 3, 4, 6)
    p = interpolate_ring(w)
    zero = MonomialIdeal.from_generators([], WeightVector(w))
    assert quotient_from_ring(p, hvector(zero)) == p


def test_quotient_from_ring_example2():
    w = WeightVector((1, 2, 3, 4, 6))
    p = interpolate_ring(w)
    i = MonomialIdeal.from_generators(
        [(3, 0, 0, 0, 0), (0, 1, 1, 0, 0)], w)
    q = quotient_from_ring(p, hvector(i))
    assert q.polys[0].coefficients == (F(1), F(1, 2), F(1, 16))
    assert q.polys[5].coefficients == (F(7, 24), F(1, 3), F(1, 24))


def test_interpolate_quotient_direct_matches_transform():
    w = WeightVector((1, 2, 3, 4, 6))
    i = MonomialIdeal.from_generators(
        [(3, 0, 0, 0, 0), (0, 1, 1, 0, 0)], w)
    direct = interpolate_quotient_direct(w, i)
    via_ring = quotient_from_ring(interpolate_ring(w), hvector(i))
    assert direct == via_ring


def test_interpolate_quotient_direct_unit_ideal():
    w = WeightVector((1, 2))
    unit = MonomialIdeal.from_generators([(0, 0)], w)
    q = interpolate_quotient_direct(w, unit)
    assert all(p.is_zero() for p in q.polys)
    assert q.evaluate(123) == 0


def test_interpolate_quotient_direct_constant():
    w = WeightVector((1, 1))
    i = MonomialIdeal.from_generators([(1, 1)], w)
    q = interpolate_quotient_direct(w, i)
    # only x^n and y^n survive in degree n >= 1
    assert q.polys[0].coefficients == (F(2),)
    assert q.stabilization_index == 1


def test_scale_transform_identity():
    p = interpolate_ring((1, 2))
    assert scale_transform(p, 1) is p


def test_scale_transform_example3():
    p = scale_transform(interpolate_ring((1, 2, 4, 8, 16)), 2)
    assert p.period == 32
    assert all(p.polys[i].is_zero() for i in range(1, 32, 2))
    assert p.polys[0].coefficients == \
        (F(1), F(11, 48), F(43, 3072), F(1, 3072), F(1, 393216))


def test_scale_transform_roundtrip_evaluation():
    base = interpolate_ring((1, 3, 5))
    scaled = scale_transform(base, 4)
    for n in range(scaled.stabilization_index,
                   scaled.stabilization_index + 2 * scaled.period):
        if n % 4 == 0:
            assert scaled.evaluate(n) == base.evaluate(n // 4)
        else:
            assert scaled.evaluate(n) == 0


def test_evaluate_examples():
    p = interpolate_ring((1, 2, 3, 4, 6))
    assert p.evaluate(12) == hilbert_ring_dp((1, 2, 3, 4, 6), 12)[12] == 44
    assert p.evaluate(0) == 1


def test_structure_report_example1():
    w = (1, 2, 3, 4, 6)
    report = structure_report(interpolate_ring(w), w)
    assert report.periodic_part_degree == 2
    assert report.observed_periods == (12, 6, 2, 1, 1)
    assert report.predicted_periods == (12, 6, 2, 1, 1)
    assert report.fixed_part.coefficient(3) == F(1, 108)
    assert report.fixed_part.coefficient(4) == F(1, 3456)


def test_structure_report_standard_grading():
    report = structure_report(interpolate_ring((1, 1, 1)), (1, 1, 1))
    assert report.observed_periods == (1, 1, 1)
    assert report.periodic_part_degree == -1


def test_structure_report_scaled_weights():
    w = (2, 4, 8, 16, 32)
    p = scale_transform(interpolate_ring((1, 2, 4, 8, 16)), 2)
    report = structure_report(p, w)
    assert report.observed_periods[3] == 4          # delta_3 = 4
    assert report.predicted_periods == (32, 16, 8, 4, 2)


def test_degree_drop_for_quotients():
    rng = random.Random(11)
    w = WeightVector((1, 2, 3))
    p = interpolate_ring(w)
    for _ in range(10):
        gens = [tuple(rng.randint(0, 2) for _ in range(3))
                for _ in range(rng.randint(1, 3))]
        if all(not any(g) for g in gens):
            continue
        i = MonomialIdeal.from_generators(gens, w)
        if i.contains_unit():
            continue
        q = quotient_from_ring(p, hvector(i))
        assert all(poly.coefficient(2) == 0 for poly in q.polys)
