from __future__ import annotations

import random

import pytest

from oracles import naive_difference_tally, naive_product_tally
from rshds import constructions
from rshds.algebra import (
    AlgebraElement,
    AlgebraError,
    convolve,
    from_set,
    full_sum,
    poly_eval,
    regular_matrix,
    unit,
    zero,
)
from rshds.groups import C4PowerGroup, GnkGroup, cyclic_group


def test_from_set_examples(gnk20):
    assert from_set(gnk20, []).is_zero()
    assert from_set(gnk20, [0]) == unit(gnk20)
    assert from_set(gnk20, range(16)) == full_sum(gnk20)
    with pytest.raises(AlgebraError):
        from_set(gnk20, [3, 3])


def test_convolve_deltas(gnk20):
    for g in (1, 5, 11):
        for h in (2, 7, 14):
            prod = convolve(from_set(gnk20, [g]), from_set(gnk20, [h]))
            assert prod == from_set(gnk20, [gnk20.mul(g, h)])


def test_subgroup_indicator_squares(gnk20, gnk31):
    for group in (gnk20, gnk31):
        h = group.distinguished_subgroup()
        h_el = from_set(group, h.members)
        assert convolve(h_el, h_el) == h.order * h_el


def test_difference_set_times_subgroup(cand20):
    group, h = cand20.group, cand20.subgroup
    d = from_set(group, cand20.elements)
    h_el = from_set(group, h.members)
    g_el = full_sum(group)
    assert convolve(d, h_el) == 2 * (g_el - h_el)


def test_star(gnk20):
    x = from_set(gnk20, [5])
    assert x.star() == from_set(gnk20, [gnk20.inv(5)])
    rnd = AlgebraElement(gnk20, [i % 5 - 2 for i in range(16)])
    assert rnd.star().star() == rnd
    h_el = from_set(gnk20, gnk20.distinguished_subgroup().members)
    assert h_el.star() == h_el


def test_identity_coefficient(cand20):
    group = cand20.group
    d = from_set(group, cand20.elements)
    assert d.identity_coefficient() == 0
    prod = convolve(d, d.star())
    oracle = naive_difference_tally(group, cand20.elements)
    assert prod.identity_coefficient() == oracle[0] == 6
    assert unit(group).identity_coefficient() == 1


def test_poly_eval_examples(cand20):
    group = cand20.group
    d = from_set(group, cand20.elements)
    shifted = poly_eval(d, [-6, 1])
    assert shifted == d - 6 * unit(group)
    h_el = from_set(group, group.distinguished_subgroup().members)
    assert poly_eval(h_el, [0, 0, 1]) == 4 * h_el
    # (2x+4)(4x^2+16)(x-6) kills the canonical difference set
    poly = [1]
    for factor in ([4, 2], [16, 0, 4], [-6, 1]):
        poly = _mul(poly, factor)
    assert poly_eval(d, poly).is_zero()


def _mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def test_poly_eval_rejects_non_integers(gnk20):
    with pytest.raises(AlgebraError):
        poly_eval(unit(gnk20), [0.5, 1])


def test_convolve_group_mismatch(gnk20, gnk31):
    with pytest.raises(AlgebraError):
        convolve(unit(gnk20), unit(gnk31))


def test_convolution_associative_distributive():
    rng = random.Random(20240811)
    for group in (GnkGroup(2, 0), C4PowerGroup(3), cyclic_group(12)):
        for _ in range(4):
            def sparse():
                coeffs = [0] * group.order
                for _ in range(5):
                    coeffs[rng.randrange(group.order)] += rng.randint(-3, 3)
                return AlgebraElement(group, coeffs)

            x, y, z = sparse(), sparse(), sparse()
            assert convolve(convolve(x, y), z) == convolve(x, convolve(y, z))
            assert convolve(x, y + z) == convolve(x, y) + convolve(x, z)
            assert convolve(x + y, z) == convolve(x, z) + convolve(y, z)


def test_parseval_identity():
    rng = random.Random(7)
    group = GnkGroup(3, 1)
    coeffs = [rng.randint(-4, 4) for _ in range(group.order)]
    x = AlgebraElement(group, coeffs)
    prod = convolve(x, x.star())
    assert prod.identity_coefficient() == sum(c * c for c in coeffs)


def test_convolution_matches_naive_tally():
    rng = random.Random(99)
    for group in (GnkGroup(2, 0), C4PowerGroup(3), cyclic_group(60)):
        support = rng.sample(range(group.order), min(40, group.order // 2))
        x = from_set(group, support)
        prod = convolve(x, x.star())
        oracle = naive_difference_tally(group, support)
        for g in range(group.order):
            assert prod.coeffs[g] == oracle.get(g, 0)
        other = rng.sample(range(group.order), 7)
        y = from_set(group, other)
        prod2 = convolve(x, y)
        oracle2 = naive_product_tally(group, support, other)
        for g in range(group.order):
            assert prod2.coeffs[g] == oracle2.get(g, 0)


def test_regular_matrix_is_faithful(cand20):
    group = cand20.group
    d = from_set(group, cand20.elements)
    m = regular_matrix(d)
    assert all(sum(row) == 6 for row in m)
    assert all(sum(m[i][j] for i in range(16)) == 6 for j in range(16))
    # matrix product of regular representations = representation of convolution
    h_el = from_set(group, group.distinguished_subgroup().members)
    mh = regular_matrix(h_el)
    prod = [
        [sum(m[i][k] * mh[k][j] for k in range(16)) for j in range(16)]
        for i in range(16)
    ]
    assert prod == regular_matrix(convolve(d, h_el))


def test_scalar_and_vector_ops(gnk20):
    x = from_set(gnk20, [1, 2, 3])
    assert (3 * x).coeffs[1] == 3
    assert (x * 2).coeffs[2] == 2
    assert (-x + x).is_zero()
    assert (x - x).is_zero()
    assert zero(gnk20).is_zero()
