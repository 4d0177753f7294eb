# -*- Python -*-
# -*- coding: utf-8 -*-

'''wenzllab

Copyright (C) 2026
    wenzl-lab developers
    All rights reserved.
Licensed under the GNU Lesser General Public License version 3.
http://www.gnu.org/licenses/lgpl-3.0.en.html

Tests for quantum integers, theta-nets and the closed-form bounds.

'''


import math

from hypothesis import given, settings
from hypothesis import strategies as st
import pytest

from wenzllab import exceptions
from wenzllab import qnum
from wenzllab.qnum import AdmissibleTriple, quantum_parameter


REL_TOLERANCE = 1e-10

Ns = st.integers(min_value=3, max_value=12)
levels = st.integers(min_value=0, max_value=8)


def _triples(l_max):
    return [t for l in range(l_max + 1) for m in range(l_max + 1)
            for t in qnum.admissible_triples(l, m)]


@given(N=st.integers(min_value=2, max_value=10000))
def test_q_solves_defining_equation(N):
    p = quantum_parameter(N)
    assert 0.0 < p.q <= 1.0
    assert p.q + 1.0 / p.q == pytest.approx(N, rel=1e-12)


def test_q_classical_limit():
    p = quantum_parameter(2)
    assert p.q == 1.0
    assert [qnum.q_int(p, n) for n in range(6)] == [0, 1, 2, 3, 4, 5]


@pytest.mark.parametrize('N', [0, 1, 2.5, True, -3])
def test_bad_N(N):
    with pytest.raises(exceptions.BadParameterError):
        quantum_parameter(N)


def test_dims_N3():
    p = quantum_parameter(3)
    assert [round(qnum.dim_irrep(p, k)) for k in range(6)] == \
            [1, 3, 8, 21, 55, 144]


def test_dims_N4():
    p = quantum_parameter(4)
    assert [qnum.q_int(p, n) for n in (2, 3, 4)] == \
            pytest.approx([4.0, 15.0, 56.0], rel=1e-12)


@settings(max_examples=50)
@given(N=Ns, n=st.integers(min_value=1, max_value=40))
def test_q_int_recursion(N, n):
    p = quantum_parameter(N)
    expected = N * qnum.q_int(p, n) - qnum.q_int(p, n - 1)
    assert qnum.q_int(p, n + 1) == pytest.approx(expected, rel=REL_TOLERANCE)


@settings(max_examples=50)
@given(N=Ns, n=st.integers(min_value=1, max_value=60))
def test_q_int_log_matches(N, n):
    p = quantum_parameter(N)
    assert qnum.q_int_log(p, n) == \
            pytest.approx(math.log(qnum.q_int(p, n)), rel=1e-12, abs=1e-12)


def test_q_int_overflow():
    p = quantum_parameter(3)
    with pytest.raises(exceptions.QuantumIntegerOverflowError):
        qnum.q_int(p, 1000)
    # The log variant stays finite.
    assert math.isfinite(qnum.q_int_log(p, 1000))


def test_q_int_log_zero():
    with pytest.raises(exceptions.BadParameterError):
        qnum.q_int_log(quantum_parameter(3), 0)


def test_caches_only_grow():
    p = quantum_parameter(5)
    qnum.q_int(p, 10)
    before = p.qint_cache
    qnum.q_int(p, 3)
    assert p.qint_cache == before
    qnum.q_int(p, 12)
    assert p.qint_cache[:len(before)] == before


@settings(max_examples=40)
@given(N=Ns, l=levels, m=levels)
def test_fusion_dimension_identity(N, l, m):
    p = quantum_parameter(N)
    total = sum(qnum.dim_irrep(p, t.k) for t in qnum.admissible_triples(l, m))
    product = qnum.dim_irrep(p, l) * qnum.dim_irrep(p, m)
    assert total == pytest.approx(product, rel=1e-9)


@pytest.mark.parametrize('k,l,m', [(1, 1, 1), (3, 1, 1), (0, 1, 2),
                                   (5, 1, 2), (-1, 0, 1)])
def test_non_admissible(k, l, m):
    with pytest.raises(exceptions.NonAdmissibleTripleError):
        AdmissibleTriple(k, l, m)


def test_admissible_triples_order():
    assert [tuple(t) for t in qnum.admissible_triples(0, 3)] == [(3, 0, 3)]
    assert [t.r for t in qnum.admissible_triples(3, 2)] == [0, 1, 2]


def test_triple_value_semantics():
    t = AdmissibleTriple(2, 2, 2)
    assert t == AdmissibleTriple(2, 2, 2)
    assert len(set([t, AdmissibleTriple(2, 2, 2)])) == 1
    assert t.as_dict() == {'k': 2, 'l': 2, 'm': 2, 'r': 1}
    assert AdmissibleTriple(4, 2, 2).is_highest_weight


def test_theta_reference_values():
    t = AdmissibleTriple(2, 2, 2)
    assert qnum.theta_net(quantum_parameter(3), t) == \
            pytest.approx(56.0 / 3.0, rel=REL_TOLERANCE)
    assert qnum.theta_net(quantum_parameter(4), t) == \
            pytest.approx(52.5, rel=REL_TOLERANCE)
    assert qnum.theta_net(quantum_parameter(3), AdmissibleTriple(1, 1, 2)) \
            == pytest.approx(8.0, rel=REL_TOLERANCE)


@settings(max_examples=40)
@given(N=Ns, l=levels, m=levels)
def test_theta_highest_weight(N, l, m):
    p = quantum_parameter(N)
    t = AdmissibleTriple(l + m, l, m)
    assert qnum.theta_net(p, t) == \
            pytest.approx(qnum.dim_irrep(p, l + m), rel=REL_TOLERANCE)
    assert qnum.max_schmidt_value(p, t) == pytest.approx(1.0)


@pytest.mark.parametrize('N', [3, 4, 7])
def test_theta_symmetric(N):
    p = quantum_parameter(N)
    for t in _triples(8):
        swapped = AdmissibleTriple(t.k, t.m, t.l)
        assert qnum.theta_net(p, t) == \
                pytest.approx(qnum.theta_net(p, swapped), rel=REL_TOLERANCE)


@settings(max_examples=30)
@given(N=Ns, l=levels)
def test_theta_contracted(N, l):
    p = quantum_parameter(N)
    assert qnum.theta_net(p, AdmissibleTriple(0, l, l)) == \
            pytest.approx(qnum.dim_irrep(p, l), rel=REL_TOLERANCE)


def test_rd_constant():
    assert qnum.rd_constant(quantum_parameter(3)) == \
            pytest.approx(1.4235, abs=1e-4)
    values = [qnum.rd_constant(quantum_parameter(N)) for N in range(3, 21)]
    assert all(a > b for a, b in zip(values, values[1:]))
    assert all(v > 1.0 for v in values)


def test_rd_constant_needs_deformation():
    with pytest.raises(exceptions.BadParameterError):
        qnum.rd_constant(quantum_parameter(2))


def test_rd_bound_reference():
    exact, coarse = qnum.rd_bound(quantum_parameter(3),
            AdmissibleTriple(1, 1, 2))
    assert exact == pytest.approx(0.375, rel=REL_TOLERANCE)
    assert coarse == pytest.approx(0.774, abs=1e-3)
    exact, coarse = qnum.rd_bound(quantum_parameter(3),
            AdmissibleTriple(2, 2, 2))
    assert exact == pytest.approx(3.0 / 7.0, rel=REL_TOLERANCE)


@pytest.mark.parametrize('N', [3, 4, 5, 8])
def test_rd_chain(N):
    p = quantum_parameter(N)
    for t in _triples(8):
        exact, coarse = qnum.rd_bound(p, t)
        middle = qnum.rd_intermediate_bound(p, t)
        assert exact <= middle * (1.0 + 1e-12)
        assert middle <= coarse * (1.0 + 1e-12)
        assert qnum.remark_upbound_check(p, t) >= 1.0 - 1e-10


def test_remark_upbound_reference():
    p = quantum_parameter(3)
    assert qnum.remark_upbound_check(p, AdmissibleTriple(1, 1, 2)) == \
            pytest.approx(9.0 / 8.0)
    assert qnum.remark_upbound_check(p, AdmissibleTriple(2, 2, 2)) == \
            pytest.approx(9.0 / 7.0)
    assert qnum.remark_upbound_check(p, AdmissibleTriple(3, 1, 2)) == \
            pytest.approx(1.0)


@settings(max_examples=50)
@given(N=Ns, r=st.integers(min_value=0, max_value=20))
def test_qd_inequality(N, r):
    lower, middle, upper = qnum.qd_inequality(quantum_parameter(N), r)
    assert lower <= middle * (1.0 + 1e-12)
    assert middle <= upper * (1.0 + 1e-12)


def test_qd_inequality_classical():
    lower, middle, upper = qnum.qd_inequality(quantum_parameter(2), 3)
    assert lower == 0.0
    assert middle == pytest.approx(0.25)
    assert upper == 1.0


def test_reciprocal_quantum_integer_below_q_power():
    p = quantum_parameter(3)
    for r in range(1, 6):
        lower, middle, upper = qnum.qd_inequality(p, r)
        assert middle < p.q ** r
        assert upper == p.q ** r


def test_relative_dimension_root_large_N():
    t = AdmissibleTriple(2, 2, 2)
    ratios = []
    for N in (10, 100, 1000):
        p = quantum_parameter(N)
        coarse = qnum.rd_constant(p) * p.q ** (t.r / 2.0)
        ratios.append(qnum.relative_dimension_root(p, t) / coarse)
    assert abs(ratios[-1] - 1.0) < abs(ratios[0] - 1.0)
    assert ratios[-1] == pytest.approx(1.0, abs=1e-2)


def test_saturation_count_and_mass():
    assert qnum.saturation_count(3, 1) == 1
    assert qnum.saturation_count(4, 2) == 6
    assert qnum.saturation_count(4, 0) == 0
    masses = [qnum.saturation_mass(quantum_parameter(N),
              AdmissibleTriple(0, 1, 1)) for N in range(3, 8)]
    for N, mass in zip(range(3, 8), masses):
        assert mass == pytest.approx((N - 2.0) / N)
    assert all(a < b for a, b in zip(masses, masses[1:]))
    assert masses[-1] > 0.7


# vim: set expandtab tabstop=8 shiftwidth=4 softtabstop=4 textwidth=79
