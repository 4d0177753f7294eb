# -*- Python -*-
# -*- coding: utf-8 -*-

'''wenzllab

Copyright (C) 2026
    wenzl-lab developers
    All rights reserved.
Licensed under the GNU Lesser General Public License version 3.
http://www.gnu.org/licenses/lgpl-3.0.en.html

Tests for the three-vertex intertwiners and the equivariant isometries.

'''


import numpy as np
import pytest

from conftest import case_id, cases
from wenzllab import exceptions
from wenzllab import vertex
from wenzllab.jones_wenzl import clear_cache, jw_projection, onb_of_irrep
from wenzllab.qnum import AdmissibleTriple, dim_irrep, q_int, \
                          quantum_parameter, theta_net
from wenzllab.tensor_core import TensorShape, TensorVector, basis_vector, \
                                 cup_vector


RESIDUAL_TOL = 1e-9


@pytest.mark.parametrize('case', cases(max_dim=4096), ids=case_id)
def test_theta_trace_matches_closed_form(case):
    p, t = case
    traced = vertex.theta_by_trace(vertex.three_vertex(p, t))
    assert traced == pytest.approx(theta_net(p, t), rel=1e-7)


def test_three_vertex_highest_weight_is_projection():
    p = quantum_parameter(3)
    a = vertex.three_vertex(p, AdmissibleTriple(3, 1, 2))
    assert np.allclose(a.op.data, jw_projection(p, 3).matrix, atol=1e-12)


@pytest.mark.parametrize('case', cases(Ns=(3, 4), max_dim=729), ids=case_id)
def test_vertex_norm_bound(case):
    p, t = case
    norm_sq, bound = vertex.vertex_norm_check(vertex.three_vertex(p, t))
    assert bound == q_int(p, t.r + 1)
    assert norm_sq <= bound * (1.0 + 1e-9)


@pytest.mark.parametrize('case', cases(max_dim=729), ids=case_id)
def test_isometry(case):
    p, t = case
    iso = vertex.isometry(p, t)
    assert iso.reduced.shape == (p.N ** (t.l + t.m),
                                 int(round(dim_irrep(p, t.k))))
    assert iso.theta_relative_error < 1e-7
    assert vertex.isometry_residual(iso) <= RESIDUAL_TOL
    assert vertex.range_residual(iso) <= RESIDUAL_TOL
    assert vertex.verify_equivariance_proxy(iso) <= RESIDUAL_TOL
    assert vertex.smallest_singular_value(iso) == pytest.approx(1.0,
            abs=1e-9)


def test_isometry_contracted_is_normalized_cup():
    p = quantum_parameter(4)
    iso = vertex.isometry(p, AdmissibleTriple(0, 1, 1))
    expected = cup_vector(p, 1).data / 2.0
    assert np.allclose(iso.apply([1.0]).data, expected, atol=1e-14)


def test_isometry_is_cached():
    p = quantum_parameter(3)
    t = AdmissibleTriple(2, 2, 2)
    assert vertex.isometry(p, t) is vertex.isometry(p, t)


def test_isometry_cache_follows_projection_cache():
    p = quantum_parameter(3)
    t = AdmissibleTriple(1, 1, 2)
    first = vertex.isometry(p, t)
    clear_cache()
    second = vertex.isometry(p, t)
    assert second is not first
    assert second.basis is onb_of_irrep(p, t.k)
    assert np.allclose(second.reduced, first.reduced)


def test_apply_adjoint():
    p = quantum_parameter(3)
    iso = vertex.isometry(p, AdmissibleTriple(1, 1, 2))
    rng = np.random.default_rng(0)
    coords = rng.standard_normal(iso.domain_dim)
    image = iso.apply(coords)
    assert image.legs == 3
    assert np.allclose(iso.adjoint(image), coords)
    assert image.norm == pytest.approx(np.linalg.norm(coords))
    # The ambient form agrees with the reduced one.
    ambient_xi = TensorVector(TensorShape(3, 1), iso.basis.columns.dot(coords))
    assert np.allclose(iso.apply_ambient(ambient_xi).data, image.data)
    assert np.allclose(iso.ambient_adjoint(image).data, ambient_xi.data)


def test_apply_shape_mismatch():
    p = quantum_parameter(3)
    iso = vertex.isometry(p, AdmissibleTriple(1, 1, 2))
    with pytest.raises(exceptions.ShapeMismatchError):
        iso.apply(np.ones(iso.domain_dim + 1))
    with pytest.raises(exceptions.ShapeMismatchError):
        iso.adjoint(basis_vector(TensorShape(3, 2), (1, 2)))


def test_isometry_above_cap():
    with pytest.raises(exceptions.DimensionCapError):
        vertex.isometry(quantum_parameter(3), AdmissibleTriple(4, 4, 4))


def test_isometry_classical_N():
    p = quantum_parameter(2)
    iso = vertex.isometry(p, AdmissibleTriple(2, 2, 2))
    assert vertex.isometry_residual(iso) <= RESIDUAL_TOL
    assert iso.domain_dim == 3


# vim: set expandtab tabstop=8 shiftwidth=4 softtabstop=4 textwidth=79
