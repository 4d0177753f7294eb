# -*- Python -*-
# -*- coding: utf-8 -*-

'''wenzllab

Copyright (C) 2026
    wenzl-lab developers
    All rights reserved.
Licensed under the GNU Lesser General Public License version 3.
http://www.gnu.org/licenses/lgpl-3.0.en.html

Tests for tensor shapes, vectors, operators and contractions.

'''


import json

from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays
import numpy as np
import pytest

from wenzllab import exceptions
from wenzllab import tensor_core as tc
from wenzllab.options import Options
from wenzllab.qnum import quantum_parameter


ABS_TOLERANCE = 1e-12

entries = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False)


def test_shape_dim():
    assert tc.TensorShape(4, 3).dim == 64
    assert tc.TensorShape(5, 0).dim == 1


def test_shape_cap():
    with pytest.raises(exceptions.DimensionCapError):
        tc.TensorShape(3, 9)
    with pytest.raises(exceptions.DimensionCapError):
        tc.TensorShape(3, 3, max_dim=26)
    assert tc.fits_cap(4, 6)
    assert not tc.fits_cap(4, 7)


def test_shape_cap_option(clean_options):
    Options().set_option('max_dim', 8)
    with pytest.raises(exceptions.DimensionCapError):
        tc.TensorShape(3, 2)


@pytest.mark.parametrize('N,legs', [(0, 1), (2, -1), (2.5, 1)])
def test_shape_bad(N, legs):
    with pytest.raises(exceptions.BadParameterError):
        tc.TensorShape(N, legs)


def test_vector_is_immutable():
    v = tc.basis_vector(tc.TensorShape(2, 2), (2, 1))
    with pytest.raises(ValueError):
        v.data[0] = 5.0


def test_vector_shape_mismatch():
    with pytest.raises(exceptions.ShapeMismatchError):
        tc.TensorVector(tc.TensorShape(2, 2), [1.0, 0.0])
    a = tc.basis_vector(tc.TensorShape(2, 1), (1,))
    b = tc.basis_vector(tc.TensorShape(3, 1), (1,))
    with pytest.raises(exceptions.ShapeMismatchError):
        a + b


@settings(max_examples=30)
@given(x=arrays(np.float64, (9,), elements=entries),
       y=arrays(np.float64, (9,), elements=entries))
def test_vector_arithmetic(x, y):
    shape = tc.TensorShape(3, 2)
    a = tc.TensorVector(shape, x)
    b = tc.TensorVector(shape, y)
    assert np.allclose((a + b).data, x + y)
    assert np.allclose((2 * a - b).data, 2 * x - y)
    assert a.inner(b) == pytest.approx(float(np.dot(x, y)), abs=1e-9)


def test_normalized_zero():
    with pytest.raises(exceptions.ZeroVectorError):
        tc.TensorVector(tc.TensorShape(2, 1), [0.0, 0.0]).normalized()


def test_basis_vector_order():
    v = tc.basis_vector(tc.TensorShape(3, 2), (2, 3))
    assert v.as_tensor()[1, 2] == 1.0
    assert v.data.sum() == 1.0
    with pytest.raises(exceptions.BadParameterError):
        tc.basis_vector(tc.TensorShape(3, 2), (0, 1))
    with pytest.raises(exceptions.BadParameterError):
        tc.basis_vector(tc.TensorShape(3, 2), (1,))


@pytest.mark.parametrize('N', [2, 3, 4])
@pytest.mark.parametrize('r', [0, 1, 2, 3])
def test_cup_vector(N, r):
    t = tc.cup_vector(quantum_parameter(N), r)
    assert t.legs == 2 * r
    assert t.norm ** 2 == pytest.approx(N ** r)
    # T_r pairs leg s with leg 2r + 1 - s.
    tensor = t.as_tensor()
    for index in np.ndindex(*tensor.shape):
        expected = all(index[s] == index[2 * r - 1 - s] for s in range(r))
        assert tensor[index] == (1.0 if expected else 0.0)


def test_alternating_vector():
    shape = tc.TensorShape(3, 4)
    v = tc.alternating_vector(shape, 2, 1)
    assert v.data.tolist() == tc.basis_vector(shape, (2, 1, 2, 1)).data.tolist()
    with pytest.raises(exceptions.BadParameterError):
        tc.alternating_vector(shape, 1, 1)
    with pytest.raises(exceptions.BadParameterError):
        tc.alternating_vector(shape, 1, 4)


def test_operator_compose_and_adjoint():
    rng = np.random.default_rng(1)
    s1, s2 = tc.TensorShape(2, 1), tc.TensorShape(2, 2)
    a = tc.TensorOperator(s1, s2, rng.standard_normal((4, 2)))
    b = tc.TensorOperator(s2, s1, rng.standard_normal((2, 4)))
    ab = b.compose(a)
    assert ab.in_shape == s1 and ab.out_shape == s1
    assert np.allclose(ab.data, b.data.dot(a.data))
    assert np.allclose(a.adjoint().data, a.data.T)
    with pytest.raises(exceptions.ShapeMismatchError):
        a.compose(a)
    with pytest.raises(exceptions.ShapeMismatchError):
        a.trace()


def test_operator_bad_data():
    with pytest.raises(exceptions.ShapeMismatchError):
        tc.TensorOperator(tc.TensorShape(2, 1), tc.TensorShape(2, 1),
                np.eye(3))


def test_identity_operator():
    shape = tc.TensorShape(3, 2)
    v = tc.basis_vector(shape, (3, 1))
    assert tc.identity_operator(shape).apply(v).data.tolist() == \
            v.data.tolist()
    assert tc.identity_operator(shape).trace() == 9.0


def test_json_round_trip_operator():
    rng = np.random.default_rng(2)
    op = tc.TensorOperator(tc.TensorShape(2, 2), tc.TensorShape(2, 1),
            rng.standard_normal((2, 4)))
    again = tc.from_json(json.loads(json.dumps(op.to_json())))
    assert again.in_shape == op.in_shape and again.out_shape == op.out_shape
    assert again.data.tolist() == op.data.tolist()


def test_from_json_bad_kind():
    with pytest.raises(exceptions.BadParameterError):
        tc.from_json({'kind': 'scalar', 'N': 2})


def test_tensor_product():
    a = tc.basis_vector(tc.TensorShape(3, 1), (2,))
    b = tc.basis_vector(tc.TensorShape(3, 2), (1, 3))
    ab = tc.tensor_product(a, b)
    assert ab.legs == 3
    assert ab.data.tolist() == \
            tc.basis_vector(tc.TensorShape(3, 3), (2, 1, 3)).data.tolist()
    with pytest.raises(exceptions.ShapeMismatchError):
        tc.tensor_product(a, tc.identity_operator(tc.TensorShape(3, 1)))


@settings(max_examples=25)
@given(x=arrays(np.float64, (4, 6), elements=entries))
def test_partial_traces(x):
    rho = x.dot(x.T)
    first = tc.partial_trace_array(rho, 2, 2, tc.TRACE_FIRST)
    last = tc.partial_trace_array(rho, 2, 2, tc.TRACE_LAST)
    assert np.trace(first) == pytest.approx(np.trace(rho), abs=1e-8)
    assert np.trace(last) == pytest.approx(np.trace(rho), abs=1e-8)


def test_partial_trace_of_product():
    rng = np.random.default_rng(3)
    a = rng.standard_normal((3, 3))
    b = rng.standard_normal((9, 9))
    shape = tc.TensorShape(3, 3)
    op = tc.TensorOperator(shape, shape, np.kron(a, b))
    assert np.allclose(tc.partial_trace(op, 1, tc.TRACE_FIRST).data,
            np.trace(a) * b)
    assert np.allclose(tc.partial_trace(op, 1, tc.TRACE_LAST).data,
            np.trace(b) * a)
    with pytest.raises(exceptions.BadSplitError):
        tc.partial_trace(op, 4, tc.TRACE_FIRST)
    with pytest.raises(exceptions.BadParameterError):
        tc.partial_trace_array(op.data, 3, 9, 'middle')


def test_matricize_norm():
    rng = np.random.default_rng(4)
    v = tc.TensorVector(tc.TensorShape(2, 4), rng.standard_normal(16))
    for split in range(5):
        M = tc.matricize(v, split)
        assert M.shape == (2 ** split, 2 ** (4 - split))
        assert np.linalg.norm(M) == pytest.approx(v.norm)
    with pytest.raises(exceptions.BadSplitError):
        tc.matricize(v, 5)


@pytest.mark.parametrize('left,r,right', [(0, 1, 0), (1, 1, 0), (0, 2, 1),
                                          (1, 1, 1), (2, 0, 1)])
def test_insert_cups_matches_kron(left, r, right):
    N = 2
    p = quantum_parameter(N)
    rng = np.random.default_rng(5)
    x = rng.standard_normal((N ** (left + right), 3))
    cup = tc.cup_vector(p, r).data.reshape(-1, 1)
    embed = np.kron(np.kron(np.eye(N ** left), cup), np.eye(N ** right))
    assert np.allclose(tc.insert_cups(x, N, left, r, right), embed.dot(x))


def test_kron_apply():
    rng = np.random.default_rng(6)
    a = rng.standard_normal((3, 3))
    b = rng.standard_normal((9, 9))
    x = rng.standard_normal((27, 4))
    assert np.allclose(tc.kron_apply(a, b, x), np.kron(a, b).dot(x))


# vim: set expandtab tabstop=8 shiftwidth=4 softtabstop=4 textwidth=79
