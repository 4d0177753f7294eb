# -*- Python -*-
# -*- coding: utf-8 -*-

'''wenzllab

Copyright (C) 2026
    wenzl-lab developers
    All rights reserved.
Licensed under the GNU Lesser General Public License version 3.
http://www.gnu.org/licenses/lgpl-3.0.en.html

Three-vertex intertwiners A_k^{l,m} : H_k -> H_l (x) H_m and the
equivariant isometries obtained by normalizing them with the theta-net.

'''


import functools
import logging
import math

import numpy as np
import scipy.linalg

from wenzllab import exceptions
from wenzllab.jones_wenzl import jw_projection, on_clear_cache, onb_of_irrep
from wenzllab.qnum import dim_irrep, q_int, theta_net
from wenzllab.tensor_core import TensorOperator, TensorShape, TensorVector, \
                                 insert_cups, kron_apply


logger = logging.getLogger(__name__)

THETA_AGREEMENT_TOL = 1e-6


##############################################################################
## Three-vertex

class ThreeVertex(object):
    '''The canonical intertwiner
    A = (p_l (x) p_m)(i^{(x)(l-r)} (x) T_r (x) i^{(x)(m-r)}) p_k.'''
    def __init__(self, params, triple, op):
        super(ThreeVertex, self).__init__()
        self._params = params
        self._triple = triple
        self._op = op

    def __repr__(self):
        return 'ThreeVertex(N={0}, {1!r})'.format(self._params.N,
                self._triple)

    @property
    def params(self):
        return self._params

    @property
    def triple(self):
        return self._triple

    @property
    def op(self):
        '''TensorOperator from k legs to l + m legs.'''
        return self._op


def _check_shapes(p, t):
    # Raises DimensionCapError before anything is built.
    TensorShape(p.N, t.k)
    TensorShape(p.N, t.l + t.m)


def three_vertex(p, t):
    '''Build A_k^{l,m} as a dense operator.

    @raises DimensionCapError

    >>> from wenzllab.qnum import quantum_parameter, AdmissibleTriple
    >>> a = three_vertex(quantum_parameter(3), AdmissibleTriple(0, 1, 1))
    >>> a.op.data.ravel().tolist() == np.eye(3).ravel().tolist()
    True

    '''
    _check_shapes(p, t)
    N, r = p.N, t.r
    pk = jw_projection(p, t.k).matrix
    cupped = insert_cups(pk, N, t.l - r, r, t.m - r)
    data = kron_apply(jw_projection(p, t.l).matrix,
            jw_projection(p, t.m).matrix, cupped)
    op = TensorOperator(TensorShape(N, t.k), TensorShape(N, t.l + t.m), data)
    return ThreeVertex(p, t, op)


def theta_by_trace(v):
    '''The theta-net as Tr(A^* A), the squared Frobenius norm of A.

    >>> from wenzllab.qnum import quantum_parameter, AdmissibleTriple
    >>> p = quantum_parameter(3)
    >>> round(theta_by_trace(three_vertex(p, AdmissibleTriple(2, 1, 1))), 8)
    8.0

    '''
    data = v.op.data
    return float(np.sum(data * data))


def vertex_norm_check(v):
    '''Operator norm bound ||A||^2 <= [r+1]_q.

    @return (||A||^2, [r+1]_q)

    '''
    top = scipy.linalg.svdvals(v.op.data)[0]
    return float(top * top), q_int(v.params, v.triple.r + 1)


##############################################################################
## Isometry

class EquivariantIsometry(object):
    '''alpha = ([k+1]_q / theta_q(k,l,m))^{1/2} A_k^{l,m}.

    The isometry is held in two forms: the ambient operator on k legs, and
    the reduced matrix whose columns are the images of the IrrepBasis of
    H_k. Inputs to apply() and outputs of adjoint() are coordinates in that
    basis.

    '''
    def __init__(self, params, triple, ambient, reduced, basis, theta_closed,
            theta_trace):
        super(EquivariantIsometry, self).__init__()
        reduced = np.array(reduced, dtype=np.float64)
        reduced.setflags(write=False)
        self._params = params
        self._triple = triple
        self._ambient = ambient
        self._reduced = reduced
        self._basis = basis
        self._theta_closed = theta_closed
        self._theta_trace = theta_trace

    def __repr__(self):
        return 'EquivariantIsometry(N={0}, {1!r})'.format(self._params.N,
                self._triple)

    def apply(self, coords):
        '''Image of a vector of H_k given in IrrepBasis coordinates.'''
        coords = np.ravel(np.asarray(coords, dtype=np.float64))
        if coords.size != self.domain_dim:
            raise exceptions.ShapeMismatchError(coords.size,
                    self.domain_dim)
        return TensorVector(self._ambient.out_shape, self._reduced.dot(coords))

    def adjoint(self, v):
        '''alpha^* v in IrrepBasis coordinates.'''
        if v.shape != self._ambient.out_shape:
            raise exceptions.ShapeMismatchError(v.shape,
                    self._ambient.out_shape)
        return self._reduced.T.dot(v.data)

    def ambient_adjoint(self, v):
        '''alpha^* v as a vector on k legs.'''
        return self._ambient.adjoint().apply(v)

    def apply_ambient(self, v):
        '''alpha v for v given on k legs.'''
        return self._ambient.apply(v)

    @property
    def params(self):
        return self._params

    @property
    def triple(self):
        return self._triple

    @property
    def ambient(self):
        return self._ambient

    @property
    def reduced(self):
        '''N^(l+m) x [k+1]_q matrix.'''
        return self._reduced

    @property
    def basis(self):
        return self._basis

    @property
    def domain_dim(self):
        return self._reduced.shape[1]

    @property
    def theta_closed(self):
        return self._theta_closed

    @property
    def theta_trace(self):
        return self._theta_trace

    @property
    def theta_relative_error(self):
        return abs(self._theta_trace - self._theta_closed) / self._theta_closed


@functools.lru_cache(maxsize=8)
def _build_isometry(p, t):
    vertex = three_vertex(p, t)
    closed = theta_net(p, t)
    traced = theta_by_trace(vertex)
    if abs(traced - closed) > THETA_AGREEMENT_TOL * closed:
        raise exceptions.InvariantViolationError(
                'theta-net of {0!r} at N={1}: closed form {2!r}, trace '
                '{3!r}'.format(t, p.N, closed, traced))
    scale = math.sqrt(dim_irrep(p, t.k) / closed)
    ambient = TensorOperator(vertex.op.in_shape, vertex.op.out_shape,
            scale * vertex.op.data)
    basis = onb_of_irrep(p, t.k)
    reduced = ambient.data.dot(basis.columns)
    logger.debug('Built isometry for %r at N=%d, theta %.12g', t, p.N,
            closed)
    return EquivariantIsometry(p, t, ambient, reduced, basis, closed, traced)


on_clear_cache(_build_isometry.cache_clear)


def isometry(p, t):
    '''The equivariant isometry alpha_k^{l,m}.

    Isometries are cached per (N, triple).

    @raises DimensionCapError
    @raises InvariantViolationError if the theta-net closed form and the
            trace of A^* A disagree by more than 1e-6 relative.

    >>> from wenzllab.qnum import quantum_parameter, AdmissibleTriple
    >>> iso = isometry(quantum_parameter(3), AdmissibleTriple(0, 1, 1))
    >>> np.allclose(iso.reduced.ravel(), np.eye(3).ravel() / np.sqrt(3))
    True

    '''
    _check_shapes(p, t)
    return _build_isometry(p, t)


def isometry_residual(iso):
    '''max |alpha^* alpha - i| on H_k.'''
    R = iso.reduced
    return float(np.max(np.abs(R.T.dot(R) - np.eye(R.shape[1]))))


def range_residual(iso):
    '''max |(p_l (x) p_m) alpha - alpha|.'''
    p, t = iso.params, iso.triple
    R = iso.reduced
    projected = kron_apply(jw_projection(p, t.l).matrix,
            jw_projection(p, t.m).matrix, R)
    return float(np.max(np.abs(projected - R)))


def verify_equivariance_proxy(iso):
    '''Check that alpha intertwines the Jones-Wenzl projections.

    @return max of |(p_l (x) p_m) alpha - alpha| and |alpha p_k - alpha|.

    '''
    A = iso.ambient.data
    absorbed = A.dot(jw_projection(iso.params, iso.triple.k).matrix)
    residual = max(range_residual(iso), float(np.max(np.abs(absorbed - A))))
    logger.debug('Equivariance proxy residual for %r: %.3g', iso.triple,
            residual)
    return residual


def smallest_singular_value(iso):
    '''Smallest singular value of the reduced matrix; 1 for an isometry.'''
    return float(scipy.linalg.svdvals(iso.reduced)[-1])


# vim: set expandtab tabstop=8 shiftwidth=4 softtabstop=4 textwidth=79
