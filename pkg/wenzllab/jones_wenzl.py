# -*- Python -*-
# -*- coding: utf-8 -*-

'''wenzllab

Copyright (C) 2026
    wenzl-lab developers
    All rights reserved.
Licensed under the GNU Lesser General Public License version 3.
http://www.gnu.org/licenses/lgpl-3.0.en.html

Jones-Wenzl projections p_k on (C^N)^{(x)k} and orthonormal bases of their
ranges H_k.

Projections are built with the Wenzl recursion

    p_k = E - ([k-1]_q / [k]_q) E (T_1 T_1^* (x) i^{(x)(k-2)}) E,
    E = i (x) p_{k-1},

starting from p_1 = i. Requesting p_k materializes p_1, ..., p_k once; the
results are kept in memory for the life of the process and, if the
environment variable named by JW_CACHE_ENV_VAR points at a directory, on
disk.

'''


import json
import logging
import os
import threading

import numpy as np
import scipy.linalg

from wenzllab import exceptions
from wenzllab import JW_CACHE_ENV_VAR
from wenzllab.qnum import dim_irrep
from wenzllab.tensor_core import TensorOperator, TensorShape, from_json


logger = logging.getLogger(__name__)

IDEMPOTENCE_TOL = 1e-9
SYMMETRY_TOL = 1e-12
TRACE_TOL = 1e-8
CAP_TOL = 1e-9
ORTHONORMALITY_TOL = 1e-10
GUARD_BAND = (0.25, 0.75)


##############################################################################
## Types

class JwProjection(object):
    '''The Jones-Wenzl projection p_k for a given N.'''
    def __init__(self, params, k, op):
        super(JwProjection, self).__init__()
        self._params = params
        self._k = k
        self._op = op

    def __repr__(self):
        return 'JwProjection(N={0}, k={1})'.format(self.N, self._k)

    @property
    def params(self):
        return self._params

    @property
    def N(self):
        return self._params.N

    @property
    def k(self):
        return self._k

    @property
    def op(self):
        '''The projection as a TensorOperator.'''
        return self._op

    @property
    def matrix(self):
        '''The N^k x N^k data matrix.'''
        return self._op.data

    @property
    def shape(self):
        return self._op.in_shape


class IrrepBasis(object):
    '''An orthonormal basis of H_k = range(p_k), stored as the columns of an
    N^k x [k+1]_q matrix.'''
    def __init__(self, params, k, columns):
        super(IrrepBasis, self).__init__()
        columns = np.array(columns, dtype=np.float64)
        columns.setflags(write=False)
        self._params = params
        self._k = k
        self._columns = columns

    def __repr__(self):
        return 'IrrepBasis(N={0}, k={1}, dim={2})'.format(self.N, self._k,
                self.dim)

    @property
    def params(self):
        return self._params

    @property
    def N(self):
        return self._params.N

    @property
    def k(self):
        return self._k

    @property
    def columns(self):
        return self._columns

    @property
    def dim(self):
        '''Dimension of H_k, the number of columns.'''
        return self._columns.shape[1]


class JwReport(object):
    '''Residuals of the four defining properties of a Jones-Wenzl projection.

    Each residual is compared against its tolerance; @ref ok is True when
    all four pass.

    '''
    def __init__(self, N, k, idempotence, symmetry, trace, expected_trace,
            cap_annihilation, rank):
        super(JwReport, self).__init__()
        self.N = N
        self.k = k
        self.idempotence = idempotence
        self.symmetry = symmetry
        self.trace = trace
        self.expected_trace = expected_trace
        self.trace_error = abs(trace - expected_trace) / expected_trace
        self.cap_annihilation = cap_annihilation
        self.rank = rank
        self.tolerances = {'idempotence': scaled_tolerance(IDEMPOTENCE_TOL,
                                N, k),
                           'symmetry': scaled_tolerance(SYMMETRY_TOL, N, k),
                           'trace': scaled_tolerance(TRACE_TOL, N, k),
                           'cap_annihilation': scaled_tolerance(CAP_TOL, N,
                                k)}

    @property
    def ok(self):
        return self.idempotence <= self.tolerances['idempotence'] and \
                self.symmetry <= self.tolerances['symmetry'] and \
                self.trace_error <= self.tolerances['trace'] and \
                self.cap_annihilation <= self.tolerances['cap_annihilation']

    def as_dict(self):
        result = {'N': self.N, 'k': self.k,
                  'residuals': {'idempotence': self.idempotence,
                                'symmetry': self.symmetry,
                                'trace_relative': self.trace_error,
                                'cap_annihilation': self.cap_annihilation},
                  'trace': self.trace,
                  'expected_trace': self.expected_trace,
                  'rank': self.rank,
                  'tolerances': self.tolerances,
                  'ok': self.ok}
        return result


def scaled_tolerance(base, N, k):
    '''Residual tolerances grow with the ambient dimension beyond k = 6.'''
    if k <= 6:
        return base
    return base + N ** k * np.finfo(np.float64).eps


##############################################################################
## Cache

class _ProjectionCache(object):
    def __init__(self):
        self._mutex = threading.RLock()
        self._projections = {}
        self._bases = {}

    def get(self, N, k):
        with self._mutex:
            return self._projections.get((N, k))

    def put(self, N, k, projection):
        with self._mutex:
            self._projections[(N, k)] = projection

    def get_basis(self, N, k):
        with self._mutex:
            return self._bases.get((N, k))

    def put_basis(self, N, k, basis):
        with self._mutex:
            self._bases[(N, k)] = basis

    def clear(self):
        with self._mutex:
            self._projections = {}
            self._bases = {}

    @property
    def mutex(self):
        return self._mutex


_cache = _ProjectionCache()
_clear_hooks = []


def on_clear_cache(hook):
    '''Run @ref hook whenever the in-memory cache is cleared.

    Caches of objects built from the projections register here.

    '''
    _clear_hooks.append(hook)


def clear_cache():
    '''Drop every projection and basis held in memory, and everything
    registered through on_clear_cache.

    The disk cache, if any, is left alone.

    '''
    _cache.clear()
    for hook in _clear_hooks:
        hook()
    logger.debug('Cleared the in-memory projection cache')


def _disk_path(N, k):
    directory = os.environ.get(JW_CACHE_ENV_VAR)
    if not directory:
        return None
    return os.path.join(directory, 'jw_N{0}_k{1}.json'.format(N, k))


def _load_from_disk(p, k):
    path = _disk_path(p.N, k)
    if path is None or not os.path.isfile(path):
        return None
    try:
        with open(path, 'r') as f:
            op = from_json(json.load(f))
    except (OSError, ValueError, KeyError, TypeError,
            exceptions.WenzlLabError) as e:
        logger.warning('Ignoring unreadable cache file %s: %s', path, e)
        return None
    if not isinstance(op, TensorOperator) or op.N != p.N or \
            op.in_shape.legs != k or not op.is_square:
        logger.warning('Ignoring mismatching cache file %s', path)
        return None
    logger.debug('Loaded p_%d for N=%d from %s', k, p.N, path)
    return JwProjection(p, k, op)


def _save_to_disk(projection):
    path = _disk_path(projection.N, projection.k)
    if path is None:
        return
    try:
        if not os.path.isdir(os.path.dirname(path)):
            os.makedirs(os.path.dirname(path))
        with open(path, 'w') as f:
            json.dump(projection.op.to_json(), f)
    except OSError as e:
        logger.warning('Could not write cache file %s: %s', path, e)


##############################################################################
## Construction

def _wenzl_step(p, previous, k):
    # One step of the recursion from the p_{k-1} matrix.
    N = p.N
    E = np.kron(np.eye(N), previous)
    # Columns of (i (x) p_{k-1})(T_1 (x) i^{(x)(k-2)}): the j-th is
    # sum_i e_i (x) p_{k-1}(e_i (x) e_j).
    EV = previous.reshape(N ** (k - 1), N, N ** (k - 2)).transpose(1, 0, 2)
    EV = EV.reshape(N ** k, N ** (k - 2))
    coeff = p.q_int(k - 1) / p.q_int(k)
    result = E - coeff * EV.dot(EV.T)
    return 0.5 * (result + result.T)


def jw_projection(p, k):
    '''The Jones-Wenzl projection p_k.

    @param p The QParams.
    @param k Level, at least 0. p_0 is the scalar 1.
    @raises BadParameterError, DimensionCapError

    >>> from wenzllab.qnum import quantum_parameter
    >>> p = quantum_parameter(3)
    >>> [round(jw_projection(p, k).op.trace(), 8) for k in (1, 2, 3)]
    [3.0, 8.0, 21.0]

    '''
    if isinstance(k, bool) or int(k) != k or k < 0:
        raise exceptions.BadParameterError('k', k)
    k = int(k)
    shape = TensorShape(p.N, k)
    cached = _cache.get(p.N, k)
    if cached is not None:
        return cached
    with _cache.mutex:
        # Find the highest level already available, then fill upwards.
        level = k
        found = None
        while level > 1:
            found = _cache.get(p.N, level) or _load_from_disk(p, level)
            if found is not None:
                _cache.put(p.N, level, found)
                break
            level -= 1
        if found is None:
            level = min(k, 1)
            found = JwProjection(p, level,
                    TensorOperator(TensorShape(p.N, level),
                        TensorShape(p.N, level), np.eye(p.N ** level)))
            _cache.put(p.N, level, found)
        current = found.matrix
        for step in range(level + 1, k + 1):
            step_shape = TensorShape(p.N, step)
            current = _wenzl_step(p, current, step)
            projection = JwProjection(p, step, TensorOperator(step_shape,
                step_shape, current))
            _cache.put(p.N, step, projection)
            _save_to_disk(projection)
            logger.debug('Built p_%d for N=%d', step, p.N)
        result = _cache.get(p.N, k)
    if result.shape != shape:
        raise exceptions.InvariantViolationError(
                'cached projection has shape {0!r}'.format(result.shape))
    return result


##############################################################################
## Verification

def cap_residual(matrix, N, k):
    '''max over 1 <= i <= k-1 of the largest entry of
    (i^{(x)(i-1)} (x) T_1^* (x) i^{(x)(k-i-1)}) matrix.'''
    worst = 0.0
    cols = matrix.shape[1]
    for i in range(1, k):
        blocks = matrix.reshape(N ** (i - 1), N, N, N ** (k - i - 1), cols)
        capped = np.einsum('abbcx->acx', blocks)
        worst = max(worst, float(np.max(np.abs(capped))))
    return worst


def verify_jw(jw):
    '''Measure how well a projection satisfies its defining properties.

    Reports, never raises.

    >>> from wenzllab.qnum import quantum_parameter
    >>> verify_jw(jw_projection(quantum_parameter(3), 2)).ok
    True

    '''
    P = np.asarray(jw.matrix)
    N, k = jw.N, jw.k
    idempotence = float(np.max(np.abs(P.dot(P) - P)))
    symmetry = float(np.max(np.abs(P - P.T)))
    trace = float(np.trace(P))
    expected = dim_irrep(jw.params, k)
    caps = cap_residual(P, N, k)
    rank = int(np.count_nonzero(scipy.linalg.eigvalsh(P) > 0.5))
    report = JwReport(N, k, idempotence, symmetry, trace, expected, caps,
            rank)
    if report.ok:
        logger.debug('p_%d for N=%d verified', k, N)
    else:
        logger.warning('p_%d for N=%d failed verification: %s', k, N,
                report.as_dict()['residuals'])
    return report


def jw_fixes(jw, v):
    '''The residual ||p_k v - v||.

    >>> from wenzllab.qnum import quantum_parameter
    >>> from wenzllab.tensor_core import alternating_vector
    >>> p = quantum_parameter(3)
    >>> eta = alternating_vector(TensorShape(3, 2), 1, 2)
    >>> jw_fixes(jw_projection(p, 2), eta) < 1e-12
    True

    '''
    return float(np.linalg.norm(jw.op.apply(v).data - v.data))


##############################################################################
## Irreducible subspaces

def onb_of_irrep(p, k):
    '''An orthonormal basis of H_k from the eigenvectors of p_k.

    @raises NumericalFailureError if an eigenvalue falls inside the guard
            band or the rank is not [k+1]_q.

    >>> from wenzllab.qnum import quantum_parameter
    >>> onb_of_irrep(quantum_parameter(3), 2).dim
    8

    '''
    cached = _cache.get_basis(p.N, k)
    if cached is not None:
        return cached
    jw = jw_projection(p, k)
    values, vectors = scipy.linalg.eigh(jw.matrix)
    lo, hi = GUARD_BAND
    stray = values[(values > lo) & (values < hi)]
    if stray.size:
        raise exceptions.NumericalFailureError(
                'eigenvalue {0!r} of p_{1} inside the guard band'.format(
                    float(stray[0]), k))
    keep = values > 0.5
    expected = int(round(dim_irrep(p, k)))
    if int(np.count_nonzero(keep)) != expected:
        raise exceptions.NumericalFailureError(
                'rank of p_{0} is {1}, expected {2}'.format(k,
                    int(np.count_nonzero(keep)), expected))
    basis = IrrepBasis(p, k, vectors[:, keep])
    _cache.put_basis(p.N, k, basis)
    logger.debug('Basis of H_%d for N=%d has %d vectors', k, p.N, expected)
    return basis


def range_projector(basis):
    '''The orthogonal projection columns * columns^T onto a basis' span.'''
    return basis.columns.dot(basis.columns.T)


def verify_basis(basis):
    '''Orthonormality and invariance residuals of an IrrepBasis.

    @return (max |B^T B - I|, max |p_k B - B|)

    '''
    B = basis.columns
    jw = jw_projection(basis.params, basis.k)
    orth = float(np.max(np.abs(B.T.dot(B) - np.eye(B.shape[1]))))
    fixed = float(np.max(np.abs(jw.matrix.dot(B) - B)))
    return orth, fixed


# vim: set expandtab tabstop=8 shiftwidth=4 softtabstop=4 textwidth=79
