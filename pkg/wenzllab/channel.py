# -*- Python -*-
# -*- coding: utf-8 -*-

'''wenzllab

Copyright (C) 2026
    wenzl-lab developers
    All rights reserved.
Licensed under the GNU Lesser General Public License version 3.
http://www.gnu.org/licenses/lgpl-3.0.en.html

Quantum channels built from the equivariant isometries.

Compressing alpha rho alpha^* onto either tensor factor gives a
complementary pair of channels H_k -> H_m and H_k -> H_l. Their 1 -> inf
norm is [k+1]_q / theta_q(k,l,m), which brackets the minimum output entropy.
The maps Phi_t with Choi matrix (p_l (x) p_m) - t alpha alpha^* are
d-positive exactly up to t = theta / (d [k+1]).

Input states are given in IrrepBasis coordinates of H_k; outputs and Choi
matrices live on the ambient tensor legs.

'''


import concurrent.futures
import logging
import math

import numpy as np
import scipy.linalg

from wenzllab import exceptions
from wenzllab.entangle import max_schmidt_optimizer, random_unit_coords, \
                              renyi_entropy, saturation_witness, \
                              spectrum_entropy
from wenzllab.jones_wenzl import jw_projection, onb_of_irrep
from wenzllab.options import Options, option_or
from wenzllab.qnum import dim_irrep_log, max_schmidt_value, qd_inequality, \
                          rd_constant, saturation_count, theta_net_log
from wenzllab.tensor_core import TRACE_FIRST, TRACE_LAST, TensorOperator, \
                                 TensorShape, alternating_vector, kron_apply, \
                                 partial_trace_array
from wenzllab.utils import rebase_log, spawn_rngs
from wenzllab.vertex import isometry


logger = logging.getLogger(__name__)

STATE_TOL = 1e-9
NORM_TOL = 1e-6
BRACKET_TOL = 1e-8
WITNESS_TOL = 1e-8
PLATEAU_TOL = 1e-8


##############################################################################
## States

def _check_state(rho, tol):
    rho = np.asarray(rho, dtype=np.float64)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise exceptions.NotPositiveError(
                'shape {0} is not square'.format(rho.shape))
    if np.max(np.abs(rho - rho.T)) > tol:
        raise exceptions.NotPositiveError('matrix is not symmetric')
    values = scipy.linalg.eigvalsh(rho)
    if values[0] < -tol:
        raise exceptions.NotPositiveError(
                'smallest eigenvalue {0!r}'.format(float(values[0])))
    if abs(values.sum() - 1.0) > tol:
        raise exceptions.NotPositiveError(
                'trace {0!r}'.format(float(values.sum())))
    return rho, values


def von_neumann_entropy(rho, base=None):
    '''-Tr rho log rho for a state.

    @raises NotPositiveError if rho is not PSD with unit trace.

    >>> round(von_neumann_entropy(np.eye(3) / 3), 12) == round(math.log(3), 12)
    True
    >>> round(von_neumann_entropy(np.diag([0.5, 0.5, 0.0]), base=2), 12)
    1.0

    '''
    if isinstance(rho, TensorOperator):
        rho = rho.data
    rho, values = _check_state(rho, Options().get_option('psd_tol'))
    return spectrum_entropy(values, base)


def state_renyi_entropy(rho, alpha, base=None):
    '''Renyi entropy of order alpha of a state.'''
    if isinstance(rho, TensorOperator):
        rho = rho.data
    rho, values = _check_state(rho, Options().get_option('psd_tol'))
    return renyi_entropy(values, alpha, base)


def pure_state(coords):
    '''|x><x| for a unit vector of coordinates.'''
    coords = np.ravel(np.asarray(coords, dtype=np.float64))
    coords = coords / np.linalg.norm(coords)
    return np.outer(coords, coords)


##############################################################################
## Channels

class EquivariantChannel(object):
    '''One of the two channels rho -> Tr_l(alpha rho alpha^*) (direction
    TRACE_FIRST, output on H_m) and rho -> Tr_m(alpha rho alpha^*)
    (direction TRACE_LAST, output on H_l).'''
    def __init__(self, iso, direction):
        super(EquivariantChannel, self).__init__()
        if direction not in (TRACE_FIRST, TRACE_LAST):
            raise exceptions.BadParameterError('direction', direction)
        self._iso = iso
        self._direction = direction

    def __repr__(self):
        return 'EquivariantChannel(N={0}, {1!r}, direction={2})'.format(
                self.params.N, self.triple, self._direction)

    @property
    def iso(self):
        return self._iso

    @property
    def params(self):
        return self._iso.params

    @property
    def triple(self):
        return self._iso.triple

    @property
    def direction(self):
        return self._direction

    @property
    def input_dim(self):
        return self._iso.domain_dim

    @property
    def output_legs(self):
        if self._direction == TRACE_FIRST:
            return self.triple.m
        return self.triple.l


def equivariant_channel(p, t, direction=TRACE_FIRST):
    '''Build the channel of a triple tracing out the given side.'''
    return EquivariantChannel(isometry(p, t), direction)


def channel_apply(ch, rho):
    '''Apply a channel to a state given in IrrepBasis coordinates of H_k.

    @return TensorOperator on the kept legs.
    @raises NotPositiveError for inputs that are not states.
    @raises InvariantViolationError if the output is not a state.

    >>> from wenzllab.qnum import quantum_parameter, AdmissibleTriple
    >>> ch = equivariant_channel(quantum_parameter(3), AdmissibleTriple(0, 1, 1))
    >>> np.allclose(channel_apply(ch, np.eye(1)).data, np.eye(3) / 3)
    True

    '''
    psd_tol = Options().get_option('psd_tol')
    rho, values = _check_state(rho, psd_tol)
    if rho.shape[0] != ch.input_dim:
        raise exceptions.ShapeMismatchError(rho.shape[0], ch.input_dim)
    t, N = ch.triple, ch.params.N
    R = ch.iso.reduced
    full = R.dot(rho).dot(R.T)
    out = partial_trace_array(full, N ** t.l, N ** t.m, ch.direction)
    out = 0.5 * (out + out.T)
    out_values = scipy.linalg.eigvalsh(out)
    if out_values[0] < -STATE_TOL or abs(out_values.sum() - 1.0) > STATE_TOL:
        raise exceptions.InvariantViolationError(
                'channel output has trace {0!r} and smallest eigenvalue '
                '{1!r}'.format(float(out_values.sum()), float(out_values[0])))
    shape = TensorShape(N, ch.output_legs)
    return TensorOperator(shape, shape, out)


##############################################################################
## Norms and entropy brackets

class ChannelNormReport(object):
    '''The 1 -> inf norm found by optimization, with its closed form and the
    q-power bracket around it.'''
    def __init__(self, params, triple, value, exact, lower, upper, converged):
        super(ChannelNormReport, self).__init__()
        self.N = params.N
        self.triple = triple
        self.value = value
        self.exact = exact
        self.lower = lower
        self.upper = upper
        self.converged = converged

    @property
    def relative_error(self):
        return abs(self.value - self.exact) / self.exact

    @property
    def attained(self):
        return self.relative_error <= NORM_TOL

    def as_dict(self):
        return {'N': self.N, 'triple': self.triple.as_dict(),
                'value': self.value,
                'bounds': {'rd_exact': self.exact,
                           'q_power_lower': self.lower,
                           'rd_coarse': self.upper},
                'residual': self.value - self.exact,
                'relative_error': self.relative_error,
                'attained': self.attained,
                'converged': self.converged}


def _q_bracket(p, t):
    if p.N < 3:
        return None, None
    return qd_inequality(p, t.r)[0], rd_constant(p) ** 2 * p.q ** t.r


def channel_norm_1_to_inf(ch, restarts=None, seed=None):
    '''sup over pure inputs of the largest output eigenvalue.

    Both channels of a pair share the value, the largest Schmidt
    coefficient reachable in alpha(H_k).

    @raises InvariantViolationError if the optimizer exceeds the closed form.

    '''
    p, t = ch.params, ch.triple
    result = max_schmidt_optimizer(p, t, restarts=restarts, seed=seed)
    value = result.value ** 2
    exact = max_schmidt_value(p, t)
    lower, upper = _q_bracket(p, t)
    if value > exact * (1.0 + BRACKET_TOL):
        raise exceptions.InvariantViolationError(
                'channel norm {0!r} above [k+1]/theta {1!r} for {2!r}'.format(
                    value, exact, t))
    report = ChannelNormReport(p, t, value, exact, lower, upper,
            result.converged)
    if not report.attained:
        logger.warning('Channel norm for %r reached %.12g of %.12g', t, value,
                exact)
    return report


class MoeBracket(object):
    '''Lower and upper estimates of the minimum output entropy.'''
    def __init__(self, params, triple, lower, upper, coarse_lower, samples,
            base):
        super(MoeBracket, self).__init__()
        self.N = params.N
        self.triple = triple
        self.lower = lower
        self.upper = upper
        self.coarse_lower = coarse_lower
        self.samples = samples
        self.base = base

    @property
    def gap(self):
        return self.upper - self.lower

    def as_dict(self):
        return {'N': self.N, 'triple': self.triple.as_dict(),
                'lower': self.lower, 'upper': self.upper,
                'coarse_lower': self.coarse_lower, 'gap': self.gap,
                'samples': self.samples, 'log_base': str(self.base)}


def _output_entropy(iso, coords, base):
    # The output spectrum of either channel on a pure input is the Schmidt
    # spectrum of alpha(x).
    t, N = iso.triple, iso.params.N
    M = iso.reduced.dot(coords).reshape(N ** t.l, N ** t.m)
    sigma = scipy.linalg.svdvals(M)
    return spectrum_entropy(sigma * sigma, base)


def moe_bracket(ch, samples=None, restarts=None, seed=None, base=None):
    '''Bracket the minimum output entropy of a channel.

    The lower end is log(theta/[k+1]); the upper end is the smallest output
    entropy seen over random pure inputs and the input eta_k(1,2).

    @raises InvariantViolationError if lower > upper or lower < coarse_lower.

    '''
    p, t = ch.params, ch.triple
    samples = option_or(samples, 'samples')
    base = option_or(base, 'log_base')
    iso = ch.iso
    lower = rebase_log(theta_net_log(p, t) - dim_irrep_log(p, t.k), base)
    if p.N >= 3:
        coarse_lower = rebase_log(-t.r * math.log(p.q) -
                2.0 * math.log(rd_constant(p)), base)
    else:
        coarse_lower = None
    rng = np.random.default_rng(seed)
    candidates = [iso.basis.columns.T.dot(_alternating_input(p, t))]
    coords = random_unit_coords(rng, iso.domain_dim, samples)
    candidates.extend(coords[:, ii] for ii in range(samples))
    if restarts:
        optimized = max_schmidt_optimizer(p, t, restarts=restarts, seed=seed)
        candidates.append(optimized.xi)
    upper = min(_output_entropy(iso, x, base) for x in candidates)
    bracket = MoeBracket(p, t, lower, upper, coarse_lower, samples, base)
    if lower > upper + BRACKET_TOL:
        raise exceptions.InvariantViolationError(
                'entropy lower bound {0!r} above sampled {1!r} for {2!r}'.format(
                    lower, upper, t))
    if coarse_lower is not None and lower < coarse_lower - BRACKET_TOL:
        raise exceptions.InvariantViolationError(
                'entropy lower bound {0!r} below coarse bound {1!r}'.format(
                    lower, coarse_lower))
    logger.info('MOE bracket for %r at N=%d: [%.12g, %.12g]', t, p.N, lower,
            upper)
    return bracket


def _alternating_input(p, t):
    return alternating_vector(TensorShape(p.N, t.k), 1, 2).data


##############################################################################
## Choi matrices and d-positivity

def choi_matrix(p, t, scale):
    '''C = (p_l (x) p_m) - scale alpha alpha^* on l + m legs.'''
    iso = isometry(p, t)
    R = iso.reduced
    P = np.kron(jw_projection(p, t.l).matrix, jw_projection(p, t.m).matrix)
    C = P - scale * R.dot(R.T)
    shape = iso.ambient.out_shape
    return TensorOperator(shape, shape, 0.5 * (C + C.T))


def d_positivity_threshold(p, t, d):
    '''theta_q(k,l,m) / (d [k+1]_q), the largest scale at which Phi_t is
    d-positive.

    >>> from wenzllab.qnum import quantum_parameter, AdmissibleTriple
    >>> p = quantum_parameter(3)
    >>> [round(d_positivity_threshold(p, AdmissibleTriple(0, 1, 1), d), 12)
    ...  for d in (1, 2)]
    [3.0, 1.5]

    '''
    if isinstance(d, bool) or int(d) != d or d < 1:
        raise exceptions.BadParameterError('d', d)
    return 1.0 / (d * max_schmidt_value(p, t))


def separating_scale(p, t, d):
    '''Scales at which Phi_t is d-positive but not (d+1)-positive.

    @return (low, high) meaning low < scale <= high, or None if empty.

    '''
    low = max(1.0, d_positivity_threshold(p, t, d + 1))
    high = d_positivity_threshold(p, t, d)
    if low >= high:
        return None
    return low, high


def threshold_floor(p, t, d):
    '''C(q)^-2 q^-r / d, a lower bound on the d-positivity threshold.'''
    if isinstance(d, bool) or int(d) != d or d < 1:
        raise exceptions.BadParameterError('d', d)
    return 1.0 / (rd_constant(p) ** 2 * p.q ** t.r * d)


def choi_map_apply(p, t, scale, X):
    '''Phi_t(X) = Tr_l[(X^T (x) i) C] for X on the l legs.

    @return N^m x N^m array.

    '''
    C = choi_matrix(p, t, scale).data
    N = p.N
    X = np.asarray(X, dtype=np.float64)
    if X.shape != (N ** t.l, N ** t.l):
        raise exceptions.ShapeMismatchError(X.shape, (N ** t.l, N ** t.l))
    lifted = np.kron(X.T, np.eye(N ** t.m)).dot(C)
    return partial_trace_array(lifted, N ** t.l, N ** t.m, TRACE_FIRST)


class ChoiReport(object):
    '''The Choi quadratic form at the rank-d witness and at random
    Schmidt-rank-d vectors.'''
    def __init__(self, params, triple, scale, d, threshold, witness_value,
            predicted, sampled_min, samples, family_size, witness_kind):
        super(ChoiReport, self).__init__()
        self.N = params.N
        self.triple = triple
        self.scale = scale
        self.d = d
        self.threshold = threshold
        self.witness_value = witness_value
        self.predicted = predicted
        self.sampled_min = sampled_min
        self.samples = samples
        self.family_size = family_size
        self.witness_kind = witness_kind
        self.predicted_floor = predicted / d

    @property
    def d_positive(self):
        '''Whether the scale lies at or below the threshold.'''
        return self.scale <= self.threshold

    @property
    def sampling_consistent(self):
        '''Sampled values never dropped below the guaranteed floor.'''
        return self.sampled_min is None or \
                self.sampled_min >= self.predicted_floor - 1e-6

    def as_dict(self):
        return {'N': self.N, 'triple': self.triple.as_dict(),
                'scale': self.scale, 'd': self.d,
                'threshold': self.threshold,
                'witness_value': self.witness_value,
                'predicted_witness_value': self.predicted,
                'residual': self.witness_value - self.predicted,
                'predicted_floor': self.predicted_floor,
                'sampled_min': self.sampled_min,
                'samples': self.samples,
                'family_size': self.family_size,
                'witness_kind': self.witness_kind,
                'd_positive': self.d_positive,
                'sampling_consistent': self.sampling_consistent}


def _choi_form(R, pl, pm, x, scale):
    # <C x | x> for C = (p_l (x) p_m) - scale R R^T.
    projected = kron_apply(pl, pm, x.reshape(-1, 1))[:, 0]
    image = R.T.dot(x)
    return float(x.dot(projected) - scale * image.dot(image))


def _rank_d_sample(rng, Bl, Bm, d):
    # A unit vector sum_i c_i eta_i (x) zeta_i with orthonormal eta_i in H_l
    # and zeta_i in H_m.
    d = min(d, Bl.shape[1], Bm.shape[1])
    etas = scipy.linalg.qr(Bl.dot(rng.standard_normal((Bl.shape[1], d))),
            mode='economic')[0]
    zetas = scipy.linalg.qr(Bm.dot(rng.standard_normal((Bm.shape[1], d))),
            mode='economic')[0]
    weights = rng.standard_normal(d)
    x = np.einsum('i,ai,bi->ab', weights, etas, zetas).ravel()
    return x / np.linalg.norm(x)


def _rank_d_witness(p, t, iso, d):
    # sum_{i <= d} eta_i (x) zeta_i from the witness family when it is large
    # enough, otherwise from the leading Schmidt pairs of alpha(eta_k(1,2))
    # if its top plateau has at least d entries.
    family_size = saturation_count(p.N, t.r) if p.N >= 3 else 0
    if d <= family_size:
        witness = saturation_witness(p, t)
        x = np.zeros(iso.reduced.shape[0])
        for eta, zeta in zip(witness.eta_family[:d], witness.zeta_family[:d]):
            x += np.kron(eta.data, zeta.data)
        return x, 'family', family_size
    N = p.N
    image = iso.apply_ambient(alternating_vector(TensorShape(N, t.k), 1, 2))
    M = image.data.reshape(N ** t.l, N ** t.m)
    U, sigma, Vt = scipy.linalg.svd(M, full_matrices=False)
    exact = max_schmidt_value(p, t)
    plateau = int(np.count_nonzero(np.abs(sigma * sigma - exact) <=
                                   PLATEAU_TOL * exact))
    if d > plateau:
        raise exceptions.WitnessUnavailableError(d, max(family_size, plateau))
    x = np.einsum('ai,bi->ab', U[:, :d], Vt[:d].T).ravel()
    return x, 'schmidt', family_size


def choi_witness_value(p, t, d, scale, samples=None, seed=None,
        workers=None):
    '''Evaluate the Choi quadratic form at a rank-d witness and at random
    Schmidt-rank-d unit vectors.

    The witness is x = sum_{i <= d} eta_i (x) zeta_i over the first d members
    of the saturation family. When the family is smaller than d but the
    Schmidt spectrum of alpha(eta_k(1,2)) has a top plateau of at least d
    values, the leading d Schmidt pairs are used instead; both give
    <C x | x> = d - scale d^2 [k+1]/theta.

    @raises WitnessUnavailableError if no rank-d witness of either kind
            exists.
    @raises InvariantViolationError if the witness value misses
            d - scale d^2 [k+1]/theta.

    '''
    if isinstance(d, bool) or int(d) != d or d < 1:
        raise exceptions.BadParameterError('d', d)
    samples = option_or(samples, 'samples')
    workers = option_or(workers, 'workers')
    iso = isometry(p, t)
    R = iso.reduced
    pl = jw_projection(p, t.l).matrix
    pm = jw_projection(p, t.m).matrix
    x, kind, family_size = _rank_d_witness(p, t, iso, d)
    value = _choi_form(R, pl, pm, x, scale)
    exact = max_schmidt_value(p, t)
    predicted = d - scale * d * d * exact
    if abs(value - predicted) > WITNESS_TOL * max(1.0, abs(predicted)):
        raise exceptions.InvariantViolationError(
                'Choi witness value {0!r}, expected {1!r}'.format(value,
                    predicted))
    Bl = onb_of_irrep(p, t.l).columns
    Bm = onb_of_irrep(p, t.m).columns
    if samples:
        rngs = spawn_rngs(seed, samples)
        with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as \
                pool:
            values = list(pool.map(lambda rng: _choi_form(R, pl, pm,
                _rank_d_sample(rng, Bl, Bm, d), scale), rngs))
        sampled_min = min(values)
    else:
        sampled_min = None
    report = ChoiReport(p, t, scale, d, d_positivity_threshold(p, t, d),
            value, predicted, sampled_min, samples, family_size, kind)
    if not report.sampling_consistent:
        logger.warning('Sampled Choi value %.12g below floor %.12g for %r',
                sampled_min, report.predicted_floor, t)
    return report


# vim: set expandtab tabstop=8 shiftwidth=4 softtabstop=4 textwidth=79
