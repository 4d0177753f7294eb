# -*- Python -*-
# -*- coding: utf-8 -*-

'''wenzllab

Copyright (C) 2026
    wenzl-lab developers
    All rights reserved.
Licensed under the GNU Lesser General Public License version 3.
http://www.gnu.org/licenses/lgpl-3.0.en.html

Schmidt analysis of the subspaces alpha_k^{l,m}(H_k) of H_l (x) H_m.

Every vector in the image of an isometry has its largest Schmidt coefficient
bounded by [k+1]_q / theta_q(k,l,m). This module samples that bound, finds
the supremum with an alternating optimizer, builds the explicit vectors that
reach it, and reports the entropy surrogates derived from it.

'''


import concurrent.futures
import itertools
import logging
import math

import numpy as np
import scipy.linalg

from wenzllab import exceptions
from wenzllab.jones_wenzl import jw_projection, onb_of_irrep
from wenzllab.options import Options, option_or
from wenzllab.qnum import AdmissibleTriple, dim_irrep_log, max_schmidt_value, \
                          q_int_log, qd_inequality, rd_bound, rd_constant, \
                          rd_intermediate_bound, saturation_count, \
                          theta_net_log
from wenzllab.tensor_core import TensorShape, TensorVector, \
                                 alternating_vector, basis_vector, matricize, \
                                 tensor_product
from wenzllab.utils import log_in_base, rebase_log, spawn_rngs
from wenzllab.vertex import isometry


logger = logging.getLogger(__name__)

BOUND_TOL = 1e-8
PLATEAU_TOL = 1e-8
WITNESS_TOL = 1e-9


##############################################################################
## Entropies

def _normalized(probs):
    probs = np.clip(np.asarray(probs, dtype=np.float64), 0.0, None)
    total = probs.sum()
    if total <= 0.0:
        raise exceptions.ZeroVectorError()
    return probs / total


def spectrum_entropy(probs, base=None):
    '''von Neumann entropy -sum p log p of a spectrum, with 0 log 0 = 0.

    The spectrum is normalized first.

    >>> round(spectrum_entropy([1, 1, 1]), 12) == round(math.log(3), 12)
    True
    >>> spectrum_entropy([1, 0, 0])
    0.0

    '''
    probs = _normalized(probs)
    nonzero = probs[probs > 0.0]
    value = float(-np.sum(nonzero * np.log(nonzero)))
    if value <= 0.0:
        value = 0.0
    return rebase_log(value, option_or(base, 'log_base'))


def renyi_entropy(probs, alpha, base=None):
    '''Renyi entropy log(sum p^alpha) / (1 - alpha) of a spectrum.

    alpha = 1 gives the von Neumann entropy, alpha = inf the min-entropy.

    >>> round(renyi_entropy([0.5, 0.5], 2), 12) == round(math.log(2), 12)
    True

    '''
    if alpha < 0:
        raise exceptions.BadParameterError('alpha', alpha)
    if alpha == 1:
        return spectrum_entropy(probs, base)
    probs = _normalized(probs)
    if math.isinf(alpha):
        value = -math.log(float(probs.max()))
    else:
        nonzero = probs[probs > 0.0]
        value = math.log(float(np.sum(nonzero ** alpha))) / (1.0 - alpha)
    if value <= 0.0:
        value = 0.0
    return rebase_log(value, option_or(base, 'log_base'))


def bell_reference(d, base=None):
    '''Largest Schmidt coefficient and entropy of the maximally entangled
    vector of Schmidt rank d.

    >>> bell_reference(4)['max']
    0.25

    '''
    if isinstance(d, bool) or int(d) != d or d < 1:
        raise exceptions.BadParameterError('d', d)
    return {'max': 1.0 / d,
            'entropy': log_in_base(d, option_or(base, 'log_base'))}


##############################################################################
## Schmidt spectra

class SchmidtReport(object):
    '''Squared Schmidt coefficients of a bipartite vector.'''
    def __init__(self, coefficients, norm_sq, rank_tol, base, renyi_order=None):
        super(SchmidtReport, self).__init__()
        self.coefficients = [float(c) for c in coefficients]
        self.norm_sq = float(norm_sq)
        self.base = base
        self.entropy = spectrum_entropy(self.coefficients, base)
        self.max = self.coefficients[0] / self.norm_sq
        self.numerical_rank = int(sum(1 for c in self.coefficients
            if c > rank_tol * self.coefficients[0]))
        self.renyi_order = renyi_order
        if renyi_order is not None and renyi_order != 1:
            self.renyi = renyi_entropy(self.coefficients, renyi_order, base)
        else:
            self.renyi = None

    def __repr__(self):
        return 'SchmidtReport(max={0:.6g}, rank={1}, entropy={2:.6g})'.format(
                self.max, self.numerical_rank, self.entropy)

    def as_dict(self):
        result = {'coefficients': self.coefficients,
                  'norm_sq': self.norm_sq,
                  'entropy': self.entropy,
                  'log_base': str(self.base),
                  'max': self.max,
                  'numerical_rank': self.numerical_rank}
        if self.renyi is not None:
            result['renyi'] = {'order': self.renyi_order,
                               'value': self.renyi}
        return result


def schmidt_spectrum(v, split, base=None, renyi_order=None):
    '''Schmidt coefficients of a vector across the cut after @ref split legs.

    The coefficients are the squared singular values of the matricized
    vector and sum to ||v||^2; entropy and max are taken after normalizing.

    @raises ZeroVectorError, BadSplitError

    >>> from wenzllab.qnum import quantum_parameter
    >>> from wenzllab.tensor_core import cup_vector
    >>> s = schmidt_spectrum(cup_vector(quantum_parameter(3), 1), 1)
    >>> [round(c, 12) for c in s.coefficients], s.numerical_rank
    ([1.0, 1.0, 1.0], 3)

    '''
    M = matricize(v, split)
    norm_sq = float(np.sum(M * M))
    if norm_sq == 0.0:
        raise exceptions.ZeroVectorError()
    sigma = scipy.linalg.svdvals(M)
    return SchmidtReport(sigma * sigma, norm_sq,
            Options().get_option('rank_tol'), option_or(base, 'log_base'),
            renyi_order)


def schmidt_vectors_in_range(p, t, xi_coords):
    '''How far the Schmidt vectors of alpha(xi) stray from H_l and H_m.

    Only singular pairs with singular value above 1e-8 are checked.

    @return The largest of ||p_l u - u|| and ||p_m w - w||.

    '''
    iso = isometry(p, t)
    M = matricize(iso.apply(xi_coords), t.l)
    U, sigma, Vt = scipy.linalg.svd(M, full_matrices=False)
    keep = sigma > 1e-8
    pl = jw_projection(p, t.l).matrix
    pm = jw_projection(p, t.m).matrix
    worst = 0.0
    if np.any(keep):
        left = U[:, keep]
        right = Vt[keep].T
        worst = max(float(np.max(np.linalg.norm(pl.dot(left) - left,
                                                axis=0))),
                    float(np.max(np.linalg.norm(pm.dot(right) - right,
                                                axis=0))))
    return worst


##############################################################################
## Sampling

def random_unit_coords(rng, dim, count):
    '''@ref count Haar-random unit vectors in R^dim, as columns.'''
    X = rng.standard_normal((dim, count))
    return X / np.linalg.norm(X, axis=0)


def _top_coefficients(iso, coords):
    # Largest normalized Schmidt coefficient of alpha(x) for each column x.
    t = iso.triple
    N = iso.params.N
    images = iso.reduced.dot(coords)
    result = []
    for col in range(images.shape[1]):
        M = images[:, col].reshape(N ** t.l, N ** t.m)
        sigma = scipy.linalg.svdvals(M)
        result.append(float(sigma[0] ** 2 / np.sum(sigma ** 2)))
    return result


class RdCertificate(object):
    '''Sampled largest Schmidt coefficients against the rapid decay bounds.'''
    def __init__(self, params, triple, observed, exact, intermediate,
            coarse):
        super(RdCertificate, self).__init__()
        self.N = params.N
        self.triple = triple
        self.samples = len(observed)
        self.max_observed = max(observed) if observed else 0.0
        self.bound_exact = exact
        self.bound_intermediate = intermediate
        self.bound_coarse = coarse

    @property
    def violated(self):
        return self.max_observed > self.bound_exact + BOUND_TOL

    def as_dict(self):
        return {'N': self.N, 'triple': self.triple.as_dict(),
                'samples': self.samples,
                'max_observed': self.max_observed,
                'bounds': {'rd_exact': self.bound_exact,
                           'rd_intermediate': self.bound_intermediate,
                           'rd_coarse': self.bound_coarse},
                'residual': self.max_observed - self.bound_exact,
                'violated': self.violated}


def rd_certificate(p, t, samples=None, seed=None):
    '''Sample random unit vectors of H_k and compare the largest Schmidt
    coefficient of their images with the rapid decay bound.

    @raises InvariantViolationError if any sample exceeds the bound.

    '''
    samples = option_or(samples, 'samples')
    exact, coarse = rd_bound(p, t)
    iso = isometry(p, t)
    rng = np.random.default_rng(seed)
    observed = _top_coefficients(iso,
            random_unit_coords(rng, iso.domain_dim, samples))
    cert = RdCertificate(p, t, observed, exact,
            rd_intermediate_bound(p, t), coarse)
    logger.info('Rapid decay at N=%d %r: max observed %.12g, bound %.12g',
            p.N, t, cert.max_observed, exact)
    if cert.violated:
        raise exceptions.InvariantViolationError(
                'sampled Schmidt coefficient {0!r} above [k+1]/theta {1!r} '
                'for {2!r}'.format(cert.max_observed, exact, t))
    return cert


def higher_rank_bound_check(p, t, d, samples=None, seed=None):
    '''Test ||alpha^*(sum_i eta_i (x) zeta_i)|| against the sum of
    ||eta_i|| ||zeta_i|| for random families of d pairs.

    @return dict with the worst ratios against the exact constant
            ([k+1]/theta)^{1/2} and the coarse constant C(q) q^{r/2}.
    @raises InvariantViolationError if a ratio exceeds 1.

    '''
    if isinstance(d, bool) or int(d) != d or d < 1:
        raise exceptions.BadParameterError('d', d)
    samples = option_or(samples, 'samples')
    iso = isometry(p, t)
    N = p.N
    exact = math.sqrt(max_schmidt_value(p, t))
    coarse = rd_constant(p) * p.q ** (t.r / 2.0)
    Bl = onb_of_irrep(p, t.l).columns
    Bm = onb_of_irrep(p, t.m).columns
    R3 = iso.reduced.reshape(N ** t.l, N ** t.m, iso.domain_dim)
    rng = np.random.default_rng(seed)
    worst_exact = 0.0
    worst_coarse = 0.0
    for ii in range(samples):
        etas = Bl.dot(rng.standard_normal((Bl.shape[1], d)))
        zetas = Bm.dot(rng.standard_normal((Bm.shape[1], d)))
        image = np.einsum('ai,abj,bi->j', etas, R3, zetas)
        total = float(np.sum(np.linalg.norm(etas, axis=0) *
                             np.linalg.norm(zetas, axis=0)))
        lhs = float(np.linalg.norm(image))
        worst_exact = max(worst_exact, lhs / (exact * total))
        worst_coarse = max(worst_coarse, lhs / (coarse * total))
    if worst_exact > 1.0 + BOUND_TOL:
        raise exceptions.InvariantViolationError(
                'higher rank bound exceeded by ratio {0!r} for {1!r}'.format(
                    worst_exact, t))
    return {'N': N, 'triple': t.as_dict(), 'd': d, 'samples': samples,
            'worst_ratio_exact': worst_exact,
            'worst_ratio_coarse': worst_coarse}


##############################################################################
## Optimizer

class OptimizerResult(object):
    '''Best value of |<alpha(xi) | eta (x) zeta>| found over all restarts.'''
    def __init__(self, params, triple, value, xi, eta, zeta, converged,
            iterations, best_restart, restarts):
        super(OptimizerResult, self).__init__()
        self.N = params.N
        self.triple = triple
        self.value = value
        self.xi = xi
        self.eta = eta
        self.zeta = zeta
        self.converged = converged
        self.iterations = iterations
        self.best_restart = best_restart
        self.restarts = restarts
        self.bound = math.sqrt(max_schmidt_value(params, triple))

    @property
    def argmax(self):
        return self.xi, self.eta, self.zeta

    def as_dict(self):
        return {'N': self.N, 'triple': self.triple.as_dict(),
                'value': self.value,
                'bounds': {'sqrt_rd_exact': self.bound},
                'residual': self.value - self.bound,
                'converged': self.converged,
                'iterations': self.iterations,
                'best_restart': self.best_restart,
                'restarts': self.restarts}


def _optimize_once(R3, xi, tol, max_iters):
    M = np.einsum('abj,j->ab', R3, xi)
    U, sigma, Vt = scipy.linalg.svd(M, full_matrices=False)
    eta, zeta = U[:, 0], Vt[0]
    value = float(sigma[0])
    converged = False
    iterations = 0
    for iterations in range(1, max_iters + 1):
        g = np.einsum('a,abj,b->j', eta, R3, zeta)
        g_norm = np.linalg.norm(g)
        if g_norm == 0.0:
            converged = True
            break
        xi = g / g_norm
        M = np.einsum('abj,j->ab', R3, xi)
        eta = M.dot(zeta)
        eta /= np.linalg.norm(eta)
        zeta = M.T.dot(eta)
        zeta /= np.linalg.norm(zeta)
        new_value = float(abs(eta.dot(M).dot(zeta)))
        if new_value - value < tol:
            value = max(value, new_value)
            converged = True
            break
        value = new_value
    return value, xi, eta, zeta, converged, iterations


def _witness_coords(iso):
    t = iso.triple
    xi = alternating_vector(TensorShape(iso.params.N, t.k), 1, 2)
    return iso.basis.columns.T.dot(xi.data)


def max_schmidt_optimizer(p, t, restarts=None, tol=None, seed=None,
        max_iters=None, workers=None, warm_start=True):
    '''Maximize |<alpha(xi) | eta (x) zeta>| over unit xi, eta, zeta.

    Each restart runs an alternating power iteration: xi is replaced by the
    normalized alpha^*(eta (x) zeta), then eta and zeta by the normalized
    contractions of alpha(xi) with the other factor. The objective never
    decreases. Restart 0 starts from xi = eta_k(1,2) unless @ref warm_start
    is False; the others start from Gaussian vectors seeded from @ref seed.
    Restarts run in a thread pool and the first best result wins.

    The returned value is the square root of the largest Schmidt
    coefficient reachable in alpha(H_k).

    '''
    restarts = max(1, option_or(restarts, 'restarts'))
    tol = option_or(tol, 'optimizer_tol')
    max_iters = option_or(max_iters, 'optimizer_max_iters')
    workers = option_or(workers, 'workers')
    iso = isometry(p, t)
    N = p.N
    R3 = iso.reduced.reshape(N ** t.l, N ** t.m, iso.domain_dim)
    rngs = spawn_rngs(seed, restarts)
    starts = []
    for ii, rng in enumerate(rngs):
        if ii == 0 and warm_start:
            starts.append(_witness_coords(iso))
        else:
            starts.append(random_unit_coords(rng, iso.domain_dim, 1)[:, 0])
    with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(lambda x: _optimize_once(R3, x, tol,
                                                         max_iters), starts))
    best = 0
    for ii, result in enumerate(results):
        logger.debug('Restart %d for %r: %.15g after %d sweeps', ii, t,
                result[0], result[5])
        if result[0] > results[best][0]:
            best = ii
    value, xi, eta, zeta, converged, iterations = results[best]
    if not converged:
        logger.warning('Optimizer for %r did not converge in %d sweeps', t,
                max_iters)
    eta_v = _as_vector(N, t.l, eta)
    zeta_v = _as_vector(N, t.m, zeta)
    return OptimizerResult(p, t, value, xi, eta_v, zeta_v, converged,
            iterations, best, restarts)


def _as_vector(N, legs, data):
    return TensorVector(TensorShape(N, legs), data)


##############################################################################
## Saturation

class SaturationWitness(object):
    '''The vector xi = eta_k(1,2) together with orthonormal families
    (eta_i) in H_l and (zeta_i) in H_m, indexed by the walks i in A.'''
    def __init__(self, params, triple, xi, xi_coords, indices, eta_family,
            zeta_family):
        super(SaturationWitness, self).__init__()
        self.params = params
        self.triple = triple
        self.xi = xi
        self.xi_coords = xi_coords
        self.indices = indices
        self.eta_family = eta_family
        self.zeta_family = zeta_family

    @property
    def family_size(self):
        return len(self.indices)

    def as_dict(self):
        return {'N': self.params.N, 'triple': self.triple.as_dict(),
                'family_size': self.family_size,
                'indices': [list(i) for i in self.indices]}


def witness_indices(N, r):
    '''The walks i : [r] -> [N] with i(1) >= 3 and i(s) != i(s+1).

    >>> witness_indices(4, 2)
    [(3, 1), (3, 2), (3, 4), (4, 1), (4, 2), (4, 3)]

    '''
    result = []
    for walk in itertools.product(range(1, N + 1), repeat=r):
        if walk and walk[0] >= 3 and \
                all(walk[s] != walk[s + 1] for s in range(r - 1)):
            result.append(walk)
    return result


def _end_vectors(N, t):
    # eta_0 on l - r legs and zeta_0 on m - r legs, with eta_0 (x) zeta_0
    # equal to eta_k(1,2).
    lr, mr = t.l - t.r, t.m - t.r
    eta0 = alternating_vector(TensorShape(N, lr), 1, 2)
    if lr % 2 == 0:
        zeta0 = alternating_vector(TensorShape(N, mr), 1, 2)
    else:
        zeta0 = alternating_vector(TensorShape(N, mr), 2, 1)
    return eta0, zeta0


def saturation_witness(p, t):
    '''Build the witness family of a triple with r >= 1.

    @raises WitnessUnavailableError for r = 0 or N < 3.
    @raises InvariantViolationError if a family member is not fixed by its
            Jones-Wenzl projection or the count is wrong.

    '''
    if t.r == 0:
        raise exceptions.WitnessUnavailableError(
                'highest weight triple {0!r} has no witness family'.format(t))
    N = p.N
    if N < 3:
        raise exceptions.WitnessUnavailableError(
                'witness families need N >= 3, got {0}'.format(N))
    iso = isometry(p, t)
    eta0, zeta0 = _end_vectors(N, t)
    xi = tensor_product(eta0, zeta0)
    if xi.data.tolist() != alternating_vector(TensorShape(N, t.k), 1,
            2).data.tolist():
        raise exceptions.InvariantViolationError(
                'eta_0 (x) zeta_0 is not eta_k(1,2) for {0!r}'.format(t))
    indices = witness_indices(N, t.r)
    if len(indices) != saturation_count(N, t.r):
        raise exceptions.InvariantViolationError(
                'witness family of size {0}, expected {1}'.format(
                    len(indices), saturation_count(N, t.r)))
    pl = jw_projection(p, t.l)
    pm = jw_projection(p, t.m)
    middle_shape = TensorShape(N, t.r)
    etas = []
    zetas = []
    for walk in indices:
        eta = tensor_product(eta0, basis_vector(middle_shape, walk))
        zeta = tensor_product(basis_vector(middle_shape, walk[::-1]), zeta0)
        if np.linalg.norm(pl.matrix.dot(eta.data) - eta.data) > WITNESS_TOL \
                or np.linalg.norm(pm.matrix.dot(zeta.data) - zeta.data) > \
                WITNESS_TOL:
            raise exceptions.InvariantViolationError(
                    'witness pair {0} not fixed by p_l (x) p_m'.format(walk))
        etas.append(eta)
        zetas.append(zeta)
    xi_coords = iso.basis.columns.T.dot(xi.data)
    logger.debug('Witness family for %r at N=%d has %d members', t, N,
            len(indices))
    return SaturationWitness(p, t, xi, xi_coords, indices, etas, zetas)


class SaturationReport(object):
    '''Schmidt plateau of alpha(xi) at the witness vector.'''
    def __init__(self, params, triple, spectrum, family_size, exact):
        super(SaturationReport, self).__init__()
        self.N = params.N
        self.triple = triple
        self.spectrum = spectrum
        self.family_size = family_size
        self.exact = exact
        coefficients = spectrum.coefficients
        self.plateau = coefficients[:family_size]
        self.plateau_length = sum(1 for c in coefficients
                if abs(c - exact) <= PLATEAU_TOL * exact)
        if len(coefficients) > family_size:
            self.next_value = coefficients[family_size]
        else:
            self.next_value = None
        self.mass = family_size * exact

    @property
    def plateau_ok(self):
        return all(abs(c - self.exact) <= PLATEAU_TOL * self.exact
                for c in self.plateau)

    @property
    def plateau_extends(self):
        '''True if the plateau is longer than the witness family.'''
        return self.next_value is not None and \
                self.next_value >= self.plateau[0] - 1e-10

    def as_dict(self):
        return {'N': self.N, 'triple': self.triple.as_dict(),
                'family_size': self.family_size,
                'plateau': self.plateau,
                'plateau_length': self.plateau_length,
                'plateau_extends': self.plateau_extends,
                'next_value': self.next_value,
                'bounds': {'rd_exact': self.exact},
                'mass': self.mass,
                'spectrum': self.spectrum.as_dict(),
                'ok': self.plateau_ok}


def verify_saturation(p, t):
    '''Check that the top |A| Schmidt coefficients of alpha(eta_k(1,2)) all
    equal [k+1]_q / theta_q(k,l,m).

    @raises InvariantViolationError if they do not.

    '''
    witness = saturation_witness(p, t)
    iso = isometry(p, t)
    spectrum = schmidt_spectrum(iso.apply_ambient(witness.xi), t.l)
    report = SaturationReport(p, t, spectrum, witness.family_size,
            max_schmidt_value(p, t))
    if not report.plateau_ok:
        raise exceptions.InvariantViolationError(
                'Schmidt plateau {0!r} differs from [k+1]/theta {1!r} for '
                '{2!r}'.format(report.plateau, report.exact, t))
    if report.plateau_extends:
        logger.info('Plateau for %r at N=%d extends past %d values', t, p.N,
                report.family_size)
    return report


def separability_witness_highest_weight(p, l, m, i, j):
    '''The product vector eta_l(i,j) (x) eta_m in alpha_{l+m}^{l,m}(H_{l+m}),
    where eta_m = eta_m(i,j) for even l and eta_m(j,i) for odd l.

    @return dict with the vector, its Schmidt rank and the distance to the
            range of the isometry.
    @raises BadParameterError if i == j.
    @raises InvariantViolationError if the vector is not in the range.

    '''
    N = p.N
    left = alternating_vector(TensorShape(N, l), i, j)
    if l % 2 == 0:
        right = alternating_vector(TensorShape(N, m), i, j)
    else:
        right = alternating_vector(TensorShape(N, m), j, i)
    vector = tensor_product(left, right)
    t = AdmissibleTriple(l + m, l, m)
    iso = isometry(p, t)
    R = iso.reduced
    residual = float(np.linalg.norm(vector.data - R.dot(R.T.dot(vector.data))))
    if residual > WITNESS_TOL:
        raise exceptions.InvariantViolationError(
                'product vector is {0!r} away from the range of {1!r}'.format(
                    residual, t))
    spectrum = schmidt_spectrum(vector, l)
    return {'vector': vector, 'schmidt_rank': spectrum.numerical_rank,
            'range_residual': residual}


def higher_rank_value(p, t):
    '''||alpha^*(sum_{i in A} eta_i (x) zeta_i)|| compared with
    |A| ([k+1]/theta)^{1/2}, the floor |A| [r+1]^{-1/2} and the q-power
    floor |A| (q^r (1 - q^2))^{1/2} below it.

    @raises InvariantViolationError if the left side misses the exact value
            by more than 1e-8 relative or falls below the floor.

    '''
    witness = saturation_witness(p, t)
    iso = isometry(p, t)
    total = np.zeros(iso.reduced.shape[0])
    for eta, zeta in zip(witness.eta_family, witness.zeta_family):
        total += np.kron(eta.data, zeta.data)
    lhs = float(np.linalg.norm(iso.reduced.T.dot(total)))
    d = witness.family_size
    rhs_exact = d * math.sqrt(max_schmidt_value(p, t))
    lower, middle = qd_inequality(p, t.r)[:2]
    rhs_floor = d * math.sqrt(middle)
    rhs_q_power = d * math.sqrt(lower)
    if abs(lhs - rhs_exact) > BOUND_TOL * rhs_exact or \
            lhs < rhs_floor - BOUND_TOL:
        raise exceptions.InvariantViolationError(
                'higher rank value {0!r}, expected {1!r} (floor {2!r})'.format(
                    lhs, rhs_exact, rhs_floor))
    return {'N': p.N, 'triple': t.as_dict(), 'd': d, 'lhs': lhs,
            'rhs_exact': rhs_exact, 'rhs_floor': rhs_floor,
            'rhs_q_power': rhs_q_power}


##############################################################################
## Entropy surrogate

class EMuReport(object):
    '''log(theta/[k+1]) + mu (log[k+1] - log([l+1][m+1])).

    The first term bounds the entanglement entropy of every unit vector of
    alpha(H_k) from below; the second penalizes the subspace for being
    small relative to H_l (x) H_m.

    '''
    def __init__(self, triple, mu, entropy_lower, dim_term):
        super(EMuReport, self).__init__()
        self.triple = triple
        self.mu = mu
        self.entropy_lower = entropy_lower
        self.dim_term = dim_term
        self.value = entropy_lower + mu * dim_term

    def as_dict(self):
        return {'triple': self.triple.as_dict(), 'mu': self.mu,
                'entropy_lower': self.entropy_lower,
                'dim_term': self.dim_term, 'value': self.value}


def e_mu_report(p, t, mu, base=None):
    '''Assemble the E_mu lower-bound surrogate.

    >>> from wenzllab.qnum import quantum_parameter
    >>> r = e_mu_report(quantum_parameter(3), AdmissibleTriple(2, 2, 2), 0.4)
    >>> round(r.entropy_lower, 6), round(r.value, 4)
    (0.847298, 0.0155)

    '''
    if not 0.0 < mu < 1.0:
        raise exceptions.BadParameterError('mu', mu)
    entropy_lower = theta_net_log(p, t) - dim_irrep_log(p, t.k)
    dim_term = dim_irrep_log(p, t.k) - q_int_log(p, t.l + 1) - \
            q_int_log(p, t.m + 1)
    base = option_or(base, 'log_base')
    return EMuReport(t, mu, rebase_log(entropy_lower, base),
            rebase_log(dim_term, base))


# vim: set expandtab tabstop=8 shiftwidth=4 softtabstop=4 textwidth=79
