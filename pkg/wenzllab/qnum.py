# -*- Python -*-
# -*- coding: utf-8 -*-

'''wenzllab

Copyright (C) 2026
    wenzl-lab developers
    All rights reserved.
Licensed under the GNU Lesser General Public License version 3.
http://www.gnu.org/licenses/lgpl-3.0.en.html

Scalar arithmetic of the O_N^+ fusion category: the quantum parameter,
quantum integers and factorials, dimensions of the irreducible
representations, admissible triples, theta-nets and the rapid decay
constant.

All factorial arithmetic is carried out in log-space. Quantities such as
[k+1]_q / theta_q(k,l,m) are assembled as exp(log numerator - log
denominator) so that they stay finite long after the individual factors
overflow.

'''


import logging
import math
import threading

from wenzllab import exceptions


logger = logging.getLogger(__name__)

# Largest exponent that still gives a finite double.
_MAX_LOG = 709.0
# Factors of the infinite product closer to 1 than this are dropped.
_PRODUCT_CUTOFF = 1e-15


##############################################################################
## Quantum parameter

class QParams(object):
    '''The quantum parameter q(N) with cached quantum integers.

    q is the root in (0, 1] of q + 1/q = N. For N = 2, q = 1 and the
    quantum integers are the ordinary integers.

    The caches only ever grow. Growth happens under a lock, so concurrent
    readers never see a half-written entry.

    >>> p = QParams(3)
    >>> round(p.q, 10)
    0.3819660113
    >>> round(p.q + 1 / p.q, 12)
    3.0
    >>> QParams(2).q
    1.0

    '''
    def __init__(self, N):
        '''Constructor.

        @param N The rank of O_N^+. Must be an integer of at least 2.
        @raises BadParameterError

        '''
        super(QParams, self).__init__()
        if isinstance(N, bool) or int(N) != N or N < 2:
            raise exceptions.BadParameterError('N', N)
        self._N = int(N)
        if self._N == 2:
            self._q = 1.0
        else:
            # Same root as (N - sqrt(N^2 - 4)) / 2 without the cancellation.
            self._q = 2.0 / (self._N + math.sqrt(self._N ** 2 - 4.0))
        self._log_q = math.log(self._q)
        self._mutex = threading.RLock()
        self._qint_cache = [0.0, 1.0]
        self._qfact_log_cache = [0.0]

    def __repr__(self):
        return 'QParams(N={0}, q={1!r})'.format(self._N, self._q)

    def __eq__(self, other):
        return isinstance(other, QParams) and other.N == self.N

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(('QParams', self._N))

    @property
    def N(self):
        '''The rank N.'''
        return self._N

    @property
    def q(self):
        '''The quantum parameter q(N).'''
        return self._q

    @property
    def log_q(self):
        '''The natural logarithm of q (zero for N = 2).'''
        return self._log_q

    @property
    def qint_cache(self):
        '''Snapshot of the cached values [0]_q, [1]_q, ...'''
        with self._mutex:
            return tuple(self._qint_cache)

    @property
    def qfact_log_cache(self):
        '''Snapshot of the cached values log [0]_q!, log [1]_q!, ...'''
        with self._mutex:
            return tuple(self._qfact_log_cache)

    def q_int(self, n):
        '''The quantum integer [n]_q.

        @raises QuantumIntegerOverflowError if the value is not a finite
                double.

        '''
        n = _check_count('n', n)
        with self._mutex:
            while len(self._qint_cache) <= n:
                s = len(self._qint_cache)
                if self._N > 2 and self._raw_q_int_log(s) > _MAX_LOG:
                    raise exceptions.QuantumIntegerOverflowError(n, self._N)
                self._qint_cache.append(self._raw_q_int(s))
            return self._qint_cache[n]

    def q_int_log(self, n):
        '''log [n]_q, finite for every n >= 1.'''
        n = _check_count('n', n)
        if n == 0:
            raise exceptions.BadParameterError('n',
                    'log [0]_q is undefined')
        return self._raw_q_int_log(n)

    def q_factorial_log(self, n):
        '''log [n]_q! = sum of log [s]_q for s = 1..n.'''
        n = _check_count('n', n)
        with self._mutex:
            while len(self._qfact_log_cache) <= n:
                s = len(self._qfact_log_cache)
                self._qfact_log_cache.append(self._qfact_log_cache[-1] +
                        self._raw_q_int_log(s))
            return self._qfact_log_cache[n]

    def _raw_q_int(self, n):
        if self._N == 2:
            return float(n)
        q = self._q
        return q ** (-(n - 1)) * (1.0 - q ** (2 * n)) / (1.0 - q * q)

    def _raw_q_int_log(self, n):
        if self._N == 2:
            return math.log(n)
        q2 = self._q * self._q
        return (-(n - 1) * self._log_q + math.log1p(-q2 ** n) -
                math.log1p(-q2))


def _check_count(name, n):
    if isinstance(n, bool) or int(n) != n or n < 0:
        raise exceptions.BadParameterError(name, n)
    return int(n)


##############################################################################
## Admissible triples

class AdmissibleTriple(object):
    '''A triple (k, l, m) with H_k contained in H_l (x) H_m.

    Admissibility means k = l + m - 2r for some 0 <= r <= min(l, m).

    >>> t = AdmissibleTriple(1, 1, 2)
    >>> t.r
    1
    >>> tuple(t)
    (1, 1, 2)
    >>> AdmissibleTriple(1, 1, 1)
    Traceback (most recent call last):
    ...
    wenzllab.exceptions.NonAdmissibleTripleError: Triple is not admissible: (k=1, l=1, m=1)

    '''
    __slots__ = ('_k', '_l', '_m', '_r')

    def __init__(self, k, l, m):
        '''Constructor.

        @param k Level of the subrepresentation.
        @param l Level of the left tensor factor.
        @param m Level of the right tensor factor.
        @raises NonAdmissibleTripleError

        '''
        for name, value in (('k', k), ('l', l), ('m', m)):
            if isinstance(value, bool) or int(value) != value or value < 0:
                raise exceptions.NonAdmissibleTripleError(k, l, m)
        k, l, m = int(k), int(l), int(m)
        excess = l + m - k
        if excess < 0 or excess % 2 or excess // 2 > min(l, m):
            raise exceptions.NonAdmissibleTripleError(k, l, m)
        self._k = k
        self._l = l
        self._m = m
        self._r = excess // 2

    def __iter__(self):
        return iter((self._k, self._l, self._m))

    def __repr__(self):
        return 'AdmissibleTriple(k={0}, l={1}, m={2})'.format(self._k,
                self._l, self._m)

    def __eq__(self, other):
        return isinstance(other, AdmissibleTriple) and \
                tuple(other) == tuple(self)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(tuple(self))

    @property
    def k(self):
        return self._k

    @property
    def l(self):
        return self._l

    @property
    def m(self):
        return self._m

    @property
    def r(self):
        '''Number of contracted strands, (l + m - k) / 2.'''
        return self._r

    @property
    def is_highest_weight(self):
        '''Is this the top summand k = l + m?'''
        return self._r == 0

    def as_dict(self):
        return {'k': self._k, 'l': self._l, 'm': self._m, 'r': self._r}


def admissible_triples(l, m):
    '''All admissible triples (k, l, m) for fixed l and m, by increasing r.

    >>> [tuple(t) for t in admissible_triples(1, 1)]
    [(2, 1, 1), (0, 1, 1)]
    >>> [tuple(t) for t in admissible_triples(2, 3)]
    [(5, 2, 3), (3, 2, 3), (1, 2, 3)]

    '''
    l = _check_count('l', l)
    m = _check_count('m', m)
    return [AdmissibleTriple(l + m - 2 * r, l, m)
            for r in range(min(l, m) + 1)]


##############################################################################
## API functions

def quantum_parameter(N):
    '''Build the quantum parameter q(N) for N >= 2.

    >>> round(quantum_parameter(4).q, 10)
    0.2679491924

    '''
    return QParams(N)


def q_int(p, n):
    '''The quantum integer [n]_q.

    >>> p = quantum_parameter(3)
    >>> [round(q_int(p, n), 9) for n in range(5)]
    [0.0, 1.0, 3.0, 8.0, 21.0]

    '''
    return p.q_int(n)


def q_int_log(p, n):
    '''log [n]_q for n >= 1.'''
    return p.q_int_log(n)


def q_factorial_log(p, n):
    '''log [n]_q!, with log [0]_q! = 0.

    >>> p = quantum_parameter(3)
    >>> abs(q_factorial_log(p, 3) - math.log(24)) < 1e-12
    True

    '''
    return p.q_factorial_log(n)


def dim_irrep(p, k):
    '''Dimension [k+1]_q of the irreducible representation H_k.

    >>> [round(dim_irrep(quantum_parameter(3), k)) for k in range(6)]
    [1, 3, 8, 21, 55, 144]
    >>> round(dim_irrep(quantum_parameter(4), 2))
    15

    '''
    return p.q_int(_check_count('k', k) + 1)


def dim_irrep_log(p, k):
    '''log dim H_k.'''
    return p.q_int_log(_check_count('k', k) + 1)


def theta_net_log(p, t):
    '''log of the theta-net theta_q(k, l, m).'''
    k, l, m, r = t.k, t.l, t.m, t.r
    lf = p.q_factorial_log
    return (lf(r) + lf(l - r) + lf(m - r) + lf(k + r + 1) -
            lf(l) - lf(m) - lf(k))


def theta_net(p, t):
    '''The theta-net theta_q(k, l, m) from its factorial closed form.

    >>> p = quantum_parameter(3)
    >>> round(theta_net(p, AdmissibleTriple(2, 1, 1)), 9)
    8.0
    >>> round(theta_net(p, AdmissibleTriple(1, 1, 2)), 9)
    8.0
    >>> round(theta_net(p, AdmissibleTriple(2, 2, 2)), 9)
    18.666666667

    '''
    return math.exp(theta_net_log(p, t))


def _max_schmidt_log(p, t):
    # log([k+1]_q / theta_q(k,l,m))
    return dim_irrep_log(p, t.k) - theta_net_log(p, t)


def max_schmidt_value(p, t):
    '''[k+1]_q / theta_q(k, l, m), the largest Schmidt coefficient reachable
    inside the range of the isometry.

    >>> round(max_schmidt_value(quantum_parameter(3), AdmissibleTriple(2, 2, 2)), 12)
    0.428571428571

    '''
    return math.exp(_max_schmidt_log(p, t))


def _require_deformed(p, what):
    if p.N < 3:
        raise exceptions.BadParameterError('N',
                '{0} needs N >= 3, got N={1}'.format(what, p.N))


def _inverse_product_log(p, count=None):
    # log prod_{s=1..count} 1/(1 - q^{2s}); count=None runs to convergence.
    q2 = p.q * p.q
    total = 0.0
    s = 1
    while count is None or s <= count:
        factor = q2 ** s
        if count is None and factor < _PRODUCT_CUTOFF:
            break
        total -= math.log1p(-factor)
        s += 1
    return total


def rd_constant(p):
    '''The rapid decay constant
    C(q) = (1 - q^2)^(-1/2) (prod_{s>=1} 1/(1 - q^{2s}))^(3/2).

    The infinite product is cut once its factors are within 1e-15 of 1.

    >>> round(rd_constant(quantum_parameter(3)), 4)
    1.4235
    >>> rd_constant(quantum_parameter(2))
    Traceback (most recent call last):
    ...
    wenzllab.exceptions.BadParameterError: Bad parameter N: rapid decay constant needs N >= 3, got N=2

    '''
    _require_deformed(p, 'rapid decay constant')
    q2 = p.q * p.q
    return math.exp(-0.5 * math.log1p(-q2) + 1.5 * _inverse_product_log(p))


def rd_bound(p, t):
    '''The two rapid decay bounds on the largest Schmidt coefficient.

    @return (exact, coarse) with exact = [k+1]_q / theta_q(k,l,m) and
            coarse = C(q)^2 q^((l+m-k)/2).
    @raises InvariantViolationError if exact > coarse.

    >>> exact, coarse = rd_bound(quantum_parameter(3), AdmissibleTriple(1, 1, 2))
    >>> round(exact, 12), round(coarse, 3)
    (0.375, 0.774)

    '''
    _require_deformed(p, 'rapid decay bound')
    exact = max_schmidt_value(p, t)
    coarse = rd_constant(p) ** 2 * p.q ** t.r
    if exact > coarse * (1.0 + 1e-12):
        raise exceptions.InvariantViolationError(
                'rapid decay: {0!r} > {1!r} for {2!r}'.format(exact, coarse,
                    t))
    return exact, coarse


def rd_intermediate_bound(p, t):
    '''The middle link (1/[r+1]_q) (prod_{s=1..r} 1/(1 - q^{2s}))^3 of the
    chain exact <= intermediate <= coarse.'''
    _require_deformed(p, 'intermediate rapid decay bound')
    return math.exp(3.0 * _inverse_product_log(p, t.r) - p.q_int_log(t.r + 1))


def qd_inequality(p, r):
    '''The sandwich q^r (1 - q^2) <= 1/[r+1]_q <= q^r.

    @return (lower, middle, upper). The lower end is 0 for N = 2.

    >>> lo, mid, hi = qd_inequality(quantum_parameter(3), 2)
    >>> lo <= mid <= hi
    True

    '''
    r = _check_count('r', r)
    upper = p.q ** r
    middle = math.exp(-p.q_int_log(r + 1))
    return upper * (1.0 - p.q * p.q), middle, upper


def remark_upbound_check(p, t):
    '''rho = [r+1]_q [k+1]_q / theta_q(k,l,m), which is always at least 1.

    >>> round(remark_upbound_check(quantum_parameter(3), AdmissibleTriple(1, 1, 2)), 12)
    1.125
    >>> round(remark_upbound_check(quantum_parameter(3), AdmissibleTriple(2, 2, 2)), 12)
    1.285714285714

    '''
    return math.exp(p.q_int_log(t.r + 1) + _max_schmidt_log(p, t))


def relative_dimension_root(p, t):
    '''Fourth root of dim H_k / (dim H_l dim H_m).

    For large N this matches C(q) q^((l+m-k)/4), the square root of the
    coarse rapid decay bound.

    '''
    return math.exp(0.25 * (dim_irrep_log(p, t.k) - dim_irrep_log(p, t.l) -
                            dim_irrep_log(p, t.m)))


def saturation_count(N, r):
    '''Size (N-2)(N-1)^(r-1) of the saturation witness family, 0 for r = 0.

    >>> saturation_count(4, 1), saturation_count(5, 1), saturation_count(4, 3)
    (2, 3, 18)

    '''
    r = _check_count('r', r)
    if r == 0:
        return 0
    return (N - 2) * (N - 1) ** (r - 1)


def saturation_mass(p, t):
    '''|A| [k+1]_q / theta_q(k,l,m): the Schmidt mass carried by the maximal
    plateau of the saturation witness.

    >>> [round(saturation_mass(quantum_parameter(n), AdmissibleTriple(0, 1, 1)), 12)
    ...  for n in (3, 4, 5)]
    [0.333333333333, 0.5, 0.6]

    '''
    return saturation_count(p.N, t.r) * max_schmidt_value(p, t)


# vim: set expandtab tabstop=8 shiftwidth=4 softtabstop=4 textwidth=79
