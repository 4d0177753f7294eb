# -*- Python -*-
# -*- coding: utf-8 -*-

'''wenzllab

Copyright (C) 2026
    wenzl-lab developers
    All rights reserved.
Licensed under the GNU Lesser General Public License version 3.
http://www.gnu.org/licenses/lgpl-3.0.en.html

Dense real tensors on (C^N)^{(x)k}.

Every construction used by the library is real in the standard basis, so
vectors and operators hold float64 data. Multi-indices are laid out
row-major with the leftmost leg varying slowest; matricize() and the partial
traces rely on this convention.

Indices given by callers (basis_vector, alternating_vector) are 1-based, as
in e_1, ..., e_N.

'''


import logging

import numpy as np

from wenzllab import exceptions
from wenzllab.options import Options


logger = logging.getLogger(__name__)

TRACE_FIRST = 'first'
TRACE_LAST = 'last'


##############################################################################
## Shapes

class TensorShape(object):
    '''The space (C^N)^{(x)legs}.

    The total dimension N^legs must fit the configured cap (option
    'max_dim').

    >>> TensorShape(3, 2).dim
    9
    >>> TensorShape(3, 0).dim
    1

    '''
    __slots__ = ('_N', '_legs')

    def __init__(self, N, legs, max_dim=None):
        '''Constructor.

        @param N Local dimension, at least 1.
        @param legs Tensor power, at least 0.
        @param max_dim Override the 'max_dim' option.
        @raises BadParameterError, DimensionCapError

        '''
        if isinstance(N, bool) or int(N) != N or N < 1:
            raise exceptions.BadParameterError('N', N)
        if isinstance(legs, bool) or int(legs) != legs or legs < 0:
            raise exceptions.BadParameterError('legs', legs)
        self._N = int(N)
        self._legs = int(legs)
        check_cap(self._N ** self._legs, max_dim)

    def __eq__(self, other):
        return isinstance(other, TensorShape) and other.N == self._N and \
                other.legs == self._legs

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self._N, self._legs))

    def __repr__(self):
        return 'TensorShape(N={0}, legs={1})'.format(self._N, self._legs)

    @property
    def N(self):
        return self._N

    @property
    def legs(self):
        return self._legs

    @property
    def dim(self):
        '''Total dimension N^legs.'''
        return self._N ** self._legs


def check_cap(dim, max_dim=None):
    '''Raise DimensionCapError if @ref dim exceeds the dimension cap.'''
    if max_dim is None:
        max_dim = Options().get_option('max_dim')
    if dim > max_dim:
        raise exceptions.DimensionCapError(dim, max_dim)


def fits_cap(N, legs, max_dim=None):
    '''Does N^legs fit the dimension cap?'''
    if max_dim is None:
        max_dim = Options().get_option('max_dim')
    return N ** legs <= max_dim


def _frozen(array):
    array = np.array(array, dtype=np.float64)
    array.setflags(write=False)
    return array


##############################################################################
## Vectors

class TensorVector(object):
    '''A vector in (C^N)^{(x)legs} with real entries.

    Values are immutable: the data array is read-only.

    '''
    def __init__(self, shape, data):
        '''Constructor.

        @param shape The TensorShape the vector lives in.
        @param data Array of exactly shape.dim entries.
        @raises ShapeMismatchError

        '''
        super(TensorVector, self).__init__()
        data = _frozen(np.ravel(data))
        if data.size != shape.dim:
            raise exceptions.ShapeMismatchError(data.size, shape.dim)
        self._shape = shape
        self._data = data

    def __repr__(self):
        return 'TensorVector(N={0}, legs={1}, norm={2:.6g})'.format(self.N,
                self.legs, self.norm)

    def __add__(self, other):
        _check_same_shape(self.shape, other.shape)
        return TensorVector(self._shape, self._data + other.data)

    def __sub__(self, other):
        _check_same_shape(self.shape, other.shape)
        return TensorVector(self._shape, self._data - other.data)

    def __mul__(self, scalar):
        return TensorVector(self._shape, self._data * float(scalar))

    __rmul__ = __mul__

    def inner(self, other):
        '''The inner product <self|other>.'''
        _check_same_shape(self.shape, other.shape)
        return float(np.dot(self._data, other.data))

    def as_tensor(self):
        '''The data as an array with one axis per leg.'''
        return self._data.reshape((self.N,) * self.legs)

    def normalized(self):
        n = self.norm
        if n == 0.0:
            raise exceptions.ZeroVectorError()
        return TensorVector(self._shape, self._data / n)

    def to_json(self):
        '''Plain-data form: shape and flat row-major data.'''
        return {'kind': 'vector', 'N': self.N, 'legs': self.legs,
                'data': self._data.tolist()}

    @property
    def shape(self):
        return self._shape

    @property
    def N(self):
        return self._shape.N

    @property
    def legs(self):
        return self._shape.legs

    @property
    def dim(self):
        return self._shape.dim

    @property
    def data(self):
        '''Read-only flat data array.'''
        return self._data

    @property
    def norm(self):
        return float(np.linalg.norm(self._data))


##############################################################################
## Operators

class TensorOperator(object):
    '''A real linear map (C^N)^{(x)in_legs} -> (C^N)^{(x)out_legs}.

    The data matrix has N^out_legs rows and N^in_legs columns.

    '''
    def __init__(self, in_shape, out_shape, data):
        '''Constructor.

        @param in_shape TensorShape of the domain.
        @param out_shape TensorShape of the codomain.
        @param data Matrix of size out_shape.dim x in_shape.dim.
        @raises ShapeMismatchError

        '''
        super(TensorOperator, self).__init__()
        data = _frozen(data)
        if data.ndim != 2 or data.shape != (out_shape.dim, in_shape.dim):
            raise exceptions.ShapeMismatchError(data.shape,
                    (out_shape.dim, in_shape.dim))
        if in_shape.N != out_shape.N:
            raise exceptions.ShapeMismatchError(in_shape, out_shape)
        self._in_shape = in_shape
        self._out_shape = out_shape
        self._data = data

    def __repr__(self):
        return 'TensorOperator(N={0}, in_legs={1}, out_legs={2})'.format(
                self.N, self._in_shape.legs, self._out_shape.legs)

    def adjoint(self):
        '''The transpose, which is the adjoint for real operators.'''
        return TensorOperator(self._out_shape, self._in_shape, self._data.T)

    def apply(self, v):
        '''Apply this operator to a TensorVector.'''
        _check_same_shape(self._in_shape, v.shape)
        return TensorVector(self._out_shape, self._data.dot(v.data))

    def compose(self, other):
        '''The product self * other.'''
        _check_same_shape(self._in_shape, other.out_shape)
        return TensorOperator(other.in_shape, self._out_shape,
                self._data.dot(other.data))

    def trace(self):
        if self._in_shape != self._out_shape:
            raise exceptions.ShapeMismatchError(self._in_shape,
                    self._out_shape)
        return float(np.trace(self._data))

    def to_json(self):
        '''Plain-data form: shapes and flat row-major data.'''
        return {'kind': 'operator', 'N': self.N,
                'in_legs': self._in_shape.legs,
                'out_legs': self._out_shape.legs,
                'data': self._data.ravel().tolist()}

    @property
    def in_shape(self):
        return self._in_shape

    @property
    def out_shape(self):
        return self._out_shape

    @property
    def N(self):
        return self._in_shape.N

    @property
    def is_square(self):
        return self._in_shape == self._out_shape

    @property
    def data(self):
        '''Read-only data matrix.'''
        return self._data


def _check_same_shape(a, b):
    if a != b:
        raise exceptions.ShapeMismatchError(a, b)


def from_json(obj, max_dim=None):
    '''Rebuild a TensorVector or TensorOperator from its to_json() form.

    >>> v = basis_vector(TensorShape(2, 2), (1, 2))
    >>> from_json(v.to_json()).data.tolist()
    [0.0, 1.0, 0.0, 0.0]

    '''
    kind = obj.get('kind')
    N = obj['N']
    if kind == 'vector':
        return TensorVector(TensorShape(N, obj['legs'], max_dim),
                obj['data'])
    elif kind == 'operator':
        in_shape = TensorShape(N, obj['in_legs'], max_dim)
        out_shape = TensorShape(N, obj['out_legs'], max_dim)
        data = np.asarray(obj['data'], dtype=np.float64)
        return TensorOperator(in_shape, out_shape,
                data.reshape(out_shape.dim, in_shape.dim))
    raise exceptions.BadParameterError('kind', kind)


##############################################################################
## Special vectors

def basis_vector(shape, multi_index):
    '''The elementary tensor e_{i(1)} (x) ... (x) e_{i(k)}.

    @param multi_index Sequence of 1-based indices, one per leg.
    @raises BadParameterError

    >>> basis_vector(TensorShape(3, 1), (1,)).data.tolist()
    [1.0, 0.0, 0.0]
    >>> basis_vector(TensorShape(3, 0), ()).data.tolist()
    [1.0]

    '''
    multi_index = tuple(multi_index)
    if len(multi_index) != shape.legs:
        raise exceptions.BadParameterError('multi_index', multi_index)
    position = 0
    for i in multi_index:
        if isinstance(i, bool) or int(i) != i or not 1 <= i <= shape.N:
            raise exceptions.BadParameterError('multi_index', multi_index)
        position = position * shape.N + (int(i) - 1)
    data = np.zeros(shape.dim)
    data[position] = 1.0
    return TensorVector(shape, data)


def cup_vector(p, r):
    '''The cup vector T_r on 2r legs.

    Built by the recursion T_r = (i (x) T_1 (x) i) T_{r-1} from
    T_1 = sum_i e_i (x) e_i, so T_r has a 1 at every position (i, i-reversed)
    and zeros elsewhere.

    @param p The QParams (only N is used).
    @param r Number of nested cups.

    >>> from wenzllab.qnum import quantum_parameter
    >>> t = cup_vector(quantum_parameter(3), 1)
    >>> t.data.reshape(3, 3).tolist() == np.eye(3).tolist()
    True
    >>> round(t.norm ** 2, 12)
    3.0

    '''
    if isinstance(r, bool) or int(r) != r or r < 0:
        raise exceptions.BadParameterError('r', r)
    N = p.N
    shape = TensorShape(N, 2 * r)
    current = np.ones((1, 1))
    identity = np.eye(N)
    for s in range(1, r + 1):
        # Insert a fresh cup in the middle of the previous one.
        current = np.einsum('ab,ij->aijb', current, identity).reshape(
                N ** s, N ** s)
    return TensorVector(shape, current)


def alternating_vector(shape, i, j):
    '''The alternating elementary tensor e_i (x) e_j (x) e_i (x) ... with
    shape.legs factors.

    @raises BadParameterError if i == j or an index is out of range.

    >>> alternating_vector(TensorShape(3, 3), 1, 2).data.nonzero()[0].tolist()
    [3]

    '''
    for index in (i, j):
        if isinstance(index, bool) or int(index) != index or \
                not 1 <= index <= shape.N:
            raise exceptions.BadParameterError('index', index)
    if i == j:
        raise exceptions.BadParameterError('i, j',
                'alternating vector needs i != j, got {0}'.format(i))
    pattern = [i if s % 2 == 0 else j for s in range(shape.legs)]
    return basis_vector(shape, pattern)


def identity_operator(shape):
    '''The identity on a TensorShape.'''
    return TensorOperator(shape, shape, np.eye(shape.dim))


##############################################################################
## Products and contractions

def tensor_product(a, b, max_dim=None):
    '''Kronecker product of two vectors or of two operators, concatenating
    legs.

    >>> e1 = basis_vector(TensorShape(2, 1), (1,))
    >>> e2 = basis_vector(TensorShape(2, 1), (2,))
    >>> tensor_product(e1, e2).data.tolist()
    [0.0, 1.0, 0.0, 0.0]

    '''
    if a.N != b.N:
        raise exceptions.ShapeMismatchError(a.N, b.N)
    if isinstance(a, TensorVector) and isinstance(b, TensorVector):
        shape = TensorShape(a.N, a.legs + b.legs, max_dim)
        return TensorVector(shape, np.kron(a.data, b.data))
    if isinstance(a, TensorOperator) and isinstance(b, TensorOperator):
        in_shape = TensorShape(a.N, a.in_shape.legs + b.in_shape.legs,
                max_dim)
        out_shape = TensorShape(a.N, a.out_shape.legs + b.out_shape.legs,
                max_dim)
        return TensorOperator(in_shape, out_shape, np.kron(a.data, b.data))
    raise exceptions.ShapeMismatchError(type(a).__name__, type(b).__name__)


def partial_trace_array(matrix, dim_a, dim_b, side):
    '''Partial trace of a (dim_a dim_b) square matrix.

    @param side TRACE_FIRST traces out the first factor (Tr (x) i),
                TRACE_LAST the second (i (x) Tr).

    '''
    matrix = np.asarray(matrix)
    if matrix.shape != (dim_a * dim_b, dim_a * dim_b):
        raise exceptions.ShapeMismatchError(matrix.shape,
                (dim_a * dim_b, dim_a * dim_b))
    blocks = matrix.reshape(dim_a, dim_b, dim_a, dim_b)
    if side == TRACE_FIRST:
        return np.einsum('abad->bd', blocks)
    elif side == TRACE_LAST:
        return np.einsum('abcb->ac', blocks)
    raise exceptions.BadParameterError('side', side)


def partial_trace(op, split, side):
    '''Partial trace of a square operator on split + rest legs.

    @param split Number of legs in the first factor.
    @param side TRACE_FIRST or TRACE_LAST.
    @return TensorOperator on the factor that is kept.
    @raises BadSplitError

    >>> from wenzllab.qnum import quantum_parameter
    >>> t = cup_vector(quantum_parameter(3), 1).data
    >>> shape = TensorShape(3, 2)
    >>> rho = TensorOperator(shape, shape, np.outer(t, t))
    >>> partial_trace(rho, 1, TRACE_FIRST).data.tolist() == np.eye(3).tolist()
    True

    '''
    if not op.is_square:
        raise exceptions.ShapeMismatchError(op.in_shape, op.out_shape)
    legs = op.in_shape.legs
    if isinstance(split, bool) or int(split) != split or \
            not 0 <= split <= legs:
        raise exceptions.BadSplitError(split, legs)
    N = op.N
    kept = legs - split if side == TRACE_FIRST else split
    result = partial_trace_array(op.data, N ** split, N ** (legs - split),
            side)
    shape = TensorShape(N, kept)
    return TensorOperator(shape, shape, result)


def matricize(v, split):
    '''Reshape a vector on split + rest legs into an N^split x N^rest matrix.

    The Frobenius norm of the matrix equals the norm of the vector.

    @raises BadSplitError

    '''
    if isinstance(split, bool) or int(split) != split or \
            not 0 <= split <= v.legs:
        raise exceptions.BadSplitError(split, v.legs)
    return v.data.reshape(v.N ** split, v.N ** (v.legs - split))


def insert_cups(matrix, N, left_legs, r, right_legs):
    '''Apply (i^{(x)left} (x) T_r (x) i^{(x)right}) to the rows of a matrix.

    @param matrix Array with N^(left+right) rows (any number of columns).
    @return Array with N^(left+2r+right) rows.

    '''
    matrix = np.asarray(matrix, dtype=np.float64)
    cols = matrix.shape[1]
    check_cap(N ** (left_legs + 2 * r + right_legs))
    cup = _reversal_matrix(N, r)
    blocks = matrix.reshape(N ** left_legs, N ** right_legs, cols)
    result = np.einsum('abx,st->astbx', blocks, cup)
    return result.reshape(N ** (left_legs + 2 * r + right_legs), cols)


def _reversal_matrix(N, r):
    # Matricized T_r: entry (i, j) is 1 when j is i with its digits reversed.
    if r == 0:
        return np.ones((1, 1))
    digits = np.indices((N,) * r).reshape(r, -1)
    reversed_index = np.zeros(N ** r, dtype=np.int64)
    for position in range(r):
        reversed_index = reversed_index * N + digits[r - 1 - position]
    matrix = np.zeros((N ** r, N ** r))
    matrix[np.arange(N ** r), reversed_index] = 1.0
    return matrix


def kron_apply(a, b, x):
    '''Compute (a (x) b) x without forming the Kronecker product.

    @param a Square matrix on the first factor.
    @param b Square matrix on the second factor.
    @param x Array with a.shape[0] * b.shape[0] rows.

    '''
    x = np.asarray(x)
    cols = x.shape[1]
    blocks = a.dot(x.reshape(a.shape[1], b.shape[1] * cols))
    blocks = np.matmul(b, blocks.reshape(a.shape[0], b.shape[1], cols))
    return blocks.reshape(a.shape[0] * b.shape[0], cols)


# vim: set expandtab tabstop=8 shiftwidth=4 softtabstop=4 textwidth=79
