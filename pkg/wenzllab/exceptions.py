# -*- Python -*-
# -*- coding: utf-8 -*-

'''wenzllab

Copyright (C) 2026
    wenzl-lab developers
    All rights reserved.
Licensed under the GNU Lesser General Public License version 3.
http://www.gnu.org/licenses/lgpl-3.0.en.html

General exception classes.

'''


##############################################################################
## Exceptions

class WenzlLabError(Exception):
    '''Base error class.

    Used for undefined errors that are not core Python errors.

    '''
    pass


class BadParameterError(WenzlLabError):
    '''A parameter was outside its permitted range.'''
    def __str__(self):
        if len(self.args) == 2:
            return 'Bad parameter {0}: {1}'.format(self.args[0], self.args[1])
        return 'Bad parameter: {0}'.format(self.args[0])


class NonAdmissibleTripleError(WenzlLabError):
    '''A triple (k, l, m) does not satisfy the fusion rules.'''
    def __str__(self):
        return 'Triple is not admissible: (k={0}, l={1}, m={2})'.format(
                *self.args[:3])


class DimensionCapError(WenzlLabError):
    '''A tensor would exceed the configured ambient dimension cap.'''
    def __str__(self):
        return 'Dimension {0} exceeds the cap of {1}'.format(self.args[0],
                self.args[1])


class QuantumIntegerOverflowError(WenzlLabError):
    '''A quantum integer does not fit in a float; use the log variant.'''
    def __str__(self):
        return 'Quantum integer [{0}]_q overflows at N={1}'.format(
                self.args[0], self.args[1])


class NumericalFailureError(WenzlLabError):
    '''A computation lost too much accuracy to be trusted.'''
    def __str__(self):
        return 'Numerical failure: {0}'.format(self.args[0])


class InvariantViolationError(WenzlLabError):
    '''A checked identity or inequality did not hold.'''
    def __str__(self):
        return 'Invariant violated: {0}'.format(self.args[0])


class NotPositiveError(WenzlLabError):
    '''An operator expected to be a state is not positive semidefinite or
    does not have unit trace.

    '''
    def __str__(self):
        return 'Not a state: {0}'.format(self.args[0])


class ZeroVectorError(WenzlLabError):
    '''A zero vector was given where a non-zero vector is required.'''
    def __str__(self):
        return 'Zero vector has no Schmidt decomposition.'


class WitnessUnavailableError(WenzlLabError):
    '''No saturation witness family of the requested size exists.'''
    def __str__(self):
        if len(self.args) == 2:
            return ('Witness family of size {0} unavailable; at most {1} '
                    'members exist'.format(self.args[0], self.args[1]))
        return 'No witness family: {0}'.format(self.args[0])


class BadSplitError(WenzlLabError):
    '''A bipartite cut does not fit the number of tensor legs.'''
    def __str__(self):
        return 'Bad split {0} for {1} legs'.format(self.args[0], self.args[1])


class ShapeMismatchError(WenzlLabError):
    '''Two tensors of incompatible shape were combined.'''
    def __str__(self):
        return 'Shape mismatch: {0} vs {1}'.format(self.args[0], self.args[1])


class NoSuchOptionError(WenzlLabError):
    '''The requested option has not been set.'''
    def __str__(self):
        return 'No such option: {0}'.format(self.args[0])


class BadSubcommandError(WenzlLabError):
    '''The command line named an unknown job or gave bad arguments.'''
    def __str__(self):
        return 'Bad command line: {0}'.format(self.args[0])


# vim: set expandtab tabstop=8 shiftwidth=4 softtabstop=4 textwidth=79
