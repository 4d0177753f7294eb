# -*- Python -*-
# -*- coding: utf-8 -*-

'''wenzllab

Copyright (C) 2026
    wenzl-lab developers
    All rights reserved.
Licensed under the GNU Lesser General Public License version 3.
http://www.gnu.org/licenses/lgpl-3.0.en.html

Helper functions shared by the library and the command line front end:
terminal colours, seed splitting, conversion of reports to plain data.

'''

import math
import sys

import numpy as np


##############################################################################
## API functions


term_attributes = {'reset': '00',
                   'bold': '01',
                   'faint': '02',
                   'red': '31',
                   'green': '32',
                   'brown': '33',
                   'blue': '34',
                   }


def build_attr_string(attrs, supported=True):
    '''Build a string that will turn any ANSI shell output the desired
    colour.

    attrs should be a list of keys into the term_attributes table.

    >>> build_attr_string(['bold', 'green'])
    '\\x1b[01;32m'
    >>> build_attr_string('red', supported=False)
    ''

    '''
    if not supported:
        return ''
    if type(attrs) == str:
        attrs = [attrs]
    result = '\033['
    for attr in attrs:
        result += term_attributes[attr] + ';'
    return result[:-1] + 'm'


def colour_supported(term):
    if sys.platform == 'win32':
        return False
    return term.isatty()


def status_string(ok, add_colour=True):
    '''Get a PASS/FAIL marker, optionally coloured.'''
    if ok:
        text, attrs = 'PASS', ['bold', 'green']
    else:
        text, attrs = 'FAIL', ['bold', 'red']
    return build_attr_string(attrs, supported=add_colour) + text + \
            build_attr_string('reset', supported=add_colour)


def spawn_rngs(seed, count):
    '''Split one seed into @ref count independent generators.

    The i-th generator depends only on (seed, i), so parallel work seeded
    this way is reproducible regardless of completion order.

    >>> a = [g.integers(1000) for g in spawn_rngs(7, 3)]
    >>> b = [g.integers(1000) for g in spawn_rngs(7, 3)]
    >>> a == b
    True

    '''
    children = np.random.SeedSequence(seed).spawn(count)
    return [np.random.default_rng(c) for c in children]


def log_in_base(x, base):
    '''Logarithm of x in base 'e' or 2.'''
    if base == 2 or base == '2':
        return math.log2(x)
    return math.log(x)


def rebase_log(value, base):
    '''Express a natural logarithm in base 'e' or 2.

    >>> round(rebase_log(math.log(8.0), '2'), 12)
    3.0

    '''
    if base == 2 or base == '2':
        return value / math.log(2)
    return value


def to_plain(value):
    '''Convert a report value into JSON-compatible plain data.

    Objects with an as_dict() method are expanded, numpy scalars and arrays
    become Python numbers and lists, and non-finite floats become strings so
    the output stays strict JSON.

    >>> to_plain({'a': np.float64(0.5), 'b': [np.int64(2)], 'c': float('inf')})
    {'a': 0.5, 'b': [2], 'c': 'inf'}

    '''
    if hasattr(value, 'as_dict'):
        return to_plain(value.as_dict())
    if isinstance(value, dict):
        return dict((str(k), to_plain(v)) for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return [to_plain(v) for v in value]
    if isinstance(value, np.ndarray):
        return to_plain(value.tolist())
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isnan(value):
            return 'nan'
        if math.isinf(value):
            return 'inf' if value > 0 else '-inf'
        return value
    return value


def flatten_dict(d, prefix=''):
    '''Flatten nested dictionaries using dotted keys.

    Lists of scalars are kept as single cells; lists of dictionaries are
    indexed.

    >>> flatten_dict({'a': {'b': 1, 'c': {'d': 2}}, 'e': 3})
    {'a.b': 1, 'a.c.d': 2, 'e': 3}
    >>> flatten_dict({'bounds': [{'x': 1}, {'x': 2}]})
    {'bounds.0.x': 1, 'bounds.1.x': 2}

    '''
    result = {}
    for key in d:
        name = prefix + str(key)
        value = d[key]
        if isinstance(value, dict):
            result.update(flatten_dict(value, name + '.'))
        elif isinstance(value, list) and value and \
                all(isinstance(v, dict) for v in value):
            for ii, v in enumerate(value):
                result.update(flatten_dict(v, '{0}.{1}.'.format(name, ii)))
        else:
            result[name] = value
    return result


# vim: set expandtab tabstop=8 shiftwidth=4 softtabstop=4 textwidth=79
