# -*- Python -*-
# -*- coding: utf-8 -*-

'''wenzllab

Copyright (C) 2026
    wenzl-lab developers
    All rights reserved.
Licensed under the GNU Lesser General Public License version 3.
http://www.gnu.org/licenses/lgpl-3.0.en.html

Shared fixtures for the test suite.

'''


import pytest

from wenzllab.options import Options
from wenzllab.qnum import admissible_triples, quantum_parameter


# Keep the dense linear algebra in the tests small.
TEST_MAX_DIM = 729


def triples_within(N, l_max=4, m_max=4, max_dim=TEST_MAX_DIM):
    '''Every admissible triple with 1 <= l, m <= the limits whose ambient
    space N^(l+m) fits max_dim.'''
    result = []
    for l in range(1, l_max + 1):
        for m in range(1, m_max + 1):
            if N ** (l + m) > max_dim:
                continue
            result.extend(admissible_triples(l, m))
    return result


def cases(Ns=(3, 4, 5), **kwargs):
    '''(QParams, triple) pairs for parametrizing tests.'''
    return [(quantum_parameter(N), t) for N in Ns
            for t in triples_within(N, **kwargs)]


def case_id(case):
    p, t = case
    return 'N{0}-k{1}l{2}m{3}'.format(p.N, t.k, t.l, t.m)


@pytest.fixture
def clean_options():
    Options().reset()
    yield
    Options().reset()


# vim: set expandtab tabstop=8 shiftwidth=4 softtabstop=4 textwidth=79
