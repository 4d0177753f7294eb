# -*- Python -*-
# -*- coding: utf-8 -*-

'''wenzllab

Copyright (C) 2026
    wenzl-lab developers
    All rights reserved.
Licensed under the GNU Lesser General Public License version 3.
http://www.gnu.org/licenses/lgpl-3.0.en.html

Numerical toolkit for the irreducible representations of the free orthogonal
quantum groups: quantum integers and theta-nets, Jones-Wenzl projections,
three-vertex isometries, the entanglement of their ranges and the quantum
channels and positive maps built from them.

'''


WENZLLAB_VERSION = '1.0.0'
REPORT_SCHEMA = 'wenzl-lab/1'
JW_CACHE_ENV_VAR = 'WENZLLAB_JW_CACHE'
MAX_DIM_ENV_VAR = 'WENZLLAB_MAX_DIM'


# vim: set expandtab tabstop=8 shiftwidth=4 softtabstop=4 textwidth=79
