# -*- Python -*-
# -*- coding: utf-8 -*-

'''wenzllab

Copyright (C) 2026
    wenzl-lab developers
    All rights reserved.
Licensed under the GNU Lesser General Public License version 3.
http://www.gnu.org/licenses/lgpl-3.0.en.html

Tests for the option table and the small helpers in utils.

'''


import io
import json
import math

import numpy as np
import pytest

from wenzllab import MAX_DIM_ENV_VAR
from wenzllab import exceptions
from wenzllab import utils
from wenzllab.options import Options, option_or


def test_options_singleton(clean_options):
    Options().set_option('samples', 7)
    assert Options().get_option('samples') == 7
    assert Options() is Options()


def test_options_reset_restores_defaults(clean_options):
    Options().set_option('max_dim', 10)
    Options().reset()
    assert Options().get_option('max_dim') == 4096
    assert Options().get_option('log_base') == 'e'


def test_options_unknown():
    with pytest.raises(exceptions.NoSuchOptionError):
        Options().get_option('colour')


def test_option_or(clean_options):
    assert option_or(3, 'restarts') == 3
    assert option_or(None, 'restarts') == 20


def test_max_dim_from_environment(clean_options, monkeypatch):
    monkeypatch.setenv(MAX_DIM_ENV_VAR, '81')
    Options().reset()
    assert Options().get_option('max_dim') == 81


def test_max_dim_bad_environment(clean_options, monkeypatch):
    monkeypatch.setenv(MAX_DIM_ENV_VAR, 'lots')
    with pytest.raises(exceptions.BadParameterError):
        Options().reset()


def test_spawn_rngs_independent_of_order():
    forward = [g.standard_normal() for g in utils.spawn_rngs(3, 4)]
    gens = utils.spawn_rngs(3, 4)
    backward = [g.standard_normal() for g in reversed(gens)][::-1]
    assert forward == backward
    assert len(set(forward)) == 4


def test_log_in_base():
    assert utils.log_in_base(8, '2') == pytest.approx(3.0)
    assert utils.log_in_base(math.e, 'e') == pytest.approx(1.0)


def test_rebase_log_matches_log_in_base():
    for x in (2.0, 3.5, 1000.0):
        for base in ('e', '2', 2):
            assert utils.rebase_log(math.log(x), base) == \
                    pytest.approx(utils.log_in_base(x, base))


def test_to_plain_is_strict_json():
    report = utils.to_plain({'x': np.array([1.0, np.nan]),
                             'y': (np.int32(3), np.bool_(True))})
    text = json.dumps(report, allow_nan=False)
    assert json.loads(text) == {'x': [1.0, 'nan'], 'y': [3, True]}


def test_to_plain_expands_reports():
    class Report(object):
        def as_dict(self):
            return {'value': np.float64(2.5)}
    assert utils.to_plain([Report()]) == [{'value': 2.5}]


def test_status_string_plain():
    assert utils.status_string(True, add_colour=False) == 'PASS'
    assert utils.status_string(False, add_colour=False) == 'FAIL'


def test_colour_not_supported_for_buffers():
    assert not utils.colour_supported(io.StringIO())


# vim: set expandtab tabstop=8 shiftwidth=4 softtabstop=4 textwidth=79
