# -*- Python -*-
# -*- coding: utf-8 -*-

'''wenzllab

Copyright (C) 2026
    wenzl-lab developers
    All rights reserved.
Licensed under the GNU Lesser General Public License version 3.
http://www.gnu.org/licenses/lgpl-3.0.en.html

Singleton containing option values.

'''


import os
import threading

from wenzllab import exceptions
from wenzllab import MAX_DIM_ENV_VAR


##############################################################################
## Options object

class Options(object):
    '''Process-wide option table.

    Every instance is the same object, so settings made by the command line
    front end are seen by the library.

    >>> Options() is Options()
    True
    >>> Options().get_option('max_dim') >= 1
    True
    >>> Options().get_option('no_such_thing')
    Traceback (most recent call last):
    ...
    wenzllab.exceptions.NoSuchOptionError: No such option: no_such_thing

    '''
    _lock = threading.RLock()

    def __new__(cls, *p, **k):
        with cls._lock:
            if not '_the_instance' in cls.__dict__:
                cls._the_instance = object.__new__(cls)
        return cls._the_instance

    def init_options(self):
        self.options = {'max_dim': 4096,
                        'log_base': 'e',
                        'rank_tol': 1e-8,
                        'psd_tol': 1e-8,
                        'restarts': 20,
                        'samples': 200,
                        'optimizer_tol': 1e-12,
                        'optimizer_max_iters': 1000,
                        'workers': 4}
        if MAX_DIM_ENV_VAR in os.environ:
            try:
                self.options['max_dim'] = int(os.environ[MAX_DIM_ENV_VAR])
            except ValueError:
                raise exceptions.BadParameterError(MAX_DIM_ENV_VAR,
                        os.environ[MAX_DIM_ENV_VAR])

    def reset(self):
        '''Restore every option to its default value.'''
        with self._lock:
            self.init_options()

    def set_option(self, option, value):
        with self._lock:
            if not hasattr(self, 'options'):
                self.init_options()
            self.options[option] = value

    def get_option(self, option):
        with self._lock:
            if not hasattr(self, 'options'):
                self.init_options()
            if not option in self.options:
                raise exceptions.NoSuchOptionError(option)
            return self.options[option]


def option_or(value, option):
    '''Return @ref value unless it is None, else the named option.'''
    if value is None:
        return Options().get_option(option)
    return value


# vim: set expandtab tabstop=8 shiftwidth=4 softtabstop=4 textwidth=79
