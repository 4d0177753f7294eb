#!/usr/bin/env python
# -*- Python -*-
# -*- coding: utf-8 -*-

"""wenzllab

Copyright (C) 2026
    wenzl-lab developers
    All rights reserved.
Licensed under the GNU Lesser General Public License version 3.
http://www.gnu.org/licenses/lgpl-3.0.en.html

wenzl-lab install script.

"""

import setuptools


setuptools.setup(name='wenzl-lab',
                 version='1.0.0',
                 description='Jones-Wenzl projections, theta-nets and '
                 'entanglement of equivariant isometries for O_N^+.',
                 long_description='Numerical toolkit for the free orthogonal '
                 'quantum groups O_N^+: Jones-Wenzl projections, three-vertex '
                 'intertwiners, Schmidt analysis of the equivariant '
                 'isometries, their quantum channels and the d-positivity of '
                 'the associated Choi maps.',
                 author='wenzl-lab developers',
                 license='LGPL3',
                 classifiers=[
                     'Development Status :: 4 - Beta',
                     'Intended Audience :: Science/Research',
                     'License :: OSI Approved :: GNU Lesser General Public '
                     'License v3 (LGPLv3)',
                     'Natural Language :: English',
                     'Operating System :: OS Independent',
                     'Programming Language :: Python :: 3',
                     'Topic :: Scientific/Engineering :: Mathematics',
                     'Topic :: Scientific/Engineering :: Physics',
                 ],
                 packages=setuptools.find_packages(exclude=['test']),
                 include_package_data=True,
                 python_requires='>=3.7',
                 install_requires=['numpy>=1.17', 'scipy>=1.3'],
                 extras_require={'test': ['pytest', 'hypothesis']},
                 entry_points={
                     'console_scripts': [
                         'wenzl-lab = wenzllab.cli:main',
                     ],
                 },
                 zip_safe=True
                 )


# vim: set expandtab tabstop=8 shiftwidth=4 softtabstop=4 textwidth=79
