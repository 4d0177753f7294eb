# -*- Python -*-
# -*- coding: utf-8 -*-

'''wenzllab

Copyright (C) 2026
    wenzl-lab developers
    All rights reserved.
Licensed under the GNU Lesser General Public License version 3.
http://www.gnu.org/licenses/lgpl-3.0.en.html

Command line front end. Every job writes one report to standard output, as
JSON (the default) or CSV; diagnostics go to standard error.

Exit codes: 0 success, 1 other failure, 2 invariant violation, 3 dimension
cap exceeded, 4 bad arguments.

'''


import argparse
import concurrent.futures
import csv
import json
import logging
import sys
import time

import numpy as np

from wenzllab import exceptions
from wenzllab import REPORT_SCHEMA, WENZLLAB_VERSION
from wenzllab import channel
from wenzllab import entangle
from wenzllab import jones_wenzl
from wenzllab import qnum
from wenzllab import utils
from wenzllab import vertex
from wenzllab.options import Options
from wenzllab.tensor_core import TRACE_FIRST, TRACE_LAST, TensorShape, \
                                 alternating_vector, fits_cap


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_OTHER = 1
EXIT_INVARIANT = 2
EXIT_CAP = 3
EXIT_BAD_ARGS = 4

RESIDUAL_TOL = 1e-9
THETA_TOL = 1e-7


##############################################################################
## Argument handling

class JobArgumentParser(argparse.ArgumentParser):
    '''ArgumentParser that raises instead of exiting on bad input.'''
    def error(self, message):
        raise exceptions.BadSubcommandError(message)


class JobConfig(object):
    '''Validated settings of one job.

    Only the fields a job uses need to be set; missing triple fields are
    None.

    '''
    _positive = ('n', 'restarts', 'max_dim', 'samples', 'd', 'workers',
                 'n_min', 'n_max', 'l_max', 'm_max')
    _non_negative = ('k', 'l', 'm', 'max_k')

    def __init__(self, **kwargs):
        super(JobConfig, self).__init__()
        self.n = kwargs.get('n', 3)
        self.k = kwargs.get('k')
        self.l = kwargs.get('l')
        self.m = kwargs.get('m')
        self.seed = kwargs.get('seed', 0)
        self.restarts = kwargs.get('restarts', 20)
        self.tol = kwargs.get('tol', 1e-12)
        self.max_dim = kwargs.get('max_dim', 4096)
        self.samples = kwargs.get('samples', 200)
        self.format = kwargs.get('format', 'json')
        self.log_base = kwargs.get('log_base', 'e')
        self.d = kwargs.get('d', 1)
        self.scale = kwargs.get('scale')
        self.mu = kwargs.get('mu', 0.4)
        self.alpha = kwargs.get('alpha')
        self.max_k = kwargs.get('max_k', 5)
        self.n_min = kwargs.get('n_min', 3)
        self.n_max = kwargs.get('n_max', 5)
        self.l_max = kwargs.get('l_max', 2)
        self.m_max = kwargs.get('m_max', 2)
        self.direction = kwargs.get('direction', TRACE_FIRST)
        self.workers = kwargs.get('workers', 4)
        self.timing = kwargs.get('timing', False)
        self.validate()

    def validate(self):
        for name in self._positive:
            value = getattr(self, name)
            if value is not None and value < 1:
                raise exceptions.BadParameterError(name, value)
        for name in self._non_negative:
            value = getattr(self, name)
            if value is not None and value < 0:
                raise exceptions.BadParameterError(name, value)
        if self.n < 2:
            raise exceptions.BadParameterError('n', self.n)
        if self.n_min < 3 or self.n_max < self.n_min:
            raise exceptions.BadParameterError('n range',
                    (self.n_min, self.n_max))
        if self.tol <= 0:
            raise exceptions.BadParameterError('tol', self.tol)
        if self.format not in ('json', 'csv'):
            raise exceptions.BadParameterError('format', self.format)
        if self.log_base not in ('e', '2'):
            raise exceptions.BadParameterError('log_base', self.log_base)
        if self.direction not in (TRACE_FIRST, TRACE_LAST):
            raise exceptions.BadParameterError('direction', self.direction)

    def params(self):
        return qnum.quantum_parameter(self.n)

    def triple(self):
        '''The configured triple; every field must be given.'''
        for name in ('k', 'l', 'm'):
            if getattr(self, name) is None:
                raise exceptions.BadParameterError(name, 'required')
        return qnum.AdmissibleTriple(self.k, self.l, self.m)

    def as_dict(self):
        result = dict((name, getattr(self, name)) for name in (
            'n', 'k', 'l', 'm', 'seed', 'restarts', 'tol', 'max_dim',
            'samples', 'format', 'log_base', 'd', 'scale', 'mu', 'alpha',
            'max_k', 'n_min', 'n_max', 'l_max', 'm_max', 'direction',
            'workers'))
        return result

    def apply_options(self):
        '''Copy the relevant fields into the process-wide Options.'''
        options = Options()
        options.set_option('max_dim', self.max_dim)
        options.set_option('log_base', self.log_base)
        options.set_option('restarts', self.restarts)
        options.set_option('samples', self.samples)
        options.set_option('optimizer_tol', self.tol)
        options.set_option('workers', self.workers)


def _add_triple(parser):
    parser.add_argument('--k', type=int, required=True,
            help='Level of the domain irreducible H_k.')
    parser.add_argument('--l', type=int, required=True,
            help='Level of the left output factor H_l.')
    parser.add_argument('--m', type=int, required=True,
            help='Level of the right output factor H_m.')


def build_parser():
    common = JobArgumentParser(add_help=False)
    common.add_argument('--n', type=int, default=3,
            help='N of O_N^+, at least 2. [Default: %(default)s]')
    common.add_argument('--seed', type=int, default=0,
            help='Random seed. [Default: %(default)s]')
    common.add_argument('--restarts', type=int, default=20,
            help='Optimizer restarts. [Default: %(default)s]')
    common.add_argument('--tol', type=float, default=1e-12,
            help='Optimizer convergence tolerance. [Default: %(default)s]')
    common.add_argument('--max-dim', dest='max_dim', type=int, default=4096,
            help='Cap on the ambient dimension N^legs of any tensor. '
            '[Default: %(default)s]')
    common.add_argument('--samples', type=int, default=200,
            help='Random samples per check. [Default: %(default)s]')
    common.add_argument('--format', choices=['json', 'csv'], default='json',
            help='Report format. [Default: %(default)s]')
    common.add_argument('--log-base', dest='log_base', choices=['e', '2'],
            default='e', help='Logarithm base of entropies. '
            '[Default: %(default)s]')
    common.add_argument('--workers', type=int, default=4,
            help='Worker threads. [Default: %(default)s]')
    common.add_argument('--timing', action='store_true', default=False,
            help='Include the wall time in the report.')
    common.add_argument('-v', '--verbose', action='count', default=0,
            help='More diagnostics on standard error. Repeat for debug '
            'output.')
    common.add_argument('-q', '--quiet', action='store_true', default=False,
            help='Only errors on standard error.')

    parser = JobArgumentParser(prog='wenzl-lab',
            description='Jones-Wenzl projections, theta-nets and the '
            'entanglement of equivariant isometries for O_N^+.')
    parser.add_argument('--version', action='version',
            version=WENZLLAB_VERSION)
    sub = parser.add_subparsers(dest='subcommand', metavar='SUBCOMMAND')

    p = sub.add_parser('dims', parents=[common],
            help='Dimensions [k+1]_q of H_0 ... H_max_k.')
    p.add_argument('--max-k', dest='max_k', type=int, default=5,
            help='Highest level. [Default: %(default)s]')
    p = sub.add_parser('theta', parents=[common],
            help='Theta-net by closed form and by trace.')
    _add_triple(p)
    p = sub.add_parser('jw-verify', parents=[common],
            help='Residuals of the Jones-Wenzl projection p_k.')
    p.add_argument('--k', type=int, required=True, help='Level.')
    p = sub.add_parser('isometry', parents=[common],
            help='Build and check the equivariant isometry.')
    _add_triple(p)
    p = sub.add_parser('schmidt', parents=[common],
            help='Schmidt spectra of random and witness vectors.')
    _add_triple(p)
    p.add_argument('--mu', type=float, default=0.4,
            help='Weight of the dimension term. [Default: %(default)s]')
    p.add_argument('--alpha', type=float, default=None,
            help='Also report the Renyi entropy of this order.')
    p = sub.add_parser('max-schmidt', parents=[common],
            help='Maximize the largest Schmidt coefficient.')
    _add_triple(p)
    p = sub.add_parser('saturation', parents=[common],
            help='Schmidt plateau of the saturation witness.')
    _add_triple(p)
    p = sub.add_parser('channel', parents=[common],
            help='1 -> inf norm of an equivariant channel.')
    _add_triple(p)
    p.add_argument('--direction', choices=[TRACE_FIRST, TRACE_LAST],
            default=TRACE_FIRST, help='Which factor to trace out. '
            '[Default: %(default)s]')
    p = sub.add_parser('moe', parents=[common],
            help='Minimum output entropy bracket.')
    _add_triple(p)
    p.add_argument('--direction', choices=[TRACE_FIRST, TRACE_LAST],
            default=TRACE_FIRST, help='Which factor to trace out. '
            '[Default: %(default)s]')
    p = sub.add_parser('choi', parents=[common],
            help='d-positivity threshold and Choi witness.')
    _add_triple(p)
    p.add_argument('--d', type=int, default=1,
            help='Schmidt rank. [Default: %(default)s]')
    p.add_argument('--scale', type=float, default=None,
            help='Scale t of the map. [Default: the threshold]')
    p = sub.add_parser('sweep', parents=[common],
            help='Table over all admissible triples in a range.')
    p.add_argument('--n-min', dest='n_min', type=int, default=3)
    p.add_argument('--n-max', dest='n_max', type=int, default=5)
    p.add_argument('--l-max', dest='l_max', type=int, default=2)
    p.add_argument('--m-max', dest='m_max', type=int, default=2)
    return parser


def config_from_args(args):
    keys = ('n', 'k', 'l', 'm', 'seed', 'restarts', 'tol', 'max_dim',
            'samples', 'format', 'log_base', 'd', 'scale', 'mu', 'alpha',
            'max_k', 'n_min', 'n_max', 'l_max', 'm_max', 'direction',
            'workers', 'timing')
    kwargs = dict((key, getattr(args, key)) for key in keys
            if hasattr(args, key))
    return JobConfig(**kwargs)


##############################################################################
## Jobs

def job_dims(config):
    p = config.params()
    dims = [int(round(qnum.dim_irrep(p, k))) for k in range(config.max_k + 1)]
    return {'dims': dims, 'q': p.q}, True


def job_theta(config):
    p, t = config.params(), config.triple()
    closed = qnum.theta_net(p, t)
    traced = vertex.theta_by_trace(vertex.three_vertex(p, t))
    rel_err = abs(traced - closed) / closed
    result = {'theta_closed': closed, 'theta_trace': traced,
              'rel_err': rel_err, 'triple': t.as_dict()}
    if p.N >= 3:
        exact, coarse = qnum.rd_bound(p, t)
        result['bounds'] = {'rd_exact': exact,
                            'rd_intermediate':
                                qnum.rd_intermediate_bound(p, t),
                            'rd_coarse': coarse}
    result['remark_upbound'] = qnum.remark_upbound_check(p, t)
    return result, rel_err < THETA_TOL


def job_jw_verify(config):
    p = config.params()
    jw = jones_wenzl.jw_projection(p, config.k)
    report = jones_wenzl.verify_jw(jw)
    orth, fixed = jones_wenzl.verify_basis(jones_wenzl.onb_of_irrep(p,
        config.k))
    expected_rank = int(round(qnum.dim_irrep(p, config.k)))
    result = {'projection': report.as_dict(),
              'basis': {'orthonormality': orth, 'invariance': fixed,
                        'dim': expected_rank}}
    ok = report.ok and report.rank == expected_rank and \
            orth <= jones_wenzl.ORTHONORMALITY_TOL and \
            fixed <= jones_wenzl.IDEMPOTENCE_TOL
    return result, ok


def job_isometry(config):
    p, t = config.params(), config.triple()
    iso = vertex.isometry(p, t)
    norm_sq, r_bound = vertex.vertex_norm_check(vertex.three_vertex(p, t))
    residuals = {'isometry': vertex.isometry_residual(iso),
                 'range': vertex.range_residual(iso),
                 'equivariance_proxy': vertex.verify_equivariance_proxy(iso)}
    result = {'triple': t.as_dict(),
              'reduced_shape': list(iso.reduced.shape),
              'theta_closed': iso.theta_closed,
              'theta_trace': iso.theta_trace,
              'theta_rel_err': iso.theta_relative_error,
              'residuals': residuals,
              'smallest_singular_value': vertex.smallest_singular_value(iso),
              'vertex_norm_sq': norm_sq,
              'bounds': {'q_int_r_plus_1': r_bound}}
    ok = all(v <= RESIDUAL_TOL for v in residuals.values()) and \
            norm_sq <= r_bound * (1.0 + RESIDUAL_TOL)
    return result, ok


def job_schmidt(config):
    p, t = config.params(), config.triple()
    iso = vertex.isometry(p, t)
    rng = np.random.default_rng(config.seed)
    coords = entangle.random_unit_coords(rng, iso.domain_dim, 1)[:, 0]
    random_report = entangle.schmidt_spectrum(iso.apply(coords), t.l,
            renyi_order=config.alpha)
    xi = alternating_vector(TensorShape(p.N, t.k), 1, 2)
    witness_report = entangle.schmidt_spectrum(iso.apply_ambient(xi), t.l,
            renyi_order=config.alpha)
    exact = qnum.max_schmidt_value(p, t)
    result = {'triple': t.as_dict(),
              'random': random_report.as_dict(),
              'witness': witness_report.as_dict(),
              'bounds': {'rd_exact': exact},
              'residual': max(random_report.max, witness_report.max) - exact,
              'e_mu': entangle.e_mu_report(p, t, config.mu).as_dict(),
              'range_residual': entangle.schmidt_vectors_in_range(p, t,
                  coords)}
    ok = result['residual'] <= entangle.BOUND_TOL
    return result, ok


def job_max_schmidt(config):
    p, t = config.params(), config.triple()
    result = entangle.max_schmidt_optimizer(p, t, restarts=config.restarts,
            tol=config.tol, seed=config.seed, workers=config.workers)
    return result.as_dict(), result.value <= result.bound + entangle.BOUND_TOL


def job_saturation(config):
    p, t = config.params(), config.triple()
    report = entangle.verify_saturation(p, t)
    result = report.as_dict()
    result['higher_rank'] = entangle.higher_rank_value(p, t)
    return result, report.plateau_ok


def job_channel(config):
    p, t = config.params(), config.triple()
    ch = channel.equivariant_channel(p, t, config.direction)
    norm = channel.channel_norm_1_to_inf(ch, restarts=config.restarts,
            seed=config.seed)
    mixed = np.eye(ch.input_dim) / ch.input_dim
    output = channel.channel_apply(ch, mixed)
    result = {'direction': config.direction,
              'norm': norm.as_dict(),
              'mixed_input': {'output_trace': output.trace(),
                              'output_entropy':
                                  channel.von_neumann_entropy(output)}}
    return result, norm.attained


def job_moe(config):
    p, t = config.params(), config.triple()
    ch = channel.equivariant_channel(p, t, config.direction)
    bracket = channel.moe_bracket(ch, samples=config.samples,
            seed=config.seed)
    result = bracket.as_dict()
    result['direction'] = config.direction
    return result, True


def job_choi(config):
    p, t = config.params(), config.triple()
    threshold = channel.d_positivity_threshold(p, t, config.d)
    scale = config.scale if config.scale is not None else threshold
    report = channel.choi_witness_value(p, t, config.d, scale,
            samples=config.samples, seed=config.seed, workers=config.workers)
    result = report.as_dict()
    window = channel.separating_scale(p, t, config.d)
    result['separating_scale'] = list(window) if window else None
    if p.N >= 3:
        result['threshold_floor'] = channel.threshold_floor(p, t, config.d)
    return result, report.sampling_consistent


def _sweep_row(N, t, config):
    row = {'N': N, 'k': t.k, 'l': t.l, 'm': t.m, 'r': t.r}
    if not fits_cap(N, t.l + t.m) or not fits_cap(N, t.k):
        row['skipped'] = True
        return row
    p = qnum.quantum_parameter(N)
    try:
        exact, coarse = qnum.rd_bound(p, t)
        traced = vertex.theta_by_trace(vertex.three_vertex(p, t))
        ch = channel.equivariant_channel(p, t)
        bracket = channel.moe_bracket(ch, samples=config.samples,
                seed=config.seed)
    except exceptions.DimensionCapError:
        row['skipped'] = True
        return row
    row.update({'skipped': False,
                'rd_exact': exact,
                'rd_coarse': coarse,
                'theta_closed': qnum.theta_net(p, t),
                'theta_trace': traced,
                'moe_lower': bracket.lower,
                'moe_upper': bracket.upper,
                'family_size': qnum.saturation_count(N, t.r),
                'mass': qnum.saturation_mass(p, t)})
    return row


def job_sweep(config):
    work = []
    for N in range(config.n_min, config.n_max + 1):
        for l in range(1, config.l_max + 1):
            for m in range(1, config.m_max + 1):
                for t in sorted(qnum.admissible_triples(l, m),
                        key=lambda t: t.k):
                    work.append((N, t))
    with concurrent.futures.ThreadPoolExecutor(
            max_workers=config.workers) as pool:
        rows = list(pool.map(lambda w: _sweep_row(w[0], w[1], config), work))
    rows.sort(key=lambda r: (r['N'], r['l'], r['m'], r['k']))
    ok = all(r['skipped'] or
            abs(r['theta_trace'] - r['theta_closed']) <=
            THETA_TOL * r['theta_closed'] for r in rows)
    return {'rows': rows}, ok


JOBS = {'dims': job_dims,
        'theta': job_theta,
        'jw-verify': job_jw_verify,
        'isometry': job_isometry,
        'schmidt': job_schmidt,
        'max-schmidt': job_max_schmidt,
        'saturation': job_saturation,
        'channel': job_channel,
        'moe': job_moe,
        'choi': job_choi,
        'sweep': job_sweep}


def run(subcommand, config):
    '''Run one job.

    @return (report, ok) where report is plain data ready for output.
    @raises BadSubcommandError for an unknown job; library errors pass
            through.

    '''
    if subcommand not in JOBS:
        raise exceptions.BadSubcommandError(subcommand)
    start = time.time()
    result, ok = JOBS[subcommand](config)
    report = {'schema': REPORT_SCHEMA,
              'version': WENZLLAB_VERSION,
              'command': subcommand,
              'config': config.as_dict(),
              'result': result,
              'ok': bool(ok)}
    if config.timing:
        elapsed = time.time() - start
        report['wall_time'] = elapsed
        logger.info('%s took %.3f s', subcommand, elapsed)
    return utils.to_plain(report), ok


##############################################################################
## Output

def _cell(value):
    if isinstance(value, (list, dict)):
        return json.dumps(value, sort_keys=True)
    return value


def write_report(report, fmt, dest=sys.stdout):
    if fmt == 'json':
        json.dump(report, dest, sort_keys=True, indent=2)
        dest.write('\n')
        return
    header = dict((k, v) for k, v in report.items() if k != 'result')
    result = report['result']
    if 'rows' in result:
        rows = [utils.flatten_dict(row) for row in result['rows']]
    else:
        rows = [utils.flatten_dict(result)]
    header = utils.flatten_dict(header)
    rows = [dict(list(header.items()) + list(row.items())) for row in rows]
    fields = sorted(set(k for row in rows for k in row))
    writer = csv.DictWriter(dest, fieldnames=fields, lineterminator='\n')
    writer.writeheader()
    for row in rows:
        writer.writerow(dict((k, _cell(v)) for k, v in row.items()))


def _setup_logging(verbose, quiet):
    if quiet:
        level = logging.ERROR
    elif verbose >= 2:
        level = logging.DEBUG
    elif verbose == 1:
        level = logging.INFO
    else:
        level = logging.WARNING
    logging.basicConfig(stream=sys.stderr, level=level,
            format='%(levelname)s:%(name)s:%(message)s')
    logging.getLogger('wenzllab').setLevel(level)


def exit_code_for(err):
    if isinstance(err, exceptions.InvariantViolationError):
        return EXIT_INVARIANT
    if isinstance(err, exceptions.DimensionCapError):
        return EXIT_CAP
    if isinstance(err, (exceptions.BadParameterError,
            exceptions.NonAdmissibleTripleError,
            exceptions.BadSubcommandError,
            exceptions.WitnessUnavailableError)):
        return EXIT_BAD_ARGS
    return EXIT_OTHER


def main(argv=None, stdout=None):
    '''Entry point of the wenzl-lab command.

    @return The process exit code.

    '''
    if argv is None:
        argv = sys.argv[1:]
    if stdout is None:
        stdout = sys.stdout
    options = Options()
    saved = dict((name, options.get_option(name)) for name in ('max_dim',
        'log_base', 'restarts', 'samples', 'optimizer_tol', 'workers'))
    try:
        parser = build_parser()
        args = parser.parse_args(argv)
        if not args.subcommand:
            raise exceptions.BadSubcommandError('no subcommand given')
        _setup_logging(args.verbose, args.quiet)
        config = config_from_args(args)
        config.apply_options()
        report, ok = run(args.subcommand, config)
        write_report(report, config.format, stdout)
        colour = utils.colour_supported(sys.stderr)
        if not args.quiet:
            sys.stderr.write('{0} {1}\n'.format(
                utils.status_string(ok, colour), args.subcommand))
        return EXIT_OK if ok else EXIT_INVARIANT
    except exceptions.WenzlLabError as e:
        sys.stderr.write('wenzl-lab: {0}\n'.format(e))
        return exit_code_for(e)
    except MemoryError:
        sys.stderr.write('wenzl-lab: out of memory\n')
        return EXIT_CAP
    finally:
        for name, value in saved.items():
            options.set_option(name, value)


if __name__ == '__main__':
    sys.exit(main())


# vim: set expandtab tabstop=8 shiftwidth=4 softtabstop=4 textwidth=79
