# -*- coding: utf-8 -*-
"""
Command Line Runner
Dispatches the verification, census and heuristic subcommands; results go to stdout (or
--output), progress and diagnostics to stderr
"""

import argparse
import logging
import sys
from dataclasses import asdict
from typing import Any, Callable, Dict, List, Optional, Tuple

from .. import constants as C
from ..arith import is_prime, order_mod, factorize, primes_up_to, set_factor_budget
from ..config.loader import ConfigLoader
from ..config.validator import ConfigValidator
from ..ducci import (
    algebraic_orbit, algebraic_period, binary_starts, cycle_multiple, ducci_orbit,
    random_starts, verify_corollary,
)
from ..errors import GaussPeriodError, HypothesisViolated, NotInert, ParameterOutOfRange
from ..experiments import (
    check_ik_properties, check_main_theorem, check_main_theorem_range, outside_support,
    predict_distribution, projection_counterexample, render_scan_csv, scan_records,
    summary_dict, table_rows, theorem_consequences, write_scan_csv, write_summary_json,
    FrequencyTable,
)
from ..heuristics import compute_constants, gv_discrete_sum
from ..identities import (
    norm_identity_one_sign, norm_identity_two_orientation, sun_identity_sign,
    verify_norm_consistency,
)
from ..quadratic import (
    class_data, class_number_imag_forms, class_number_real_adaptive, fundamental_unit,
)
from ..utils import atomic_write_text, to_json_string

logger = logging.getLogger(C.LOGGER_NAME)

DUCCI_CSV_HEADER = 'p,start_encoding,transient,period'
DUCCI_EXHAUSTIVE_LIMIT = 23
DUCCI_INTEGER_STEPS = 10 ** 6

# (exit code, payload); payload is a JSON-ready object or, for csv output, a string
Outcome = Tuple[int, Any]


class UsageError(Exception):
    """Raised instead of exiting when the command line cannot be parsed"""
    pass


class GaussPeriodArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that rejects unknown or abbreviated flags by raising UsageError"""

    def __init__(self, *args, **kwargs):
        kwargs.setdefault('allow_abbrev', False)
        super().__init__(*args, **kwargs)

    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _failure(command: str, p: Optional[int] = None, q: Optional[int] = None, **details) -> Dict:
    first = {key: value for key, value in (('p', p), ('q', q)) if value is not None}
    return {'status': 'failed', 'command': command, 'first_failure': {**first, **details}}


class CLIRunner:
    """Command line runner"""

    def __init__(self, stdout=None, stderr=None):
        self.config_loader = ConfigLoader()
        self.config_validator = ConfigValidator()
        self.config: Dict[str, Any] = {}
        self.stdout = stdout if stdout is not None else sys.stdout
        self.stderr = stderr if stderr is not None else sys.stderr
        self._handler: Optional[logging.Handler] = None

    def create_argument_parser(self) -> GaussPeriodArgumentParser:
        """Create command line argument parser"""
        parser = GaussPeriodArgumentParser(
            prog='gauss-period-orders',
            description='Orders of Gauss periods, real quadratic units and class numbers',
            formatter_class=argparse.RawDescriptionHelpFormatter,
            epilog="""
Usage examples:
  gauss-period-orders verify-theorem --p 37 --q 2
  gauss-period-orders verify-theorem-range --p-max 200 --q-set 2 3 5
  gauss-period-orders predict --q 17
  gauss-period-orders scan --q 5 --p-max 100000 --jobs 4 --checkpoint scan5.ckpt
  gauss-period-orders --format csv ducci --p 13 --exhaustive

Exit codes: 0 all checks passed, 1 a check failed, 2 bad arguments or hypotheses
            """
        )

        parser.add_argument('--config', default=None, help='Configuration file (YAML or JSON)')
        parser.add_argument('--log-level', dest='log_level', default=None,
                            choices=['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'],
                            help='Log level for stderr diagnostics')
        parser.add_argument('--output', default=None, help='Write the result to this file instead of stdout')
        parser.add_argument('--format', default='json', choices=['json', 'csv'],
                            help='Result format (default: json; csv for row-oriented results)')
        parser.add_argument('--precision', type=int, default=None,
                            help='Starting working precision in bits for class numbers')
        parser.add_argument('--max-precision', dest='max_precision', type=int, default=None,
                            help='Precision ceiling in bits for class numbers')
        parser.add_argument('--factor-max-iterations', dest='factor_max_iterations', type=int,
                            default=None, help='Pollard rho iteration budget')

        sub = parser.add_subparsers(dest='command', metavar='COMMAND', parser_class=GaussPeriodArgumentParser)
        sub.required = True

        cmd = sub.add_parser('verify-theorem', help='Check gcd(ind alpha, q^2-1) = ind(eps^h mod q) for one pair (p, q)')
        cmd.add_argument('--p', type=int, required=True, help='Prime p = 5 mod 8')
        cmd.add_argument('--q', type=int, required=True, help='Prime q with <-1, q> = (Z/pZ)*')

        cmd = sub.add_parser('verify-theorem-range', help='Check the index identity for every valid pair')
        cmd.add_argument('--p-max', dest='theorem_p_max', type=int, default=None,
                         help=f'Largest p (default: {C.THEOREM_P_MAX})')
        cmd.add_argument('--q-set', dest='q_set', type=int, nargs='+', default=None,
                         help='Primes q to test (default: 2 3 5 7 11 13 17 19)')

        cmd = sub.add_parser('predict', help='Predicted distribution of ind(eps_p mod q)')
        cmd.add_argument('--q', type=int, required=True)

        cmd = sub.add_parser('scan', help='Observed distribution of ind(eps_p mod q)')
        cmd.add_argument('--q', type=int, required=True)
        cmd.add_argument('--p-max', dest='scan_p_max', type=int, default=None,
                         help=f'Largest p (default: {C.SCAN_P_MAX})')
        cmd.add_argument('--filter', default=None, choices=list(C.SCAN_FILTERS))
        cmd.add_argument('--checkpoint', default=None, help='Resumable checkpoint file')
        cmd.add_argument('--jobs', type=int, default=None, help='Worker processes')
        cmd.add_argument('--flush-every', dest='flush_every', type=int, default=None,
                         help='Primes per checkpoint commit')
        cmd.add_argument('--csv', default=None, help='Also write the scan rows to this CSV file')
        cmd.add_argument('--summary', default=None, help='Also write the summary JSON to this file')
        cmd.add_argument('--check-table', dest='check_table', action='store_true',
                         help='Require the published observed frequencies within --tolerance')
        cmd.add_argument('--tolerance', type=float, default=None)

        cmd = sub.add_parser('identities', help='Exact cyclotomic norm identities')
        cmd.add_argument('--p-max', dest='identities_p_max', type=int, default=200)
        cmd.add_argument('--a-values', dest='a_values', type=int, nargs='+', default=[1, 2, 3])

        cmd = sub.add_parser('class-numbers', help='h_p, h(-p) and their cross-checks')
        group = cmd.add_mutually_exclusive_group(required=True)
        group.add_argument('--p', type=int)
        group.add_argument('--p-max', dest='class_p_max', type=int)

        cmd = sub.add_parser('ducci', help='Eventual periods of Ducci sequences of length p')
        cmd.add_argument('--p', type=int, required=True)
        mode = cmd.add_mutually_exclusive_group()
        mode.add_argument('--exhaustive', action='store_true', help='Every binary start')
        mode.add_argument('--samples', type=int, default=None, help='Seeded random integer starts')
        cmd.add_argument('--seed', type=int, default=None)
        cmd.add_argument('--entry-bound', dest='entry_bound', type=int, default=None)
        cmd.add_argument('--exhaustive-max-p', dest='exhaustive_max_p', type=int, default=None,
                         help='Largest p handled by direct cycle detection')

        cmd = sub.add_parser('heuristics', help='Heuristic constants')
        cmd.add_argument('--k-max', dest='k_max', type=int, default=None)
        cmd.add_argument('--r-min', dest='r_min', type=int, default=None)
        cmd.add_argument('--rounded-constant', dest='rounded_constant', action='store_true',
                         help='Use C = 0.66 instead of the full twin prime constant')
        cmd.add_argument('--discrete', action='store_true',
                         help='Also compute the finite Sophie Germain sum (sieves to 10^7)')

        cmd = sub.add_parser('ik-scan', help='Divisibility and 2-adic properties of ind(eps_p mod q)')
        cmd.add_argument('--q', type=int, required=True)
        cmd.add_argument('--p-max', dest='scan_p_max', type=int, default=None)
        cmd.add_argument('--jobs', type=int, default=None)

        cmd = sub.add_parser('lemma', help='Index of projections between cyclic groups')
        cmd.add_argument('--n-max', dest='n_max', type=int, default=360)

        cmd = sub.add_parser('corollary', help='Divisibility by 3 equivalences for q = 2')
        cmd.add_argument('--p', type=int, required=True)
        cmd.add_argument('--samples', type=int, default=None)
        cmd.add_argument('--seed', type=int, default=None)
        cmd.add_argument('--entry-bound', dest='entry_bound', type=int, default=None)
        cmd.add_argument('--exhaustive-max-p', dest='exhaustive_max_p', type=int, default=None)

        cmd = sub.add_parser('consequences', help='What the index identity says about ind(alpha) for one p')
        cmd.add_argument('--q', type=int, required=True)
        cmd.add_argument('--p', type=int, required=True)

        return parser

    def setup_logging(self):
        """Install a single stderr handler on the library logger"""
        settings = self.config['gaussperiod']['logging']
        if self._handler is not None:
            logger.removeHandler(self._handler)
        self._handler = logging.StreamHandler(self.stderr)
        self._handler.setFormatter(logging.Formatter(settings.get('format')))
        logger.addHandler(self._handler)
        logger.setLevel(settings.get('level', 'INFO').upper())
        logger.propagate = False

    @property
    def _gp(self) -> Dict[str, Any]:
        return self.config['gaussperiod']

    def _precision(self) -> Tuple[int, int]:
        cn = self._gp['class_number']
        return cn['precision_bits'], cn['max_precision_bits']

    def _emit(self, args, payload: Any):
        text = payload if isinstance(payload, str) else to_json_string(payload, indent=2) + '\n'
        if args.output:
            atomic_write_text(args.output, text)
        else:
            self.stdout.write(text)
            self.stdout.flush()

    # Subcommands

    def _verify_theorem(self, args) -> Outcome:
        precision, ceiling = self._precision()
        report = check_main_theorem(args.p, args.q, precision_bits=precision, max_precision_bits=ceiling)
        if not report.equal:
            return C.EXIT_ASSERTION_FAILED, _failure(args.command, report.p, report.q,
                                                     lhs=report.lhs, rhs=report.rhs)
        return C.EXIT_OK, asdict(report)

    def _verify_theorem_range(self, args) -> Outcome:
        theorem = self._gp['theorem']
        precision, ceiling = self._precision()
        reports = check_main_theorem_range(theorem['p_max'], theorem['q_set'], precision, ceiling)
        failed = [r for r in reports if not r.equal]
        if failed:
            first = failed[0]
            payload = _failure(args.command, first.p, first.q, lhs=first.lhs, rhs=first.rhs)
            payload['mismatches'] = len(failed)
            return C.EXIT_ASSERTION_FAILED, payload
        if args.format == 'csv':
            rows = ['p,q,lhs,rhs,h_p'] + [f"{r.p},{r.q},{r.lhs},{r.rhs},{r.h_p}" for r in reports]
            return C.EXIT_OK, '\n'.join(rows) + '\n'
        return C.EXIT_OK, {'status': 'ok', 'p_max': theorem['p_max'], 'q_set': theorem['q_set'],
                           'pairs': len(reports), 'reports': [asdict(r) for r in reports]}

    def _predict(self, args) -> Outcome:
        return C.EXIT_OK, predict_distribution(args.q)

    def _scan(self, args) -> Outcome:
        scan = self._gp['scan']
        records = scan_records(args.q, scan['p_max'], scan['filter'], args.checkpoint,
                               jobs=scan['jobs'], flush_every=scan['flush_every'])
        table = FrequencyTable.from_records(args.q, scan['p_max'], scan['filter'], records)
        predicted = predict_distribution(args.q)
        summary = summary_dict(table, predicted)
        if args.csv:
            write_scan_csv(args.csv, records)
        if args.summary:
            write_summary_json(args.summary, table, predicted)

        stray = outside_support(table, predicted)
        if stray:
            first = next(r for r in records if r.index_unit in stray)
            return C.EXIT_ASSERTION_FAILED, _failure(args.command, first.p, first.q,
                                                     index_unit=first.index_unit,
                                                     reason='index outside predicted support')
        if args.check_table:
            for row in table_rows(args.q):
                observed = table.fraction(row.index) or 0.0
                if abs(observed - row.observed) > scan['tolerance']:
                    return C.EXIT_ASSERTION_FAILED, _failure(
                        args.command, q=args.q, index_unit=row.index, observed=observed,
                        published=row.observed, reason='observed frequency out of tolerance')
        if args.format == 'csv':
            return C.EXIT_OK, render_scan_csv(records)
        return C.EXIT_OK, summary

    def _identities(self, args) -> Outcome:
        precision, ceiling = self._precision()
        rows = []
        for p in (int(v) for v in primes_up_to(args.identities_p_max)):
            if p % 4 != 1:
                continue
            h = class_number_real_adaptive(p, precision, ceiling)
            sun = {a: sun_identity_sign(p, a, h) for a in args.a_values if a % p}
            row = {
                'p': p,
                'h_p': h,
                'norm_one_sign': norm_identity_one_sign(p, h),
                'norm_two_orientation': norm_identity_two_orientation(p, h),
                'sun_signs': sun,
                'consistency': verify_norm_consistency(p),
            }
            rows.append(row)
            failures = [name for name, ok in (
                ('norm_one', row['norm_one_sign'] is not None),
                ('norm_two', row['norm_two_orientation'] is not None),
                ('sun', all(sign is not None for sign in sun.values())),
                ('consistency', row['consistency'])) if not ok]
            if failures:
                return C.EXIT_ASSERTION_FAILED, _failure(args.command, p, identity=failures[0])
        return C.EXIT_OK, {'status': 'ok', 'p_max': args.identities_p_max, 'results': rows}

    def _class_numbers(self, args) -> Outcome:
        precision, ceiling = self._precision()
        if args.p is not None:
            primes = [args.p]
        else:
            primes = [int(v) for v in primes_up_to(args.class_p_max) if v % 4 == 1]
        rows = []
        for p in primes:
            data = class_data(p, precision, ceiling)
            forms = class_number_imag_forms(p)
            unit = fundamental_unit(p)
            if forms != data.h_imag:
                return C.EXIT_ASSERTION_FAILED, _failure(args.command, p, h_imag=data.h_imag,
                                                         forms=forms)
            rows.append({**asdict(data), 'forms_count': forms, 'x': unit.x, 'y': unit.y,
                         'log_unit': unit.log()})
        if args.p is not None:
            return C.EXIT_OK, rows[0]
        return C.EXIT_OK, {'status': 'ok', 'p_max': args.class_p_max, 'results': rows}

    def _ducci(self, args) -> Outcome:
        ducci = self._gp['ducci']
        p = args.p
        if not is_prime(p) or p < 3:
            raise ParameterOutOfRange("p", p, f"p must be an odd prime, got {p}")
        if args.exhaustive:
            if p > DUCCI_EXHAUSTIVE_LIMIT:
                raise ParameterOutOfRange("p", p, f"--exhaustive is limited to p <= {DUCCI_EXHAUSTIVE_LIMIT}")
            starts = binary_starts(p)
        else:
            starts = random_starts(p, ducci['samples'], ducci['seed'], ducci['entry_bound'])

        multiple = cycle_multiple(p)
        two_primitive = order_mod(2, p, factorize(p - 1)) == p - 1
        longest = algebraic_period(p) if two_primitive else multiple
        brute = p <= ducci['exhaustive_max_p']
        # integer starts need extra steps before they reach a scaled binary vector
        max_steps = multiple + p * 2 ** ((p - 1) // 2) + DUCCI_INTEGER_STEPS

        rows = []
        for start in starts:
            orbit = ducci_orbit(start, max_steps) if brute else algebraic_orbit(start)
            rows.append((start.encoding(), orbit.transient, orbit.period))
            if longest % orbit.period:
                return C.EXIT_ASSERTION_FAILED, _failure(args.command, p, start=start.encoding(),
                                                         period=orbit.period, bound=longest)
        largest = max(period for _, _, period in rows)
        if args.exhaustive and two_primitive and largest != longest:
            return C.EXIT_ASSERTION_FAILED, _failure(args.command, p, largest=largest,
                                                     expected=longest)
        if args.format == 'csv':
            lines = [DUCCI_CSV_HEADER] + [f"{p},{enc},{t},{period}" for enc, t, period in rows]
            return C.EXIT_OK, '\n'.join(lines) + '\n'
        return C.EXIT_OK, {'status': 'ok', 'p': p, 'starts': len(rows), 'largest_period': largest,
                           'period_bound': longest,
                           'rows': [{'start': enc, 'transient': t, 'period': period}
                                    for enc, t, period in rows]}

    def _heuristics(self, args) -> Outcome:
        settings = self._gp['heuristics']
        constants = compute_constants(settings['k_max'], settings['r_min'],
                                      bool(settings['rounded_constant']))
        payload: Dict[str, Any] = asdict(constants)
        values = [constants.cohen_lenstra_3, constants.combined_prob, constants.gv_expectation]
        if not all(0 < v < 1 for v in values):
            return C.EXIT_ASSERTION_FAILED, _failure(args.command, reason='constant outside (0, 1)',
                                                     constants=payload)
        if args.discrete:
            discrete = gv_discrete_sum(settings['r_min'])
            payload['gv_discrete_sum'] = discrete
            if discrete >= constants.gv_expectation:
                return C.EXIT_ASSERTION_FAILED, _failure(args.command, reason='discrete sum exceeds integral',
                                                         constants=payload)
        return C.EXIT_OK, payload

    def _ik_scan(self, args) -> Outcome:
        if args.q == 2:
            raise ParameterOutOfRange("q", 2, "the index properties concern odd q")
        scan = self._gp['scan']
        records = scan_records(args.q, scan['p_max'], C.FILTER_1_MOD_4, jobs=scan['jobs'],
                               flush_every=scan['flush_every'])
        violation = check_ik_properties(records)
        if violation is not None:
            return C.EXIT_ASSERTION_FAILED, _failure(args.command, violation.p, violation.q,
                                                     index_unit=violation.index_unit,
                                                     order=violation.order_unit)
        orders_mod_8 = sorted({r.order_unit % 8 for r in records})
        return C.EXIT_OK, {'status': 'ok', 'q': args.q, 'p_max': scan['p_max'],
                           'records': len(records), 'orders_mod_8': orders_mod_8}

    def _lemma(self, args) -> Outcome:
        counterexample = projection_counterexample(args.n_max)
        if counterexample is not None:
            n, m, g = counterexample
            return C.EXIT_ASSERTION_FAILED, _failure(args.command, N=n, M=m, g=g)
        return C.EXIT_OK, {'status': 'ok', 'n_max': args.n_max}

    def _corollary(self, args) -> Outcome:
        ducci = self._gp['ducci']
        precision, ceiling = self._precision()
        h_p = class_number_real_adaptive(args.p, precision, ceiling) if args.p % 4 == 1 else None
        report = verify_corollary(args.p, ducci['exhaustive_max_p'], ducci['samples'],
                                  ducci['seed'], ducci['entry_bound'], h_p=h_p)
        if not report.consistent:
            return C.EXIT_ASSERTION_FAILED, _failure(args.command, report.p, 2, report=asdict(report))
        return C.EXIT_OK, asdict(report)

    def _consequences(self, args) -> Outcome:
        consequences = theorem_consequences(args.q, args.p)
        return C.EXIT_OK, {'q': args.q, 'p': args.p,
                           'consequences': [asdict(c) for c in consequences]}

    def _dispatch(self) -> Dict[str, Callable[[Any], Outcome]]:
        return {
            'verify-theorem': self._verify_theorem,
            'verify-theorem-range': self._verify_theorem_range,
            'predict': self._predict,
            'scan': self._scan,
            'identities': self._identities,
            'class-numbers': self._class_numbers,
            'ducci': self._ducci,
            'heuristics': self._heuristics,
            'ik-scan': self._ik_scan,
            'lemma': self._lemma,
            'corollary': self._corollary,
            'consequences': self._consequences,
        }

    def run(self, argv: Optional[List[str]] = None) -> int:
        """Run one subcommand and return its exit code"""
        parser = self.create_argument_parser()
        try:
            args = parser.parse_args(argv)
        except UsageError as e:
            self.stderr.write(f"{e}\n")
            return C.EXIT_BAD_ARGUMENTS
        except SystemExit as e:
            # --help
            return int(e.code or 0)

        self.config = self.config_loader.load_config(args)
        is_valid, errors, warnings = self.config_validator.validate_config(self.config)
        self.setup_logging()
        if not is_valid:
            logger.error("Configuration validation failed:")
            for error in errors:
                logger.error(f"   - {error}")
            return C.EXIT_BAD_ARGUMENTS
        for warning in warnings:
            logger.warning(f"Configuration warning: {warning}")
        logger.debug(self.config_loader.get_config_summary(self.config))
        set_factor_budget(self._gp['factor']['max_iterations'])

        try:
            code, payload = self._dispatch()[args.command](args)
        except (HypothesisViolated, NotInert, ParameterOutOfRange) as e:
            logger.error(str(e))
            self.stderr.write(f"{e}\n")
            return C.EXIT_BAD_ARGUMENTS
        except GaussPeriodError as e:
            logger.error(f"{type(e).__name__}: {e}")
            code, payload = C.EXIT_ASSERTION_FAILED, {'status': 'error', 'command': args.command,
                                                      'error': type(e).__name__, 'message': str(e)}
        if code != C.EXIT_OK:
            logger.error(f"{args.command} failed: {to_json_string(payload)}")
        self._emit(args, payload)
        return code


def main(argv: Optional[List[str]] = None):
    """Main entry function"""
    sys.exit(CLIRunner().run(argv))


if __name__ == '__main__':
    main()
