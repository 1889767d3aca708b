"""
Command runner behind the ``surgeon`` executable.

Every subcommand produces either a VerificationReport (the ``verify`` family)
or a result dictionary with a ``status`` key; both are written as JSON or CSV
to stdout or ``--output``.
"""

import argparse
import json
import sys
from typing import Any, Dict, List, Optional, Tuple, Union

import pandas as pd

from ..cusped.isometry import apply_isometry, certify_filling, is_symmetry_breaking
from ..cusped.loader import load_manifold_file
from ..cusped.slopes import Multislope, enumerate_short_slopes, normalized_length
from ..families.cable import cable_slope, classify_cable
from ..families.magic import magic_matches
from ..families.params import FamilyParams
from ..families.realizability import LensFamily, realizability_closed_form, realizable_as
from ..families.surgery import compute_Y, compute_Ystar, presentation_kind, ystar_chain
from ..families.whitehead import whitehead_filling
from ..lensspace.chain import ChainDescription, chain_eval, chain_h1_oracle
from ..lensspace.manifold import h1_order, is_homeomorphic, lens_space
from ..rational.continued_fraction import cf_expand
from ..rational.ext_rational import ExtRational
from ..utils.config import config
from ..utils.exceptions import SurgeonError, UnsupportedParameters
from ..utils.logger import get_logger, set_log_level
from .auditor import TableAuditor
from .report import VerificationReport, emit_report, save_document, write_report


Result = Dict[str, Any]


def parse_range(text: str) -> Tuple[int, int]:
    """``a..b`` as an inclusive integer range."""
    low, separator, high = text.partition('..')
    try:
        if not separator:
            raise ValueError(text)
        value_range = (int(low), int(high))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a range like -6..6, got {text!r}")
    if value_range[0] > value_range[1]:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return value_range


def _coefficients(values: List[str]) -> ChainDescription:
    return ChainDescription.parse(','.join(values))


class SurgeonRunner:
    """Runs one subcommand and writes its document."""

    def __init__(self, fmt: Optional[str] = None, output: Optional[str] = None):
        """
        Initialize runner.

        Args:
            fmt: ``json`` or ``csv``; defaults to ``report.default_format``
            output: Output file; None writes to stdout
        """
        self.logger = get_logger(__name__)
        self.fmt = fmt or config.get('report.default_format', 'json')
        self.output = output

    # verification

    def run_verify(self, target: str, table: Optional[str] = None,
                   value_range: Optional[Tuple[int, int]] = None) -> VerificationReport:
        auditor = TableAuditor(value_range=value_range)
        if target == 'dhl':
            return auditor.verify_dhl()
        if target == 'all' or table == 'all':
            report = auditor.verify_dhl()
            return report.extend(auditor.audit_all())
        if not table:
            raise UnsupportedParameters("verify table needs --id")
        return auditor.audit_table(table)

    # lens spaces and chains

    def run_eval_chain(self, coefficients: List[str]) -> Result:
        chain = _coefficients(coefficients)
        result = chain_eval(chain)
        return {'status': 'success', 'chain': str(chain), 'manifold': str(result),
                'h1_order': h1_order(result)}

    def run_oracle(self, coefficients: List[str]) -> Result:
        chain = _coefficients(coefficients)
        return {'status': 'success', 'chain': str(chain), 'h1_order': chain_h1_oracle(chain)}

    def run_cf_expand(self, value: str) -> Result:
        x = ExtRational.parse(value)
        return {'status': 'success', 'value': str(x), 'word': cf_expand(x)}

    def run_lens_homeo(self, p: int, q: int, p2: int, q2: int, oriented: bool) -> Result:
        first, second = lens_space(p, q), lens_space(p2, q2)
        return {
            'status': 'success',
            'first': str(first),
            'second': str(second),
            'oriented': oriented,
            'homeomorphic': is_homeomorphic(first, second, oriented=oriented),
        }

    # families

    def run_family(self, which: str, params: FamilyParams) -> Result:
        result: Result = {'status': 'success', 'params': str(params)}
        if which == 'y':
            manifold = compute_Y(params)
            if manifold is None:
                result.update({'status': 'unsupported', 'manifold': None})
                return result
        else:
            result['chain'] = str(ystar_chain(params))
            result['presentation'] = presentation_kind(params).value
            manifold = compute_Ystar(params)
        result.update({'manifold': str(manifold), 'h1_order': h1_order(manifold)})
        return result

    def run_magic(self, values: List[str]) -> Result:
        filling = [ExtRational.parse(v) for v in values]
        matches = magic_matches(*filling)
        distinct = {str(m.result) for m in matches}
        return {
            'status': 'success' if matches else 'unsupported',
            'filling': [str(v) for v in filling],
            'manifold': str(matches[0].result) if matches else None,
            'consistent': all(is_homeomorphic(matches[0].result, m.result) for m in matches),
            'matches': [{'pattern': m.pattern, 'order': [str(v) for v in m.filling],
                         'manifold': str(m.result)} for m in matches],
            'distinct_results': sorted(distinct),
        }

    def run_whitehead(self, alpha: str, beta: str) -> Result:
        manifold = whitehead_filling(ExtRational.parse(alpha), ExtRational.parse(beta))
        return {'status': 'success' if manifold is not None else 'unsupported',
                'manifold': str(manifold) if manifold is not None else None}

    def run_cable(self, m: str, r: str, k: int) -> Result:
        slope = cable_slope(ExtRational.parse(m), ExtRational.parse(r), k)
        return {'status': 'success', 'slope': str(slope), 'cable_space': str(classify_cable(slope))}

    def run_classify_cable(self, value: str) -> Result:
        return {'status': 'success', 'cable_space': str(classify_cable(ExtRational.parse(value)))}

    def run_realizable(self, p: int, q: int, family: str) -> Result:
        family = LensFamily.of(family)
        witness = realizable_as(lens_space(p, q), family)
        result: Result = {'status': 'success', 'target': str(lens_space(p, q)),
                          'family': family.value, 'realizable': witness is not None}
        if witness is not None:
            result['witness'] = list(witness)
            result['closed_form'] = list(realizability_closed_form(family, *witness))
        return result

    # cusped manifolds

    def run_slopes(self, data_path: str, index: int, max_length: float) -> Result:
        data = load_manifold_file(data_path)
        if not 0 <= index < data.cusp_count:
            raise UnsupportedParameters(f"{data.name} has no cusp {index}")
        cusp = data.cusps[index]
        decimals = int(config.get('cusped.report_decimals', 6))
        slopes = enumerate_short_slopes(cusp, max_length)
        return {
            'status': 'success',
            'manifold': data.name,
            'cusp': index,
            'max_length': max_length,
            'slopes': [{'slope': str(s), 'length': round(normalized_length(s, cusp), decimals)}
                       for s in slopes],
        }

    def run_symmetry(self, data_path: str, multislope: str) -> Result:
        data = load_manifold_file(data_path)
        ms = Multislope.parse(multislope)
        return {
            'status': 'success',
            'manifold': data.name,
            'multislope': str(ms),
            'symmetry_breaking': is_symmetry_breaking(ms, data),
            'images': [str(apply_isometry(g, ms)) for g in data.isometries],
        }

    def run_certify(self, data_path: str, multislope: str) -> Result:
        result = certify_filling(Multislope.parse(multislope), load_manifold_file(data_path))
        result['status'] = 'success'
        return result

    # output

    def render(self, document: Union[VerificationReport, Result]) -> str:
        if isinstance(document, VerificationReport):
            return emit_report(document, self.fmt)
        if self.fmt == 'csv':
            flat = {key: value if not isinstance(value, (list, dict)) else json.dumps(value, sort_keys=True)
                    for key, value in document.items()}
            return pd.DataFrame([flat]).to_csv(index=False, lineterminator="\n")
        return json.dumps(document, indent=2, sort_keys=True, default=str) + "\n"

    def emit(self, document: Union[VerificationReport, Result]) -> None:
        if not self.output:
            sys.stdout.write(self.render(document))
        elif isinstance(document, VerificationReport):
            write_report(document, self.output, self.fmt)
        else:
            path = save_document(self.render(document), self.output)
            self.logger.info(f"Results saved to: {path}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='surgeon',
        description='Exact surgery calculus and verification of lens space surgery tables',
    )
    parser.add_argument('--format', choices=['json', 'csv'], default=None,
                        help='Output format (default: report.default_format)')
    parser.add_argument('--output', default=None, help='Write to this file instead of stdout')
    parser.add_argument('--log-level', default=None,
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'],
                        help='Override logging.level')
    commands = parser.add_subparsers(dest='command', required=True)

    verify = commands.add_parser('verify', help='Audit tables against the closed forms')
    verify.add_argument('target', choices=['dhl', 'table', 'all'])
    verify.add_argument('--id', dest='table', default=None, help='Dataset id, or "all"')
    verify.add_argument('--range', dest='value_range', type=parse_range, default=None,
                        help='Inclusive range for n, b, k, e.g. --range=-4..4')

    chain = commands.add_parser('eval-chain', help='Evaluate surgery on a chain link')
    chain.add_argument('coefficients', nargs='+', help='e.g. 5/2,4 or [2,-1,4]')

    oracle = commands.add_parser('oracle', help='|H1| of an integral chain from its linking matrix')
    oracle.add_argument('coefficients', nargs='+')

    expand = commands.add_parser('cf-expand', help='Negative continued fraction of a rational')
    expand.add_argument('value')

    homeo = commands.add_parser('lens-homeo', help='Compare L(P,Q) with L(P2,Q2)')
    for name in ('p', 'q', 'p2', 'q2'):
        homeo.add_argument(name, type=int)
    homeo.add_argument('--oriented', action='store_true')

    family = commands.add_parser('family', help='Evaluate Y or Y*_k for K_k(m, r, s, b)')
    family.add_argument('which', choices=['y', 'ystar'])
    for name in ('m', 'r', 's', 'b'):
        family.add_argument(f'--{name}', required=True, help='Rational or inf; use --s=-5/2 for fractions')
    family.add_argument('--k', type=int, default=0)

    magic = commands.add_parser('magic', help='Look up a magic manifold filling')
    magic.add_argument('values', nargs=3)

    whitehead = commands.add_parser('whitehead', help='Look up a Whitehead link filling')
    whitehead.add_argument('alpha')
    whitehead.add_argument('beta')

    cable = commands.add_parser('cable', help='Cable space of M*_k(m, r)')
    cable.add_argument('m')
    cable.add_argument('r')
    cable.add_argument('k', type=int)

    classify = commands.add_parser('classify-cable', help='Identify the cable space A(x)')
    classify.add_argument('value')

    realizable = commands.add_parser('realizable', help='Is L(P,Q) some L[3,x,3,y] or L[2,x,4,y]?')
    realizable.add_argument('p', type=int)
    realizable.add_argument('q', type=int)
    realizable.add_argument('--family', choices=['33', '24'], required=True)

    slopes = commands.add_parser('slopes', help='Short slopes on one cusp')
    slopes.add_argument('--cusp', required=True, help='Manifold data file')
    slopes.add_argument('--index', type=int, default=0)
    slopes.add_argument('--max-length', type=float, default=float(config.get('cusped.hk_constant', 7.5832)))

    for name, text in (('symmetry', 'Is a multislope moved by every declared isometry?'),
                       ('certify', 'Certify a filling as hyperbolic and symmetry-breaking')):
        sub = commands.add_parser(name, help=text)
        sub.add_argument('--data', required=True, help='Manifold data file')
        sub.add_argument('--multislope', required=True, help='e.g. "*,1,-2,2,1/2"')

    return parser


def dispatch(runner: SurgeonRunner, args: argparse.Namespace) -> Union[VerificationReport, Result]:
    command = args.command
    if command == 'verify':
        return runner.run_verify(args.target, args.table, args.value_range)
    if command == 'eval-chain':
        return runner.run_eval_chain(args.coefficients)
    if command == 'oracle':
        return runner.run_oracle(args.coefficients)
    if command == 'cf-expand':
        return runner.run_cf_expand(args.value)
    if command == 'lens-homeo':
        return runner.run_lens_homeo(args.p, args.q, args.p2, args.q2, args.oriented)
    if command == 'family':
        params = FamilyParams.of(*(ExtRational.parse(getattr(args, n)) for n in ('m', 'r', 's', 'b')), args.k)
        return runner.run_family(args.which, params)
    if command == 'magic':
        return runner.run_magic(args.values)
    if command == 'whitehead':
        return runner.run_whitehead(args.alpha, args.beta)
    if command == 'cable':
        return runner.run_cable(args.m, args.r, args.k)
    if command == 'classify-cable':
        return runner.run_classify_cable(args.value)
    if command == 'realizable':
        return runner.run_realizable(args.p, args.q, args.family)
    if command == 'slopes':
        return runner.run_slopes(args.cusp, args.index, args.max_length)
    if command == 'symmetry':
        return runner.run_symmetry(args.data, args.multislope)
    return runner.run_certify(args.data, args.multislope)


def main(argv: Optional[List[str]] = None) -> None:
    """Main entry point."""
    args = build_parser().parse_args(argv)
    if args.log_level:
        config.set('logging.level', args.log_level)
        set_log_level(args.log_level, __name__.split('.')[0])

    try:
        runner = SurgeonRunner(fmt=args.format, output=args.output)
        document = dispatch(runner, args)
        runner.emit(document)

        if isinstance(document, VerificationReport):
            sys.exit(document.exit_code)
        sys.exit(0)

    except KeyboardInterrupt:
        print("\nInterrupted by user", file=sys.stderr)
        sys.exit(1)
    except (SurgeonError, OSError) as e:
        print(f"error: {str(e)}", file=sys.stderr)
        sys.exit(1)
    except Exception as e:
        print(f"❌ surgeon failed: {str(e)}", file=sys.stderr)
        sys.exit(1)


if __name__ == "__main__":
    main()
