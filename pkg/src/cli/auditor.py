"""
Table auditor: instantiates dataset rows and checks every printed cell
against the closed-form evaluators.
"""

from concurrent.futures import ThreadPoolExecutor
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..families.magic import magic_filling
from ..families.params import FamilyParams
from ..families.surgery import (
    compute_Y,
    compute_Ystar,
    is_magic_permutation,
    magic_label,
    strongly_invertible_guaranteed,
)
from ..lensspace.manifold import ClosedManifold, is_amphichiral, is_homeomorphic, unoriented_key
from ..rational.ext_rational import ExtRational
from ..utils.config import config
from ..utils.exceptions import DatasetError, MagicInconsistency, SurgeonError
from ..utils.logger import get_logger
from .datasets import AllowlistEntry, TableDataset, TableRow, load_allowlist, load_dataset
from .expressions import evaluate_coefficient, evaluate_manifold
from .report import CheckResult, ReportEntry, VerificationReport, VerificationStatus


Range = Tuple[int, int]

STRONG_INVERSION_MARKER = '§'


def _literal_infinity(template: str) -> bool:
    return template.strip() in ('inf', '∞')


def _compare(expected: ClosedManifold, computed: ClosedManifold) -> VerificationStatus:
    if is_homeomorphic(expected, computed, oriented=True):
        return VerificationStatus.PASS_ORIENTED
    if is_homeomorphic(expected, computed):
        return VerificationStatus.PASS_UNORIENTED
    return VerificationStatus.MISMATCH


def _orientation_note(computed: ClosedManifold, status: VerificationStatus) -> str:
    if status is VerificationStatus.PASS_UNORIENTED:
        return f"equal after mirroring; unoriented class {unoriented_key(computed)}"
    lenses = computed.lenses
    if status is VerificationStatus.PASS_ORIENTED and lenses and len(lenses) == len(computed.summands) \
            and all(is_amphichiral(lens) for lens in lenses):
        return "amphichiral; orientation immaterial"
    return ''


class TableAuditor:
    """Audit table datasets; per-row failures become report entries."""

    def __init__(self, value_range: Optional[Range] = None, max_workers: Optional[int] = None,
                 allowlist: Optional[Iterable[AllowlistEntry]] = None, tables_dir=None):
        """
        Initialize auditor.

        Args:
            value_range: Inclusive range for every symbolic variable
            max_workers: Thread pool size; 1 evaluates rows sequentially
            allowlist: Known discrepancies; defaults to ``data.allowlist``
            tables_dir: Dataset directory; defaults to ``data.tables_dir``
        """
        self.logger = get_logger(__name__)
        audit_config = config.get_audit_config()
        low, high = value_range or audit_config.get('default_range', [-6, 6])
        self.value_range: Range = (int(low), int(high))
        self.max_workers = int(max_workers or audit_config.get('max_workers', 1))
        self.allowlist = list(load_allowlist() if allowlist is None else allowlist)
        self.tables_dir = tables_dir

    def verify_dhl(self) -> VerificationReport:
        """Both lens space fillings of every DHL parameter row."""
        return self.audit_table('dhl')

    def audit_table(self, table: str, value_range: Optional[Range] = None) -> VerificationReport:
        """
        Audit one dataset over the symbolic range.

        Raises:
            UnknownTable: if no dataset has this id
        """
        dataset = load_dataset(table, self.tables_dir)
        value_range = value_range or self.value_range
        self.logger.info(f"Auditing {dataset.table} v{dataset.version}: {len(dataset.rows)} rows "
                         f"over {value_range[0]}..{value_range[1]}")

        if self.max_workers > 1:
            with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
                per_row = list(executor.map(lambda row: self.audit_row(dataset, row, value_range),
                                            dataset.rows))
        else:
            per_row = [self.audit_row(dataset, row, value_range) for row in dataset.rows]

        report = VerificationReport(title=dataset.title)
        for entries in per_row:
            report.entries.extend(entries)

        summary = report.compute_summary()
        self.logger.info(f"{dataset.table}: {summary['total']} entries, {summary['counts']}, "
                         f"{summary['known_mismatches']} known mismatches")
        return report

    def audit_all(self, tables: Optional[Sequence[str]] = None,
                  value_range: Optional[Range] = None) -> VerificationReport:
        tables = tables or config.get('audit.tables', [])
        report = VerificationReport(title='all tables')
        for table in tables:
            report.extend(self.audit_table(table, value_range))
        return report

    def audit_row(self, dataset: TableDataset, row: TableRow, value_range: Range) -> List[ReportEntry]:
        entries = []
        for variables in dataset.instantiations(row, value_range):
            try:
                instance = self._instantiate(row, variables)
            except SurgeonError as e:
                entries.append(self._unsupported_instance(row, variables, str(e)))
                continue
            if instance is None:
                continue
            params, env = instance
            entries.append(self._audit_instance(row, variables, params, env))
        self.logger.debug(f"{row.table}/{row.id}: {len(entries)} instantiations")
        return entries

    def _instantiate(self, row: TableRow, variables: Dict[str, int]
                     ) -> Optional[Tuple[Optional[FamilyParams], Dict[str, ExtRational]]]:
        """Parameters and cell environment, or None when a finite parameter degenerates to ∞."""
        env: Dict[str, ExtRational] = {name: ExtRational(value) for name, value in variables.items()}
        if not row.params:
            return None, env

        values = {}
        for name, template in row.params.items():
            value = evaluate_coefficient(template, env)
            if value.is_infinite and not _literal_infinity(template):
                return None
            values[name] = value
        if not values['k'].is_integer:
            raise DatasetError(f"{row.table}/{row.id}: k must be an integer, got {values['k']}")

        params = FamilyParams(values['m'], values['r'], values['s'], values['b'], int(values['k']))
        for name, value in values.items():
            env.setdefault(name, value)
        return params, env

    def _unsupported_instance(self, row: TableRow, variables: Dict[str, int], message: str) -> ReportEntry:
        described = ' '.join(f"{name}={value}" for name, value in variables.items())
        self.logger.warning(f"{row.table}/{row.id} {described}: parameters not instantiable: {message}")
        check = CheckResult('params', VerificationStatus.UNSUPPORTED, message=message)
        return ReportEntry(table=row.table, row=row.id, params=described, checks=[check])

    def _audit_instance(self, row: TableRow, variables: Dict[str, int],
                        params: Optional[FamilyParams], env: Dict[str, ExtRational]) -> ReportEntry:
        assignment = ' '.join(f"{name}={value}" for name, value in variables.items())
        if params is not None:
            described = f"{assignment} {params}".strip()
        else:
            described = f"{assignment} filling=({', '.join(row.filling or ())})".strip()

        entry = ReportEntry(table=row.table, row=row.id, params=described)
        if row.ystar is not None and params is not None:
            entry.checks.append(self._check_manifold(row, 'ystar', row.ystar, env,
                                                     lambda: compute_Ystar(params)))
        if row.y is not None:
            if row.filling is not None:
                filling = [evaluate_coefficient(v, env) for v in row.filling]
                entry.checks.append(self._check_manifold(row, 'y', row.y, env,
                                                         lambda: magic_filling(*filling)))
            elif params is not None:
                entry.checks.append(self._check_manifold(row, 'y', row.y, env,
                                                         lambda: compute_Y(params)))
        if STRONG_INVERSION_MARKER in row.markers and params is not None:
            entry.checks.append(self._check_strong_inversion(params))
        if row.label is not None and params is not None:
            entry.checks.append(self._check_label(row, env, params))

        for check in entry.checks:
            if check.status is VerificationStatus.MISMATCH:
                self._route_mismatch(row, check, variables, described)
        return entry

    def _check_manifold(self, row: TableRow, name: str, template: str,
                        env: Dict[str, ExtRational], evaluator) -> CheckResult:
        try:
            expected = evaluate_manifold(template, env)
        except SurgeonError as e:
            return CheckResult(name, VerificationStatus.MISMATCH, expected=template,
                               message=f"claimed cell does not evaluate: {str(e)}")

        try:
            computed = evaluator()
        except MagicInconsistency as e:
            return CheckResult(name, VerificationStatus.MISMATCH, expected=str(expected), message=str(e))
        except SurgeonError as e:
            return CheckResult(name, VerificationStatus.UNSUPPORTED, expected=str(expected), message=str(e))

        if computed is None:
            return CheckResult(name, VerificationStatus.UNSUPPORTED, expected=str(expected),
                               message='no closed form for these parameters')
        status = _compare(expected, computed)
        return CheckResult(name, status, expected=str(expected), computed=str(computed),
                           message=_orientation_note(computed, status))

    def _check_strong_inversion(self, params: FamilyParams) -> CheckResult:
        guaranteed = strongly_invertible_guaranteed(params)
        return CheckResult(
            'strong-inversion',
            VerificationStatus.PASS_ORIENTED if guaranteed else VerificationStatus.MISMATCH,
            expected='strongly invertible',
            computed='guaranteed' if guaranteed else 'no guarantee',
        )

    def _check_label(self, row: TableRow, env: Dict[str, ExtRational], params: FamilyParams) -> CheckResult:
        label = [evaluate_coefficient(v, env) for v in row.label]
        ok = is_magic_permutation(label, params)
        return CheckResult(
            'label',
            VerificationStatus.PASS_ORIENTED if ok else VerificationStatus.MISMATCH,
            expected=f"N({', '.join(str(v) for v in label)})",
            computed=f"N({', '.join(str(v) for v in magic_label(params))})",
        )

    def _route_mismatch(self, row: TableRow, check: CheckResult, variables: Dict[str, int],
                        described: str) -> None:
        for known in self.allowlist:
            if known.matches(row.table, row.id, check.check, variables):
                check.known = known.id
                self.logger.info(f"Known discrepancy {known.id} at {row.table}/{row.id} {described}")
                return
        self.logger.warning(f"Mismatch at {row.table}/{row.id} [{check.check}] {described}: "
                            f"expected {check.expected}, computed {check.computed or check.message}")
