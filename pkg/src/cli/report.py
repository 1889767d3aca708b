"""
Verification report types and their JSON / CSV serialization.
"""

import json
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import pandas as pd

from ..utils.config import config
from ..utils.logger import get_logger


logger = get_logger(__name__)

DEFAULT_COLUMNS = ['table', 'row', 'params', 'expected', 'computed', 'status', 'oriented', 'note']


class VerificationStatus(Enum):
    PASS_ORIENTED = "pass-oriented"
    PASS_UNORIENTED = "pass-unoriented"
    UNSUPPORTED = "unsupported"
    MISMATCH = "mismatch"

    @property
    def severity(self) -> int:
        return _SEVERITY[self]

    @property
    def is_pass(self) -> bool:
        return self in (VerificationStatus.PASS_ORIENTED, VerificationStatus.PASS_UNORIENTED)


_SEVERITY = {
    VerificationStatus.PASS_ORIENTED: 0,
    VerificationStatus.PASS_UNORIENTED: 1,
    VerificationStatus.UNSUPPORTED: 2,
    VerificationStatus.MISMATCH: 3,
}


@dataclass
class CheckResult:
    """Outcome of one check (``y``, ``ystar``, ``strong-inversion``, ``label``, ``params``) on one instantiation."""

    check: str
    status: VerificationStatus
    expected: str = ''
    computed: str = ''
    message: str = ''
    known: Optional[str] = None

    @property
    def is_known_mismatch(self) -> bool:
        return self.status is VerificationStatus.MISMATCH and self.known is not None


@dataclass
class ReportEntry:
    table: str
    row: str
    params: str
    checks: List[CheckResult] = field(default_factory=list)

    def compute_status(self) -> VerificationStatus:
        """The worst check status; an entry without checks is unsupported."""
        if not self.checks:
            return VerificationStatus.UNSUPPORTED
        return max((c.status for c in self.checks), key=lambda s: s.severity)

    @property
    def status(self) -> VerificationStatus:
        return self.compute_status()

    @property
    def oriented(self) -> bool:
        return self.status is VerificationStatus.PASS_ORIENTED

    @property
    def mismatches(self) -> List[CheckResult]:
        return [c for c in self.checks if c.status is VerificationStatus.MISMATCH]

    @property
    def is_known_mismatch(self) -> bool:
        mismatches = self.mismatches
        return bool(mismatches) and all(c.is_known_mismatch for c in mismatches)

    @property
    def note(self) -> str:
        parts = []
        for c in self.checks:
            if c.known:
                parts.append(c.known)
            if c.message:
                parts.append(f"{c.check}: {c.message}")
        return '; '.join(parts)

    def to_row(self) -> Dict[str, Any]:
        return {
            'table': self.table,
            'row': self.row,
            'params': self.params,
            'expected': '; '.join(f"{c.check}: {c.expected}" for c in self.checks if c.expected),
            'computed': '; '.join(f"{c.check}: {c.computed}" for c in self.checks if c.computed),
            'status': self.status.value,
            'oriented': self.oriented,
            'note': self.note,
        }


@dataclass
class VerificationReport:
    title: str
    entries: List[ReportEntry] = field(default_factory=list)

    def extend(self, other: 'VerificationReport') -> 'VerificationReport':
        self.entries.extend(other.entries)
        return self

    def counts(self) -> Dict[str, int]:
        counts = {status.value: 0 for status in VerificationStatus}
        for entry in self.entries:
            counts[entry.status.value] += 1
        return counts

    @property
    def known_mismatches(self) -> int:
        return sum(1 for e in self.entries if e.status is VerificationStatus.MISMATCH and e.is_known_mismatch)

    @property
    def unexpected_mismatches(self) -> int:
        return sum(1 for e in self.entries if e.status is VerificationStatus.MISMATCH and not e.is_known_mismatch)

    @property
    def exit_code(self) -> int:
        """0 iff every mismatch is on the known-discrepancy list."""
        return 1 if self.unexpected_mismatches else 0

    def compute_summary(self) -> Dict[str, Any]:
        return {
            'total': len(self.entries),
            'counts': self.counts(),
            'known_mismatches': self.known_mismatches,
            'unexpected_mismatches': self.unexpected_mismatches,
            'exit_code': self.exit_code,
        }

    def to_dict(self) -> Dict[str, Any]:
        return {
            'title': self.title,
            'summary': self.compute_summary(),
            'rows': [entry.to_row() for entry in self.entries],
        }

    def to_dataframe(self) -> pd.DataFrame:
        columns = list(config.get('report.csv_columns', DEFAULT_COLUMNS))
        return pd.DataFrame([entry.to_row() for entry in self.entries], columns=columns)


def emit_report(report: VerificationReport, fmt: Optional[str] = None) -> str:
    """
    Serialize a report deterministically.

    Args:
        report: Report to serialize
        fmt: ``json`` or ``csv``; defaults to ``report.default_format``

    Returns:
        The document text
    """
    fmt = (fmt or config.get('report.default_format', 'json')).lower()
    if fmt == 'csv':
        return report.to_dataframe().to_csv(index=False, lineterminator="\n")
    if fmt == 'json':
        return json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n"
    raise ValueError(f"Unsupported report format: {fmt}")


def save_document(text: str, path: Union[str, Path]) -> Path:
    """Write a rendered document, creating parent directories."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline='') as file:
        file.write(text)
    return path


def write_report(report: VerificationReport, path: Union[str, Path], fmt: Optional[str] = None) -> Path:
    path = save_document(emit_report(report, fmt), path)
    logger.info(f"Report with {len(report.entries)} rows written to {path}")
    return path
