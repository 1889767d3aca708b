from .expressions import evaluate_coefficient, evaluate_manifold, variables_in
from .datasets import (
    AllowlistEntry,
    TableDataset,
    TableRow,
    available_tables,
    load_allowlist,
    load_dataset,
)
from .report import CheckResult, ReportEntry, VerificationReport, VerificationStatus, emit_report, write_report
from .auditor import TableAuditor
