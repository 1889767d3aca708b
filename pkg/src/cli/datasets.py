"""
Table datasets and the known-discrepancy allowlist.

Each audited table is one YAML file under ``data.tables_dir``; rows hold
parameter templates and claimed manifolds exactly as printed, with
corrections recorded as data edits carrying a ``note``.
"""

import itertools
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

import yaml

from ..utils.config import config
from ..utils.exceptions import DatasetError, UnknownTable
from ..utils.logger import get_logger
from .expressions import variables_in


logger = get_logger(__name__)

PARAMETERS = ('m', 'r', 's', 'b', 'k')


@dataclass(frozen=True)
class TableRow:
    """One printed row: parameter templates, claimed cells and markers."""

    table: str
    id: str
    params: Dict[str, str]
    y: Optional[str] = None
    ystar: Optional[str] = None
    label: Optional[Tuple[str, str, str]] = None
    filling: Optional[Tuple[str, str, str]] = None
    markers: Tuple[str, ...] = ()
    note: str = ''

    def templates(self) -> List[str]:
        cells = list(self.params.values()) + [self.y, self.ystar]
        cells.extend(self.label or ())
        cells.extend(self.filling or ())
        return [c for c in cells if c is not None]

    def variables(self, declared: Sequence[str]) -> List[str]:
        used = variables_in(self.templates())
        unknown = used - set(declared)
        if unknown:
            raise DatasetError(f"{self.table}/{self.id} uses undeclared variables {sorted(unknown)}")
        return [v for v in declared if v in used]

    def __hash__(self) -> int:
        return hash((self.table, self.id))


@dataclass
class TableDataset:
    table: str
    title: str
    version: int
    variables: List[str]
    rows: List[TableRow] = field(default_factory=list)
    source: str = ''

    def instantiations(self, row: TableRow, value_range: Tuple[int, int]) -> Iterator[Dict[str, int]]:
        """Every assignment of the row's variables over the inclusive range."""
        names = row.variables(self.variables)
        low, high = value_range
        for values in itertools.product(range(low, high + 1), repeat=len(names)):
            yield dict(zip(names, values))


def _as_text(value: Any) -> str:
    if isinstance(value, bool):
        raise DatasetError(f"Unexpected boolean cell {value!r}")
    return str(value).strip()


def _triple(raw: Any, what: str, where: str) -> Optional[Tuple[str, str, str]]:
    if raw is None:
        return None
    if not isinstance(raw, list) or len(raw) != 3:
        raise DatasetError(f"{where}: {what} must be a list of three coefficients")
    return tuple(_as_text(v) for v in raw)


def _parse_row(table: str, raw: Dict[str, Any]) -> TableRow:
    where = f"{table}/{raw.get('id', '?')}"
    if 'id' not in raw:
        raise DatasetError(f"{where}: row without id")
    params = {name: _as_text(raw[name]) for name in PARAMETERS if name in raw}
    if raw.get('filling') is None:
        missing = [name for name in PARAMETERS if name not in params]
        if missing:
            raise DatasetError(f"{where}: missing parameters {missing}")
    return TableRow(
        table=table,
        id=str(raw['id']),
        params=params,
        y=_as_text(raw['Y']) if raw.get('Y') is not None else None,
        ystar=_as_text(raw['Ystar']) if raw.get('Ystar') is not None else None,
        label=_triple(raw.get('label'), 'label', where),
        filling=_triple(raw.get('filling'), 'filling', where),
        markers=tuple(str(m) for m in raw.get('markers', []) or []),
        note=str(raw.get('note', '') or ''),
    )


def load_dataset_file(path: Path) -> TableDataset:
    """Parse one dataset file."""
    try:
        with open(path, 'r', encoding='utf-8') as file:
            document = yaml.safe_load(file)
    except yaml.YAMLError as e:
        raise DatasetError(f"{path}: {str(e)}")
    if not isinstance(document, dict) or 'table' not in document:
        raise DatasetError(f"{path}: not a table dataset")

    table = str(document['table'])
    dataset = TableDataset(
        table=table,
        title=str(document.get('title', table)),
        version=int(document.get('version', 1)),
        variables=[str(v) for v in document.get('variables', []) or []],
        rows=[_parse_row(table, raw) for raw in document.get('rows', [])],
        source=str(path),
    )
    logger.debug(f"Loaded {table} v{dataset.version} with {len(dataset.rows)} rows from {path}")
    return dataset


def available_tables(tables_dir: Optional[Path] = None) -> Dict[str, Path]:
    """Map of dataset id to file, read from the ``table`` key of every YAML file."""
    tables_dir = Path(tables_dir) if tables_dir else config.resolve_path('data.tables_dir')
    registry: Dict[str, Path] = {}
    for path in sorted(tables_dir.glob('*.yaml')):
        with open(path, 'r', encoding='utf-8') as file:
            document = yaml.safe_load(file) or {}
        if 'table' in document:
            registry[str(document['table'])] = path
    return registry


def load_dataset(table: str, tables_dir: Optional[Path] = None) -> TableDataset:
    """
    Load a dataset by id.

    Raises:
        UnknownTable: if no dataset file declares this id
    """
    registry = available_tables(tables_dir)
    if table not in registry:
        raise UnknownTable(f"Unknown table {table!r}; known tables: {', '.join(sorted(registry))}")
    return load_dataset_file(registry[table])


@dataclass(frozen=True)
class AllowlistEntry:
    """A documented discrepancy: mismatches it matches do not fail the run."""

    id: str
    table: str
    row: str
    check: str
    note: str = ''
    when: Tuple[Tuple[str, int], ...] = ()

    def matches(self, table: str, row: str, check: str, env: Dict[str, int]) -> bool:
        if (self.table, self.row, self.check) != (table, row, check):
            return False
        return all(env.get(name) == value for name, value in self.when)


def load_allowlist(path: Optional[Path] = None) -> List[AllowlistEntry]:
    path = Path(path) if path else config.resolve_path('data.allowlist')
    try:
        with open(path, 'r', encoding='utf-8') as file:
            document = yaml.safe_load(file) or {}
    except FileNotFoundError:
        logger.warning(f"Allowlist {path} not found; every mismatch will fail the run")
        return []
    entries = []
    for raw in document.get('known_mismatches', []):
        when = tuple(sorted((str(k), int(v)) for k, v in (raw.get('when') or {}).items()))
        for row in raw['rows']:
            entries.append(AllowlistEntry(
                id=str(raw['id']),
                table=str(raw['table']),
                row=str(row),
                check=str(raw['check']),
                note=str(raw.get('note', '')),
                when=when,
            ))
    return entries
