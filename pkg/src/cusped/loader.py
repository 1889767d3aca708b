"""
Loading declared cusped-manifold data from JSON documents.
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Union

from jsonschema import Draft202012Validator

from ..utils.config import config
from ..utils.exceptions import InvalidCusp, ManifoldDataError
from ..utils.logger import get_logger
from .isometry import CuspedManifoldData, IsometryAction
from .slopes import CuspShape


logger = get_logger(__name__)

_COMPLEX = {
    "type": "array",
    "items": {"type": "number"},
    "minItems": 2,
    "maxItems": 2,
}

_ROW = {
    "type": "array",
    "items": {"type": "integer"},
    "minItems": 2,
    "maxItems": 2,
}

MANIFOLD_SCHEMA: Dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["name", "cusps", "isometries"],
    "additionalProperties": False,
    "properties": {
        "name": {"type": "string", "minLength": 1},
        "description": {"type": "string"},
        "cusps": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["mu", "lambda"],
                "additionalProperties": False,
                "properties": {"mu": _COMPLEX, "lambda": _COMPLEX},
            },
        },
        "isometries": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["perm", "maps", "orientation"],
                "additionalProperties": False,
                "properties": {
                    "perm": {"type": "array", "items": {"type": "integer", "minimum": 0}},
                    "maps": {
                        "type": "array",
                        "items": {"type": "array", "items": _ROW, "minItems": 2, "maxItems": 2},
                    },
                    "orientation": {"enum": [1, -1]},
                },
            },
        },
    },
}


def _schema_errors(document: Any) -> List[str]:
    validator = Draft202012Validator(MANIFOLD_SCHEMA)
    errors = sorted(validator.iter_errors(document), key=lambda e: list(e.path))
    return [f"{'/'.join(str(p) for p in e.path) or '<root>'}: {e.message}" for e in errors]


def _build_isometry(index: int, raw: Dict[str, Any], cusp_count: int) -> IsometryAction:
    perm, maps = raw['perm'], raw['maps']
    if len(perm) != cusp_count or sorted(perm) != list(range(cusp_count)):
        raise ManifoldDataError(
            f"isometries/{index}/perm: {perm} is not a permutation of {cusp_count} cusps"
        )
    try:
        return IsometryAction(tuple(perm), tuple(maps), raw['orientation'])
    except ManifoldDataError as e:
        raise ManifoldDataError(f"isometries/{index}/{str(e)}")


def load_manifold_data(document: Union[Dict[str, Any], str]) -> CuspedManifoldData:
    """
    Validate and convert a cusped-manifold document.

    Args:
        document: Parsed JSON object, or JSON text

    Returns:
        CuspedManifoldData with identity actions removed

    Raises:
        ManifoldDataError: on schema violations, non-permutations,
            non-unimodular matrices or degenerate cusps
    """
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as e:
            raise ManifoldDataError(f"Invalid JSON: {str(e)}")

    errors = _schema_errors(document)
    if errors:
        raise ManifoldDataError("Schema validation failed: " + "; ".join(errors))

    cusps = []
    for j, raw in enumerate(document['cusps']):
        try:
            cusps.append(CuspShape(complex(*raw['mu']), complex(*raw['lambda'])))
        except InvalidCusp as e:
            raise ManifoldDataError(f"cusps/{j}: {str(e)}")

    isometries = []
    for index, raw in enumerate(document['isometries']):
        action = _build_isometry(index, raw, len(cusps))
        if action.is_identity:
            logger.warning(f"{document['name']}: dropping identity action isometries/{index}")
            continue
        isometries.append(action)

    data = CuspedManifoldData(
        name=document['name'],
        cusps=tuple(cusps),
        isometries=tuple(isometries),
        description=document.get('description', ''),
    )
    logger.info(f"Loaded {data.name}: {data.cusp_count} cusps, {len(isometries)} isometries")
    return data


def load_manifold_file(path: Union[str, Path]) -> CuspedManifoldData:
    """Load a fixture by path; bare names resolve against data.manifolds_dir."""
    path = Path(path)
    if not path.exists() and not path.is_absolute():
        candidate = config.resolve_path('data.manifolds_dir') / path
        if candidate.exists():
            path = candidate
    try:
        with open(path, 'r') as file:
            document = json.load(file)
    except json.JSONDecodeError as e:
        raise ManifoldDataError(f"{path}: invalid JSON: {str(e)}")
    return load_manifold_data(document)
