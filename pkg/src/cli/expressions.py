"""
Cell expressions used by the table datasets.

Coefficients are linear expressions in the row variables: ``-4+1/n``,
``6b-1``, ``1/2-k``, ``inf``. Manifold cells combine ``L(P,Q)`` closed
forms, ``L[a1,...,an]`` chains, ``S3`` and ``S1xS2`` with ``#``.
"""

import re
from typing import Dict, Iterable, List, Set

from ..lensspace.chain import ChainDescription, chain_eval
from ..lensspace.manifold import S1XS2, S3, ClosedManifold, connected_sum, lens_space
from ..rational.ext_rational import ExtRational, INF
from ..utils.exceptions import DatasetError, InvalidCoefficient


Environment = Dict[str, ExtRational]

_TERM = re.compile(r"""
    \s*(?P<sign>[+-])?\s*
    (?:
        (?P<inf>inf|∞)
      | (?P<rnum>\d+)\s*/\s*(?P<rvar>[a-z])
      | (?P<fnum>\d+)\s*/\s*(?P<fden>\d+)
      | (?P<coef>\d+)\s*(?P<cvar>[a-z])?
      | (?P<var>[a-z])
    )\s*
""", re.VERBOSE)

_VARIABLE = re.compile(r'(?<![A-Za-z])([a-z])(?![A-Za-z])')

_LENS = re.compile(r'\AL\((?P<p>[^,()]+),(?P<q>[^,()]+)\)\Z')
_CHAIN = re.compile(r'\AL\[(?P<body>[^\[\]]*)\]\Z')


def _lookup(env: Environment, name: str, text: str) -> ExtRational:
    if name not in env:
        raise DatasetError(f"Unbound variable {name!r} in {text!r}")
    return ExtRational.of(env[name])


def evaluate_coefficient(text, env: Environment) -> ExtRational:
    """
    Evaluate a linear coefficient expression.

    ``c/v`` with v = 0 evaluates to ∞, as in ``-4+1/n`` at n = 0.

    Raises:
        DatasetError: on syntax errors or unbound variables
    """
    text = str(text)
    position, total, first = 0, ExtRational(0), True
    stripped = text.strip()
    if not stripped:
        raise DatasetError("Empty coefficient expression")
    while position < len(text):
        if not text[position:].strip():
            break
        match = _TERM.match(text, position)
        if match is None or match.end() == position or (not first and match.group('sign') is None):
            raise DatasetError(f"Cannot parse coefficient {text!r} at position {position}")
        negative = match.group('sign') == '-'
        try:
            term = _term_value(match, env, text)
            total = total + (-term if negative else term)
        except InvalidCoefficient as e:
            raise DatasetError(f"Undefined value for {text!r}: {str(e)}")
        position, first = match.end(), False
    return total


def _term_value(match, env: Environment, text: str) -> ExtRational:
    if match.group('inf'):
        return INF
    if match.group('rnum'):
        denominator = _lookup(env, match.group('rvar'), text)
        if denominator == 0:
            return INF
        return int(match.group('rnum')) * denominator.reciprocal()
    if match.group('fnum'):
        return ExtRational(int(match.group('fnum')), int(match.group('fden')))
    if match.group('coef'):
        coefficient = int(match.group('coef'))
        if match.group('cvar'):
            return coefficient * _lookup(env, match.group('cvar'), text)
        return ExtRational(coefficient)
    return _lookup(env, match.group('var'), text)


def variables_in(texts: Iterable) -> Set[str]:
    """Single-letter lowercase variables referenced by cell templates."""
    found: Set[str] = set()
    for text in texts:
        if text is None:
            continue
        found.update(_VARIABLE.findall(str(text).replace('inf', '').replace('S1xS2', '')))
    return found


def _split_top_level(text: str, separator: str) -> List[str]:
    parts, depth, current = [], 0, []
    for char in text:
        if char in '([':
            depth += 1
        elif char in ')]':
            depth -= 1
        if char == separator and depth == 0:
            parts.append(''.join(current))
            current = []
        else:
            current.append(char)
    parts.append(''.join(current))
    return parts


def _integer(value: ExtRational, text: str) -> int:
    if not value.is_integer:
        raise DatasetError(f"L(P,Q) needs integers, got {value} in {text!r}")
    return value.num


def evaluate_manifold(text: str, env: Environment) -> ClosedManifold:
    """
    Evaluate a manifold cell such as ``L[2]#L[4,-b]`` or ``L(6b-1,2b-1)``.

    Raises:
        DatasetError: on malformed cells
    """
    pieces = []
    for raw in _split_top_level(str(text).replace(' ', ''), '#'):
        if raw in ('S3', 'S³'):
            pieces.append(S3)
            continue
        if raw in ('S1xS2', 'S¹×S²'):
            pieces.append(ClosedManifold((S1XS2,)))
            continue
        lens = _LENS.match(raw)
        if lens:
            p = _integer(evaluate_coefficient(lens.group('p'), env), raw)
            q = _integer(evaluate_coefficient(lens.group('q'), env), raw)
            pieces.append(lens_space(p, q))
            continue
        chain = _CHAIN.match(raw)
        if chain:
            entries = [evaluate_coefficient(e, env) for e in chain.group('body').split(',')]
            pieces.append(chain_eval(ChainDescription(tuple(entries))))
            continue
        raise DatasetError(f"Cannot parse manifold cell {text!r}")
    return connected_sum(*pieces)
