"""
Negative continued fractions.

A word [a1, ..., an] denotes a1 - 1/(a2 - 1/(... - 1/an)). Evaluation is a
right-to-left fold of ``ext_sub_inv``, which is total on the cases the chain
calculus needs: 1/∞ = 0, 1/0 = ∞ and finite - ∞ = ∞.
"""

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from .ext_rational import ExtLike, ExtRational, INF
from ..utils.exceptions import InvalidCoefficient, NoRewriteApplies


@dataclass(frozen=True)
class CFWord:
    """Non-empty word of finite coefficients."""

    entries: Tuple[ExtRational, ...]

    def __post_init__(self):
        entries = tuple(ExtRational.of(e) for e in self.entries)
        if not entries:
            raise InvalidCoefficient("A continued-fraction word needs at least one entry")
        if any(e.is_infinite for e in entries):
            raise InvalidCoefficient("∞ is not allowed inside a continued-fraction word")
        object.__setattr__(self, 'entries', entries)

    @classmethod
    def of(cls, entries: Union['CFWord', Iterable[ExtLike]]) -> 'CFWord':
        if isinstance(entries, CFWord):
            return entries
        return cls(tuple(entries))

    @classmethod
    def parse(cls, text: str) -> 'CFWord':
        """Parse ``[2,-1,4,-1]``; the brackets are optional."""
        body = text.strip()
        if body.startswith('[') and body.endswith(']'):
            body = body[1:-1]
        parts = [p for p in re.split(r'\s*,\s*', body.strip()) if p]
        return cls(tuple(ExtRational.parse(p) for p in parts))

    def is_chain_valid(self) -> bool:
        """True when positions 2..n-1 are integers."""
        return all(e.is_integer for e in self.entries[1:-1])

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[ExtRational]:
        return iter(self.entries)

    def __getitem__(self, index):
        return self.entries[index]

    def __str__(self) -> str:
        return '[' + ','.join(str(e) for e in self.entries) + ']'


def ext_sub_inv(a: ExtLike, v: ExtLike) -> ExtRational:
    """
    One recursion step a - 1/v.

    Args:
        a: Finite coefficient
        v: Value of the remaining tail, possibly ∞

    Returns:
        a - 1/v in lowest terms

    Raises:
        InvalidCoefficient: if a is ∞
    """
    a, v = ExtRational.of(a), ExtRational.of(v)
    if a.is_infinite:
        raise InvalidCoefficient("∞ cannot survive as a continued-fraction coefficient")
    return a - v.reciprocal()


def cf_eval(word: Union[CFWord, Sequence[ExtLike]]) -> ExtRational:
    """
    Evaluate a negative continued fraction.

    Plain sequences may end in ∞ (a trailing 1/∞ contributes 0); ∞ anywhere
    else raises InvalidCoefficient.
    """
    entries = list(word.entries) if isinstance(word, CFWord) else [ExtRational.of(e) for e in word]
    if not entries:
        raise InvalidCoefficient("Cannot evaluate an empty word")
    value = entries[-1]
    for a in reversed(entries[:-1]):
        value = ext_sub_inv(a, value)
    return value


def cf_expand(x: ExtLike) -> List[int]:
    """
    Ceiling-based expansion: the canonical inverse of cf_eval.

    Every entry after the first is at least 2, and cf_eval of the result is x.
    """
    x = ExtRational.of(x)
    if x.is_infinite:
        raise InvalidCoefficient("∞ has no continued-fraction expansion")
    value = x.fraction
    result = []
    while True:
        head = -((-value.numerator) // value.denominator)
        result.append(head)
        remainder = head - value
        if remainder == 0:
            return result
        value = 1 / remainder


def cf_zero_absorb(word: Union[CFWord, Sequence[ExtLike]]) -> CFWord:
    """
    Slam-dunk rewrite [..., a, 0, b, ...] -> [..., a+b, ...].

    The first interior zero flanked by integers is absorbed; the value is unchanged.

    Raises:
        NoRewriteApplies: if no interior zero has integer neighbours
    """
    entries = list(CFWord.of(word).entries)
    for i in range(1, len(entries) - 1):
        left, middle, right = entries[i - 1], entries[i], entries[i + 1]
        if middle == 0 and left.is_integer and right.is_integer:
            return CFWord(tuple(entries[:i - 1] + [left + right] + entries[i + 2:]))
    raise NoRewriteApplies(f"No interior zero to absorb in {CFWord.of(word)}")


def absorb_all_zeros(word: Union[CFWord, Sequence[ExtLike]]) -> CFWord:
    """Apply cf_zero_absorb until no rewrite applies."""
    current = CFWord.of(word)
    while True:
        try:
            current = cf_zero_absorb(current)
        except NoRewriteApplies:
            return current


def negate_word(word: Union[CFWord, Sequence[ExtLike]]) -> CFWord:
    return CFWord(tuple(-e for e in CFWord.of(word).entries))


def offset_reciprocal(x: ExtLike, offset: ExtLike) -> Optional[int]:
    """
    Solve x = offset + 1/n for a non-zero integer n.

    Returns:
        n, or None when x - offset is not the reciprocal of a non-zero integer
    """
    x, offset = ExtRational.of(x), ExtRational.of(offset)
    if x.is_infinite or offset.is_infinite:
        return None
    diff = x - offset
    if diff.num not in (1, -1):
        return None
    return diff.num * diff.den


__all__ = [
    'CFWord', 'INF', 'ext_sub_inv', 'cf_eval', 'cf_expand', 'cf_zero_absorb',
    'absorb_all_zeros', 'negate_word', 'offset_reciprocal',
]
