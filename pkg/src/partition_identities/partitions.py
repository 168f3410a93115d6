"""Integer partitions with length constraints and their statistics."""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

#: textual form of the empty partition
EMPTY_SYMBOL = "ε"


class Partition:
    """A weakly decreasing sequence of positive integers.

    Immutable value object; the empty partition is the unique partition
    of 0.
    """

    __slots__ = ("parts",)

    def __init__(self, parts: Sequence[int] = ()):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"parts must be positive, got {p}")
            if i > 0 and parts[i - 1] < p:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        self.parts = parts

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def multiplicities(self) -> Dict[int, int]:
        """Map part value -> multiplicity; absent keys mean zero."""
        return dict(Counter(self.parts))

    def z_value(self) -> int:
        """z = prod_i i^{m_i} m_i!, the centralizer order of the cycle type."""
        z = 1
        for i, m in self.multiplicities().items():
            z *= i**m * factorial(m)
        return z

    def cells(self) -> Iterator[Tuple[int, int]]:
        """Ferrers diagram cells (row, column), 1-based."""
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                yield (i, j)

    @classmethod
    def from_multiplicities(cls, mult: Dict[int, int]) -> "Partition":
        parts: List[int] = []
        for value in sorted(mult, reverse=True):
            parts.extend([value] * mult[value])
        return cls(parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse "3+1+1"; "ε" or the empty string is the empty partition."""
        text = text.strip()
        if text in ("", EMPTY_SYMBOL):
            return cls()
        try:
            parts = [int(tok) for tok in text.split("+")]
        except ValueError as exc:
            raise ValueError(f"malformed partition {text!r}") from exc
        return cls(parts)

    def __str__(self) -> str:
        if not self.parts:
            return EMPTY_SYMBOL
        return "+".join(str(p) for p in self.parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Partition):
            return self.parts == other.parts
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)


@lru_cache(maxsize=None)
def _partitions_of(n: int) -> Tuple[Tuple[int, ...], ...]:
    """All partitions of n in decreasing lexicographic order of parts."""

    def gen(remaining: int, max_part: int) -> Iterator[Tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for p in range(min(remaining, max_part), 0, -1):
            for rest in gen(remaining - p, p):
                yield (p,) + rest

    return tuple(gen(n, n))


def enumerate_partitions(
    n: int,
    min_len: int = 0,
    max_len: Optional[int] = None,
) -> List[Partition]:
    """Partitions of n with length in [min_len, max_len], decreasing lex.

    ``max_len=None`` means unbounded.  Deterministic order, no duplicates.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    out = []
    for parts in _partitions_of(n):
        if len(parts) < min_len:
            continue
        if max_len is not None and len(parts) > max_len:
            continue
        out.append(Partition(parts))
    return out


def warm_cache(n_values) -> None:
    """Pre-fill the partition memo before parallel fan-out."""
    for n in n_values:
        _partitions_of(n)
