"""Compositions, partitions and the orders used to compare them.

Compositions and partitions are plain tuples of positive integers.  The
empty tuple stands for the empty composition/partition of 0 and is never
produced by the enumerators.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator, Sequence

Composition = tuple[int, ...]
Partition = tuple[int, ...]

GREATER = "greater"
LESS = "less"
EQUAL = "equal"
INCOMPARABLE = "incomparable"


def check_composition(parts: Sequence[int]) -> Composition:
    parts = tuple(parts)
    if any((not isinstance(p, int)) or p < 1 for p in parts):
        raise ValueError(f"composition parts must be positive integers: {parts!r}")
    return parts


def parse_composition(text: str) -> Composition:
    """Parse ``"3,1,2"`` into ``(3, 1, 2)``.  Empty text gives ``()``."""
    text = text.strip()
    if not text:
        return ()
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"malformed composition: {text!r}") from None
    if any(p < 1 for p in parts):
        raise ValueError(f"malformed composition: {text!r}")
    return parts


def format_composition(parts: Sequence[int]) -> str:
    return ",".join(str(p) for p in parts)


def compositions_of(n: int) -> list[Composition]:
    """All compositions of ``n`` in ascending gap-bitmask order.

    Bit ``i`` of the mask (``0 <= i < n - 1``) set means a part ends after
    the ``i + 1``-th unit cell.
    """
    if n < 1:
        return []
    out = []
    for mask in range(1 << (n - 1)):
        parts = []
        run = 1
        for i in range(n - 1):
            if mask >> i & 1:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        out.append(tuple(parts))
    return out


def sort_to_partition(alpha: Sequence[int]) -> Partition:
    return tuple(sorted(alpha, reverse=True))


def coarsenings(alpha: Sequence[int]) -> list[Composition]:
    """Every composition obtained by adding together runs of adjacent parts.

    Includes ``alpha`` itself; there are ``2**(len(alpha) - 1)`` of them.
    """
    alpha = tuple(alpha)
    k = len(alpha)
    if k == 0:
        return [()]
    out = []
    # choose which of the k-1 gaps to keep
    for r in range(k - 1, -1, -1):
        for kept in combinations(range(1, k), r):
            cuts = (0,) + kept + (k,)
            out.append(tuple(sum(alpha[a:b]) for a, b in zip(cuts, cuts[1:])))
    return out


def is_coarsening(beta: Sequence[int], alpha: Sequence[int]) -> bool:
    """True iff ``beta`` is a coarsening of ``alpha`` (``beta >= alpha``)."""
    if sum(beta) != sum(alpha):
        return False
    alpha_sums = set()
    acc = 0
    for p in alpha:
        acc += p
        alpha_sums.add(acc)
    acc = 0
    for p in beta:
        acc += p
        if acc not in alpha_sums:
            return False
    return True


def _prefix_sums(parts: Sequence[int]) -> list[int]:
    out, acc = [], 0
    for p in parts:
        acc += p
        out.append(acc)
    return out


def dominance_compare(lam: Sequence[int], mu: Sequence[int]) -> str:
    """Compare two partitions (or compositions) of the same size by prefix sums."""
    if sum(lam) != sum(mu):
        raise ValueError("dominance order compares objects of equal size only")
    if tuple(lam) == tuple(mu):
        return EQUAL
    a, b = _prefix_sums(lam), _prefix_sums(mu)
    m = min(len(a), len(b))
    ge = all(a[i] >= b[i] for i in range(m))
    le = all(a[i] <= b[i] for i in range(m))
    if ge and le:
        # prefix sums agree on the common range but the tuples differ
        return GREATER if len(a) < len(b) else LESS
    if ge:
        return GREATER
    if le:
        return LESS
    return INCOMPARABLE


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    return dominance_compare(lam, mu) in (GREATER, EQUAL)


def lex_compare(alpha: Sequence[int], beta: Sequence[int]) -> int:
    """-1, 0 or 1 as ``alpha`` is lexicographically below, equal to or above ``beta``."""
    for a, b in zip(alpha, beta):
        if a != b:
            return 1 if a > b else -1
    if len(alpha) == len(beta):
        return 0
    return 1 if len(alpha) > len(beta) else -1


def is_strict(lam: Sequence[int]) -> bool:
    return all(a > b for a, b in zip(lam, lam[1:]))


def strict_partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Strict partitions of ``n`` in lex-descending order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in strict_partitions(n - first, first - 1):
            yield (first,) + rest


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in lex-descending order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest
