"""Skew diagrams and the operations on them.

A :class:`SkewShape` is stored as its row intervals ``(l, r)`` (1-indexed
columns, top row first).  Every constructor normalizes: the shape is
translated to row 1 / column 1 and empty rows and columns are squeezed out,
so two shapes are equal exactly when their cell patterns agree up to
translation and blank rows or columns.

Ribbons are identified with compositions (row lengths, top to bottom).  A
ribbon word lists how consecutive cells are joined when the ribbon is read
from its top-right cell down to its bottom-left cell: ``NEARCONCAT`` for two
cells in the same row, ``CONCAT`` for a change of row.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .combinat import Composition, Partition, sort_to_partition

CONCAT = "."
NEARCONCAT = "o"

Cell = tuple[int, int]


@dataclass(frozen=True, order=True)
class SkewShape:
    rows: tuple[tuple[int, int], ...]

    def __post_init__(self):
        rows = self.rows
        for l, r in rows:
            if l > r or l < 1:
                raise ValueError(f"bad row interval ({l}, {r})")
        for (l1, r1), (l2, r2) in zip(rows, rows[1:]):
            if l1 < l2 or r1 < r2:
                raise ValueError(f"not a skew shape: {rows!r}")

    @classmethod
    def from_cells(cls, cells: Iterable[Cell]) -> "SkewShape":
        cells = set(cells)
        if not cells:
            return EMPTY
        row_ids = {r: i for i, r in enumerate(sorted({r for r, _ in cells}), 1)}
        col_ids = {c: j for j, c in enumerate(sorted({c for _, c in cells}), 1)}
        by_row: dict[int, list[int]] = {}
        for r, c in cells:
            by_row.setdefault(row_ids[r], []).append(col_ids[c])
        rows = []
        for i in range(1, len(row_ids) + 1):
            cols = sorted(by_row[i])
            if cols[-1] - cols[0] + 1 != len(cols):
                raise ValueError("row of a skew shape must be contiguous")
            rows.append((cols[0], cols[-1]))
        return cls(tuple(rows))

    @classmethod
    def from_partitions(cls, lam: Sequence[int], mu: Sequence[int] = ()) -> "SkewShape":
        """The shape ``lam / mu``; rows where ``lam_i == mu_i`` are dropped."""
        mu = tuple(mu) + (0,) * (len(lam) - len(mu))
        if len(mu) > len(lam) or any(m > l for l, m in zip(lam, mu)):
            raise ValueError(f"{mu!r} is not contained in {lam!r}")
        cells = [(i, j) for i, (l, m) in enumerate(zip(lam, mu), 1)
                 for j in range(m + 1, l + 1)]
        return cls.from_cells(cells)

    @property
    def cells(self) -> frozenset[Cell]:
        return frozenset((i, j) for i, (l, r) in enumerate(self.rows, 1)
                         for j in range(l, r + 1))

    @property
    def size(self) -> int:
        return sum(r - l + 1 for l, r in self.rows)

    def __len__(self) -> int:
        return self.size

    @property
    def lam(self) -> Partition:
        return tuple(r for _, r in self.rows)

    @property
    def mu(self) -> Partition:
        return tuple(l - 1 for l, _ in self.rows if l > 1)

    @property
    def row_lengths(self) -> tuple[int, ...]:
        return tuple(r - l + 1 for l, r in self.rows)

    def width(self) -> int:
        return self.rows[0][1] if self.rows else 0

    def is_connected(self) -> bool:
        return all(l1 <= r2 for (l1, _), (_, r2) in zip(self.rows, self.rows[1:]))

    def has_2x2(self) -> bool:
        # adjacent rows overlapping in two or more columns
        return any(r2 - l1 >= 1 for (l1, _), (_, r2) in zip(self.rows, self.rows[1:]))

    def is_ribbon(self) -> bool:
        return bool(self.rows) and self.is_connected() and not self.has_2x2()

    def __str__(self) -> str:
        return f"{','.join(map(str, self.lam))}/{','.join(map(str, self.mu))}"

    def ascii(self) -> str:
        return "\n".join(" " * (l - 1) + "#" * (r - l + 1) for l, r in self.rows)


EMPTY = SkewShape(())


def shape(obj) -> SkewShape:
    """Coerce a composition (ribbon) or a shape into a :class:`SkewShape`."""
    if isinstance(obj, SkewShape):
        return obj
    return ribbon_shape(tuple(obj))


# --- ribbons -----------------------------------------------------------------

@lru_cache(maxsize=None)
def ribbon_shape(alpha: Composition) -> SkewShape:
    rows = []
    l = 1
    for part in reversed(alpha):
        rows.append((l, l + part - 1))
        l = l + part - 1
    return SkewShape(tuple(reversed(rows)))


def shape_to_ribbon(d: SkewShape) -> Composition | None:
    if not d.is_ribbon():
        return None
    if any(l1 != r2 for (l1, _), (_, r2) in zip(d.rows, d.rows[1:])):
        return None
    return d.row_lengths


def word(alpha: Sequence[int]) -> tuple[str, ...]:
    w: list[str] = []
    for i, part in enumerate(alpha):
        if i:
            w.append(CONCAT)
        w.extend([NEARCONCAT] * (part - 1))
    return tuple(w)


def word_to_ribbon(w: Sequence[str]) -> Composition:
    parts = [1]
    for star in w:
        if star == NEARCONCAT:
            parts[-1] += 1
        elif star == CONCAT:
            parts.append(1)
        else:
            raise ValueError(f"unknown star {star!r}")
    return tuple(parts)


def flip_word(w: Sequence[str]) -> tuple[str, ...]:
    """Exchange the two kinds of star."""
    return tuple(CONCAT if s == NEARCONCAT else NEARCONCAT for s in w)


def ribbon_transpose(alpha: Sequence[int]) -> Composition:
    return word_to_ribbon(flip_word(word(alpha))[::-1])


def ribbon_rotate(alpha: Sequence[int]) -> Composition:
    return tuple(reversed(tuple(alpha)))


def ribbon_variants(alpha: Sequence[int]) -> list[Composition]:
    """``alpha``, its transpose, its rotation and its rotated transpose (deduplicated)."""
    alpha = tuple(alpha)
    t = ribbon_transpose(alpha)
    out = []
    for v in (alpha, t, ribbon_rotate(alpha), ribbon_rotate(t)):
        if v not in out:
            out.append(v)
    return out


# --- classical operations ----------------------------------------------------

def transpose(d: SkewShape) -> SkewShape:
    return SkewShape.from_cells((c, r) for r, c in d.cells)


def rotate180(d: SkewShape) -> SkewShape:
    return SkewShape.from_cells((-r, -c) for r, c in d.cells)


def shift(d: SkewShape) -> frozenset[Cell]:
    """Cells of the shifted diagram: row ``i`` moved ``i - 1`` columns right.

    Uses the ``lam / mu`` presentation of the normalized shape; both must be
    strict.
    """
    from .combinat import is_strict

    if not is_strict(d.lam) or not is_strict(d.mu):
        raise ValueError(f"shifting needs strict lam and mu, got {d}")
    return frozenset((i, j + i - 1) for i, j in d.cells)


def srl(d: SkewShape) -> Partition:
    return sort_to_partition(d.row_lengths)


# --- gluing --------------------------------------------------------------------

def _placed(d1: SkewShape, d2: SkewShape, dcol: int, drow: int) -> SkewShape:
    # d1 sits north-east of d2: its bottom row just above d2's top row and its
    # leftmost column just right of d2's rightmost column, then moved by
    # (drow, dcol).
    if not d1.rows:
        return d2
    if not d2.rows:
        return d1
    h1 = len(d1.rows)
    w2 = d2.width()
    cells = [(r, c) for r, c in d1.cells]
    cells = [(r + drow, c + w2 + dcol) for r, c in cells]
    cells += [(r + h1, c) for r, c in d2.cells]
    return SkewShape.from_cells(cells)


def disjoint_union(d1, d2) -> SkewShape:
    return _placed(shape(d1), shape(d2), 0, 0)


def concat(d1, d2) -> SkewShape:
    """``d1 . d2``: d1 shares its leftmost column with d2's rightmost one."""
    return _placed(shape(d1), shape(d2), -1, 0)


def near_concat(d1, d2) -> SkewShape:
    """``d1 (.) d2``: d1's bottom row continues d2's top row."""
    return _placed(shape(d1), shape(d2), 0, 1)


def star_product(blocks: Sequence, stars: Sequence[str]) -> SkewShape:
    """Evaluate ``B1 *1 B2 *2 ... Bk`` left to right."""
    if len(stars) != len(blocks) - 1:
        raise ValueError("need exactly one star between consecutive blocks")
    acc = shape(blocks[0])
    for star, b in zip(stars, blocks[1:]):
        acc = concat(acc, b) if star == CONCAT else near_concat(acc, b)
    return acc


def compose(alpha: Sequence[int], d) -> SkewShape:
    """``alpha o D``: |alpha| copies of D joined by the word of alpha."""
    d = shape(d)
    n = sum(alpha)
    return star_product([d] * n, word(alpha))


def compose_transpose(alpha: Sequence[int], d) -> SkewShape:
    """``alpha * D``: like :func:`compose` with blocks alternating D, D^t, D, ..."""
    d = shape(d)
    dt = transpose(d)
    n = sum(alpha)
    blocks = [d if j % 2 == 0 else dt for j in range(n)]
    return star_product(blocks, word(alpha))


def bullet_chain(*parts) -> SkewShape:
    """``p1 * p2 * ... * pm`` (the operation is associative)."""
    acc = shape(parts[-1])
    for p in reversed(parts[:-1]):
        acc = compose_transpose(p, acc)
    return acc


# --- ribbon-level fast paths ---------------------------------------------------

def _join_words(block_words: Sequence[tuple[str, ...]], stars: Sequence[str]) -> tuple[str, ...]:
    out = list(block_words[0])
    for star, bw in zip(stars, block_words[1:]):
        out.append(star)
        out.extend(bw)
    return tuple(out)


@lru_cache(maxsize=None)
def ribbon_bullet(alpha: Composition, d: Composition) -> Composition:
    """``alpha * d`` for ribbons, computed on words."""
    wd = word(d)
    wt = flip_word(wd)[::-1]
    n = sum(alpha)
    return word_to_ribbon(_join_words([wd if j % 2 == 0 else wt for j in range(n)], word(alpha)))


@lru_cache(maxsize=None)
def ribbon_circ(alpha: Composition, d: Composition) -> Composition:
    wd = word(d)
    return word_to_ribbon(_join_words([wd] * sum(alpha), word(alpha)))


def _factorizations(gamma: Sequence[int], alternate: bool) -> list[tuple[Composition, Composition]]:
    gamma = tuple(gamma)
    w = word(gamma)
    n = sum(gamma)
    out = []
    for d in range(2, n):
        if n % d:
            continue
        m = n // d
        inner = w[:d - 1]
        inner_t = flip_word(inner)[::-1]
        junctions = []
        ok = True
        for j in range(m):
            block = w[j * d: j * d + d - 1]
            want = inner_t if (alternate and j % 2) else inner
            if block != want:
                ok = False
                break
            if j < m - 1:
                junctions.append(w[j * d + d - 1])
        if ok:
            out.append((word_to_ribbon(junctions), word_to_ribbon(inner)))
    return out


def bullet_factorizations(gamma: Sequence[int]) -> list[tuple[Composition, Composition]]:
    """All ``(alpha, D)`` with ``|alpha|, |D| >= 2`` and ``alpha * D == gamma``."""
    return _factorizations(gamma, alternate=True)


def circ_factorizations(gamma: Sequence[int]) -> list[tuple[Composition, Composition]]:
    """All ``(alpha, D)`` with ``|alpha|, |D| >= 2`` and ``alpha o D == gamma``."""
    return _factorizations(gamma, alternate=False)


# --- enumeration -----------------------------------------------------------------

def skew_shapes(n: int) -> Iterator[SkewShape]:
    """Every normalized skew shape with ``n`` cells, each exactly once."""

    def grow(rows_below: list[tuple[int, int]], remaining: int):
        if remaining == 0:
            yield SkewShape(tuple(reversed(rows_below)))
            return
        l0, r0 = rows_below[-1]
        for length in range(1, remaining + 1):
            # no blank column between this row and the one below
            for l in range(l0, r0 + 2):
                r = l + length - 1
                if r < r0:
                    continue
                rows_below.append((l, r))
                yield from grow(rows_below, remaining - length)
                rows_below.pop()

    for first in range(1, n + 1):
        yield from grow([(1, first)], n - first)
