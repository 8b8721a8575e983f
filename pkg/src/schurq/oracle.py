"""Monomial-level ground truth by direct tableau enumeration.

Polynomials are ``SparsePoly`` objects: maps from fixed-arity exponent tuples
to integers.  Nothing in here touches the q-basis straightening, so agreement
between this module and :mod:`schurq.omega` is a genuine cross-check.

Letters of the marked alphabet ``1' < 1 < 2' < 2 < ...`` are encoded as
integers ``1, 2, 3, 4, ...``: odd codes are primed, and letter ``i`` (primed
or not) has codes ``2i - 1`` and ``2i``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Mapping, Sequence

from .diagram import (
    CONCAT,
    NEARCONCAT,
    SkewShape,
    shape,
    star_product,
    transpose,
    word,
)
from .omega import OmegaElem

Cell = tuple[int, int]
Exponent = tuple[int, ...]


class SparsePoly:
    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms: Mapping[Exponent, int] | None = None):
        self.k = k
        self.terms = {e: c for e, c in (terms or {}).items() if c}
        for e in self.terms:
            if len(e) != k or min(e, default=0) < 0:
                raise ValueError(f"bad exponent {e!r} for arity {k}")

    @classmethod
    def constant(cls, k: int, c: int = 1) -> "SparsePoly":
        return cls(k, {(0,) * k: c})

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return SparsePoly(self.k, out)

    def __neg__(self) -> "SparsePoly":
        return SparsePoly(self.k, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "SparsePoly") -> "SparsePoly":
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, SparsePoly):
            return SparsePoly(self.k, {e: c * other for e, c in self.terms.items()})
        out: dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return SparsePoly(self.k, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.k == other.k and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coeff(self, exponent: Sequence[int]) -> int:
        return self.terms.get(tuple(exponent), 0)

    def permuted(self, perm: Sequence[int]) -> "SparsePoly":
        """Substitute ``x_i -> x_{perm[i]}``."""
        out = {}
        for e, c in self.terms.items():
            new = [0] * self.k
            for i, a in enumerate(e):
                new[perm[i]] = a
            out[tuple(new)] = c
        return SparsePoly(self.k, out)

    def is_symmetric(self) -> bool:
        for i in range(self.k - 1):
            perm = list(range(self.k))
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
            if self.permuted(perm) != self:
                return False
        return True

    def total_degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def __str__(self) -> str:
        if not self.terms:
            return "0"

        def monomial(e):
            factors = []
            for i, a in enumerate(e, 1):
                if a == 1:
                    factors.append(f"x{i}")
                elif a:
                    factors.append(f"x{i}^{a}")
            return "*".join(factors)

        # graded lex: higher total degree first, then lex-descending exponents
        order = sorted(self.terms, key=lambda e: (-sum(e), tuple(-a for a in e)))
        out = []
        for i, e in enumerate(order):
            c = self.terms[e]
            m = monomial(e)
            mag = abs(c)
            body = m if (mag == 1 and m) else (f"{mag}*{m}" if m else str(mag))
            sign = "-" if c < 0 else "+"
            out.append((("-" if c < 0 else "") + body) if i == 0 else f"{sign} {body}")
        return " ".join(out)

    __repr__ = __str__


# --- weakly amenable tableaux -------------------------------------------------------

def _neighbours(cells: Iterable[Cell]):
    cells = sorted(set(cells))
    pos = {c: i for i, c in enumerate(cells)}
    left, up = [], []
    for r, c in cells:
        row_prev = [cc for rr, cc in cells if rr == r and cc < c]
        col_prev = [rr for rr, cc in cells if cc == c and rr < r]
        left.append(pos[(r, max(row_prev))] if row_prev else -1)
        up.append(pos[(max(col_prev), c)] if col_prev else -1)
    return cells, left, up


def amenable_tableaux(cells: Iterable[Cell], k: int):
    """Yield every weakly amenable filling (as a tuple of letter codes, row-major).

    Rows and columns weakly increase, no primed letter repeats in a row and no
    unprimed letter repeats in a column.
    """
    cells, left, up = _neighbours(cells)
    n = len(cells)
    top = 2 * k
    filling = [0] * n

    def place(i):
        if i == n:
            yield tuple(filling)
            return
        lo = 1
        li, ui = left[i], up[i]
        if li >= 0:
            lo = max(lo, filling[li])
        if ui >= 0:
            lo = max(lo, filling[ui])
        for v in range(lo, top + 1):
            if li >= 0 and v == filling[li] and v % 2 == 1:
                continue
            if ui >= 0 and v == filling[ui] and v % 2 == 0:
                continue
            filling[i] = v
            yield from place(i + 1)

    yield from place(0)


def _amenable_counts(cells: Sequence[Cell], k: int) -> dict[Exponent, int]:
    # row-major transfer over cells; the state keeps only the letters of cells
    # that some later cell still compares against, plus the content so far
    cells, left, up = _neighbours(cells)
    n = len(cells)
    top = 2 * k
    last_use = [-1] * n
    for m in range(n):
        for j in (left[m], up[m]):
            if j >= 0:
                last_use[j] = max(last_use[j], m)
    active: tuple[int, ...] = ()
    states: dict[tuple[tuple[int, ...], Exponent], int] = {((), (0,) * k): 1}
    for i in range(n):
        li, ui = left[i], up[i]
        pl = active.index(li) if li >= 0 else -1
        pu = active.index(ui) if ui >= 0 else -1
        keep = [p for p, j in enumerate(active) if last_use[j] > i]
        new_active = tuple(active[p] for p in keep) + ((i,) if last_use[i] > i else ())
        store = last_use[i] > i
        nxt: dict[tuple[tuple[int, ...], Exponent], int] = {}
        for (vals, e), c in states.items():
            fl = vals[pl] if pl >= 0 else 0
            fu = vals[pu] if pu >= 0 else 0
            base = tuple(vals[p] for p in keep)
            for v in range(max(1, fl, fu), top + 1):
                if v == fl and v & 1:
                    continue
                if v == fu and not v & 1:
                    continue
                letter = (v - 1) >> 1
                ne = e[:letter] + (e[letter] + 1,) + e[letter + 1:]
                key = (base + (v,) if store else base, ne)
                nxt[key] = nxt.get(key, 0) + c
        states = nxt
        active = new_active
    out: dict[Exponent, int] = {}
    for (_, e), c in states.items():
        out[e] = out.get(e, 0) + c
    return out


def amenable_q_poly(cells, k: int) -> SparsePoly:
    """Generating function of weakly amenable tableaux on a cell set, in ``k`` variables."""
    if k < 1:
        raise ValueError("need at least one variable")
    if isinstance(cells, SkewShape):
        cells = cells.cells
    return SparsePoly(k, _amenable_counts(tuple(sorted(set(cells))), k))


@lru_cache(maxsize=None)
def _row_q_poly(n: int, k: int) -> SparsePoly:
    return amenable_q_poly([(1, j) for j in range(1, n + 1)], k)


def omega_to_poly(a: OmegaElem, k: int) -> SparsePoly:
    """Image of an Omega element in ``k`` variables, with ``q_n`` the one-row tableau sum.

    Rational coefficients are cleared by their common denominator first.
    """
    from math import lcm

    den = 1
    for c in a.coeffs.values():
        den = lcm(den, c.denominator)
    total = SparsePoly(k)
    for lam, c in a.coeffs.items():
        term = SparsePoly.constant(k, int(c * den))
        for part in lam:
            term = term * _row_q_poly(part, k)
        total = total + term
    return total


def x1_coeff(d) -> int:
    """Coefficient of ``x1**n`` in the Q-function of an n-cell set (one-variable count)."""
    cells = d.cells if isinstance(d, SkewShape) else frozenset(d)
    poly = amenable_q_poly(cells, 1)
    return poly.coeff((len(cells),))


# --- ribbons by transfer matrix -------------------------------------------------------

def ribbon_path(alpha: Sequence[int]) -> list[str]:
    """Relation of each cell to the previous one when a ribbon is read bottom-left first.

    ``"row"``: the new cell is to the right of the previous one (row
    constraint); ``"col"``: it is directly above it (column constraint,
    read upward).
    """
    # reading bottom-left to top-right reverses the word
    return ["row" if s == NEARCONCAT else "col" for s in reversed(word(alpha))]


def ribbon_q_poly(alpha: Sequence[int], k: int) -> SparsePoly:
    """Weakly amenable tableau generating function of a ribbon via dynamic programming.

    Consecutive cells of a ribbon are the only constrained pairs, so a state is
    the last letter plus the content so far.  Feasible for long ribbons where
    :func:`amenable_q_poly` would blow up.
    """
    top = 2 * k
    steps = ribbon_path(alpha)
    states: dict[tuple[int, Exponent], int] = {}
    for v in range(1, top + 1):
        e = [0] * k
        e[(v - 1) >> 1] += 1
        states[(v, tuple(e))] = 1
    for step in steps:
        nxt: dict[tuple[int, Exponent], int] = {}
        for (prev, e), c in states.items():
            if step == "row":
                # new cell right of prev: new >= prev, not both equal primed
                choices = range(prev, top + 1)
                bad = prev if prev & 1 else None
            else:
                # new cell above prev: new <= prev, not both equal unprimed
                choices = range(1, prev + 1)
                bad = prev if not prev & 1 else None
            for v in choices:
                if v == bad:
                    continue
                letter = (v - 1) >> 1
                ne = e[:letter] + (e[letter] + 1,) + e[letter + 1:]
                key = (v, ne)
                nxt[key] = nxt.get(key, 0) + c
        states = nxt
    out: dict[Exponent, int] = {}
    for (_, e), c in states.items():
        out[e] = out.get(e, 0) + c
    return SparsePoly(k, out)


# --- classical symmetric functions ------------------------------------------------------

def ssyt_poly(d, k: int) -> SparsePoly:
    """Skew Schur polynomial by semistandard fillings with entries ``1..k``."""
    d = shape(d)
    cells, left, up = _neighbours(d.cells)
    n = len(cells)
    filling = [0] * n
    content = [0] * k
    out: dict[Exponent, int] = {}

    def place(i):
        if i == n:
            e = tuple(content)
            out[e] = out.get(e, 0) + 1
            return
        lo = 1
        if left[i] >= 0:
            lo = max(lo, filling[left[i]])
        if up[i] >= 0:
            lo = max(lo, filling[up[i]] + 1)
        for v in range(lo, k + 1):
            filling[i] = v
            content[v - 1] += 1
            place(i + 1)
            content[v - 1] -= 1

    place(0)
    return SparsePoly(k, out)


def _from_index_tuples(k: int, tuples) -> SparsePoly:
    out: dict[Exponent, int] = {}
    for t in tuples:
        e = [0] * k
        for i in t:
            e[i] += 1
        e = tuple(e)
        out[e] = out.get(e, 0) + 1
    return SparsePoly(k, out)


@lru_cache(maxsize=None)
def h_poly(n: int, k: int) -> SparsePoly:
    if n < 0:
        return SparsePoly(k)
    return _from_index_tuples(k, combinations_with_replacement(range(k), n))


@lru_cache(maxsize=None)
def e_poly(n: int, k: int) -> SparsePoly:
    if n < 0:
        return SparsePoly(k)
    return _from_index_tuples(k, combinations(range(k), n))


def poly_det(matrix: Sequence[Sequence[SparsePoly]], k: int) -> SparsePoly:
    """Determinant over polynomial entries by cofactor expansion memoized on column sets."""
    n = len(matrix)
    memo: dict[int, SparsePoly] = {}

    def minor(cols: int) -> SparsePoly:
        if cols == 0:
            return SparsePoly.constant(k)
        if cols in memo:
            return memo[cols]
        i = n - bin(cols).count("1")
        total = SparsePoly(k)
        pos = 0
        for j in range(n):
            if cols >> j & 1:
                entry = matrix[i][j]
                if entry:
                    term = entry * minor(cols & ~(1 << j))
                    total = total + term if pos % 2 == 0 else total - term
                pos += 1
        memo[cols] = total
        return total

    return minor((1 << n) - 1)


def _jt_matrix(d: SkewShape, k: int, gen) -> list[list[SparsePoly]]:
    lam, mu = d.lam, d.mu
    n = len(lam)
    mu = mu + (0,) * (n - len(mu))
    return [[gen(lam[i] - mu[j] - i + j, k) for j in range(n)] for i in range(n)]


def jt_h_check(d, k: int) -> bool:
    """``s_D == det(h_{lam_i - mu_j - i + j})`` in ``k`` variables."""
    d = shape(d)
    return ssyt_poly(d, k) == poly_det(_jt_matrix(d, k, h_poly), k)


def jt_e_check(d, k: int) -> bool:
    """``s_{D^t} == det(e_{lam_i - mu_j - i + j})`` in ``k`` variables."""
    d = shape(d)
    return ssyt_poly(transpose(d), k) == poly_det(_jt_matrix(d, k, e_poly), k)


def _bar(stars: Sequence[str]) -> list[str]:
    return [CONCAT if s == NEARCONCAT else NEARCONCAT for s in stars]


def star_determinant_check(blocks: Sequence, stars: Sequence[str], k: int) -> bool:
    """Skew Schur function of a star product against its almost-triangular determinant.

    Entry ``(i, j)`` for ``j >= i`` is the Schur function of blocks ``i..j``
    joined by the opposite stars; the subdiagonal holds 1s.
    """
    blocks = [shape(b) for b in blocks]
    m = len(blocks)
    if m == 0:
        raise ValueError("need at least one block")
    bars = _bar(stars)
    zero = SparsePoly(k)
    one = SparsePoly.constant(k)
    matrix = [[zero] * m for _ in range(m)]
    for i in range(m):
        if i:
            matrix[i][i - 1] = one
        for j in range(i, m):
            matrix[i][j] = ssyt_poly(star_product(blocks[i:j + 1], bars[i:j]), k)
    lhs = ssyt_poly(star_product(blocks, list(stars)), k)
    return lhs == poly_det(matrix, k)
