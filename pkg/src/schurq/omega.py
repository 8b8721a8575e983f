"""Exact arithmetic in the ring of Schur Q-functions, in the q-basis.

Elements are finite maps from strict partitions to rationals.  Products of
q's with repeated indices are brought back to the strict basis with the even
Euler relation

    q_r^2 = 2 * sum_{j=1..r} (-1)**(j-1) q_{r-j} q_{r+j}      (q_0 = 1).
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .combinat import Composition, Partition, coarsenings, is_strict, sort_to_partition
from .diagram import SkewShape, concat, near_concat, ribbon_shape, shape

Number = int | Fraction


class OmegaElem:
    """An element of the ring, as ``{strict partition: coefficient}``."""

    __slots__ = ("coeffs", "_key")

    def __init__(self, coeffs: Mapping[Partition, Number] | None = None):
        clean: dict[Partition, Fraction] = {}
        for lam, c in (coeffs or {}).items():
            lam = tuple(lam)
            if not is_strict(lam):
                raise ValueError(f"q-basis index must be strict: {lam!r}")
            c = Fraction(c)
            if c:
                clean[lam] = clean.get(lam, 0) + c
        self.coeffs = {lam: c for lam, c in clean.items() if c}
        self._key = None

    # construction helpers
    @classmethod
    def q(cls, *parts: int) -> "OmegaElem":
        """``q_{parts}``; repeated parts are straightened."""
        return straighten(parts)

    @classmethod
    def one(cls) -> "OmegaElem":
        return cls({(): 1})

    @classmethod
    def zero(cls) -> "OmegaElem":
        return cls()

    def __add__(self, other: "OmegaElem") -> "OmegaElem":
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, 0) + c
        return OmegaElem(out)

    def __neg__(self) -> "OmegaElem":
        return OmegaElem({lam: -c for lam, c in self.coeffs.items()})

    def __sub__(self, other: "OmegaElem") -> "OmegaElem":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, OmegaElem):
            return mul(self, other)
        return OmegaElem({lam: c * other for lam, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, OmegaElem):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(canonical_key(self))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"OmegaElem({format_expansion(self)!r})"

    def __str__(self) -> str:
        return format_expansion(self)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs.values())

    def degree_parts(self) -> set[int]:
        return {sum(lam) for lam in self.coeffs}

    def terms(self) -> list[tuple[Partition, Fraction]]:
        """Terms ordered by lex-ascending partition."""
        return sorted(self.coeffs.items(), key=lambda t: t[0])


# --- straightening -------------------------------------------------------------

_memo: dict[Partition, dict[Partition, int]] = {}
_memo_lock = threading.Lock()


def _straighten(lam: Partition) -> dict[Partition, int]:
    # lam is weakly decreasing with no zeros; the result has integer coefficients
    hit = _memo.get(lam)
    if hit is not None:
        return hit
    repeated = None
    for a, b in zip(lam, lam[1:]):
        if a == b:
            repeated = a
            break
    if repeated is None:
        result = {lam: 1}
    else:
        rest = list(lam)
        i = rest.index(repeated)
        del rest[i:i + 2]
        r = repeated
        result = {}
        for j in range(1, r + 1):
            coef = 2 if j % 2 else -2
            new = rest + [r + j] + ([r - j] if r - j > 0 else [])
            for mu, c in _straighten(sort_to_partition(new)).items():
                result[mu] = result.get(mu, 0) + coef * c
        result = {mu: c for mu, c in result.items() if c}
    with _memo_lock:
        _memo.setdefault(lam, result)
    return result


def straighten(parts: Iterable[int]) -> OmegaElem:
    """``q_{p1} q_{p2} ...`` in the strict basis (zeros act as the unit)."""
    parts = [p for p in parts if p != 0]
    if any(p < 0 for p in parts):
        return OmegaElem()
    return OmegaElem(_straighten(sort_to_partition(parts)))


def straighten_memo_size() -> int:
    return len(_memo)


def mul(a: OmegaElem, b: OmegaElem) -> OmegaElem:
    out: dict[Partition, Fraction] = {}
    for la, ca in a.coeffs.items():
        for lb, cb in b.coeffs.items():
            c = ca * cb
            for mu, k in _straighten(sort_to_partition(la + lb)).items():
                out[mu] = out.get(mu, 0) + c * k
    return OmegaElem(out)


def power(a: OmegaElem, k: int) -> OmegaElem:
    out = OmegaElem.one()
    for _ in range(k):
        out = mul(out, a)
    return out


def q(n: int) -> OmegaElem:
    if n < 0:
        return OmegaElem()
    if n == 0:
        return OmegaElem.one()
    return OmegaElem({(n,): 1})


# --- ribbon and skew expansions --------------------------------------------------

def _assert_integral(x: OmegaElem, what: str) -> OmegaElem:
    if not x.is_integral():
        raise AssertionError(f"non-integral expansion for {what}: {x}")
    return x


@lru_cache(maxsize=None)
def _ribbon_q(alpha: Composition) -> OmegaElem:
    grouped: dict[Partition, int] = {}
    k = len(alpha)
    for beta in coarsenings(alpha):
        sign = 1 if (k + len(beta)) % 2 == 0 else -1
        lam = sort_to_partition(beta)
        grouped[lam] = grouped.get(lam, 0) + sign
    out: dict[Partition, int] = {}
    for lam, c in grouped.items():
        if not c:
            continue
        for mu, k2 in _straighten(lam).items():
            out[mu] = out.get(mu, 0) + c * k2
    return _assert_integral(OmegaElem(out), f"ribbon {alpha}")


def ribbon_q(alpha: Sequence[int]) -> OmegaElem:
    """The ribbon Schur Q-function of a composition, by signed coarsening sum."""
    return _ribbon_q(tuple(alpha))


def jacobi_trudi(lam: Sequence[int], mu: Sequence[int] = ()) -> OmegaElem:
    """``det(q_{lam_i - mu_j - i + j})`` by cofactor expansion memoized on column sets."""
    n = len(lam)
    mu = tuple(mu) + (0,) * (n - len(mu))
    entry = [[q(lam[i] - mu[j] - i + j) for j in range(n)] for i in range(n)]
    memo: dict[int, OmegaElem] = {}

    def minor(cols: int) -> OmegaElem:
        # rows n - popcount(cols) .. n-1 against the column bitmask cols
        if cols == 0:
            return OmegaElem.one()
        hit = memo.get(cols)
        if hit is not None:
            return hit
        i = n - bin(cols).count("1")
        total = OmegaElem()
        pos = 0
        for j in range(n):
            if cols >> j & 1:
                e = entry[i][j]
                if e:
                    sub = minor(cols & ~(1 << j))
                    if sub:
                        term = mul(e, sub)
                        total = total + (term if pos % 2 == 0 else -term)
                pos += 1
        memo[cols] = total
        return total

    return minor((1 << n) - 1)


@lru_cache(maxsize=None)
def _skew_q(d: SkewShape) -> OmegaElem:
    return _assert_integral(jacobi_trudi(d.lam, d.mu), f"shape {d}")


def skew_q(d) -> OmegaElem:
    """The ordinary skew Schur Q-function of a skew shape (or a ribbon composition)."""
    return _skew_q(shape(d))


# --- equality ---------------------------------------------------------------------

def equal(a: OmegaElem, b: OmegaElem) -> bool:
    return a.coeffs == b.coeffs


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def canonical_key(a: OmegaElem) -> str:
    if a._key is None:
        a._key = ";".join(f"{','.join(map(str, lam))}:{_fmt_coeff(c)}" for lam, c in a.terms())
    return a._key


def format_expansion(a: OmegaElem) -> str:
    """Human-readable form such as ``q[4,2] - q[6]``."""
    if not a.coeffs:
        return "0"
    out = []
    for i, (lam, c) in enumerate(a.terms()):
        basis = f"q[{','.join(map(str, lam))}]" if lam else "1"
        mag = abs(c)
        if mag == 1 and lam:
            body = basis
        elif lam:
            body = f"{_fmt_coeff(mag)}*{basis}"
        else:
            body = _fmt_coeff(mag)
        if i == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)


def expansion_json(a: OmegaElem) -> list:
    """``[[["3,1"], 1], [["4"], -1]]`` style term list."""
    out = []
    for lam, c in a.terms():
        coeff = c.numerator if c.denominator == 1 else _fmt_coeff(c)
        out.append([[",".join(map(str, lam))], coeff])
    return out


# --- relation checks ----------------------------------------------------------------

RELATIONS = ("EE", "EI", "T", "ET")


def relation_check(kind: str, x: int) -> bool:
    """Check one member of a named family of ribbon relations.

    EE: r_{2x} = sum_i (-1)**(i+1) r_{(2x-i) i}
    EI: 2 r_{2x} = sum_i (-1)**(i+1) r_{2x-i} r_i
    T:  r_x = r_{1^x}
    ET: r_{2x} = r_{1^{2x}}
    """
    if x < 1:
        raise ValueError("x must be positive")
    if kind == "EE":
        n = 2 * x
        rhs = OmegaElem()
        for i in range(1, n):
            term = ribbon_q((n - i, i))
            rhs = rhs + (term if i % 2 else -term)
        return equal(ribbon_q((n,)), rhs)
    if kind == "EI":
        n = 2 * x
        rhs = OmegaElem()
        for i in range(1, n):
            term = mul(ribbon_q((n - i,)), ribbon_q((i,)))
            rhs = rhs + (term if i % 2 else -term)
        return equal(ribbon_q((n,)) * 2, rhs)
    if kind == "T":
        return equal(ribbon_q((x,)), ribbon_q((1,) * x))
    if kind == "ET":
        return equal(ribbon_q((2 * x,)), ribbon_q((1,) * (2 * x)))
    raise ValueError(f"unknown relation family {kind!r}")


def euler_form(n: int) -> OmegaElem:
    """``sum_{r+s=n} (-1)**r q_r q_s``, straightened."""
    total = OmegaElem()
    for r in range(n + 1):
        term = straighten((r, n - r))
        total = total + (term if r % 2 == 0 else -term)
    return total


def ribbon_mult_check(alpha: Sequence[int], beta: Sequence[int]) -> bool:
    alpha, beta = tuple(alpha), tuple(beta)
    lhs = mul(ribbon_q(alpha), ribbon_q(beta))
    dot = alpha + beta
    odot = alpha[:-1] + (alpha[-1] + beta[0],) + beta[1:]
    return equal(lhs, ribbon_q(dot) + ribbon_q(odot))


def skew_mult_check(d, e) -> bool:
    """``s_D s_E == s_{D.E} + s_{D(.)E}`` on arbitrary skew shapes."""
    return equal(mul(skew_q(d), skew_q(e)), skew_q(concat(d, e)) + skew_q(near_concat(d, e)))
