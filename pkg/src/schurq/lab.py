"""Equality laboratory for ribbon Schur Q-functions.

Two partitions of the compositions of ``n`` are compared:

* the equality partition, grouping ribbons by their exact q-expansion;
* the closure partition, generated by moves that are known to preserve the
  function: global transpose/rotation (M1), swapping the factors of a
  ``alpha * D`` factorization for any of their four variants (M2), and
  rotating either factor of an ``alpha o D`` factorization (M3).

Every move is a theorem, so closure classes can only be finer than equality
classes.  A closure class containing two unequal ribbons is a bug and aborts.
"""

from __future__ import annotations

import csv
import functools
import io
import json
import logging
import os
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .combinat import Composition, compositions_of, format_composition, lex_compare
from .diagram import (
    bullet_factorizations,
    circ_factorizations,
    ribbon_bullet,
    ribbon_circ,
    ribbon_rotate,
    ribbon_transpose,
    ribbon_variants,
)
from .omega import (
    OmegaElem,
    canonical_key,
    equal,
    expansion_json,
    format_expansion,
    mul,
    ribbon_q,
)
from .oracle import ribbon_q_poly

log = logging.getLogger(__name__)


class SoundnessError(AssertionError):
    """A move connected two ribbons whose functions differ."""


class IdentityFailure(AssertionError):
    """A proven identity failed on a concrete instance."""


@dataclass
class RunConfig:
    max_n: int = 11
    variable_count: int = 6
    worker_count: int = 1
    output_path: str | None = None
    format: str = "json"

    def __post_init__(self):
        if self.max_n < 1:
            raise ValueError("max_n must be at least 1")
        if self.format not in ("json", "csv"):
            raise ValueError(f"unknown report format {self.format!r}")

    @classmethod
    def from_file(cls, path: str) -> "RunConfig":
        """Read ``key=value`` lines; ``#`` starts a comment."""
        kw: dict = {}
        ints = {"max_n", "variable_count", "worker_count"}
        with open(path) as fh:
            for raw in fh:
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                key, sep, value = line.partition("=")
                key, value = key.strip(), value.strip()
                if not sep or key not in cls.__dataclass_fields__:
                    raise ValueError(f"bad config line: {raw.rstrip()!r}")
                kw[key] = int(value) if key in ints else value
        return cls(**kw)


@dataclass
class EqualityClass:
    class_id: int
    members: list[Composition]
    expansion: OmegaElem | None = None


@dataclass(frozen=True)
class MoveTrace:
    source: Composition
    target: Composition
    move: str

    def __str__(self) -> str:
        return f"{format_composition(self.source)} -> {format_composition(self.target)} [{self.move}]"


@dataclass
class Verdict:
    match: bool
    equal_not_connected: list[tuple[Composition, Composition]] = field(default_factory=list)


@dataclass
class ClassReport:
    n: int
    classes: list[EqualityClass]
    closure_classes: list[EqualityClass] = field(default_factory=list)
    verdict: Verdict | None = None
    notes: dict[str, str] = field(default_factory=dict)


# --- equality side ------------------------------------------------------------------

def _lex_desc(members: Iterable[Composition]) -> list[Composition]:
    return sorted(members, key=functools.cmp_to_key(lambda a, b: lex_compare(b, a)))


def _keys_chunk(chunk: list[Composition]) -> list[str]:
    return [canonical_key(ribbon_q(a)) for a in chunk]


def ribbon_keys(comps: Sequence[Composition], jobs: int = 1) -> list[str]:
    """Canonical keys of ``ribbon_q`` for each composition, in input order."""
    if jobs <= 1 or len(comps) < 64:
        return _keys_chunk(list(comps))
    size = -(-len(comps) // (jobs * 4))
    chunks = [list(comps[i:i + size]) for i in range(0, len(comps), size)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(_keys_chunk, chunks))
    return [k for part in parts for k in part]


def _number(groups: Iterable[Iterable[Composition]]) -> list[list[Composition]]:
    # members lex-descending; classes ordered by their lex-greatest member
    ordered = [_lex_desc(g) for g in groups]
    ordered.sort(key=functools.cmp_to_key(lambda a, b: lex_compare(b[0], a[0])))
    return ordered


def classes(n: int, jobs: int = 1) -> ClassReport:
    """Group all compositions of ``n`` by the exact expansion of their ribbon function."""
    comps = compositions_of(n)
    keys = ribbon_keys(comps, jobs)
    groups: dict[str, list[Composition]] = {}
    for a, k in zip(comps, keys):
        groups.setdefault(k, []).append(a)
    out = []
    for i, members in enumerate(_number(groups.values())):
        out.append(EqualityClass(i, members, ribbon_q(members[0])))
    report = ClassReport(n, out)
    if n == 8:
        report.notes.update(figure_discrepancy_note(report))
    return report


def figure_discrepancy_note(report: ClassReport) -> dict[str, str]:
    """Whether 1511 (the printed label) or 1412 shares a class with 3311 (= 2*2*2)."""
    where = {m: c.class_id for c in report.classes for m in c.members}
    target = where[(3, 3, 1, 1)]
    notes = {}
    for label in ((1, 5, 1, 1), (1, 4, 1, 2)):
        same = where[label] == target
        notes[f"r_{''.join(map(str, label))} == r_3311"] = "equal" if same else "not equal"
    notes["2*2*11"] = format_composition(ribbon_bullet((2,), ribbon_bullet((2,), (1, 1))))
    return notes


# --- closure side --------------------------------------------------------------------

def moves(gamma: Composition) -> list[MoveTrace]:
    """Every single move out of ``gamma``."""
    out: list[MoveTrace] = []

    def add(target, label):
        if target != gamma:
            out.append(MoveTrace(gamma, target, label))

    add(ribbon_transpose(gamma), "GLOBAL_T")
    add(ribbon_rotate(gamma), "GLOBAL_ROT")
    for alpha, d in bullet_factorizations(gamma):
        for a2 in ribbon_variants(alpha):
            for d2 in ribbon_variants(d):
                label = (f"BULLET_VARIANT({format_composition(alpha)}->{format_composition(a2)}, "
                         f"{format_composition(d)}->{format_composition(d2)})")
                add(ribbon_bullet(a2, d2), label)
    for alpha, d in circ_factorizations(gamma):
        add(ribbon_circ(ribbon_rotate(alpha), d), "CIRC_ROT(left)")
        add(ribbon_circ(alpha, ribbon_rotate(d)), "CIRC_ROT(right)")
    return out


def closure_classes(n: int) -> tuple[list[list[Composition]], list[MoveTrace]]:
    """Connected components of the move graph on compositions of ``n``.

    Returns the components (numbered like :func:`classes`) and the BFS tree
    edges that connect each component.
    """
    seen: set[Composition] = set()
    comps: list[list[Composition]] = []
    traces: list[MoveTrace] = []
    for start in compositions_of(n):
        if start in seen:
            continue
        seen.add(start)
        comp = [start]
        queue = deque([start])
        while queue:
            g = queue.popleft()
            for mv in moves(g):
                if mv.target not in seen:
                    seen.add(mv.target)
                    comp.append(mv.target)
                    traces.append(mv)
                    queue.append(mv.target)
        comps.append(comp)
    return _number(comps), traces


def conjecture_check(n: int, jobs: int = 1) -> ClassReport:
    """Compare the closure partition with the equality partition at size ``n``.

    Raises :class:`SoundnessError` if a closure class mixes unequal ribbons.
    Equal ribbons that no chain of moves connects are reported in the verdict.
    """
    report = classes(n, jobs)
    closure, traces = closure_classes(n)
    eq_id = {m: c.class_id for c in report.classes for m in c.members}
    for comp in closure:
        ids = {eq_id[m] for m in comp}
        if len(ids) > 1:
            bad = [m for m in comp if eq_id[m] != eq_id[comp[0]]][0]
            raise SoundnessError(
                f"n={n}: {format_composition(comp[0])} and {format_composition(bad)} are "
                "connected by moves but have different functions")
    closure_id = {m: i for i, comp in enumerate(closure) for m in comp}
    gaps = []
    for c in report.classes:
        reps: dict[int, Composition] = {}
        for m in c.members:
            reps.setdefault(closure_id[m], m)
        firsts = list(reps.values())
        gaps.extend((firsts[0], other) for other in firsts[1:])
    report.closure_classes = [EqualityClass(i, comp) for i, comp in enumerate(closure)]
    report.verdict = Verdict(match=not gaps, equal_not_connected=gaps)
    report.notes["closure_edges"] = str(len(traces))
    for a, b in gaps:
        log.warning("n=%d: r_%s == r_%s but no move chain connects them",
                    n, format_composition(a), format_composition(b))
    return report


# --- theorem suite -------------------------------------------------------------------

def _fail(msg: str):
    raise IdentityFailure(msg)


def _ribbons_upto(n: int) -> list[Composition]:
    return [a for m in range(1, n + 1) for a in compositions_of(m)]


def theorem_suite(max_n: int) -> dict[str, int]:
    """Run the equality theorems on every ribbon instance up to ``max_n`` cells.

    Returns a tally of checked instances per identity; any failure raises
    :class:`IdentityFailure` carrying the counterexample.
    """
    if max_n < 2:
        raise ValueError("max_n must be at least 2")
    tally = {"bullet_variants": 0, "square_rule": 0, "twos_iff": 0, "bullet_on_right": 0}

    # s_{alpha * D} is unchanged by replacing alpha and D with any variant
    for alpha in _ribbons_upto(max_n):
        for d in _ribbons_upto(max_n // sum(alpha)):
            base = ribbon_q(ribbon_bullet(alpha, d))
            for a2 in ribbon_variants(alpha):
                for d2 in ribbon_variants(d):
                    if not equal(base, ribbon_q(ribbon_bullet(a2, d2))):
                        _fail(f"s_({alpha} * {d}) != s_({a2} * {d2})")
                    tally["bullet_variants"] += 1

    # s_D^2 = 2 s_{2 * D}
    for d in _ribbons_upto(max_n // 2):
        lhs = mul(ribbon_q(d), ribbon_q(d))
        if not equal(lhs, ribbon_q(ribbon_bullet((2,), d)) * 2):
            _fail(f"s_{d}^2 != 2 s_(2 * {d})")
        tally["square_rule"] += 1

    # D ~ E iff 2*D ~ 2*E, compared as partitions of the size-m ribbons
    for m in range(1, max_n // 2 + 1):
        comps = compositions_of(m)
        plain = [canonical_key(ribbon_q(a)) for a in comps]
        doubled = [canonical_key(ribbon_q(ribbon_bullet((2,), a))) for a in comps]
        for i in range(len(comps)):
            for j in range(i + 1, len(comps)):
                if (plain[i] == plain[j]) != (doubled[i] == doubled[j]):
                    _fail(f"2-prefix equivalence breaks on {comps[i]}, {comps[j]}")
                tally["twos_iff"] += 1

    # r_alpha = r_beta  =>  r_{alpha * gamma} = r_{beta * gamma}
    for m in range(1, max_n // 2 + 1):
        rep = classes(m)
        for c in rep.classes:
            if len(c.members) < 2:
                continue
            for gamma in _ribbons_upto(max_n // m):
                ref = ribbon_q(ribbon_bullet(c.members[0], gamma))
                for other in c.members[1:]:
                    if not equal(ref, ribbon_q(ribbon_bullet(other, gamma))):
                        _fail(f"r_{c.members[0]} = r_{other} but bullet with {gamma} differs")
                    tally["bullet_on_right"] += 1
    return tally


# --- inequality witnesses ----------------------------------------------------------------

@dataclass
class Witness:
    status: str  # "equal", "differs" or "inconclusive"
    k: int | None = None
    route: str = ""

    def __str__(self) -> str:
        if self.status == "differs" and self.k is not None:
            return f"differs at k={self.k}"
        return self.status


def inequality_witness(a: Sequence[int], b: Sequence[int], k_max: int = 6,
                       expansion_budget: int = 1 << 14) -> Witness:
    """Decide ``r_a == r_b`` exactly when affordable, else look for a separating ``k``.

    The q-expansion route is used while both ribbons have at most
    ``expansion_budget`` coarsenings.  Otherwise the tableau generating
    functions are compared in ``k = 2, 3, ..., k_max`` variables; a difference
    certifies inequality, agreement is inconclusive.
    """
    a, b = tuple(a), tuple(b)
    if sum(a) != sum(b):
        raise ValueError("ribbons of different sizes")
    if a == b:
        return Witness("equal", route="identical")
    if max(len(a), len(b)) - 1 <= expansion_budget.bit_length() - 1:
        same = equal(ribbon_q(a), ribbon_q(b))
        return Witness("equal" if same else "differs", route="q-basis")
    for k in range(2, k_max + 1):
        if ribbon_q_poly(a, k) != ribbon_q_poly(b, k):
            return Witness("differs", k=k, route="tableaux")
    return Witness("inconclusive", route="tableaux")


# --- reports --------------------------------------------------------------------------

def _class_json(n: int, c: EqualityClass) -> dict:
    out = {"n": n, "class_id": c.class_id,
           "members": [format_composition(m) for m in c.members]}
    if c.expansion is not None:
        out["expansion"] = expansion_json(c.expansion)
    return out


def report_to_json(report: ClassReport) -> str:
    """JSON document with one compact line per class object."""

    def block(name, items):
        rows = ",\n".join("    " + json.dumps(_class_json(report.n, c)) for c in items)
        return f'  "{name}": [\n{rows}\n  ]'

    parts = [f'  "n": {report.n}', block("classes", report.classes)]
    if report.closure_classes:
        parts.append(block("closure_classes", report.closure_classes))
    if report.verdict is not None:
        verdict = {
            "match": report.verdict.match,
            "equal_not_connected": [[format_composition(x), format_composition(y)]
                                    for x, y in report.verdict.equal_not_connected],
        }
        parts.append(f'  "verdict": {json.dumps(verdict)}')
    if report.notes:
        parts.append(f'  "notes": {json.dumps(report.notes)}')
    return "{\n" + ",\n".join(parts) + "\n}\n"


def report_to_csv(report: ClassReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "kind", "class_id", "member", "expansion"])
    for kind, group in (("equality", report.classes), ("closure", report.closure_classes)):
        for c in group:
            exp = canonical_key(c.expansion) if c.expansion is not None else ""
            for m in c.members:
                w.writerow([report.n, kind, c.class_id, format_composition(m), exp])
    return buf.getvalue()


def export_report(report: ClassReport, config: RunConfig) -> str:
    """Serialize ``report`` in ``config.format``; write it to ``config.output_path`` if set."""
    text = report_to_json(report) if config.format == "json" else report_to_csv(report)
    if config.output_path:
        parent = os.path.dirname(os.path.abspath(config.output_path))
        os.makedirs(parent, exist_ok=True)
        with open(config.output_path, "w") as fh:
            fh.write(text)
    return text


def describe_classes(report: ClassReport) -> str:
    lines = []
    for c in report.classes:
        members = " ".join(format_composition(m) for m in c.members)
        exp = format_expansion(c.expansion) if c.expansion is not None else ""
        lines.append(f"[{c.class_id}] {members}  :  {exp}")
    return "\n".join(lines)
