"""Twist families, per-determinant Jones classes, and the degree-bound audit.

Class enumeration is corpus driven.  Because certification is one-sided, a
class report lists the Jones values *observed* among certified diagrams; it
is a lower bound on the class, never a complete list.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .diagram import Diagram, replace_crossing_with_tangle, smooth, unoriented_smoothing
from .invariants import determinant, jones, skein_terms
from .laurent import HalfLaurent, degree_stats, render
from .obstructions import ObstructionRecord, audit
from .qa import DEFAULT_BUDGET, Branch, Certified, SearchBudget, certify


def twist_family(D: Diagram, i: int, N: int) -> list[Diagram]:
    """``[L^1, ..., L^N]`` with crossing ``i`` replaced by ``n`` same-type crossings."""
    if N < 1:
        raise ValueError("N must be positive")
    return [replace_crossing_with_tangle(D, i, n) for n in range(1, N + 1)]


@dataclass
class TwistAudit:
    crossing: int
    n_max: int
    det: int
    det_zero_smoothing: int
    det_one_smoothing: int
    jones_zero_nonzero: bool
    jones_one_nonzero: bool
    # the chain's A-smoothing leaves the twisted crossings behind as kinks
    det_fixed_smoothing: int
    dets: list[int]
    jones_values: list[HalfLaurent]
    det_constant: bool
    jones_distinct: bool

    @property
    def hypothesis(self) -> bool:
        has_zero = self.det_zero_smoothing == 0 or self.det_one_smoothing == 0
        return has_zero and self.jones_zero_nonzero and self.jones_one_nonzero

    @property
    def passed(self) -> bool | None:
        """``None`` when the hypothesis fails: the values are then only measured."""
        if not self.hypothesis:
            return None
        return self.det_constant and self.jones_distinct

    def to_json(self) -> dict:
        return {
            "crossing": self.crossing,
            "n_max": self.n_max,
            "det": self.det,
            "hypothesis": {
                "holds": self.hypothesis,
                "det_zero_smoothing": self.det_zero_smoothing,
                "det_one_smoothing": self.det_one_smoothing,
                "jones_zero_smoothing_nonzero": self.jones_zero_nonzero,
                "jones_one_smoothing_nonzero": self.jones_one_nonzero,
                "det_twist_fixed_smoothing": self.det_fixed_smoothing,
            },
            "dets": self.dets,
            "jones": [render(v) for v in self.jones_values],
            "det_constant": self.det_constant,
            "jones_distinct": self.jones_distinct,
            "passed": self.passed,
        }


def twist_family_audit(D: Diagram, i: int, N: int) -> TwistAudit:
    cache: dict = {}
    out = smooth(D, i)
    d = determinant(D, cache)
    family = twist_family(D, i, N)
    dets = [determinant(L, cache) for L in family]
    values = [jones(L, cache=cache) for L in family]
    distinct = all(a != b for a, b in combinations(values, 2))
    return TwistAudit(
        crossing=i,
        n_max=N,
        det=d,
        det_zero_smoothing=determinant(out.zero_smoothing, cache),
        det_one_smoothing=determinant(out.one_smoothing, cache),
        jones_zero_nonzero=not jones(out.zero_smoothing, cache=cache).is_zero(),
        jones_one_nonzero=not jones(out.one_smoothing, cache=cache).is_zero(),
        det_fixed_smoothing=determinant(unoriented_smoothing(D, i, "A"), cache),
        dets=dets,
        jones_values=values,
        det_constant=all(x == d for x in dets),
        jones_distinct=distinct,
    )


@dataclass
class DegreeAudit:
    crossing: int
    sign: int
    e: int
    offset_twice: int
    m: int
    M: int
    min_twice: int
    max_twice: int
    precondition: bool
    lower_ok: bool
    upper_ok: bool

    @property
    def passed(self) -> bool:
        return self.lower_ok and self.upper_ok

    def to_json(self) -> dict:
        out = dict(self.__dict__)
        out["passed"] = self.passed
        return out


def smoothing_degree_bounds(D: Diagram, i: int, cache: dict | None = None) -> tuple[int, int]:
    """``(m, M)`` in twice-exponent units over the Jones values of both smoothings."""
    out = smooth(D, i)
    lows, highs = [], []
    for L in (out.zero_smoothing, out.one_smoothing):
        lo, hi, _ = degree_stats(jones(L, cache=cache))
        lows.append(lo)
        highs.append(hi)
    return min(lows), max(highs)


def degree_bound_audit(D: Diagram, i: int, m: int, M: int,
                       cache: dict | None = None) -> DegreeAudit:
    """Check ``mindeg V >= m - |3e/2 +- 1|`` and ``maxdeg V <= M + |3e/2 +- 1|``.

    ``e`` and the sign come from the skein identity at crossing ``i``; the
    offset is ``|3e+2|`` (positive crossing) or ``|3e-2|`` (negative) in twice
    units.
    """
    if cache is None:
        cache = {}
    sign, e, L0, L1 = skein_terms(D, i)
    offset = abs(3 * e + 2) if sign > 0 else abs(3 * e - 2)
    lo, hi, _ = degree_stats(jones(D, cache=cache))
    child_lo, child_hi = [], []
    for L in (L0, L1):
        a, b, _ = degree_stats(jones(L, cache=cache))
        child_lo.append(a)
        child_hi.append(b)
    precondition = m <= min(child_lo) and M >= max(child_hi)
    return DegreeAudit(i, sign, e, offset, m, M, lo, hi, precondition,
                       lo >= m - offset, hi <= M + offset)


@dataclass
class MemberAudit:
    name: str
    jones: HalfLaurent
    obstructions: ObstructionRecord
    degree: DegreeAudit | None

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "jones": render(self.jones),
            "obstructions": self.obstructions.to_json(),
            "degree_bound": self.degree.to_json() if self.degree else None,
        }


@dataclass
class ClassReport:
    determinant: int
    jones_values: list[HalfLaurent]
    members: dict[HalfLaurent, list[str]]
    m: int
    M: int
    audits: list[MemberAudit] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(a.obstructions.passed and (a.degree is None or a.degree.passed)
                   for a in self.audits)

    def to_json(self) -> dict:
        return {
            "determinant": self.determinant,
            "observed_values": [
                {"jones": render(v), "members": self.members[v]} for v in self.jones_values
            ],
            "m_twice": self.m,
            "M_twice": self.M,
            "audits": [a.to_json() for a in self.audits],
            "passed": self.passed,
        }


@dataclass
class Enumeration:
    reports: list[ClassReport]
    uncertified: list[tuple[str, str]]

    def to_json(self) -> dict:
        return {
            "classes": [r.to_json() for r in self.reports],
            "uncertified": [{"name": n, "outcome": o} for n, o in self.uncertified],
        }


def _certify_entry(args):
    name, D, budget = args
    cache: dict = {}
    outcome = certify(D, budget)
    if not isinstance(outcome, Certified):
        return name, type(outcome).__name__, None
    V = jones(D, cache=cache)
    det = determinant(D, cache)
    cert = outcome.certificate
    degree = None
    if isinstance(cert, Branch):
        m, M = smoothing_degree_bounds(D, cert.crossing, cache)
        degree = degree_bound_audit(D, cert.crossing, m, M, cache)
    return name, "Certified", (det, V, MemberAudit(name, V, audit(V, det), degree))


def enumerate_classes(corpus, budget: SearchBudget = DEFAULT_BUDGET,
                      parallel: bool = False) -> Enumeration:
    """Certify each entry, then group certified ones by determinant."""
    entries = sorted(corpus, key=lambda item: item[0])
    jobs = [(name, D, budget) for name, D in entries]
    if parallel and len(jobs) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor() as pool:
            results = list(pool.map(_certify_entry, jobs))
    else:
        results = [_certify_entry(job) for job in jobs]

    groups: dict[int, list] = {}
    uncertified = []
    for name, outcome, payload in results:
        if payload is None:
            uncertified.append((name, outcome))
        else:
            groups.setdefault(payload[0], []).append(payload)

    reports = []
    for det in sorted(groups):
        members: dict[HalfLaurent, list[str]] = {}
        audits = []
        for _, V, member in groups[det]:
            members.setdefault(V, []).append(member.name)
            audits.append(member)
        values = sorted(members, key=lambda v: (degree_stats(v), render(v)))
        m = min(degree_stats(v)[0] for v in values)
        M = max(degree_stats(v)[1] for v in values)
        reports.append(ClassReport(det, values, members, m, M, audits))
    return Enumeration(reports, uncertified)
