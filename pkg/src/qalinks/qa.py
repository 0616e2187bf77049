"""Search for and verify quasi-alternating certificates of link diagrams.

A certificate is a finite tree: leaves are the one-circle, crossing-free
unknot diagram, and each branch records a crossing where both simplified
smoothings are certified, have determinant at least one, and their
determinants add up to the parent's.

The search is one-sided.  Exhausting every crossing of a diagram only says
that *this diagram* yields no certificate; the link may still be
quasi-alternating through some other diagram.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .diagram import Diagram, canonical_key, is_unknot_diagram, parse_pd, serialize, simplify, smooth
from .invariants import determinant


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 100_000
    max_depth: int = 64

    def __post_init__(self):
        if self.max_nodes < 1 or self.max_depth < 1:
            raise ValueError("search budget limits must be at least 1")


DEFAULT_BUDGET = SearchBudget()


@dataclass(frozen=True)
class Leaf:
    diagram: Diagram


@dataclass(frozen=True)
class Branch:
    diagram: Diagram
    crossing: int
    dets: tuple[int, int, int]
    zero_child: "Certificate"
    one_child: "Certificate"


Certificate = Union[Leaf, Branch]


@dataclass(frozen=True)
class Certified:
    certificate: Certificate
    nodes: int = 0


@dataclass(frozen=True)
class NotCertifiedThisDiagram:
    """Every crossing of this diagram was tried without success.

    This is never a claim that the link is not quasi-alternating.
    """

    diagram: Diagram
    nodes: int = 0


@dataclass(frozen=True)
class BudgetExceeded:
    diagram: Diagram
    reason: str
    nodes: int = 0


class _OutOfBudget(Exception):
    pass


class _Search:
    def __init__(self, budget: SearchBudget, use_cache: bool):
        self.budget = budget
        self.use_cache = use_cache
        self.nodes = 0
        self.failed: set[str] = set()
        self.found: dict[Diagram, Certificate] = {}
        self.dets: dict[Diagram, int] = {}
        self.bracket_cache: dict = {}

    def det(self, D: Diagram) -> int:
        if D not in self.dets:
            self.dets[D] = determinant(D, cache=self.bracket_cache)
        return self.dets[D]

    def run(self, D: Diagram, depth: int):
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            raise _OutOfBudget(f"node limit {self.budget.max_nodes} reached")
        if depth > self.budget.max_depth:
            raise _OutOfBudget(f"depth limit {self.budget.max_depth} reached")
        if is_unknot_diagram(D):
            return Leaf(D)
        if D.n_crossings == 0:
            return None
        key = None
        if self.use_cache:
            if D in self.found:
                return self.found[D]
            key = canonical_key(D)
            if key in self.failed:
                return None
        det = self.det(D)
        # a branch needs det L = det L0 + det L1 with both parts >= 1
        if det >= 2:
            for i in range(D.n_crossings):
                out = smooth(D, i)
                c0, c1 = simplify(out.zero_smoothing), simplify(out.one_smoothing)
                d0, d1 = self.det(c0), self.det(c1)
                if d0 < 1 or d1 < 1 or d0 + d1 != det:
                    continue
                cert0 = self.run(c0, depth + 1)
                if cert0 is None:
                    continue
                cert1 = self.run(c1, depth + 1)
                if cert1 is None:
                    continue
                cert = Branch(D, i, (det, d0, d1), cert0, cert1)
                if self.use_cache:
                    self.found[D] = cert
                return cert
        if self.use_cache:
            self.failed.add(key)
        return None


def certify(D: Diagram, budget: SearchBudget = DEFAULT_BUDGET, use_cache: bool = True):
    """Depth-first certificate search over crossings in index order.

    Returns :class:`Certified`, :class:`NotCertifiedThisDiagram` or
    :class:`BudgetExceeded`.
    """
    search = _Search(budget, use_cache)
    try:
        cert = search.run(D, 0)
    except _OutOfBudget as exc:
        return BudgetExceeded(D, str(exc), search.nodes)
    if cert is None:
        return NotCertifiedThisDiagram(D, search.nodes)
    return Certified(cert, search.nodes)


@dataclass
class Verification:
    valid: bool
    violations: list[str] = field(default_factory=list)

    def __bool__(self):
        return self.valid


def verify_certificate(cert: Certificate) -> Verification:
    """Recompute every determinant and child diagram; collect all violations."""
    violations: list[str] = []
    dets: dict[Diagram, int] = {}
    cache: dict = {}

    def det(D):
        if D not in dets:
            dets[D] = determinant(D, cache=cache)
        return dets[D]

    def visit(node, path):
        where = "root" if not path else "root/" + "/".join(path)
        if isinstance(node, Leaf):
            if not is_unknot_diagram(node.diagram):
                violations.append(f"{where}: leaf not a 0-crossing unknot "
                                  f"({node.diagram.n_crossings} crossings, "
                                  f"{node.diagram.free_circles} circles)")
            return
        D = node.diagram
        recorded = tuple(node.dets)
        d, d0, d1 = recorded
        if d0 < 1 or d1 < 1:
            violations.append(f"{where}: smoothing determinants {d0}, {d1} must both be >= 1")
        if d != d0 + d1:
            violations.append(f"{where}: det sum {d} ≠ {d0}+{d1}")
        if not 0 <= node.crossing < D.n_crossings:
            violations.append(f"{where}: crossing index {node.crossing} out of range")
        else:
            out = smooth(D, node.crossing)
            expected = (simplify(out.zero_smoothing), simplify(out.one_smoothing))
            actual = (node.zero_child.diagram, node.one_child.diagram)
            for label, exp, act in zip("01", expected, actual):
                if exp != act:
                    violations.append(f"{where}: child {label} is not the simplified "
                                      f"smoothing at crossing {node.crossing}")
            recomputed = (det(D), det(expected[0]), det(expected[1]))
            if recomputed != recorded:
                violations.append(f"{where}: recorded det triple {recorded} differs from "
                                  f"recomputed {recomputed}")
            r, r0, r1 = recomputed
            if (r0 < 1 or r1 < 1 or r != r0 + r1) and recomputed != recorded:
                violations.append(f"{where}: recomputed determinants {recomputed} fail "
                                  f"the additivity conditions")
        visit(node.zero_child, path + ["0"])
        visit(node.one_child, path + ["1"])

    visit(cert, [])
    return Verification(not violations, violations)


def certificate_to_json(cert: Certificate) -> dict:
    if isinstance(cert, Leaf):
        return {"kind": "leaf", "pd": serialize(cert.diagram)}
    return {
        "kind": "branch",
        "pd": serialize(cert.diagram),
        "crossing": cert.crossing,
        "det": list(cert.dets),
        "children": [certificate_to_json(cert.zero_child), certificate_to_json(cert.one_child)],
    }


def certificate_from_json(data: dict) -> Certificate:
    D = parse_pd(data["pd"])
    if data["kind"] == "leaf":
        return Leaf(D)
    zero, one = (certificate_from_json(c) for c in data["children"])
    return Branch(D, int(data["crossing"]), tuple(int(x) for x in data["det"]), zero, one)


def certificate_nodes(cert: Certificate):
    yield cert
    if isinstance(cert, Branch):
        yield from certificate_nodes(cert.zero_child)
        yield from certificate_nodes(cert.one_child)
