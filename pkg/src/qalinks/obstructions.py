"""Jones-polynomial checks that every quasi-alternating link must pass.

For ``V(t) = t^m * sum(a_i t^i)`` the coefficients of a quasi-alternating link
alternate in sign (``a_i * a_{i+1} <= 0``), are bounded in absolute value by
the determinant, and their alternating sum equals the determinant up to sign.
The breadth bound is only conjectural, so it is reported and never enforced.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction

from .invariants import determinant_from_jones
from .laurent import HalfLaurent, degree_stats, lattice_coefficients


def check_alternating(V: HalfLaurent) -> bool:
    """True iff consecutive lattice coefficients (zeros included) have product <= 0."""
    coeffs = lattice_coefficients(V)
    return all(x * y <= 0 for x, y in zip(coeffs, coeffs[1:]))


def check_coeff_bound(V: HalfLaurent, det: int) -> bool:
    return all(abs(c) <= det for _, c in V.items())


def check_det_consistency(V: HalfLaurent) -> tuple[int, int, bool]:
    coeffs = lattice_coefficients(V)
    alt = abs(sum(c if i % 2 == 0 else -c for i, c in enumerate(coeffs)))
    ev = determinant_from_jones(V)
    return alt, ev, alt == ev


@dataclass(frozen=True)
class BreadthReport:
    breadth: Fraction
    det: int
    within_conjecture: bool


def breadth_report(V: HalfLaurent, det: int) -> BreadthReport:
    _, _, twice = degree_stats(V)
    breadth = Fraction(twice, 2)
    return BreadthReport(breadth, det, breadth <= det)


@dataclass(frozen=True)
class ObstructionRecord:
    alternating: bool
    coeff_bound: bool
    alt_sum: int
    eval_det: int
    det_consistent: bool
    breadth: Fraction
    breadth_within_conjecture: bool

    @property
    def passed(self) -> bool:
        """The asserted checks; the breadth conjecture is excluded."""
        return self.alternating and self.coeff_bound and self.det_consistent

    def to_json(self) -> dict:
        out = asdict(self)
        out["breadth"] = str(self.breadth)
        out["passed"] = self.passed
        return out


def audit(V: HalfLaurent, det: int) -> ObstructionRecord:
    alt, ev, consistent = check_det_consistency(V)
    breadth = breadth_report(V, det)
    return ObstructionRecord(check_alternating(V), check_coeff_bound(V, det), alt, ev,
                             consistent, breadth.breadth, breadth.within_conjecture)
