"""Kauffman bracket, Jones polynomial, determinant and the skein-identity check.

Brackets are :class:`HalfLaurent` values in ``A`` with twice exponent
``2 * power``; Jones polynomials are in ``t^(1/2)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import config
from .diagram import (A_JOINS, B_JOINS, PASS_THROUGH, Diagram, _surgery, canonical_key,
                      crossing_sign, smooth, unoriented_smoothing, writhe)
from .errors import CrossingLimitError, InvariantViolation
from .laurent import LOOP_A, ONE, HalfLaurent, evaluate_at_i, mono_mul


def _loop_power(k: int) -> HalfLaurent:
    return LOOP_A ** k


def bracket_statesum(D: Diagram) -> HalfLaurent:
    """Sum over all ``2^n`` states of ``A^(a-b) * d^(loops-1)``, ``d = -A^-2 - A^2``."""
    n = D.n_crossings
    cap = config.statesum_cap()
    if n > cap:
        raise CrossingLimitError(f"state sum limited to {cap} crossings, diagram has {n}")
    if n == 0:
        return _loop_power(D.free_circles - 1)
    labels = sorted(D.occurrences)
    index = {lab: j for j, lab in enumerate(labels)}
    m = len(labels)
    a_pairs = [[(index[q[x]], index[q[y]]) for x, y in A_JOINS] for q in D.crossings]
    b_pairs = [[(index[q[x]], index[q[y]]) for x, y in B_JOINS] for q in D.crossings]
    tally: dict[tuple[int, int], int] = {}
    for state in range(1 << n):
        parent = list(range(m))
        merges = 0
        n_b = 0
        for k in range(n):
            if state >> k & 1:
                pairs = b_pairs[k]
                n_b += 1
            else:
                pairs = a_pairs[k]
            for x, y in pairs:
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                while parent[y] != y:
                    parent[y] = parent[parent[y]]
                    y = parent[y]
                if x != y:
                    parent[y] = x
                    merges += 1
        loops = m - merges + D.free_circles
        key = (n - 2 * n_b, loops)
        tally[key] = tally.get(key, 0) + 1
    total: dict[int, int] = {}
    powers: dict[int, HalfLaurent] = {}
    for (a_minus_b, loops), count in tally.items():
        if loops - 1 not in powers:
            powers[loops - 1] = _loop_power(loops - 1)
        for k, c in powers[loops - 1].items():
            key = k + 2 * a_minus_b
            total[key] = total.get(key, 0) + count * c
    return HalfLaurent(total)


def _strip(D: Diagram):
    """Remove kinks and bigons, returning ``(sign, twice_shift, reduced)``.

    Each kink contributes ``-A^3`` or ``-A^-3``; bigon removal leaves the
    bracket unchanged.
    """
    from .diagram import _find_r1, _find_r2

    sign, shift = 1, 0
    while True:
        k = _find_r1(D)
        if k is not None:
            quad = D.crossings[k]
            p = next(p for p in range(4) if quad[p] == quad[(p + 1) % 4])
            sign = -sign
            shift += 6 if (p, (p + 1) % 4) in A_JOINS else -6
            D = _surgery(D, {k: PASS_THROUGH})
            continue
        pair = _find_r2(D)
        if pair is not None:
            D = _surgery(D, {pair[0]: PASS_THROUGH, pair[1]: PASS_THROUGH})
            continue
        return sign, shift, D


def _split_pieces(D: Diagram) -> list[Diagram]:
    return [Diagram(tuple(D.crossings[k] for k in piece), 0) for piece in D.pieces()]


def bracket_skein(D: Diagram, cache: dict | None = None) -> HalfLaurent:
    """Bracket by the recursion ``<L> = A<L_A> + A^-1<L_B>``, memoized on canonical keys.

    Kinks and bigons are stripped first and split pieces are handled
    separately. ``cache`` may be shared between calls in one thread.
    """
    cap = config.skein_cap()
    if D.n_crossings > cap:
        raise CrossingLimitError(f"skein recursion limited to {cap} crossings, "
                                 f"diagram has {D.n_crossings}")
    if cache is None:
        cache = {}
    return _bracket(D, cache)


def _bracket(D: Diagram, cache: dict) -> HalfLaurent:
    sign, shift, R = _strip(D)
    pieces = _split_pieces(R) if R.n_crossings else []
    loops = len(pieces) + R.free_circles
    value = _loop_power(loops - 1)
    for piece in pieces:
        value = value * _piece_bracket(piece, cache)
    return mono_mul(value, sign, shift)


def _piece_bracket(P: Diagram, cache: dict) -> HalfLaurent:
    key = canonical_key(P)
    hit = cache.get(key)
    if hit is not None:
        return hit
    a_part = _bracket(unoriented_smoothing(P, 0, "A"), cache)
    b_part = _bracket(unoriented_smoothing(P, 0, "B"), cache)
    value = mono_mul(a_part, 1, 2) + mono_mul(b_part, 1, -2)
    cache.setdefault(key, value)
    return value


def bracket_to_jones(bracket: HalfLaurent, w: int) -> HalfLaurent:
    """Apply ``(-A)^(-3w)`` and substitute ``t^(1/2) = A^-2``."""
    normalized = mono_mul(bracket, -1 if w % 2 else 1, -6 * w)
    terms = {}
    for k, c in normalized.items():
        if k % 4:
            raise InvariantViolation(f"odd A-power {k // 2} after writhe normalization")
        terms[-k // 4] = c
    return HalfLaurent(terms)


def jones(D: Diagram, method: str = "skein", cache: dict | None = None) -> HalfLaurent:
    if method == "skein":
        bracket = bracket_skein(D, cache)
    elif method == "statesum":
        bracket = bracket_statesum(D)
    else:
        raise ValueError(f"unknown bracket method {method!r}")
    return bracket_to_jones(bracket, writhe(D))


def determinant_from_jones(V: HalfLaurent) -> int:
    z = evaluate_at_i(V)
    if z.re and z.im:
        raise InvariantViolation(f"V(-1) = {z} is not a unit times an integer")
    return abs(z.re) + abs(z.im)


def determinant(D: Diagram, cache: dict | None = None) -> int:
    return determinant_from_jones(jones(D, cache=cache))


@dataclass(frozen=True)
class SkeinReport:
    """Outcome of checking the oriented skein identity at one crossing.

    ``v_first``/``v_second`` are the Jones polynomials of the two smoothings in
    the order they appear in the identity and ``e`` is the exponent parameter
    used there.  ``first_is_a_smoothing`` records that the first term is always
    the ``A``-weighted smoothing.
    """

    crossing: int
    sign: int
    e: int
    v: HalfLaurent
    v_first: HalfLaurent
    v_second: HalfLaurent
    rhs: HalfLaurent
    holds: bool
    first_is_a_smoothing: bool = True

    @property
    def formula(self) -> str:
        if self.sign > 0:
            return "V = -t^(1/2) V0 - t^(3e/2+1) V1"
        return "V = -t^(3e/2-1) V0 - t^(-1/2) V1"


def skein_rhs(sign: int, e: int, v0: HalfLaurent, v1: HalfLaurent) -> HalfLaurent:
    """Right-hand side of the skein identity for a crossing of the given sign."""
    if sign > 0:
        return mono_mul(v0, -1, 1) + mono_mul(v1, -1, 3 * e + 2)
    return mono_mul(v0, -1, 3 * e - 2) + mono_mul(v1, -1, -1)


def skein_terms(D: Diagram, i: int):
    """Smoothings and ``e`` in the labeling of the bracket relation.

    Returns ``(sign, e, L0, L1)`` where ``L0`` is the ``A``-smoothing.  At a
    positive crossing this is the orientation-inheriting smoothing and ``e`` is
    the negative-crossing gain of ``L1``; at a negative crossing ``L0`` is the
    re-oriented smoothing and ``e`` is the positive-crossing loss of ``L0``.
    """
    out = smooth(D, i)
    if out.crossing_sign > 0:
        return 1, out.e, out.zero_smoothing, out.one_smoothing
    L0 = out.one_smoothing
    return -1, D.n_positive - L0.n_positive, L0, out.zero_smoothing


def skein_check(D: Diagram, i: int, cache: dict | None = None) -> SkeinReport:
    sign, e, L0, L1 = skein_terms(D, i)
    if cache is None:
        cache = {}
    v = jones(D, cache=cache)
    v0 = jones(L0, cache=cache)
    v1 = jones(L1, cache=cache)
    rhs = skein_rhs(sign, e, v0, v1)
    assert sign == crossing_sign(D, i)
    return SkeinReport(i, sign, e, v, v0, v1, rhs, rhs == v)
