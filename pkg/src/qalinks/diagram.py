"""Oriented link diagrams in planar-diagram (PD) notation.

Each crossing is a quadruple ``(a, b, c, d)`` of edge labels read
counterclockwise starting from the incoming under-strand, so the under-strand
runs ``a -> c``.  The crossing is positive when the over-strand runs
``d -> b`` and negative when it runs ``b -> d``.  Crossing-free circles cannot
be written in PD notation and are carried as a separate count.

Every diagram returned by a surgery operation (smoothing, simplification,
twisting) is renumbered so that edge labels run ``1..2n`` consecutively along
each component in the direction of its orientation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

from .errors import InvariantViolation, PDParseError
from .unionfind import UnionFind

Quad = tuple[int, int, int, int]

# pairings of quadruple positions joined by each smoothing
A_JOINS = ((0, 1), (2, 3))
B_JOINS = ((0, 3), (1, 2))
PASS_THROUGH = ((0, 2), (1, 3))


@dataclass(frozen=True)
class Diagram:
    crossings: tuple[Quad, ...]
    free_circles: int = 0

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(tuple(q) for q in self.crossings))
        if self.free_circles < 0:
            raise ValueError("free_circles must be nonnegative")

    # -- structure -----------------------------------------------------------

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @cached_property
    def occurrences(self) -> dict[int, list[tuple[int, int]]]:
        occ: dict[int, list[tuple[int, int]]] = {}
        for k, quad in enumerate(self.crossings):
            for p, label in enumerate(quad):
                occ.setdefault(label, []).append((k, p))
        return occ

    def _other(self, label: int, where: tuple[int, int]) -> tuple[int, int]:
        first, second = self.occurrences[label]
        return second if first == where else first

    @cached_property
    def _orientation(self):
        heads, components = _orient(self.crossings, self.occurrences, {}, strict=True)
        return heads, components

    @property
    def heads(self) -> dict[tuple[int, int], bool]:
        """Map ``(crossing, position) -> True`` where the edge there enters the crossing."""
        return self._orientation[0]

    @property
    def cycles(self) -> list[list[int]]:
        """Edge labels of each crossed component, in orientation order."""
        return self._orientation[1]

    @property
    def n_components(self) -> int:
        return len(self.cycles) + self.free_circles

    def sign(self, i: int) -> int:
        return crossing_sign(self, i)

    @cached_property
    def signs(self) -> tuple[int, ...]:
        return tuple(1 if self.heads[(k, 3)] else -1 for k in range(self.n_crossings))

    @property
    def n_positive(self) -> int:
        return sum(1 for s in self.signs if s > 0)

    @property
    def n_negative(self) -> int:
        return sum(1 for s in self.signs if s < 0)

    def faces(self) -> list[list[tuple[int, int]]]:
        """Faces of the projection as cycles of darts ``(crossing, position)``."""
        seen = set()
        out = []
        for k in range(self.n_crossings):
            for p in range(4):
                if (k, p) in seen:
                    continue
                face = []
                dart = (k, p)
                while dart not in seen:
                    seen.add(dart)
                    face.append(dart)
                    label = self.crossings[dart[0]][dart[1]]
                    k2, p2 = self._other(label, dart)
                    dart = (k2, (p2 - 1) % 4)
                out.append(face)
        return out

    def pieces(self) -> list[list[int]]:
        """Crossing indices grouped into connected pieces of the projection."""
        uf = UnionFind(range(self.n_crossings))
        for (k1, _), (k2, _) in self.occurrences.values():
            uf.union(k1, k2)
        return sorted(sorted(g) for g in uf.groups().values())

    def to_text(self) -> str:
        return serialize(self)

    def __str__(self):
        return serialize(self)


def crossing_sign(D: Diagram, i: int) -> int:
    _check_index(D, i)
    return D.signs[i]


def writhe(D: Diagram) -> int:
    return sum(D.signs)


def _check_index(D: Diagram, i: int):
    if not isinstance(i, int) or not 0 <= i < D.n_crossings:
        raise IndexError(f"crossing index {i} out of range for a {D.n_crossings}-crossing diagram")


# -- orientation ---------------------------------------------------------------

def _walk(quads, occ, label):
    """Traverse the component of ``label`` taking its first occurrence as head.

    Returns a list of ``(label, head_dart, tail_dart)`` in traversal order,
    where ``tail_dart`` is where the edge leaves a crossing.
    """
    steps = []
    head = occ[label][0]
    start = head
    while True:
        k, p = head
        tail = (k, (p + 2) % 4)
        nxt = quads[k][tail[1]]
        a, b = occ[nxt]
        nxt_head = b if a == tail else a
        steps.append((nxt, nxt_head, tail))
        head = nxt_head
        if head == start:
            break
    # rotate so the walk starts with the starting label
    steps = steps[-1:] + steps[:-1]
    return steps


def _orient(quads, occ, refs, strict):
    """Choose an orientation for each crossed component.

    ``refs`` maps a label to ``(rank, dart, is_head)``: the edge labelled
    ``label`` enters (or leaves) its crossing at ``dart``.  For each component
    the reference of smallest rank fixes the direction.  Without a reference
    the under-strand convention (position 0 incoming) decides; a component that
    never passes under falls back to increasing edge numbering.
    """
    heads: dict[tuple[int, int], bool] = {}
    components = []
    done = set()
    for label in sorted(occ):
        if label in done:
            continue
        steps = _walk(quads, occ, label)
        labels = [s[0] for s in steps]
        done.update(labels)
        forward = None
        best = None
        for lab in labels:
            if lab in refs and (best is None or refs[lab][0] < best[0]):
                best = (refs[lab][0], lab)
        if best is not None:
            _, lab = best
            _, dart, is_head = refs[lab]
            head_dart = next(s[1] for s in steps if s[0] == lab)
            forward = (head_dart == dart) == is_head
        else:
            votes = set()
            for lab, hd, tl in steps:
                for (k, p), is_head in ((hd, True), (tl, False)):
                    if p == 0:
                        votes.add(is_head)
                    elif p == 2:
                        votes.add(not is_head)
            if len(votes) > 1:
                if strict:
                    k, p = steps[0][1]
                    raise PDParseError(
                        f"broken traversal: the component through edge {label} runs "
                        f"against the under-strand direction at some crossing")
                raise InvariantViolation("inconsistent under-strand orientation")
            if votes:
                forward = votes.pop()
            else:
                m = labels.index(min(labels))
                succ = labels[(m + 1) % len(labels)]
                pred = labels[m - 1]
                forward = succ <= pred
        if not forward:
            steps = [(lab, tl, hd) for lab, hd, tl in reversed(steps)]
            labels = [s[0] for s in steps]
        for lab, hd, tl in steps:
            heads[hd] = True
            heads[tl] = False
        components.append(labels)
    return heads, components


# -- parsing and serialization ---------------------------------------------------

_QUAD = re.compile(r"X\s*\[([^\]]*)\]")
_CIRCLES = re.compile(r";\s*circles\s*=\s*(\S*)\s*$")


def parse_pd(text: str) -> Diagram:
    """Parse ``X[a,b,c,d] ...`` text with an optional ``; circles=N`` suffix.

    >>> parse_pd("PD[]; circles=1")
    Diagram(crossings=(), free_circles=1)
    """
    body = text
    circles = None
    m = _CIRCLES.search(body)
    if m:
        try:
            circles = int(m.group(1))
        except ValueError:
            raise PDParseError(f"bad circle count {m.group(1)!r}", m.start(1)) from None
        if circles < 0:
            raise PDParseError("circle count must be nonnegative", m.start(1))
        body = body[:m.start()]
    elif ";" in body:
        raise PDParseError("expected '; circles=N' after ';'", body.index(";"))

    pos = 0
    offset = 0
    stripped = body.strip()
    if stripped.startswith("PD["):
        if not stripped.endswith("]"):
            raise PDParseError("unterminated PD[...]", len(body))
        offset = body.index("PD[") + 3
        body = body[offset:body.rindex("]")]

    quads = []
    quad_pos = []
    while True:
        while pos < len(body) and (body[pos].isspace() or body[pos] == ","):
            pos += 1
        if pos >= len(body):
            break
        m = _QUAD.match(body, pos)
        if not m:
            raise PDParseError(f"expected X[a,b,c,d], found {body[pos:pos + 12]!r}", pos + offset)
        parts = [s.strip() for s in m.group(1).split(",")]
        if len(parts) != 4:
            raise PDParseError(f"malformed quadruple X[{m.group(1)}]: need 4 edge labels",
                               pos + offset)
        try:
            quad = tuple(int(s) for s in parts)
        except ValueError:
            raise PDParseError(f"malformed quadruple X[{m.group(1)}]: labels must be integers",
                               pos + offset) from None
        quads.append(quad)
        quad_pos.append(pos + offset)
        pos = m.end()

    if circles is None:
        circles = 0
    if not quads and circles == 0:
        raise PDParseError("empty diagram: no crossings and no circles", 0)
    return _validated(tuple(quads), circles, quad_pos)


def _validated(quads, circles, quad_pos=None) -> Diagram:
    D = Diagram(quads, circles)
    occ: dict[int, list] = {}
    for k, quad in enumerate(quads):
        for p, label in enumerate(quad):
            occ.setdefault(label, []).append((k, p))
    for label in sorted(occ, key=lambda lab: occ[lab][0]):
        n = len(occ[label])
        if n != 2:
            k = occ[label][0][0]
            where = quad_pos[k] if quad_pos else None
            raise PDParseError(f"edge {label} appears {n} time(s); every edge must appear "
                               f"exactly twice", where)
    D.heads  # orientation check raises PDParseError on a broken traversal
    faces = D.faces()
    face_piece = {}
    pieces = D.pieces()
    for idx, piece in enumerate(pieces):
        for k in piece:
            face_piece[k] = idx
    counts = [0] * len(pieces)
    for face in faces:
        counts[face_piece[face[0][0]]] += 1
    for idx, piece in enumerate(pieces):
        if counts[idx] != len(piece) + 2:
            k = piece[0]
            where = quad_pos[k] if quad_pos else None
            raise PDParseError("broken traversal: crossings do not form a planar diagram "
                               f"(Euler characteristic fails near crossing {k})", where)
    return D


def serialize(D: Diagram) -> str:
    body = " ".join("X[%d,%d,%d,%d]" % q for q in D.crossings)
    if not D.crossings:
        return f"PD[]; circles={D.free_circles}"
    if D.free_circles:
        return f"{body}; circles={D.free_circles}"
    return body


# -- rebuilding after surgery -----------------------------------------------------

def _rebuild(quads, free, refs) -> Diagram:
    """Orient, rotate and renumber a list of quadruples.

    ``quads`` may have a reversed under-strand at some crossings (position 2
    incoming); those are rotated.  ``refs`` as in :func:`_orient`.  Components
    are numbered in order of their smallest reference rank, starting from the
    reference edge.
    """
    quads = [list(q) for q in quads]
    occ: dict[int, list] = {}
    for k, quad in enumerate(quads):
        for p, label in enumerate(quad):
            occ.setdefault(label, []).append((k, p))
    for label, where in occ.items():
        if len(where) != 2:
            raise InvariantViolation(f"edge {label} occurs {len(where)} times after surgery")
    heads, components = _orient(quads, occ, refs, strict=False)

    def comp_rank(labels):
        ranked = [refs[lab][0] for lab in labels if lab in refs]
        return (min(ranked) if ranked else float("inf"), min(labels))

    order = sorted(components, key=comp_rank)
    relabel = {}
    nxt = 1
    for labels in order:
        ranked = [(refs[lab][0], lab) for lab in labels if lab in refs]
        start_label = min(ranked)[1] if ranked else min(labels)
        s = labels.index(start_label)
        for lab in labels[s:] + labels[:s]:
            relabel[lab] = nxt
            nxt += 1
    out = []
    for k, quad in enumerate(quads):
        q = [relabel[lab] for lab in quad]
        if not heads[(k, 0)]:
            q = q[2:] + q[:2]
        out.append(tuple(q))
    return Diagram(tuple(out), free)


def _surgery(D: Diagram, joins: dict[int, tuple], reorient: bool = False,
             inserted=None) -> Diagram:
    """Remove crossings, joining the edge ends given per removed crossing.

    ``joins`` maps a crossing index to the position pairs spliced together.
    With ``reorient`` the orientation of each resulting component is taken
    from its smallest surviving original edge; otherwise all surviving
    occurrences agree and any of them fixes it.
    """
    uf = UnionFind(D.occurrences)
    for k, pairs in joins.items():
        quad = D.crossings[k]
        for p, q in pairs:
            uf.union(quad[p], quad[q])
    keep = [k for k in range(D.n_crossings) if k not in joins]
    new_quads = [tuple(uf.find(lab) for lab in D.crossings[k]) for k in keep]
    present = {lab for q in new_quads for lab in q}
    closed = {uf.find(lab) for lab in D.occurrences} - present
    refs = {}
    heads = D.heads
    for new_k, k in enumerate(keep):
        for p, lab in enumerate(D.crossings[k]):
            rep = uf.find(lab)
            cand = (lab, (new_k, p), heads[(k, p)])
            if rep not in refs or cand[0] < refs[rep][0]:
                refs[rep] = cand
    if not reorient:
        # any reference is valid; keep the smallest for determinism
        pass
    return _rebuild(new_quads, D.free_circles + len(closed), refs)


# -- smoothing -----------------------------------------------------------------

@dataclass(frozen=True)
class SmoothingOutcome:
    """Both smoothings of a crossing.

    ``zero_smoothing`` inherits the orientation of the parent diagram;
    ``one_smoothing`` is the orientation-incompatible reconnection, re-oriented.
    ``e`` is a crossing-count difference: at a positive
    crossing the change in negative crossings, at a negative crossing the
    change in positive crossings, measured from the parent to ``one_smoothing``.
    """

    zero_smoothing: Diagram
    one_smoothing: Diagram
    e: int
    crossing_sign: int

    @property
    def a_smoothing(self) -> Diagram:
        """The smoothing weighted by ``A`` in the bracket skein relation."""
        return self.zero_smoothing if self.crossing_sign > 0 else self.one_smoothing

    @property
    def b_smoothing(self) -> Diagram:
        return self.one_smoothing if self.crossing_sign > 0 else self.zero_smoothing


def smooth(D: Diagram, i: int) -> SmoothingOutcome:
    _check_index(D, i)
    sign = D.signs[i]
    oriented, other = (A_JOINS, B_JOINS) if sign > 0 else (B_JOINS, A_JOINS)
    L0 = _surgery(D, {i: oriented})
    L1 = _surgery(D, {i: other}, reorient=True)
    if sign > 0:
        e = L1.n_negative - D.n_negative
    else:
        e = L1.n_positive - D.n_positive
    return SmoothingOutcome(L0, L1, e, sign)


def unoriented_smoothing(D: Diagram, i: int, kind: str) -> Diagram:
    """The ``'A'`` or ``'B'`` smoothing, orientation chosen as in :func:`smooth`."""
    _check_index(D, i)
    joins = A_JOINS if kind == "A" else B_JOINS
    return _surgery(D, {i: joins}, reorient=True)


# -- simplification ------------------------------------------------------------

def _find_r1(D: Diagram):
    for k, quad in enumerate(D.crossings):
        for p in range(4):
            if quad[p] == quad[(p + 1) % 4]:
                return k
    return None


def _find_r2(D: Diagram):
    best = None
    for face in D.faces():
        if len(face) != 2:
            continue
        (k1, p1), (k2, p2) = face
        if k1 == k2:
            continue
        e = D.crossings[k1][p1]
        f = D.crossings[k2][p2]
        e_end = D._other(e, (k1, p1))
        f_end = D._other(f, (k2, p2))
        e_over = p1 % 2 == 1 and e_end[1] % 2 == 1
        e_under = p1 % 2 == 0 and e_end[1] % 2 == 0
        f_over = p2 % 2 == 1 and f_end[1] % 2 == 1
        f_under = p2 % 2 == 0 and f_end[1] % 2 == 0
        if (e_over and f_under) or (e_under and f_over):
            pair = tuple(sorted((k1, k2)))
            if best is None or pair < best:
                best = pair
    return best


def simplify(D: Diagram) -> Diagram:
    """Remove Reidemeister-1 kinks and Reidemeister-2 bigons to a fixed point."""
    while True:
        k = _find_r1(D)
        if k is not None:
            D = _surgery(D, {k: PASS_THROUGH})
            continue
        pair = _find_r2(D)
        if pair is not None:
            D = _surgery(D, {pair[0]: PASS_THROUGH, pair[1]: PASS_THROUGH})
            continue
        return D


def is_unknot_diagram(D: Diagram) -> bool:
    return D.n_crossings == 0 and D.free_circles == 1


# -- other constructions --------------------------------------------------------

def normalize(D: Diagram) -> Diagram:
    """Renumber edges consecutively along each component."""
    refs = {}
    for (k, p), is_head in D.heads.items():
        lab = D.crossings[k][p]
        if lab not in refs:
            refs[lab] = (lab, (k, p), is_head)
    return _rebuild(D.crossings, D.free_circles, refs)


def mirror(D: Diagram) -> Diagram:
    """Exchange over and under at every crossing."""
    out = []
    for k, (a, b, c, d) in enumerate(D.crossings):
        out.append((d, a, b, c) if D.signs[k] > 0 else (b, c, d, a))
    return Diagram(tuple(out), D.free_circles)


def relabel(D: Diagram, mapping: dict[int, int]) -> Diagram:
    return Diagram(tuple(tuple(mapping[x] for x in q) for q in D.crossings), D.free_circles)


def disjoint_union(D1: Diagram, D2: Diagram) -> Diagram:
    shift = max(D1.occurrences, default=0)
    moved = tuple(tuple(x + shift for x in q) for q in D2.crossings)
    return Diagram(D1.crossings + moved, D1.free_circles + D2.free_circles)


def replace_crossing_with_tangle(D: Diagram, i: int, n: int) -> Diagram:
    """Replace crossing ``i`` by a vertical chain of ``n`` crossings of its type.

    The chain is stacked from the ``(a, b)`` side to the ``(c, d)`` side, so
    the ``A``-smoothing of any chain crossing cuts the chain while the
    ``B``-smoothing shortens it by one.
    """
    _check_index(D, i)
    if not isinstance(n, int) or n < 1:
        raise ValueError("n must be a positive integer")
    a, b, c, d = D.crossings[i]
    fresh = max(D.occurrences) + 1
    chain = []
    in_l, in_r = a, b
    for j in range(n):
        if j == n - 1:
            out_l, out_r = d, c
        else:
            out_l, out_r = fresh, fresh + 1
            fresh += 2
        chain.append((in_l, in_r, out_r, out_l))
        in_l, in_r = out_l, out_r
    quads = list(D.crossings[:i]) + chain + list(D.crossings[i + 1:])
    refs = {}
    heads = D.heads
    for k, quad in enumerate(D.crossings):
        if k == i:
            continue
        new_k = k if k < i else k + n - 1
        for p, lab in enumerate(quad):
            if lab not in refs or (k, p) < refs[lab][1]:
                refs[lab] = (lab, (new_k, p), heads[(k, p)])
    if a not in refs:
        refs[a] = (a, (i, 0), True)
    return _rebuild(quads, D.free_circles, refs)


# -- canonical keys ---------------------------------------------------------------

def canonical_key(D: Diagram) -> str:
    """A string equal for diagrams that differ only by edge relabeling.

    The key describes the unoriented diagram: orientation cannot be part of
    it because components that only pass over take their direction from the
    edge numbering.  Each connected piece is relabeled by a breadth-first walk
    of its planar rotation system from every starting dart, and the smallest
    serialization is kept.  Piece keys are sorted and the circle count
    appended.  The serialization lists every crossing, so distinct unoriented
    diagrams never share a key.
    """
    keys = []
    for piece in D.pieces():
        best = None
        for k in piece:
            for p in range(4):
                s = _piece_serialization(D, k, p)
                if best is None or s < best:
                    best = s
        keys.append(best)
    keys.sort()
    return "|".join(keys) + f"|o{D.free_circles}"


def _piece_serialization(D: Diagram, k0: int, p0: int) -> str:
    crossings = D.crossings
    new: dict[int, int] = {}
    order = [(k0, p0)]
    seen = {k0}
    qi = 0
    while qi < len(order):
        k, entry = order[qi]
        qi += 1
        quad = crossings[k]
        # counterclockwise from the dart we arrived through
        for j in range(4):
            p = (entry + j) % 4
            lab = quad[p]
            if lab not in new:
                new[lab] = len(new) + 1
            k2, p2 = D._other(lab, (k, p))
            if k2 not in seen:
                seen.add(k2)
                order.append((k2, p2))
    out = []
    for k, _ in order:
        q = tuple(new[x] for x in crossings[k])
        # unoriented crossing: the under strand may start at either end
        out.append(min(q, q[2:] + q[:2]))
    return ";".join("%d,%d,%d,%d" % q for q in out)
