"""Determinant via a reduced Goeritz matrix.

Written from the PD quadruples alone (its own face tracing, coloring and
elimination) so that it shares no code with the bracket-based determinant.
"""

from __future__ import annotations

from fractions import Fraction


def _ends(quads):
    ends: dict[int, list[tuple[int, int]]] = {}
    for k, quad in enumerate(quads):
        for p, e in enumerate(quad):
            ends.setdefault(e, []).append((k, p))
    return ends


def _other(ends, k, p, e):
    a, b = ends[e]
    return b if a == (k, p) else a


def _connected(quads, ends) -> bool:
    seen = {0}
    stack = [0]
    while stack:
        k = stack.pop()
        for e in quads[k]:
            for k2, _ in ends[e]:
                if k2 not in seen:
                    seen.add(k2)
                    stack.append(k2)
    return len(seen) == len(quads)


def _faces(quads, ends) -> dict[tuple[int, int], int]:
    """Face id for every dart ``(k, p)``; the face leaves crossing ``k`` at ``p``."""
    face_of: dict[tuple[int, int], int] = {}
    for start in ((k, p) for k in range(len(quads)) for p in range(4)):
        if start in face_of:
            continue
        fid = len(set(face_of.values()))
        dart = start
        while dart not in face_of:
            face_of[dart] = fid
            k, p = dart
            k2, p2 = _other(ends, k, p, quads[k][p])
            dart = (k2, (p2 - 1) % 4)
    return face_of


def _det(matrix: list[list[Fraction]]) -> Fraction:
    m = [row[:] for row in matrix]
    n = len(m)
    out = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            out = -out
        out *= m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] / m[col][col]
            if f:
                for c in range(col, n):
                    m[r][c] -= f * m[col][c]
    return out


def goeritz_determinant(quads, free_circles: int = 0) -> int:
    quads = [tuple(q) for q in quads]
    if not quads:
        return 1 if free_circles == 1 else 0
    ends = _ends(quads)
    if free_circles or not _connected(quads, ends):
        return 0  # split diagrams
    face_of = _faces(quads, ends)
    n_faces = len(set(face_of.values()))
    assert n_faces == len(quads) + 2, "diagram is not planar"

    # checkerboard: the two faces on either side of an edge differ in color
    adj: dict[int, set[int]] = {f: set() for f in range(n_faces)}
    for e, ((k, p), (k2, p2)) in ends.items():
        f, g = face_of[(k, p)], face_of[(k2, p2)]
        adj[f].add(g)
        adj[g].add(f)
    color = {0: 0}
    stack = [0]
    while stack:
        f = stack.pop()
        for g in adj[f]:
            if g not in color:
                color[g] = 1 - color[f]
                stack.append(g)
            assert color[g] != color[f], "faces are not two-colorable"

    shaded = sorted(f for f in range(n_faces) if color[f] == 0)
    index = {f: i for i, f in enumerate(shaded)}
    size = len(shaded)
    G = [[Fraction(0)] * size for _ in range(size)]
    for k in range(len(quads)):
        # corner (q, q+1) lies in the face leaving at q; the under strand is 0-2
        c01, c23 = face_of[(k, 0)], face_of[(k, 2)]
        c12, c30 = face_of[(k, 1)], face_of[(k, 3)]
        if color[c01] == 0:
            eta, f, g = 1, c01, c23
        else:
            eta, f, g = -1, c12, c30
        if f == g:
            continue
        i, j = index[f], index[g]
        G[i][j] -= eta
        G[j][i] -= eta
        G[i][i] += eta
        G[j][j] += eta
    reduced = [row[1:] for row in G[1:]]
    return abs(int(_det(reduced)))
