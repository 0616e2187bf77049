"""Seeded random link diagrams, built as closures of random braid words."""

from __future__ import annotations

import random

from .diagram import Diagram, normalize


def braid_closure(word, strands: int) -> Diagram:
    """PD code of the closure of a braid word.

    Generator ``+i`` / ``-i`` crosses strand positions ``i`` and ``i+1``
    (1-based).  Strands never touched by a generator become free circles.
    """
    if strands < 1:
        raise ValueError("need at least one strand")
    current = list(range(1, strands + 1))
    bottom = list(current)
    nxt = strands + 1
    quads = []
    for g in word:
        i = abs(g) - 1
        if g == 0 or not 0 <= i < strands - 1:
            raise ValueError(f"generator {g} invalid on {strands} strands")
        x, y = current[i], current[i + 1]
        x_out, y_out = nxt, nxt + 1
        nxt += 2
        # the strand entering at position i leaves at i+1 and vice versa
        if g < 0:
            quads.append((x, y, y_out, x_out))
        else:
            quads.append((y, y_out, x_out, x))
        current[i], current[i + 1] = x_out, y_out
    close = dict(zip(current, bottom))
    quads = [tuple(close.get(lab, lab) for lab in q) for q in quads]
    used = {lab for q in quads for lab in q}
    free = sum(1 for lab in bottom if lab not in used)
    return normalize(Diagram(tuple(quads), free)) if quads else Diagram((), free)


def random_diagram(rng: random.Random, max_crossings: int = 12, min_crossings: int = 1,
                   max_strands: int = 4) -> Diagram:
    """A braid closure with between ``min_crossings`` and ``max_crossings`` crossings."""
    n = rng.randint(min_crossings, max_crossings)
    strands = rng.randint(2, max_strands)
    word = [rng.choice((-1, 1)) * rng.randint(1, strands - 1) for _ in range(n)]
    return braid_closure(word, strands)


def random_diagrams(seed: int, count: int, **kwargs) -> list[Diagram]:
    rng = random.Random(seed)
    return [random_diagram(rng, **kwargs) for _ in range(count)]


def random_relabeling(D: Diagram, rng: random.Random) -> dict[int, int]:
    labels = sorted(D.occurrences)
    targets = rng.sample(range(1, 4 * len(labels) + 2), len(labels))
    return dict(zip(labels, targets))
