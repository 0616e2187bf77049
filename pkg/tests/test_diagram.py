import random

import pytest

from qalinks.diagram import (Diagram, canonical_key, crossing_sign, disjoint_union,
                             is_unknot_diagram, mirror, parse_pd, relabel,
                             replace_crossing_with_tangle, serialize, simplify, smooth, writhe)
from qalinks.errors import PDParseError
from qalinks.fixtures import fixture, fixtures
from qalinks.invariants import jones
from qalinks.random_diagrams import braid_closure, random_diagrams, random_relabeling

TREF = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"


def D(name):
    return fixture(name).diagram


def test_parse_examples():
    u = parse_pd("PD[]; circles=1")
    assert u.n_crossings == 0 and u.free_circles == 1
    assert is_unknot_diagram(u)
    t = parse_pd(TREF)
    assert t.n_crossings == 3 and t.n_components == 1
    assert parse_pd("PD[" + TREF.replace(" ", ", ") + "]") == t


@pytest.mark.parametrize("text, fragment", [
    ("X[1,4,2,5] X[3,6,4,2]", "appears"),
    ("X[1,2,3]", "malformed quadruple"),
    ("X[1,2,2,1] Y", "position"),
    ("", "empty diagram"),
])
def test_parse_errors(text, fragment):
    with pytest.raises(PDParseError, match=fragment):
        parse_pd(text)


def test_parse_error_carries_position():
    with pytest.raises(PDParseError) as info:
        parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6]")
    assert info.value.position is not None


def test_signs_and_writhe():
    assert [crossing_sign(D("TREF_L"), i) for i in range(3)] == [-1, -1, -1]
    assert set(D("HOPF_P").signs) == {1}
    assert sorted(D("FIG8").signs) == [-1, -1, 1, 1]
    assert writhe(D("UNKNOT")) == 0
    assert writhe(D("TREF_L")) == -3
    assert writhe(D("FIG8")) == 0
    with pytest.raises(IndexError):
        crossing_sign(D("TREF_L"), 3)


def test_smooth_examples():
    assert is_unknot_diagram(simplify(smooth(D("HOPF_N"), 0).zero_smoothing))
    out = smooth(D("TREF_L"), 0)
    simple = sorted((simplify(out.zero_smoothing), simplify(out.one_smoothing)),
                    key=lambda d: d.n_crossings)
    assert is_unknot_diagram(simple[0])
    assert simple[1].n_crossings == 2 and simple[1].n_components == 2


def test_smoothings_stay_valid_and_split_or_merge():
    for fx in fixtures().values():
        d = fx.diagram
        for i in range(d.n_crossings):
            out = smooth(d, i)
            # the orientation-inheriting splice always merges or splits
            assert abs(out.zero_smoothing.n_components - d.n_components) == 1
            for child in (out.zero_smoothing, out.one_smoothing):
                # re-parsing the serialized child revalidates every invariant
                assert parse_pd(serialize(child)) == child


def test_e_recomputed_from_diagrams():
    for fx in fixtures().values():
        d = fx.diagram
        for i in range(d.n_crossings):
            out = smooth(d, i)
            if out.crossing_sign > 0:
                assert out.e == out.one_smoothing.n_negative - d.n_negative
            else:
                assert out.e == out.one_smoothing.n_positive - d.n_positive


def test_simplify_examples():
    assert is_unknot_diagram(simplify(parse_pd("X[1,1,2,2]")))
    assert is_unknot_diagram(simplify(parse_pd("X[2,1,1,2]")))
    r2 = parse_pd("X[1,4,2,1] X[2,4,3,3]")
    assert is_unknot_diagram(simplify(r2))
    assert simplify(D("TREF_L")) == D("TREF_L")


def test_simplify_preserves_jones(seed):
    diagrams = [fx.diagram for fx in fixtures().values()]
    rng = random.Random(seed)
    for d in random_diagrams(seed, 100, max_crossings=8):
        if d.n_crossings:
            i = rng.randrange(d.n_crossings)
            diagrams.append(replace_crossing_with_tangle(d, i, rng.randint(1, 3)))
    for d in diagrams:
        s = simplify(d)
        assert s.n_crossings <= d.n_crossings
        assert jones(s) == jones(d)


def test_canonical_key():
    rng = random.Random(0)
    t = D("TREF_L")
    assert canonical_key(t) == canonical_key(relabel(t, random_relabeling(t, rng)))
    assert canonical_key(t) != canonical_key(D("FIG8"))
    assert canonical_key(Diagram((), 1)) != canonical_key(Diagram((), 2))


def test_canonical_key_relabel_invariant(seed):
    rng = random.Random(seed)
    for d in random_diagrams(seed, 60, max_crossings=9):
        assert canonical_key(d) == canonical_key(relabel(d, random_relabeling(d, rng)))


def test_tangle_replacement():
    for fx in fixtures().values():
        d = fx.diagram
        for i in range(d.n_crossings):
            assert jones(replace_crossing_with_tangle(d, i, 1)) == jones(d)
    assert replace_crossing_with_tangle(D("TREF_L"), 0, 2).n_crossings == 4
    hopf3 = replace_crossing_with_tangle(D("HOPF_N"), 0, 3)
    assert hopf3.n_crossings == 4 and hopf3.n_components == 2
    with pytest.raises(IndexError):
        replace_crossing_with_tangle(D("TREF_L"), 5, 2)


def test_disjoint_union():
    t = D("TREF_L")
    u = disjoint_union(t, D("UNKNOT"))
    assert u.crossings == t.crossings and u.free_circles == 1
    assert disjoint_union(D("UNKNOT"), D("UNKNOT")).free_circles == 2
    th = disjoint_union(t, D("HOPF_N"))
    assert th.n_crossings == 5 and th.n_components == 3


def test_mirror_is_involution():
    for fx in fixtures().values():
        d = fx.diagram
        assert mirror(mirror(d)) == d
        assert [-s for s in d.signs] == list(mirror(d).signs)
    assert mirror(D("HOPF_N")).signs == D("HOPF_P").signs


def test_serialize_round_trip(seed):
    for d in random_diagrams(seed, 50) + [fx.diagram for fx in fixtures().values()]:
        assert parse_pd(serialize(d)) == d
    assert serialize(Diagram((), 2)) == "PD[]; circles=2"


def test_braid_closure_components():
    assert braid_closure([1, 1], 2).n_components == 2
    assert braid_closure([1, 1, 1], 2).n_components == 1
    assert braid_closure([1], 3).free_circles == 1
