import itertools

import pytest

from biskit.corpus import corpus_groupoid, render_grp
from biskit.errors import NotGroupoid, ParseError
from biskit.groupoid import (
    Gpd,
    component_form,
    coordinatize,
    group_iso,
    group_name,
    groupoid_iso,
    parse_groupoid,
    reconstruct,
)


def z3_table():
    return [[(i + j) % 3 for j in range(3)] for i in range(3)]


def v4_table():
    return [[i ^ j for j in range(4)] for i in range(4)]


def s3_table():
    perms = list(itertools.permutations(range(3)))
    idx = {p: i for i, p in enumerate(perms)}
    return [
        [idx[tuple(p[q[x]] for x in range(3))] for q in perms] for p in perms
    ]


def test_parse_grp_roundtrip():
    g = corpus_groupoid("z2pair2")
    text = render_grp([list(r) for r in g.ptable], "scratch")
    assert parse_groupoid(text).ptable == g.ptable


def test_parse_grp_rejects_garbage():
    with pytest.raises(ParseError):
        parse_groupoid("n 2\n0 -2\n-1 1\n")


def test_not_groupoid():
    # a total constant table has no identities at all
    with pytest.raises(NotGroupoid):
        Gpd([[0, 0], [0, 0]])


def test_component_form_shapes():
    cases = {
        "trivial1": [(1, 1)],
        "pair2": [(1, 1), (1, 1)],
        "disc3": [(1, 1), (1, 1), (1, 1)],
        "z2": [(1, 2)],
        "z2pair2": [(1, 2), (1, 1)],
        "conn2z2": [(2, 2)],
    }
    for name, shape in cases.items():
        cf = component_form(corpus_groupoid(name))
        got = [(c.identity_count, c.group.size) for c in cf.components]
        assert got == shape, name


def test_group_names():
    assert group_name(Gpd([[0]])) == "trivial"
    assert group_name(Gpd([[0, 1], [1, 0]])) == "Z2"
    assert group_name(Gpd(z3_table())) == "Z3"
    assert group_name(Gpd(v4_table())) == "V4"
    assert group_name(Gpd(s3_table())) == "S3"


def test_group_iso_distinguishes_z4_v4():
    z4 = Gpd([[(i + j) % 4 for j in range(4)] for i in range(4)])
    assert group_iso(z4, Gpd(v4_table())) is None
    assert group_iso(Gpd(v4_table()), Gpd(v4_table())) is not None


def test_reconstruct_is_isomorphic():
    for name in ("trivial1", "pair2", "disc3", "z2", "z2pair2", "conn2z2"):
        g = corpus_groupoid(name)
        rebuilt = reconstruct(component_form(g))
        assert groupoid_iso(rebuilt, g) is not None, name


def test_coordinatize_conn2z2():
    g = corpus_groupoid("conn2z2")
    coord = coordinatize(g).coord
    # x*h*y composable with y*g*z, never with anything else
    for a in range(g.size):
        for b in range(g.size):
            _, xa, _, ya = coord[a]
            _, xb, _, yb = coord[b]
            defined = g.ptable[a][b] is not None
            assert defined == (ya == xb)
            if defined:
                _, xc, _, yc = coord[g.ptable[a][b]]
                assert (xc, yc) == (xa, yb)


def test_groupoid_iso_negative():
    assert groupoid_iso(corpus_groupoid("disc3"), corpus_groupoid("z2pair2")) is None


def test_groupoid_iso_relabelled():
    g = corpus_groupoid("conn2z2")
    perm = [3, 1, 4, 0, 2, 6, 5, 7]
    inv = [perm.index(i) for i in range(8)]
    pt = [[None] * 8 for _ in range(8)]
    for a in range(8):
        for b in range(8):
            v = g.ptable[inv[a]][inv[b]]
            pt[a][b] = None if v is None else perm[v]
    assert groupoid_iso(Gpd(pt), g) is not None


def test_empty_groupoid_is_allowed():
    g = Gpd([])
    assert g.size == 0
    assert component_form(g).components == ()
