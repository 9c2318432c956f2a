import itertools

import pytest

from biskit.boolean import check_boolean, check_multiplicative
from biskit.booleanization import (
    booleanization_iso,
    booleanize,
    enumerate_filters,
    filter_groupoid,
    gamma_extension,
    principal_map_is_iso,
)
from biskit.core import semigroup_iso
from biskit.corpus import corpus_semigroup
from biskit.groupoid import groupoid_iso


def test_booleanization_sizes():
    cases = {"b2": 7, "chain3": 4, "antichain3": 4, "z2-group": 3, "i2": 21}
    for name, size in cases.items():
        assert booleanize(corpus_semigroup(name)).bs.size == size, name


def test_beta_is_multiplicative_and_injective_off_zero():
    for name in ("b2", "chain3", "z2-group"):
        b = booleanize(corpus_semigroup(name))
        s0, t = b.source0, b.bs.base
        assert check_multiplicative(s0, t, b.beta) is None
        nonzero = [x for x in range(s0.size) if x != s0.zero]
        images = [b.beta[x] for x in nonzero]
        assert len(set(images)) == len(images)
        assert b.beta[s0.zero] == t.zero


def test_booleanization_of_boolean_is_bigger():
    # beta is multiplicative but not additive, so i2 grows to its
    # lattice of compatible down-sets
    b = booleanize(corpus_semigroup("i2"))
    assert b.source.size == 7
    assert b.bs.size == 21


def test_gamma_extension_of_inclusion():
    s = corpus_semigroup("b2")
    b = booleanize(s)
    g = gamma_extension(s, b.beta, b.bs, booleanization=b)
    assert g.unique
    assert g.morphism.map == tuple(range(b.bs.size))


def test_gamma_needs_a_coherent_alpha():
    s = corpus_semigroup("b2")
    b = booleanize(s)
    alpha = list(b.beta)
    alpha[1], alpha[2] = alpha[2], alpha[1]  # no longer multiplicative
    with pytest.raises(Exception):
        gamma_extension(s, tuple(alpha), b.bs, booleanization=b)


def test_filters_chain3():
    s = corpus_semigroup("chain3")
    fr = enumerate_filters(s)
    assert {f.carrier for f in fr.proper} == {
        frozenset({2}),
        frozenset({1, 2}),
    }
    assert [f.principal_at for f in fr.ultra] == [1]
    assert fr.all_principal


def test_filters_of_a_group_are_everything_upward():
    fr = enumerate_filters(corpus_semigroup("z2-group"))
    assert len(fr.proper) == 2
    assert len(fr.ultra) == 2


def test_ultrafilters_are_atom_upsets():
    for name in ("i2", "m2z2zero", "z3zero"):
        s = corpus_semigroup(name)
        fr = enumerate_filters(s)
        assert {f.principal_at for f in fr.ultra} == set(s.atoms), name
        for f in fr.ultra:
            assert f.carrier == frozenset(s.up[f.principal_at])


def test_filter_groupoid_matches_restricted_product():
    s = corpus_semigroup("i2")
    fr = enumerate_filters(s)
    fg = filter_groupoid(s, fr.proper)
    assert fg.size == len(fr.proper)
    assert principal_map_is_iso(s, [f.principal_at for f in fr.proper], fg)


def test_ultrafilter_groupoid_is_the_atoms():
    from biskit.boolean import atoms_groupoid

    s = corpus_semigroup("i3")
    bs = check_boolean(s).structure
    fr = enumerate_filters(s)
    fg = filter_groupoid(s, fr.ultra)
    assert groupoid_iso(fg, atoms_groupoid(bs)) is not None


def test_booleanization_iso_positive():
    rep = booleanization_iso(
        corpus_semigroup("chain3"), corpus_semigroup("antichain3")
    )
    assert rep.isomorphic
    assert rep.induced is not None
    # the induced map really is an isomorphism of the two Booleanizations
    bs = booleanize(corpus_semigroup("chain3")).bs.base
    bt = booleanize(corpus_semigroup("antichain3")).bs.base
    f = rep.induced
    for a in range(bs.size):
        for b in range(bs.size):
            assert f[bs.table[a][b]] == bt.table[f[a]][f[b]]


def test_booleanization_iso_direct_cross_check():
    rep = booleanization_iso(
        corpus_semigroup("chain3"),
        corpus_semigroup("antichain3"),
        direct_cross_check_cap=8,
    )
    assert rep.isomorphic


def test_booleanization_iso_negative():
    rep = booleanization_iso(corpus_semigroup("b2"), corpus_semigroup("z2zero"))
    assert not rep.isomorphic
    assert rep.induced is None


def test_booleanization_of_z2_is_z2zero():
    b = booleanize(corpus_semigroup("z2-group"))
    assert semigroup_iso(b.bs.base, corpus_semigroup("z2zero")) is not None
