"""The Booleanization of a finite inverse semigroup, filters, and the
universal extension property.

booleanize(s) is the local-bisection monoid of the nonzero part of s (a zero
is adjoined explicitly first when s has none), together with the embedding
that sends a to the set of nonzero elements below it.  gamma_extension
factors any morphism into a Boolean structure through that embedding, with
the extension's values forced singleton by singleton.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .boolean import (
    BoolInvSgp,
    KOfGroupoid,
    Morphism,
    as_boolean,
    check_multiplicative,
    check_zero_preserving,
    is_additive_morphism,
    k_of_groupoid,
)
from .core import InvSgp, adjoin_zero, restricted_groupoid, semigroup_iso
from .errors import (
    NotBoolean,
    NotHomomorphism,
    NotMultiplicative,
    NotZeroPreserving,
    SizeCapExceeded,
    TargetNotBoolean,
)
from .groupoid import Gpd, groupoid_iso


@dataclass(frozen=True)
class Booleanization:
    source: InvSgp  # what the caller handed in
    source0: InvSgp  # same, or with a zero adjoined as the last id
    groupoid: Gpd  # nonzero part of source0 under the restricted product
    target: KOfGroupoid
    beta: tuple  # source0 id -> id in target.structure

    @property
    def bs(self):
        return self.target.structure


def booleanize(s):
    """Local bisections of the nonzero part of s, with the order embedding.

    beta(a) collects the nonzero elements below a; it is checked injective
    and multiplicative, and the down-set product law
    (below a) * (below b) = below(a*b) is checked setwise on nonzero parts.
    """
    s0 = s if s.zero is not None else adjoin_zero(s)
    g = restricted_groupoid(s0)
    pos = {lab: i for i, lab in enumerate(g.labels)}
    kg = k_of_groupoid(g)
    index = {a: i for i, a in enumerate(kg.bisections)}
    beta = []
    for a in range(s0.size):
        below = frozenset(pos[x] for x in s0.down[a] if x != s0.zero)
        beta.append(index[below])
    assert len(set(beta)) == s0.size, "beta must be injective"
    kt = kg.structure.base.table
    for a in range(s0.size):
        for b in range(s0.size):
            assert beta[s0.table[a][b]] == kt[beta[a]][beta[b]], (
                "beta must preserve products"
            )
    # down-set product law, on nonzero parts
    down_nz = [
        frozenset(x for x in s0.down[a] if x != s0.zero) for a in range(s0.size)
    ]
    for a in range(s0.size):
        for b in range(s0.size):
            prod = frozenset(
                s0.table[x][y]
                for x in down_nz[a]
                for y in down_nz[b]
            ) - {s0.zero}
            assert prod == down_nz[s0.table[a][b]], "down-set product law"
    return Booleanization(s, s0, g, kg, tuple(beta))


@dataclass(frozen=True)
class GammaExtension:
    booleanization: Booleanization
    alpha: tuple  # source0 id -> target id, the map being extended
    morphism: Morphism  # from the Booleanization into the target
    singletons: tuple  # (source0 id, forced target value) per nonzero id
    unique: bool  # forced-value identity held for every singleton


def gamma_extension(s, alpha, target, booleanization=None):
    """Extend a morphism s -> target through the Booleanization of s.

    The singleton value at a is alpha(a) minus the join of alpha over the
    elements strictly below a; general values are orthogonal joins of
    singleton values.  The result is verified to be an additive morphism
    agreeing with alpha along beta, and each singleton value is checked
    forced, which settles uniqueness.
    """
    if not isinstance(target, BoolInvSgp):
        try:
            target = as_boolean(target)
        except NotBoolean as ex:
            raise TargetNotBoolean(str(ex)) from None
    b = booleanization if booleanization is not None else booleanize(s)
    s0 = b.source0
    t = target.base
    alpha = list(alpha)
    if len(alpha) == s.size and s0.size == s.size + 1:
        alpha.append(t.zero)
    if len(alpha) != s0.size:
        raise NotHomomorphism(("arity", len(alpha), s0.size))
    alpha = tuple(alpha)
    try:
        check_multiplicative(s0, target, alpha)
        check_zero_preserving(s0, target, alpha)
    except (NotMultiplicative, NotZeroPreserving) as ex:
        raise NotHomomorphism(ex.witness) from None

    gamma1 = {}
    for a in range(s0.size):
        if a == s0.zero:
            continue
        strict = [x for x in s0.down[a] if x != a and x != s0.zero]
        j = t.zero
        for x in strict:
            j2 = t.join_table[j][alpha[x]]
            assert j2 is not None, "joins below alpha(a) must exist"
            j = j2
        gamma1[a] = target.rc(alpha[a], j)

    pos = {lab: i for i, lab in enumerate(b.groupoid.labels)}
    gmap = []
    for aset in b.target.bisections:
        vals = [gamma1[b.groupoid.labels[i]] for i in sorted(aset)]
        for v1, v2 in itertools.combinations(vals, 2):
            assert t.orth[v1][v2], "singleton values must join orthogonally"
        gmap.append(target.join_of(vals) if vals else t.zero)
    gamma = Morphism(b.bs, target, tuple(gmap))

    for a in range(s0.size):
        assert gmap[b.beta[a]] == alpha[a], "extension must restrict to alpha"
    check_multiplicative(b.bs, target, gamma.map)
    check_zero_preserving(b.bs, target, gamma.map)
    assert is_additive_morphism(b.bs, target, gamma.map)

    # Uniqueness: the singleton at a equals beta(a) minus the join of beta
    # over everything strictly below, so any additive extension of alpha is
    # pinned there, and the rest are orthogonal joins of singletons.
    unique = True
    singles = []
    bsb = b.bs.base
    for a in range(s0.size):
        if a == s0.zero:
            continue
        strict = [x for x in s0.down[a] if x != a and x != s0.zero]
        jb = bsb.join_of([b.beta[x] for x in strict]) if strict else bsb.zero
        singleton_id = b.target.bisections.index(frozenset({pos[a]}))
        if b.bs.rc(b.beta[a], jb) != singleton_id:
            unique = False
        if gamma.map[singleton_id] != gamma1[a]:
            unique = False
        singles.append((a, gamma1[a]))
    return GammaExtension(b, alpha, gamma, tuple(singles), unique)


# -- filters ---------------------------------------------------------------


@dataclass(frozen=True)
class Filter:
    carrier: frozenset
    principal_at: int  # the minimum element generating the filter


def _is_filter(s, subset):
    if not subset:
        return False
    for a in subset:
        for b in s.up[a]:
            if b not in subset:
                return False
    for a in subset:
        for b in subset:
            if not any(x in subset for x in s.down[a] if s.leq[x][b]):
                return False
    return True


FILTER_SCAN_CAP = 12


@dataclass(frozen=True)
class FilterReport:
    proper: tuple  # of Filter
    ultra: tuple  # of Filter, the maximal proper ones
    all_principal: bool


def enumerate_filters(s):
    """All proper filters of s; in a finite table each is an up-set x-up.

    For carriers up to 12 the principal list is double-checked against a
    raw scan of every subset.
    """
    nonzero = [x for x in range(s.size) if x != s.zero]
    proper = []
    for x in sorted(nonzero):
        carrier = frozenset(s.up[x])
        assert _is_filter(s, carrier)
        if s.zero is not None:
            assert s.zero not in carrier
        proper.append(Filter(carrier, x))
    if s.size <= FILTER_SCAN_CAP:
        found = set()
        ids = list(range(s.size))
        for m in range(1, 1 << s.size):
            subset = frozenset(i for i in ids if m >> i & 1)
            if s.zero is not None and s.zero in subset:
                continue
            if _is_filter(s, subset):
                found.add(subset)
        assert found == {f.carrier for f in proper}, (
            "every proper filter must be principal"
        )
    minimal = [
        x for x in nonzero if all(not s.leq[y][x] for y in nonzero if y != x)
    ]
    ultra = tuple(f for f in proper if f.principal_at in set(minimal))
    return FilterReport(tuple(proper), ultra, True)


def _filter_d(s, carrier):
    """Up-closure of inverse(y)*z over the filter; a filter again."""
    seed = {s.table[s.inv[y]][z] for y in carrier for z in carrier}
    out = set()
    for x in seed:
        out.update(s.up[x])
    return frozenset(out)


def _filter_r(s, carrier):
    seed = {s.table[y][s.inv[z]] for y in carrier for z in carrier}
    out = set()
    for x in seed:
        out.update(s.up[x])
    return frozenset(out)


def filter_groupoid(s, filters):
    """Partial product on filters: A*B is the up-closure of the setwise
    product, defined when the domain filter of A is the range filter of B.
    """
    carriers = [f.carrier for f in filters]
    index = {c: i for i, c in enumerate(carriers)}
    m = len(filters)
    ptable = [[None] * m for _ in range(m)]
    for i, a in enumerate(carriers):
        da = _filter_d(s, a)
        for j, b in enumerate(carriers):
            if da != _filter_r(s, b):
                continue
            seed = {s.table[x][y] for x in a for y in b}
            out = set()
            for x in seed:
                out.update(s.up[x])
            prod = frozenset(out)
            assert prod in index, "filter product must be a listed filter"
            ptable[i][j] = index[prod]
    return Gpd(ptable, labels=tuple(f.principal_at for f in filters))


def principal_map_is_iso(s, sub_ids, fg):
    """Check x -> x-up matches the restricted product on the given ids."""
    pos = {x: i for i, x in enumerate(sub_ids)}
    if fg.size != len(sub_ids):
        return False
    want = {x: pos_f for pos_f, x in enumerate(fg.labels)}
    for x in sub_ids:
        if x not in want:
            return False
    for x in sub_ids:
        for y in sub_ids:
            defined = s.d[x] == s.r[y]
            p = fg.ptable[want[x]][want[y]]
            if defined != (p is not None):
                return False
            if defined:
                prod = s.table[x][y]
                if prod not in want or want[prod] != p:
                    return False
    return True


# -- Booleanization isomorphism --------------------------------------------


@dataclass(frozen=True)
class BooleanizationIso:
    isomorphic: bool
    groupoid_map: tuple | None
    induced: tuple | None  # id map between the two Booleanizations


def booleanization_iso(s, t, direct_cross_check_cap=0):
    """Compare Booleanizations through the nonzero-part groupoids.

    The groupoids determine the Booleanizations: a groupoid isomorphism
    induces a bisection-by-bisection map, which is re-checked as a table
    isomorphism.  Optionally cross-check with a direct table search when the
    Booleanizations are small enough.
    """
    b_s, b_t = booleanize(s), booleanize(t)
    gmap = groupoid_iso(b_s.groupoid, b_t.groupoid)
    if gmap is None:
        return BooleanizationIso(False, None, None)
    t_index = {a: i for i, a in enumerate(b_t.target.bisections)}
    induced = []
    for aset in b_s.target.bisections:
        image = frozenset(gmap[x] for x in aset)
        induced.append(t_index[image])
    sb, tb = b_s.bs.base, b_t.bs.base
    assert sorted(induced) == list(range(tb.size))
    for a in range(sb.size):
        for b2 in range(sb.size):
            assert induced[sb.table[a][b2]] == tb.table[induced[a]][induced[b2]]
    if direct_cross_check_cap and sb.size <= direct_cross_check_cap:
        try:
            direct = semigroup_iso(sb, tb, cap=direct_cross_check_cap)
        except SizeCapExceeded:
            direct = None
        assert direct is not None, "direct search must confirm the iso"
    return BooleanizationIso(True, gmap, tuple(induced))
