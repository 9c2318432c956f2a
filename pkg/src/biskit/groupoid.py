"""Finite groupoids given by partial multiplication tables.

A product entry of None (or -1 in .grp text) means undefined.  Validation
checks that each position has a unique inverse, that products are defined
exactly when domain meets range, and that composition is associative
wherever it types.  The empty groupoid is allowed: it is what the
nonzero-part construction yields for the one-element semigroup.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import _parse_table
from .errors import NotAGroup, NotGroupoid, Undecided


class Gpd:
    """A validated finite groupoid on ids 0..m-1."""

    def __init__(self, ptable, labels=None):
        rows = tuple(tuple(r) for r in ptable)
        m = len(rows)
        for i, row in enumerate(rows):
            if len(row) != m:
                raise NotGroupoid("shape", i)
            for v in row:
                if v is not None and (not isinstance(v, int) or not 0 <= v < m):
                    raise NotGroupoid("entry-range", (i, v))

        inv = []
        for x in range(m):
            cands = [
                y
                for y in range(m)
                if rows[x][y] is not None
                and rows[y][x] is not None
                and rows[x][rows[y][x]] == x
                and rows[y][rows[x][y]] == y
            ]
            if len(cands) != 1:
                raise NotGroupoid("unique-inverse", (x, tuple(cands)))
            inv.append(cands[0])

        d = tuple(rows[inv[x]][x] for x in range(m))
        r = tuple(rows[x][inv[x]] for x in range(m))
        identities = tuple(sorted(x for x in range(m) if d[x] == x))
        for e in identities:
            if r[e] != e or rows[e][e] != e:
                raise NotGroupoid("identity", e)
        for x in range(m):
            if d[x] not in identities or r[x] not in identities:
                raise NotGroupoid("domain-range", x)
            if rows[x][d[x]] != x or rows[r[x]][x] != x:
                raise NotGroupoid("unit-law", x)

        for x in range(m):
            for y in range(m):
                if (rows[x][y] is not None) != (d[x] == r[y]):
                    raise NotGroupoid("composability", (x, y))

        for x, y, z in itertools.product(range(m), repeat=3):
            if d[x] == r[y] and d[y] == r[z]:
                if rows[rows[x][y]][z] != rows[x][rows[y][z]]:
                    raise NotGroupoid("associativity", (x, y, z))

        self.size = m
        self.ptable = rows
        self.inv = tuple(inv)
        self.d = d
        self.r = r
        self.identities = identities
        self.labels = labels if labels is not None else tuple(range(m))

    def mul(self, x, y):
        return self.ptable[x][y]

    def arrows(self, src, dst):
        """Elements with domain identity src and range identity dst."""
        return tuple(
            x for x in range(self.size) if self.d[x] == src and self.r[x] == dst
        )

    def is_group(self):
        return self.size >= 1 and len(self.identities) == 1 and all(
            v is not None for row in self.ptable for v in row
        )

    def __repr__(self):
        return f"Gpd(size={self.size}, identities={len(self.identities)})"


def parse_groupoid(text):
    """Parse .grp text (entries may be -1 for undefined) into a Gpd."""
    return Gpd(_parse_table(text, allow_undefined=True))


@dataclass(frozen=True)
class Component:
    identity_count: int
    group: Gpd  # local group at the least identity, relabelled 0..h-1
    member_ids: tuple  # all arrows in the component, ascending
    identities: tuple  # identities in the component, ascending


@dataclass(frozen=True)
class ComponentForm:
    components: tuple  # of Component, ordered by least identity


def _local_group(g, e):
    """Loops at identity e, relabelled densely; validates as one-object Gpd."""
    loops = sorted(x for x in range(g.size) if g.d[x] == e and g.r[x] == e)
    index = {x: i for i, x in enumerate(loops)}
    ptable = [[index[g.ptable[x][y]] for y in loops] for x in loops]
    local = Gpd(ptable, labels=tuple(loops))
    if not local.is_group():
        raise NotAGroup(f"loops at identity {e} do not form a group")
    return local


def component_form(g):
    """Split g into connected components with one local group each."""
    parent = {e: e for e in g.identities}

    def find(e):
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    for x in range(g.size):
        a, b = find(g.d[x]), find(g.r[x])
        if a != b:
            parent[a] = b

    groups = {}
    for e in g.identities:
        groups.setdefault(find(e), []).append(e)
    comps = []
    for ids in sorted(groups.values(), key=min):
        ids = tuple(sorted(ids))
        members = tuple(
            sorted(x for x in range(g.size) if g.d[x] in set(ids))
        )
        comps.append(
            Component(
                identity_count=len(ids),
                group=_local_group(g, ids[0]),
                member_ids=members,
                identities=ids,
            )
        )
    return ComponentForm(tuple(comps))


def reconstruct(cf):
    """Rebuild a groupoid from (identity count, local group) data alone.

    Component c with n identities and group H becomes the set of triples
    (x, h, y) with product (x, h, y)(y, h2, z) = (x, h*h2, z); components are
    laid out one after another.
    """
    blocks = []
    offset = 0
    for comp in cf.components:
        n, h = comp.identity_count, comp.group.size
        blocks.append((offset, n, h, comp.group))
        offset += n * h * n
    total = offset
    ptable = [[None] * total for _ in range(total)]

    def enc(block, x, g, y):
        off, n, h, _ = block
        return off + (x * h + g) * n + y

    for block in blocks:
        off, n, h, grp = block
        for x, g, y in itertools.product(range(n), range(h), range(n)):
            i = enc(block, x, g, y)
            for x2, g2, y2 in itertools.product(range(n), range(h), range(n)):
                if x2 != y:
                    continue
                j = enc(block, x2, g2, y2)
                ptable[i][j] = enc(block, x, grp.ptable[g][g2], y2)
    return Gpd(ptable)


GROUP_ISO_CAP = 64
CANONICAL_TABLE_CAP = 16


def _element_orders(g):
    """Order of each element of a one-object groupoid (a group)."""
    e = g.identities[0]
    orders = []
    for x in range(g.size):
        acc, n = x, 1
        while acc != e:
            acc = g.ptable[acc][x]
            n += 1
        orders.append(n)
    return tuple(orders)


def _generating_sequences(g, length):
    """Ordered tuples of the given length that generate the whole group."""
    e = g.identities[0]
    out = []
    for seq in itertools.product(range(g.size), repeat=length):
        closure = {e}
        frontier = [e]
        while frontier:
            x = frontier.pop()
            for s in seq:
                y = g.ptable[x][s]
                if y not in closure:
                    closure.add(y)
                    frontier.append(y)
        if len(closure) == g.size:
            out.append(seq)
    return out


def _bfs_labelling(g, seq):
    """Deterministic relabelling: identity first, then closure under seq."""
    e = g.identities[0]
    order = [e]
    seen = {e}
    i = 0
    while i < len(order):
        x = order[i]
        i += 1
        for s in seq:
            y = g.ptable[x][s]
            if y not in seen:
                seen.add(y)
                order.append(y)
    pos = {x: i for i, x in enumerate(order)}
    return tuple(
        tuple(pos[g.ptable[order[i]][order[j]]] for j in range(g.size))
        for i in range(g.size)
    )


def canonical_group_key(g):
    """Isomorphism-invariant key for a group.

    Up to 16 elements: the lexicographically least relabelled table over all
    generating sequences of minimal length.  Above that: size plus the order
    profile (cheap but only a necessary invariant; callers confirm with an
    explicit isomorphism search).
    """
    if not g.is_group():
        raise NotAGroup("canonical key needs a one-object groupoid")
    if g.size > CANONICAL_TABLE_CAP:
        return ("profile", g.size, tuple(sorted(_element_orders(g))))
    for length in range(0 if g.size == 1 else 1, g.size + 1):
        seqs = _generating_sequences(g, length)
        if seqs:
            return ("table", min(_bfs_labelling(g, seq) for seq in seqs))
    raise AssertionError("group without generating sequence")


def group_name(g):
    """Short human name for a small group, for report text."""
    n = g.size
    orders = sorted(_element_orders(g))
    if n == 1:
        return "trivial"
    if n in orders and orders.count(n) >= 1 and max(orders) == n:
        return f"Z{n}"
    if n == 4:
        return "V4"
    if n == 6:
        return "S3"
    return f"G{n}"


def group_iso(a, b, cap=GROUP_ISO_CAP):
    """Explicit isomorphism between one-object groupoids, or None.

    Backtracks over images of a minimal generating sequence, pruning by
    element order.  Groups above the cap raise Undecided rather than search.
    """
    if not a.is_group() or not b.is_group():
        raise NotAGroup("group_iso needs one-object groupoids")
    if a.size != b.size:
        return None
    if a.size > cap:
        raise Undecided(f"group isomorphism search capped at {cap}")
    n = a.size
    if n == 1:
        return (0,)
    orders_a, orders_b = _element_orders(a), _element_orders(b)
    if sorted(orders_a) != sorted(orders_b):
        return None
    for length in range(1, n + 1):
        seqs = _generating_sequences(a, length)
        if seqs:
            gens = seqs[0]
            break
    by_order = {}
    for y in range(n):
        by_order.setdefault(orders_b[y], []).append(y)

    def build(images):
        ea, eb = a.identities[0], b.identities[0]
        phi = {ea: eb}
        frontier = [ea]
        while frontier:
            x = frontier.pop()
            for s, t in zip(gens, images):
                y = a.ptable[x][s]
                fy = b.ptable[phi[x]][t]
                if y in phi:
                    if phi[y] != fy:
                        return None
                elif fy in phi.values():
                    return None
                else:
                    phi[y] = fy
                    frontier.append(y)
        if len(phi) != n:
            return None
        out = tuple(phi[x] for x in range(n))
        for x in range(n):
            for y in range(n):
                if out[a.ptable[x][y]] != b.ptable[out[x]][out[y]]:
                    return None
        return out

    cand_lists = [by_order.get(orders_a[s], []) for s in gens]
    for images in itertools.product(*cand_lists):
        phi = build(images)
        if phi is not None:
            return phi
    return None


def is_principal(g):
    """All local groups trivial: at most one arrow between two identities."""
    return all(c.group.size == 1 for c in component_form(g).components)


def is_connected(g):
    return len(component_form(g).components) <= 1


@dataclass(frozen=True)
class Coordinates:
    """Triple form of a groupoid: arrow -> (component, row, group id, col)."""

    form: ComponentForm
    coord: tuple  # coord[x] = (ci, xi, g, yi)
    anchors: tuple  # anchors[ci][xi] = arrow from base identity to identity xi


def coordinatize(g):
    """Pick anchor arrows and express every arrow as (component, x, g, y).

    For identity number xi in component ci the anchor a_xi runs from the
    component's least identity to that identity; the group part of an arrow
    t is then anchor(r)^-1 * t * anchor(d), a loop at the base identity.
    """
    cf = component_form(g)
    all_coords = [None] * g.size
    anchors_out = []
    for ci, comp in enumerate(cf.components):
        ids = comp.identities
        base = ids[0]
        anchors = []
        for e in ids:
            if e == base:
                anchors.append(base)
                continue
            fwd = [x for x in range(g.size) if g.d[x] == base and g.r[x] == e]
            if fwd:
                anchors.append(min(fwd))
            else:
                back = min(
                    x for x in range(g.size) if g.d[x] == e and g.r[x] == base
                )
                anchors.append(g.inv[back])
        pos = {e: i for i, e in enumerate(ids)}
        group_index = {x: i for i, x in enumerate(comp.group.labels)}
        for t in comp.member_ids:
            xi, yi = pos[g.r[t]], pos[g.d[t]]
            loop = g.ptable[g.ptable[g.inv[anchors[xi]]][t]][anchors[yi]]
            all_coords[t] = (ci, xi, group_index[loop], yi)
        anchors_out.append(tuple(anchors))
    return Coordinates(cf, tuple(all_coords), tuple(anchors_out))


def groupoid_iso(g, h):
    """Explicit isomorphism g -> h as an id tuple, or None.

    Components are matched by (identity count, canonical group key); matched
    components are then coordinatized and mapped triple-by-triple through an
    explicit local group isomorphism.  The candidate is fully re-checked
    against both partial tables before being returned.
    """
    cg, ch = coordinatize(g), coordinatize(h)
    comps_g, comps_h = cg.form.components, ch.form.components
    if len(comps_g) != len(comps_h):
        return None

    def sig(comp):
        return (comp.identity_count, canonical_group_key(comp.group))

    sig_g = [sig(c) for c in comps_g]
    sig_h = [sig(c) for c in comps_h]
    if sorted(sig_g) != sorted(sig_h):
        return None

    match = [None] * len(comps_g)
    used = [False] * len(comps_h)

    def assign(i):
        if i == len(comps_g):
            return True
        for j in range(len(comps_h)):
            if used[j] or sig_h[j] != sig_g[i]:
                continue
            phi = group_iso(comps_g[i].group, comps_h[j].group)
            if phi is None:
                continue
            match[i] = (j, phi)
            used[j] = True
            if assign(i + 1):
                return True
            used[j] = False
        return False

    if not assign(0):
        return None

    inv_coord_h = {}
    for t in range(h.size):
        inv_coord_h[ch.coord[t]] = t
    out = [None] * g.size
    for t in range(g.size):
        ci, xi, gg, yi = cg.coord[t]
        cj, phi = match[ci]
        out[t] = inv_coord_h[(cj, xi, phi[gg], yi)]

    if sorted(out) != list(range(h.size)):
        return None
    for x in range(g.size):
        for y in range(g.size):
            p = g.ptable[x][y]
            q = h.ptable[out[x]][out[y]]
            if (p is None) != (q is None):
                return None
            if p is not None and out[p] != q:
                return None
    return tuple(out)
