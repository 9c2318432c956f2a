"""Type monoids of finite Boolean inverse semigroups.

For a finite structure the type monoid is a free commutative monoid of rank
the number of atom components; the type of an idempotent counts its atomic
idempotents component by component.  The matrix-truncation oracle below
recomputes the same equivalence inside N-by-N rook matrices, with every
equivalence it asserts backed by an explicit matrix witness, and checks the
two computations agree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .boolean import as_boolean, direct_product, atoms_groupoid
from .core import d_relation_idempotents, mu_and_quotient
from .errors import TooLarge
from .groupoid import component_form
from .rook import rook_matrix, rook_mul, rook_star

MATRIX_IDEMPOTENT_CAP = 100_000


@dataclass(frozen=True)
class TypeMonoid:
    rank: int
    components: tuple  # per component, the frozenset of atom ids (all atoms)
    atomic_idempotents: tuple  # per component, frozenset of atomic idempotents
    tau: dict  # idempotent id -> tuple of per-component counts

    def vector(self, e):
        return self.tau[e]


def type_monoid(bs):
    """Compute the component count and the per-idempotent count vectors.

    The axioms are re-checked on the result: zero maps to the zero vector,
    orthogonal joins add, equivalent idempotents agree, and the count vector
    separates exactly the idempotent classes connected through the carrier.
    """
    bs = as_boolean(bs)
    s = bs.base
    ag = atoms_groupoid(bs)
    cf = component_form(ag)
    comps = sorted(
        cf.components, key=lambda c: min(ag.labels[t] for t in c.member_ids)
    ) if cf.components else []
    components = tuple(
        frozenset(ag.labels[t] for t in c.member_ids) for c in comps
    )
    atomic = tuple(
        frozenset(ag.labels[e] for e in c.identities) for c in comps
    )
    rank = len(components)
    atom_set = set(s.atoms)
    tau = {}
    for e in s.idempotents:
        below = {x for x in s.down[e] if x in atom_set}
        assert all(s.is_idempotent(x) for x in below)
        tau[e] = tuple(len(below & a) for a in atomic)

    assert tau[s.zero] == (0,) * rank
    for e in s.idempotents:
        for f in s.idempotents:
            if s.orth[e][f]:
                j = s.join_table[e][f]
                tau_sum = tuple(x + y for x, y in zip(tau[e], tau[f]))
                assert tau[j] == tau_sum, "orthogonal joins must add"
    dcls = {}
    for i, block in enumerate(d_relation_idempotents(s)):
        for e in block:
            dcls[e] = i
    for e in s.idempotents:
        for f in s.idempotents:
            assert (tau[e] == tau[f]) == (dcls[e] == dcls[f]), (
                "count vectors must separate exactly the connected classes"
            )
    for e in s.idempotents:
        for f in s.idempotents:
            if s.leq[e][f]:
                rest = tau[bs.rc(f, e)]
                assert tau[f] == tuple(x + y for x, y in zip(tau[e], rest))
    return TypeMonoid(rank, components, atomic, tau)


def refinement_check(tm):
    """Whenever realized vectors satisfy a1+a2 = b1+b2, a common refinement
    exists; and only the zero vector is invertible."""
    realized = sorted(set(tm.tau.values()))

    def add(u, v):
        return tuple(x + y for x, y in zip(u, v))

    for u, v in itertools.product(realized, repeat=2):
        if add(u, v) == (0,) * tm.rank and (any(u) or any(v)):
            return False
    for a1, a2, b1, b2 in itertools.product(realized, repeat=4):
        if add(a1, a2) != add(b1, b2):
            continue
        c11 = tuple(min(x, y) for x, y in zip(a1, b1))
        c12 = tuple(x - y for x, y in zip(a1, c11))
        c21 = tuple(x - y for x, y in zip(b1, c11))
        c22 = tuple(x - y for x, y in zip(a2, c21))
        if any(x < 0 for x in c22):
            return False
        if add(c11, c12) != a1 or add(c21, c22) != a2:
            return False
        if add(c11, c21) != b1 or add(c12, c22) != b2:
            return False
    return True


@dataclass(frozen=True)
class IdealTriple:
    """Three posets that must be one: idempotent ideals, additive ideals,
    and coordinate supports of the count-vector monoid."""

    idempotent_ideals: tuple
    additive_ideals: tuple
    supports: tuple
    matched: bool
    simple_iff_rank_one: bool


def ideal_triple(bs, tm=None):
    from .boolean import enumerate_additive_ideals, is_zero_simplifying

    bs = as_boolean(bs)
    s = bs.base
    if tm is None:
        tm = type_monoid(bs)
    idem = s.idempotents

    idem_ideals = []
    for bits in itertools.product((False, True), repeat=len(idem)):
        fset = frozenset(e for e, b in zip(idem, bits) if b)
        if s.zero not in fset:
            continue
        if any(s.leq[e2][e] and e2 not in fset for e in fset for e2 in idem):
            continue
        if any(s.join_table[e][f] not in fset for e in fset for f in fset):
            continue
        if any(
            s.table[s.table[s.inv[a]][e]][a] not in fset
            for e in fset
            for a in range(s.size)
        ):
            continue
        idem_ideals.append(fset)
    idem_ideals.sort(key=lambda f: (len(f), sorted(f)))

    ideals = enumerate_additive_ideals(bs)
    supports = sorted(
        (frozenset(t) for r in range(tm.rank + 1)
         for t in itertools.combinations(range(tm.rank), r)),
        key=lambda f: (len(f), sorted(f)),
    )

    matched = len(idem_ideals) == len(ideals) == len(supports)
    if matched:
        to_idem = {i.carrier: frozenset(x for x in i.carrier if s.is_idempotent(x))
                   for i in ideals}
        matched = sorted(to_idem.values(), key=lambda f: (len(f), sorted(f))) == [
            frozenset(f) for f in idem_ideals
        ]
    if matched:
        back = {}
        for i in ideals:
            induced = frozenset(x for x in range(s.size)
                                if s.d[x] in to_idem[i.carrier])
            if induced != i.carrier:
                matched = False
                break
        if matched:
            supp = {}
            for i in ideals:
                v = frozenset(
                    ci
                    for e in i.carrier
                    if s.is_idempotent(e)
                    for ci in range(tm.rank)
                    if tm.tau[e][ci]
                )
                supp[i.carrier] = v
            matched = sorted(
                supp.values(), key=lambda f: (len(f), sorted(f))
            ) == list(supports) and len(set(supp.values())) == len(ideals)
            if matched:
                pairs = list(supp.items())
                for (c1, v1), (c2, v2) in itertools.product(pairs, repeat=2):
                    if (c1 <= c2) != (v1 <= v2):
                        matched = False
                        break

    zs = is_zero_simplifying(bs).holds
    simple_iff = (tm.rank == 1) == zs == (len(ideals) == 2)
    return IdealTriple(
        tuple(idem_ideals), ideals, tuple(supports), matched, simple_iff
    )


# -- matrix truncation oracle ----------------------------------------------


def _atom_edges(s):
    """Least witness x with d(x) = p and r(x) = q, per pair of atomic
    idempotents; existence of a witness is the edge relation."""
    atomic = [e for e in s.atoms if s.is_idempotent(e)]
    wit = {}
    for x in range(s.size):
        p, q = s.d[x], s.r[x]
        if p in atomic and q in atomic and (p, q) not in wit:
            wit[(p, q)] = x
    return atomic, wit


def _slots(s, diag):
    """Atom slots of a diagonal idempotent tuple: (slot, atomic idempotent)."""
    out = []
    atoms = set(s.atoms)
    for slot, e in enumerate(diag):
        for p in s.down[e]:
            if p in atoms:
                out.append((slot, p))
    return out


def _match_slots(left, right, edges):
    """Perfect matching between slot lists along the witness edges, or None.

    Plain augmenting-path search; adjacency is witness existence.
    """
    if len(left) != len(right):
        return None
    match_r = [None] * len(right)

    def augment(i, seen):
        for j in range(len(right)):
            if seen[j] or (left[i][1], right[j][1]) not in edges:
                continue
            seen[j] = True
            if match_r[j] is None or augment(match_r[j], seen):
                match_r[j] = i
                return True
        return False

    for i in range(len(left)):
        if not augment(i, [False] * len(right)):
            return None
    return tuple(
        (match_r[j], j) for j in range(len(right)) if match_r[j] is not None
    )


def _is_diag(m, diag, zero):
    n = m.n
    return all(
        m.entries[i][j] == (diag[i] if i == j else zero)
        for i in range(n)
        for j in range(n)
    )


def _witness_matrix(bs, n, left, right, pairs, left_diag, right_diag, edges):
    """Build the rook matrix carrying right_diag's atoms onto left_diag's
    and verify X*X = diag(right_diag) and XX* = diag(left_diag) by matrix
    arithmetic.  left/right are the slot lists, pairs the matching."""
    s = bs.base
    cells = {}
    for i, j in pairs:
        dst_slot, q = left[i]
        src_slot, p = right[j]
        # entry (dst, src) needs a witness with domain p and range q
        cells.setdefault((dst_slot, src_slot), []).append(edges[(p, q)])
    entries = [
        [bs.join_of(cells.get((i, j), ())) for j in range(n)] for i in range(n)
    ]
    x = rook_matrix(bs, entries)
    dx = rook_mul(rook_star(x), x)
    rx = rook_mul(x, rook_star(x))
    return x, _is_diag(dx, right_diag, s.zero) and _is_diag(rx, left_diag, s.zero)


@dataclass(frozen=True)
class MatrixOracle:
    n: int
    diagonal_count: int
    class_count: int
    partition_agrees: bool  # matrix classes == summed count-vector classes
    witnesses_verified: bool  # every merge had a checked matrix witness
    separation_ok: bool  # orthogonal representatives exist for all sums
    atom_sums: tuple  # ((atoms...), class id, vector) rows for sums <= n atoms


def type_via_matrices(bs, n, tm=None):
    """Recompute the idempotent equivalence inside n-by-n rook matrices.

    Diagonal idempotent tuples are classed by explicit matrix reachability:
    two tuples fall together only after a witness matrix X with X*X and XX*
    the two diagonals has been constructed and multiplied out.  The
    resulting partition must agree with summed count vectors, and every
    pairwise sum must be realizable by orthogonal diagonal representatives.
    """
    bs = as_boolean(bs)
    s = bs.base
    if n < 2:
        raise TooLarge("truncation needs n >= 2")
    if tm is None:
        tm = type_monoid(bs)
    idem = s.idempotents
    if len(idem) ** n > MATRIX_IDEMPOTENT_CAP:
        raise TooLarge(f"{len(idem)}^{n} diagonal idempotents exceed cap")
    atomic, edges = _atom_edges(s)

    diags = list(itertools.product(idem, repeat=n))
    slots = {diag: _slots(s, diag) for diag in diags}
    reps = []  # (diag, class id)
    by_total = {}
    class_of = {}
    witnesses_verified = True
    for diag in diags:
        mine = slots[diag]
        assigned = None
        for rep, cid in by_total.get(len(mine), ()):
            pairs = _match_slots(slots[rep], mine, edges)
            if pairs is None:
                continue
            _, ok = _witness_matrix(
                bs, n, slots[rep], mine, pairs, rep, diag, edges
            )
            assigned = cid
            witnesses_verified = witnesses_verified and ok
            break
        if assigned is None:
            assigned = len(reps)
            reps.append(diag)
            by_total.setdefault(len(mine), []).append((diag, assigned))
        class_of[diag] = assigned

    def vec_sum(diag):
        acc = (0,) * tm.rank
        for e in diag:
            acc = tuple(x + y for x, y in zip(acc, tm.tau[e]))
        return acc

    sums = {diag: vec_sum(diag) for diag in diags}
    partition_agrees = True
    seen_vec = {}
    for diag in diags:
        cid, v = class_of[diag], sums[diag]
        if cid in seen_vec and seen_vec[cid] != v:
            partition_agrees = False
        seen_vec[cid] = v
    if len(set(seen_vec.values())) != len(seen_vec):
        partition_agrees = False

    separation_ok = True
    zero_fill = (s.zero,) * (n - 2)
    for e in idem:
        for f in idem:
            d1 = (e,) + (s.zero,) * (n - 1)
            d2 = (s.zero, f) + zero_fill
            shifted = (f,) + (s.zero,) * (n - 1)
            if any(s.table[a][b] != s.zero for a, b in zip(d1, d2)):
                separation_ok = False
                continue
            # single-entry shift matrix relating diag(f,0,..) to diag(0,f,..)
            y = [[s.zero] * n for _ in range(n)]
            y[1][0] = f
            ym = rook_matrix(bs, y)
            if not (
                _is_diag(rook_mul(rook_star(ym), ym), shifted, s.zero)
                and _is_diag(rook_mul(ym, rook_star(ym)), d2, s.zero)
            ):
                separation_ok = False
            if class_of[shifted] != class_of[d2]:
                separation_ok = False
            both = tuple(s.join_table[a][b] for a, b in zip(d1, d2))
            want = tuple(x + yv for x, yv in zip(tm.tau[e], tm.tau[f]))
            if sums[both] != want:
                separation_ok = False

    atom_sums = []
    for k in range(n + 1):
        for combo in itertools.combinations_with_replacement(atomic, k):
            diag = tuple(combo) + (s.zero,) * (n - k)
            atom_sums.append((combo, class_of[diag], sums[diag]))

    return MatrixOracle(
        n=n,
        diagonal_count=len(diags),
        class_count=len(reps),
        partition_agrees=partition_agrees,
        witnesses_verified=witnesses_verified,
        separation_ok=separation_ok,
        atom_sums=tuple(atom_sums),
    )


def product_type_check(bs, bt):
    """Types over a direct product are the two types side by side."""
    bs, bt = as_boolean(bs), as_boolean(bt)
    p = direct_product(bs, bt)
    tm_p, tm_s, tm_t = type_monoid(p), type_monoid(bs), type_monoid(bt)
    if tm_p.rank != tm_s.rank + tm_t.rank:
        return False
    ks = bs.base.size
    sides = []
    for comp in tm_p.atomic_idempotents:
        e = min(comp)
        a, b = e % ks, e // ks
        if b == bt.base.zero:
            side = ("left", next(
                i for i, c in enumerate(tm_s.atomic_idempotents) if a in c
            ))
        else:
            side = ("right", next(
                i for i, c in enumerate(tm_t.atomic_idempotents) if b in c
            ))
        sides.append(side)
    if sorted(sides) != sorted(
        [("left", i) for i in range(tm_s.rank)]
        + [("right", i) for i in range(tm_t.rank)]
    ):
        return False
    for e in bs.base.idempotents:
        for f in bt.base.idempotents:
            pid = f * ks + e
            vec = tm_p.tau[pid]
            for ci, side in enumerate(sides):
                tag, i = side
                want = tm_s.tau[e][i] if tag == "left" else tm_t.tau[f][i]
                if vec[ci] != want:
                    return False
    return True


def mu_type_invariance(bs):
    """The type data survives the maximum idempotent-separating quotient."""
    bs = as_boolean(bs)
    rep = mu_and_quotient(bs.base)
    q = as_boolean(rep.quotient)
    tm_s, tm_q = type_monoid(bs), type_monoid(q)
    if tm_s.rank != tm_q.rank:
        return False
    proj = rep.projection
    match = []
    for comp in tm_s.atomic_idempotents:
        images = {proj[e] for e in comp}
        targets = [
            i for i, c in enumerate(tm_q.atomic_idempotents) if images & c
        ]
        if len(targets) != 1 or not images <= tm_q.atomic_idempotents[targets[0]]:
            return False
        match.append(targets[0])
    if sorted(match) != list(range(tm_q.rank)):
        return False
    for e in bs.base.idempotents:
        vec_s = tm_s.tau[e]
        vec_q = tm_q.tau[proj[e]]
        if any(vec_s[i] != vec_q[match[i]] for i in range(tm_s.rank)):
            return False
    return True
