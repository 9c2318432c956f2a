"""Finite inverse semigroups given by square multiplication tables.

Elements are the ids 0..k-1 and the table is the single source of truth.
Validation is eager: a constructed InvSgp is always associative, has unique
generalized inverses, and has commuting idempotents.  The inverse map,
idempotents, zero, natural partial order, domain/range idempotents and atoms
are computed once at construction and never change afterwards.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .errors import (
    IdempotentsDontCommute,
    NoZero,
    NotAssociative,
    NotInverse,
    ParseError,
    SizeCapExceeded,
    TooLarge,
)


def _tokenize(text):
    """Split table text into token lines; '#' starts a comment to end of line."""
    out = []
    for raw in text.split("\n"):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line.split())
    return out


def _parse_table(text, allow_undefined):
    """Shared .ist/.grp reader.

    Header line is `n <k>`, then exactly k lines of k integers each, nothing
    after.  Entries must be in 0..k-1; -1 is allowed only when
    allow_undefined is set and comes back as None.
    """
    lines = _tokenize(text)
    if not lines:
        raise ParseError("empty input")
    head = lines[0]
    if len(head) != 2 or head[0] != "n":
        raise ParseError(f"bad header line {' '.join(head)!r}, expected 'n <k>'")
    try:
        k = int(head[1])
    except ValueError:
        raise ParseError(f"bad size {head[1]!r}") from None
    if k < 0 or (k == 0 and not allow_undefined):
        raise ParseError(f"bad size {k}")
    body = lines[1:]
    if len(body) != k:
        raise ParseError(f"expected {k} table rows, found {len(body)}")
    table = []
    for i, row in enumerate(body):
        if len(row) != k:
            raise ParseError(f"row {i} has {len(row)} entries, expected {k}")
        ints = []
        for tok in row:
            try:
                v = int(tok)
            except ValueError:
                raise ParseError(f"bad entry {tok!r} in row {i}") from None
            if v == -1 and allow_undefined:
                ints.append(None)
            elif 0 <= v < k:
                ints.append(v)
            else:
                raise ParseError(f"entry {v} out of range in row {i}")
        table.append(tuple(ints))
    return tuple(table)


@dataclass(frozen=True)
class OrderRel:
    """The natural partial order: a <= b iff a = b * (a' * a)."""

    size: int
    leq: tuple  # leq[a][b] is True iff a <= b

    def below(self, a):
        return tuple(x for x in range(self.size) if self.leq[x][a])

    def above(self, a):
        return tuple(x for x in range(self.size) if self.leq[a][x])


class InvSgp:
    """A validated finite inverse semigroup on ids 0..k-1."""

    def __init__(self, table):
        rows = tuple(tuple(r) for r in table)
        k = len(rows)
        if k == 0:
            raise ParseError("empty table")
        for i, row in enumerate(rows):
            if len(row) != k:
                raise ParseError(f"row {i} has {len(row)} entries, expected {k}")
            for v in row:
                if not isinstance(v, int) or not 0 <= v < k:
                    raise ParseError(f"entry {v!r} out of range in row {i}")

        for a, b, c in itertools.product(range(k), repeat=3):
            if rows[rows[a][b]][c] != rows[a][rows[b][c]]:
                raise NotAssociative((a, b, c))

        inv = []
        for a in range(k):
            cands = tuple(
                b
                for b in range(k)
                if rows[rows[a][b]][a] == a and rows[rows[b][a]][b] == b
            )
            if len(cands) != 1:
                raise NotInverse(a, cands)
            inv.append(cands[0])

        idem = tuple(e for e in range(k) if rows[e][e] == e)
        for e, f in itertools.combinations(idem, 2):
            if rows[e][f] != rows[f][e]:
                raise IdempotentsDontCommute((e, f))

        zero = None
        for z in idem:
            if all(rows[z][x] == z and rows[x][z] == z for x in range(k)):
                zero = z
                break

        self.size = k
        self.table = rows
        self.inv = tuple(inv)
        self.idempotents = idem
        self.zero = zero
        self.d = tuple(rows[inv[a]][a] for a in range(k))
        self.r = tuple(rows[a][inv[a]] for a in range(k))
        # a <= b iff a = b * d(a)
        self.leq = tuple(
            tuple(rows[b][self.d[a]] == a for b in range(k)) for a in range(k)
        )
        self.down = tuple(
            tuple(x for x in range(k) if self.leq[x][a]) for a in range(k)
        )
        self.up = tuple(
            tuple(x for x in range(k) if self.leq[a][x]) for a in range(k)
        )
        if zero is None:
            self.atoms = None
        else:
            self.atoms = tuple(
                a for a in range(k) if a != zero and set(self.down[a]) == {zero, a}
            )
        self.identity = None
        for e in idem:
            if all(rows[e][x] == x and rows[x][e] == x for x in range(k)):
                self.identity = e
                break

    # -- basic algebra ------------------------------------------------

    def mul(self, a, b):
        return self.table[a][b]

    def mul_all(self, *xs):
        acc = xs[0]
        for x in xs[1:]:
            acc = self.table[acc][x]
        return acc

    def is_idempotent(self, a):
        return self.table[a][a] == a

    def nonzero(self):
        return tuple(x for x in range(self.size) if x != self.zero)

    @cached_property
    def order(self):
        return OrderRel(self.size, self.leq)

    @cached_property
    def compat(self):
        """compat[a][b]: both a'*b and a*b' are idempotent."""
        k, t, inv = self.size, self.table, self.inv
        idem = set(self.idempotents)
        return tuple(
            tuple(
                t[inv[a]][b] in idem and t[a][inv[b]] in idem for b in range(k)
            )
            for a in range(k)
        )

    @cached_property
    def orth(self):
        """orth[a][b]: a'*b = a*b' = 0.  Only meaningful with a zero."""
        if self.zero is None:
            raise NoZero("orthogonality needs a zero")
        k, t, inv, z = self.size, self.table, self.inv, self.zero
        return tuple(
            tuple(t[inv[a]][b] == z and t[a][inv[b]] == z for b in range(k))
            for a in range(k)
        )

    @cached_property
    def meet_table(self):
        """meet_table[a][b] is the greatest lower bound id, or None."""
        k, leq = self.size, self.leq
        out = []
        for a in range(k):
            row = []
            for b in range(k):
                lows = [c for c in range(k) if leq[c][a] and leq[c][b]]
                best = [c for c in lows if all(leq[x][c] for x in lows)]
                row.append(best[0] if best else None)
            out.append(tuple(row))
        return tuple(out)

    @cached_property
    def join_table(self):
        """join_table[a][b] is the least upper bound id, or None."""
        k, leq = self.size, self.leq
        out = []
        for a in range(k):
            row = []
            for b in range(k):
                ups = [c for c in range(k) if leq[a][c] and leq[b][c]]
                best = [c for c in ups if all(leq[c][x] for x in ups)]
                row.append(best[0] if best else None)
            out.append(tuple(row))
        return tuple(out)

    def join_of(self, xs):
        """Least upper bound of an iterable of ids, or None if it fails."""
        acc = None
        for x in xs:
            acc = x if acc is None else self.join_table[acc][x]
            if acc is None:
                return None
        return acc

    def __repr__(self):
        return f"InvSgp(size={self.size}, zero={self.zero})"


def parse_semigroup(text):
    """Parse .ist text into a validated InvSgp."""
    return InvSgp(_parse_table(text, allow_undefined=False))


def from_table(table):
    return InvSgp(table)


def natural_order(s):
    """The natural partial order of s, cached on the structure."""
    return s.order


def adjoin_zero(s):
    """Return s with a fresh absorbing zero appended as id k.

    Existing ids are unchanged.  Never called implicitly by anything else;
    callers that need a zero must adjoin one explicitly.
    """
    k = s.size
    z = k
    table = [list(row) + [z] for row in s.table] + [[z] * (k + 1)]
    return InvSgp(table)


@dataclass(frozen=True)
class Relations:
    """Pairwise relation record for a fixed pair (a, b)."""

    compatible: bool
    orthogonal: bool | None  # None when the structure has no zero
    meet: int | None
    join: int | None


def relations(s, a, b):
    """Compatibility, orthogonality, meet and join of the pair (a, b).

    Orthogonality is None for a zero-free structure; use orthogonal() to get
    the NoZero error instead.
    """
    orth = s.orth[a][b] if s.zero is not None else None
    return Relations(
        compatible=s.compat[a][b],
        orthogonal=orth,
        meet=s.meet_table[a][b],
        join=s.join_table[a][b],
    )


def orthogonal(s, a, b):
    """a' * b = a * b' = 0.  Raises NoZero on a zero-free structure."""
    return s.orth[a][b]


def atoms(s):
    """Ids covering only the zero.  Raises NoZero if there is no zero."""
    if s.zero is None:
        raise NoZero("atoms need a zero")
    return s.atoms


def d_relation_idempotents(s):
    """Partition idempotents into classes joined by some x with d(x), r(x) there."""
    parent = {e: e for e in s.idempotents}

    def find(e):
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    for x in range(s.size):
        a, b = find(s.d[x]), find(s.r[x])
        if a != b:
            parent[a] = b
    groups = {}
    for e in s.idempotents:
        groups.setdefault(find(e), []).append(e)
    return tuple(
        frozenset(g) for g in sorted(groups.values(), key=lambda g: min(g))
    )


def restricted_groupoid(s):
    """The partial-product structure on the nonzero ids.

    x * y is kept exactly when d(x) = r(y); everything else is forgotten.
    The result remembers which original ids its positions came from.
    """
    from .groupoid import Gpd  # local import, groupoid layer sits above core

    carrier = list(range(s.size)) if s.zero is None else [
        x for x in range(s.size) if x != s.zero
    ]
    index = {x: i for i, x in enumerate(carrier)}
    m = len(carrier)
    ptable = [
        [
            index[s.table[x][y]] if s.d[x] == s.r[y] else None
            for y in carrier
        ]
        for x in carrier
    ]
    return Gpd(ptable, labels=tuple(carrier))


@dataclass(frozen=True)
class FundamentalReport:
    fundamental: bool
    witness: int | None  # a non-idempotent commuting with every idempotent


def is_fundamental(s):
    """Only idempotents may commute with every idempotent."""
    for a in range(s.size):
        if s.is_idempotent(a):
            continue
        if all(s.table[a][e] == s.table[e][a] for e in s.idempotents):
            return FundamentalReport(False, a)
    return FundamentalReport(True, None)


@dataclass(frozen=True)
class Congruence:
    """A multiplication-compatible equivalence, as a class-id array."""

    size: int
    class_of: tuple

    def classes(self):
        out = {}
        for x, c in enumerate(self.class_of):
            out.setdefault(c, []).append(x)
        return tuple(tuple(v) for _, v in sorted(out.items()))

    def related(self, a, b):
        return self.class_of[a] == self.class_of[b]

    def is_trivial(self):
        return len(set(self.class_of)) == self.size


def congruence_from_key(s, key):
    """Group ids by key(x) and renumber classes by least member."""
    buckets = {}
    for x in range(s.size):
        buckets.setdefault(key(x), []).append(x)
    reps = sorted(min(v) for v in buckets.values())
    rank = {rep: i for i, rep in enumerate(reps)}
    class_of = [0] * s.size
    for v in buckets.values():
        c = rank[min(v)]
        for x in v:
            class_of[x] = c
    return Congruence(s.size, tuple(class_of))


def check_congruence(s, cong):
    """Return a witness (a, b, c, side) if cong is not a congruence."""
    cls = cong.class_of
    t = s.table
    classes = {}
    for x in range(s.size):
        classes.setdefault(cls[x], []).append(x)
    for members in classes.values():
        rep = members[0]
        for b in members[1:]:
            for c in range(s.size):
                if cls[t[c][rep]] != cls[t[c][b]]:
                    return (rep, b, c, "left")
                if cls[t[rep][c]] != cls[t[b][c]]:
                    return (rep, b, c, "right")
    return None


def quotient_table(s, cong):
    """Multiplication table on congruence classes (classes renumbered 0..)."""
    cls = cong.class_of
    reps = {}
    for x in range(s.size):
        reps.setdefault(cls[x], x)
    n = len(reps)
    out = [[0] * n for _ in range(n)]
    for ci, a in reps.items():
        for cj, b in reps.items():
            out[ci][cj] = cls[s.table[a][b]]
    return tuple(tuple(row) for row in out)


@dataclass(frozen=True)
class MuReport:
    mu: Congruence
    quotient: InvSgp
    projection: tuple  # id in s -> id in quotient


def mu_and_quotient(s):
    """The largest idempotent-separating congruence and its quotient.

    Two elements are related exactly when they share domain and range
    idempotents and conjugate every idempotent identically.  The relation is
    re-checked as a congruence and for idempotent separation before the
    quotient is built.
    """
    t, inv, idem = s.table, s.inv, s.idempotents

    def key(a):
        conj = tuple(t[t[a][e]][inv[a]] for e in idem)
        return (s.d[a], s.r[a], conj)

    mu = congruence_from_key(s, key)
    bad = check_congruence(s, mu)
    if bad is not None:
        raise AssertionError(f"conjugation relation failed congruence check: {bad}")
    seen = {}
    for e in idem:
        c = mu.class_of[e]
        if c in seen:
            raise AssertionError(f"idempotents {seen[c]} and {e} collapsed")
        seen[c] = e
    quotient = InvSgp(quotient_table(s, mu))
    return MuReport(mu, quotient, mu.class_of)


def all_congruences(s, cap=9):
    """Every congruence of s, by exhausting set partitions.  Small s only."""
    if s.size > cap:
        raise TooLarge(f"congruence enumeration capped at {cap} elements")
    out = []
    for part in _set_partitions(list(range(s.size))):
        class_of = [0] * s.size
        for ci, block in enumerate(part):
            for x in block:
                class_of[x] = ci
        cong = Congruence(s.size, tuple(class_of))
        if check_congruence(s, cong) is None:
            out.append(cong)
    return out


def _set_partitions(xs):
    if not xs:
        yield []
        return
    first, rest = xs[0], xs[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]
        yield [[first]] + part


def table_product(s, t):
    """Product table on pairs; pair (a, b) gets id b*|s| + a.

    The left factor varies fastest, so left-factor atoms keep the low ids.
    """
    ks, kt = s.size, t.size
    n = ks * kt
    out = [[0] * n for _ in range(n)]
    for b1 in range(kt):
        for a1 in range(ks):
            i = b1 * ks + a1
            for b2 in range(kt):
                for a2 in range(ks):
                    j = b2 * ks + a2
                    out[i][j] = t.table[b1][b2] * ks + s.table[a1][a2]
    return tuple(tuple(row) for row in out)


def product_parts(i, s):
    """Decode a product id back into (left id, right id)."""
    return i % s.size, i // s.size


DEFAULT_SIZE_CAP = 24


def semigroup_iso(s, t, cap=DEFAULT_SIZE_CAP):
    """Search for a table isomorphism s -> t; None if there is none.

    Plain backtracking with profile pruning.  Refuses carriers above cap
    (SizeCapExceeded) rather than running unboundedly.
    """
    if s.size != t.size:
        return None
    if s.size > cap:
        raise SizeCapExceeded(f"carrier {s.size} above cap {cap}")
    k = s.size

    def profile(u):
        down_sizes = sorted(len(u.down[x]) for x in range(k))
        return (
            tuple(sorted(len(u.down[e]) for e in u.idempotents)),
            down_sizes,
            u.zero is None,
        )

    if profile(s) != profile(t):
        return None

    def elem_profile(u, x):
        return (
            u.is_idempotent(x),
            x == u.zero,
            x == u.identity,
            len(u.down[x]),
            len(u.up[x]),
            u.is_idempotent(u.table[x][x]),
        )

    sprof = [elem_profile(s, x) for x in range(k)]
    tprof = [elem_profile(t, x) for x in range(k)]
    cands = [
        [y for y in range(k) if tprof[y] == sprof[x]] for x in range(k)
    ]
    if any(not c for c in cands):
        return None

    img = [None] * k
    used = [False] * k
    order = sorted(range(k), key=lambda x: len(cands[x]))

    def consistent(x):
        for a in range(k):
            if img[a] is None:
                continue
            ab = s.table[a][x]
            if img[ab] is not None and t.table[img[a]][img[x]] != img[ab]:
                return False
            ba = s.table[x][a]
            if img[ba] is not None and t.table[img[x]][img[a]] != img[ba]:
                return False
        return True

    def rec(pos):
        if pos == len(order):
            return True
        x = order[pos]
        if img[x] is not None:
            return rec(pos + 1)
        for y in cands[x]:
            if used[y]:
                continue
            img[x] = y
            used[y] = True
            if consistent(x) and rec(pos + 1):
                return True
            img[x] = None
            used[y] = False
        return False

    if rec(0):
        return tuple(img)
    return None
