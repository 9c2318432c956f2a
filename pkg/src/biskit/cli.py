"""Command-line front end.

Subcommands: analyze, booleanize, decompose, type, iso, verify.  All output
is deterministic for identical input bytes; timings are only collected when
--timings is passed (and are then the one nondeterministic field).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import asdict, dataclass, field

from .boolean import check_boolean, is_simple, is_zero_simplifying
from .booleanization import booleanize, booleanization_iso
from .core import (
    DEFAULT_SIZE_CAP,
    is_fundamental,
    parse_semigroup,
    semigroup_iso,
)
from .corpus import (
    GROUPOID_BUILDERS,
    SEMIGROUP_BUILDERS,
    corpus_groupoid,
    corpus_semigroup,
)
from .errors import BiskitError
from .groupoid import group_name, parse_groupoid
from .laws import run_laws
from .rook import decompose
from .typemon import type_monoid


@dataclass
class Report:
    validity: bool
    error: str | None = None
    zero: int | None = None
    idempotent_count: int | None = None
    atom_count: int | None = None
    boolean: bool | None = None
    boolean_failure: list | None = None
    fundamental: bool | None = None
    zero_simplifying: bool | None = None
    simple: bool | None = None
    decomposition_signature: list | None = None
    type_monoid_rank: int | None = None
    tau: list | None = None
    timings: dict = field(default_factory=dict)

    def to_json(self):
        return json.dumps(asdict(self), indent=2)

    @classmethod
    def from_json(cls, text):
        return cls(**json.loads(text))


def _listify(x):
    if isinstance(x, (list, tuple)):
        return [_listify(v) for v in x]
    return x


def build_report(s, timings=None):
    """Run the full analysis pipeline over a validated structure."""
    t0 = time.perf_counter()
    marks = {}

    def mark(name):
        if timings is not None:
            marks[name] = round(time.perf_counter() - t0, 6)

    rep = Report(
        validity=True,
        zero=s.zero,
        idempotent_count=len(s.idempotents),
        atom_count=len(s.atoms) if s.zero is not None else None,
    )
    chk = check_boolean(s) if s.zero is not None else None
    rep.boolean = bool(chk.boolean) if chk else False
    if chk and not chk.boolean:
        rep.boolean_failure = _listify(chk.failure)
    mark("check_boolean")
    if chk and chk.boolean:
        bs = chk.structure
        rep.fundamental = is_fundamental(s).fundamental
        rep.zero_simplifying = is_zero_simplifying(bs).holds
        rep.simple = is_simple(bs)
        mark("ideals")
        if bs.top is not None:
            cert = decompose(bs)
            rep.decomposition_signature = _listify(cert.signature)
            tm = type_monoid(bs)
            rep.type_monoid_rank = tm.rank
            rep.tau = [[e, list(tm.tau[e])] for e in sorted(tm.tau)]
            mark("decompose_and_type")
    if timings is not None:
        rep.timings = marks
    return rep


def print_report(rep, fmt, out=None):
    out = out or sys.stdout
    if fmt == "json":
        print(rep.to_json(), file=out)
        return
    for key, value in asdict(rep).items():
        print(f"{key}: {value}", file=out)


def _read_semigroup(path):
    with open(path) as fh:
        return parse_semigroup(fh.read())


def _size_cap():
    return int(os.environ.get("BISKIT_SIZE_CAP", DEFAULT_SIZE_CAP))


def cmd_analyze(args):
    try:
        s = _read_semigroup(args.path)
    except (BiskitError, OSError) as e:
        rep = Report(validity=False, error=f"{type(e).__name__}: {e}")
        print_report(rep, args.format)
        return 1
    rep = build_report(s, timings={} if args.timings else None)
    print_report(rep, args.format)
    return 0


def render_booleanization(b):
    """The target table as .ist text, with the id map appended as comments."""
    from .corpus import render_ist

    lines = [render_ist([list(r) for r in b.bs.base.table]).rstrip("\n")]
    if b.source0.size != b.source.size:
        lines.append(f"# beta: zero adjoined to the source as id {b.source0.size - 1}")
    for a, t in enumerate(b.beta):
        lines.append(f"# beta: {a} -> {t}")
    return "\n".join(lines) + "\n"


def cmd_booleanize(args):
    try:
        s = _read_semigroup(args.path)
        b = booleanize(s)
    except (BiskitError, OSError) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    text = render_booleanization(b)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(f"wrote {b.bs.size} elements to {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def cmd_decompose(args):
    try:
        s = _read_semigroup(args.path)
        chk = check_boolean(s)
        if not chk.boolean:
            print(f"error: NotBoolean: {chk.failure}", file=sys.stderr)
            return 1
        cert = decompose(chk.structure)
    except (BiskitError, OSError) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    if args.format == "json":
        print(
            json.dumps(
                {
                    "signature": _listify(cert.signature),
                    "verified": cert.verified,
                },
                indent=2,
            )
        )
    else:
        sig = ", ".join(f"({n} x {name})" for n, _h, name in cert.signature)
        print(f"signature: {sig}")
        print(f"verified: {cert.verified}")
    return 0 if cert.verified else 1


def cmd_type(args):
    try:
        s = _read_semigroup(args.path)
        chk = check_boolean(s)
        if not chk.boolean:
            print(f"error: NotBoolean: {chk.failure}", file=sys.stderr)
            return 1
        tm = type_monoid(chk.structure)
    except (BiskitError, OSError) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    if args.format == "json":
        print(
            json.dumps(
                {
                    "rank": tm.rank,
                    "tau": [[e, list(tm.tau[e])] for e in sorted(tm.tau)],
                },
                indent=2,
            )
        )
    else:
        print(f"rank: {tm.rank}")
        for e in sorted(tm.tau):
            print(f"tau({e}) = {tuple(tm.tau[e])}")
    return 0


def cmd_iso(args):
    try:
        s = _read_semigroup(args.paths[0])
        t = _read_semigroup(args.paths[1])
        if args.mode == "direct":
            mapping = semigroup_iso(s, t, cap=_size_cap())
            isomorphic = mapping is not None
            cert = mapping
        else:
            rep = booleanization_iso(s, t)
            isomorphic = rep.isomorphic
            cert = rep.induced
    except (BiskitError, OSError) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    if args.format == "json":
        print(
            json.dumps(
                {"isomorphic": isomorphic, "witness": _listify(cert)}, indent=2
            )
        )
    else:
        print(f"isomorphic: {isomorphic}")
        if cert is not None:
            print(f"witness: {list(cert)}")
    return 0


def _verify_one(label, obj):
    results = run_laws(obj)
    lines = []
    failures = []
    for r in results:
        if r.status == "pass":
            lines.append(f"  {r.key}: pass")
        elif r.status == "skip":
            lines.append(f"  {r.key}: skip ({r.note})")
        else:
            lines.append(f"  {r.key}: FAIL {r.witness}")
            failures.append((r.key, r.witness))
    print(label)
    for ln in lines:
        print(ln)
    return failures


def cmd_verify(args):
    targets = []
    if args.corpus:
        for name in SEMIGROUP_BUILDERS:
            targets.append((f"{name}.ist", lambda n=name: corpus_semigroup(n)))
        for name in GROUPOID_BUILDERS:
            targets.append((f"{name}.grp", lambda n=name: corpus_groupoid(n)))
    elif args.path:
        def load(path=args.path):
            with open(path) as fh:
                text = fh.read()
            if path.endswith(".grp"):
                return parse_groupoid(text)
            return parse_semigroup(text)

        targets.append((args.path, load))
    else:
        print("error: verify needs a path or --corpus", file=sys.stderr)
        return 2

    any_failure = False
    for label, load in targets:
        try:
            obj = load()
        except (BiskitError, OSError) as e:
            print(label)
            print(f"  validation: FAIL {type(e).__name__}: {e}")
            any_failure = True
            continue
        failures = _verify_one(label, obj)
        if failures:
            any_failure = True
            key, witness = failures[0]
            print(f"first failure: {key} witness={witness}", file=sys.stderr)
    return 1 if any_failure else 0


def make_parser():
    p = argparse.ArgumentParser(
        prog="biskit",
        description="finite inverse semigroup and Boolean inverse monoid tool",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, path=True):
        if path:
            sp.add_argument("path", help="input .ist file")
        sp.add_argument("--format", choices=("text", "json"), default="text")

    sp = sub.add_parser("analyze", help="full structural report")
    common(sp)
    sp.add_argument("--timings", action="store_true")
    sp.set_defaults(fn=cmd_analyze)

    sp = sub.add_parser("booleanize", help="write the Booleanization table")
    common(sp)
    sp.add_argument("--out", help="output path (default stdout)")
    sp.set_defaults(fn=cmd_booleanize)

    sp = sub.add_parser("decompose", help="matrix-monoid product signature")
    common(sp)
    sp.set_defaults(fn=cmd_decompose)

    sp = sub.add_parser("type", help="type monoid rank and counts")
    common(sp)
    sp.set_defaults(fn=cmd_type)

    sp = sub.add_parser("iso", help="isomorphism tests")
    sp.add_argument("paths", nargs=2, help="two .ist files")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.add_argument(
        "--mode", choices=("booleanization", "direct"), default="booleanization"
    )
    sp.set_defaults(fn=cmd_iso)

    sp = sub.add_parser("verify", help="run the law suite")
    sp.add_argument("path", nargs="?", help=".ist or .grp file")
    sp.add_argument("--corpus", action="store_true", help="verify bundled corpus")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(fn=cmd_verify)

    return p


def main(argv=None):
    parser = make_parser()
    args = parser.parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
