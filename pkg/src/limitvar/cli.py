"""Command line: ``limitvar <subcommand> ...``.

Exit status is 0 for success or a holding identity, 1 for a failing identity
or failed check, and 2 for usage or internal errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import basis, canonical, decider, derivation, lattice, monoid, words
from .catalog import NAMES, catalog as get_monoid
from .presentation import close_presentation, parse_presentation

OK, FAIL, ERROR = 0, 1, 2


def _word(text: str) -> str:
    try:
        return words.parse_word(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _identity(text: str) -> words.Identity:
    try:
        return words.parse_identity(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _fmt_set(items) -> str:
    return "{" + ", ".join(sorted(items)) + "}"


# -- subcommands ---------------------------------------------------------------

def cmd_monoid(args) -> int:
    if args.action == "list":
        for name in NAMES:
            print(f"{name}\t{get_monoid(name).order}")
        return OK
    if not args.name:
        print("monoid show needs a name", file=sys.stderr)
        return ERROR
    M = get_monoid(args.name)
    one = M.names[M.one_index] if M.one_index is not None else "-"
    zero = M.names[M.zero_index] if M.zero_index is not None else "-"
    print(f"name {args.name}\norder {M.order}\nidentity {one}\nzero {zero}\n"
          f"aperiodic {'yes' if M.is_aperiodic() else 'no'}")
    if args.table:
        print(M.format_table())
    return OK


def cmd_word(args) -> int:
    w = args.word
    p = words.analyze(w)
    d = words.decompose(w)
    print(f"word {words.pretty(w)}")
    print(f"content {_fmt_set(p.content)}")
    print(f"sim {_fmt_set(p.sim)}")
    print(f"non {_fmt_set(p.non)}")
    print("mult " + " ".join(f"{c}:{p.mult[c]}" for c in sorted(p.mult)))
    print(f"F_SS = {_fmt_set(a + b for a, b in words.fss(w))}")
    print(f"w_sim {words.format_word(words.restrict(w, p.sim))}")
    parts = [f"w0={words.format_word(d.w0)}"]
    for i, (s, b) in enumerate(d.pairs, 1):
        parts.append(f"s{i}={s}")
        parts.append(f"w{i}={words.format_word(b)}")
    print("blocks " + " ".join(parts))
    return OK


def cmd_canon(args) -> int:
    res = canonical.canonicalize(args.word)
    print(f"canonical {res.canonical}")
    print(f"word {words.format_word(res.word)}")
    print(f"steps {len(res.trace)}")
    if args.trace:
        _write(args.trace, derivation.format_trace(res.trace))
    return OK


def cmd_decide(args) -> int:
    u, v = args.u, args.v
    d = decider.decide(u, v)
    detail = f" ({d.kind})" if d.kind else ""
    print(f"{words.format_word(u)} = {words.format_word(v)}: {d.verdict} [{d.reason}{detail}]")
    if d.canonical:
        print(f"canonical {d.canonical[0]}  |  {d.canonical[1]}")
    status = OK if d.holds else FAIL
    if args.oracle:
        o = decider.oracle_decide(u, v, cap=args.cap)
        line = f"oracle: {o.verdict}"
        if o.witness:
            wit = ",".join(f"{k}:{e}" for k, e in sorted(o.witness.items()))
            line += f" in {o.factor} via {wit} ({o.values[0]} vs {o.values[1]})"
        print(line)
        if o.verdict != d.verdict:
            print("decision and oracle disagree", file=sys.stderr)
            return ERROR
    if args.certificate:
        if d.holds:
            text = derivation.format_trace(d.derivation())
        else:
            text = f"# fails: {d.reason}{detail}\n"
        _write(args.certificate, text)
    return status


def cmd_verify(args) -> int:
    if args.what == "basis":
        A1, B1 = get_monoid("A1"), get_monoid("B1")
        checks = basis.verify_basis(A1, B1, args.n_max, names=("A1", "B1"))
        for c in checks:
            print(c.record())
        bad = [c for c in checks if not c.holds]
        print(f"# {len(checks)} identities, {len(bad)} failures", file=sys.stderr)
        return FAIL if bad else OK
    records = basis.nonidentity_witnesses()
    for r in records:
        print(r.record())
        if r.discrepancy:
            print(f"# {r.tag}: {r.discrepancy}", file=sys.stderr)
    return OK


def cmd_difftest(args) -> int:
    cfg = decider.DiffTestConfig(letters=args.letters, maxlen=args.maxlen,
                                 random=args.random, seed=args.seed,
                                 random_letters=tuple(args.random_letters),
                                 random_maxlen=args.random_maxlen, audit=not args.no_audit)
    print(f"seed {cfg.seed}")
    rep = decider.differential_test(cfg)
    print(rep.summary())
    return OK if rep.ok else FAIL


def cmd_lattice(args) -> int:
    m = lattice.satisfaction_matrix(args.n_max)
    res = lattice.compute_lattice(args.n_max)
    for a, b in sorted(res.covers):
        print(f"{a} < {b}")
    fig = lattice.figure_order()
    gen = {d.name for d in res.nodes if d.generator}
    same_gen = res.generator_order() == {(a, b) for a, b in fig if a in gen and b in gen}
    print(f"# generator-bearing order matches figure: {'yes' if same_gen else 'no'}", file=sys.stderr)
    print(f"# cover edges match figure: {'yes' if res.covers == set(lattice.FIGURE_EDGES) else 'no'}",
          file=sys.stderr)
    if args.dot:
        _write(args.dot, lattice.hasse_dot(res))
    if args.matrix:
        _write(args.matrix, m.to_tsv())
    return OK if same_gen else FAIL


def _load_monoid(args) -> monoid.Monoid:
    if args.table_file:
        return monoid.parse_table(Path(args.table_file).read_text())
    if args.presentation_file:
        M = close_presentation(parse_presentation(Path(args.presentation_file).read_text()))
        return monoid.adjoin_identity(M) if args.adjoin else M
    return get_monoid(args.monoid)


def cmd_satisfies(args) -> int:
    M = _load_monoid(args)
    ident = args.identity
    if args.sampled:
        rep = monoid.satisfies(M, ident, "sampled", samples=args.sampled, seed=args.seed)
        print(f"seed {args.seed}")
    elif M.factors:
        ok = monoid.holds_in(M, ident)
        print(f"{ident}: {'holds' if ok else 'fails'} (factorwise)")
        return OK if ok else FAIL
    else:
        rep = monoid.satisfies(M, ident)
    line = f"{ident}: {rep.status.value} after {rep.checked} assignments"
    if rep.witness:
        wit = ",".join(f"{k}:{v}" for k, v in sorted(rep.witness.items()))
        line += f"; witness {wit} gives {rep.lhs_value} vs {rep.rhs_value}"
    print(line)
    return FAIL if rep.fails else OK


def cmd_checktrace(args) -> int:
    trace = derivation.parse_trace(Path(args.file).read_text(), start=args.word)
    chk = derivation.check_trace(args.word if args.word is not None else trace.start, trace)
    if chk:
        print(f"valid; {len(trace)} steps ending at {words.format_word(chk.endpoint)}")
        return OK
    print(f"invalid at step {chk.failed_step}: {chk.reason}")
    return FAIL


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="limitvar", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    m = sub.add_parser("monoid", help="list or show catalog monoids")
    m.add_argument("action", choices=["list", "show"])
    m.add_argument("name", nargs="?", choices=NAMES)
    m.add_argument("--table", action="store_true", help="print the multiplication table")
    m.set_defaults(func=cmd_monoid)

    w = sub.add_parser("word", help="word statistics")
    w.add_argument("action", choices=["analyze"])
    w.add_argument("word", type=_word)
    w.set_defaults(func=cmd_word)

    c = sub.add_parser("canon", help="canonical form with derivation")
    c.add_argument("word", type=_word)
    c.add_argument("--trace", metavar="FILE", help="write the derivation ('-' for stdout)")
    c.set_defaults(func=cmd_canon)

    d = sub.add_parser("decide", help="decide u ≈ v in var{A¹×B¹}")
    d.add_argument("u", type=_word)
    d.add_argument("v", type=_word)
    d.add_argument("--oracle", action="store_true", help="also run the exhaustive oracle")
    d.add_argument("--cap", type=int, default=decider.ORACLE_CAP, help="oracle letter cap")
    d.add_argument("--certificate", metavar="FILE", help="write both derivations")
    d.set_defaults(func=cmd_decide)

    v = sub.add_parser("verify", help="check the basis or the non-identity witnesses")
    v.add_argument("what", choices=["basis", "nonid"])
    v.add_argument("--n-max", type=int, default=3)
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("difftest", help="compare decide() with the oracle")
    t.add_argument("--letters", type=int, default=2)
    t.add_argument("--maxlen", type=int, default=6)
    t.add_argument("--random", type=int, default=10_000)
    t.add_argument("--seed", type=int, default=0)
    t.add_argument("--random-letters", type=int, nargs="+", default=[3, 4])
    t.add_argument("--random-maxlen", type=int, default=8)
    t.add_argument("--no-audit", action="store_true", help="skip trace/form/necessity checks")
    t.set_defaults(func=cmd_difftest)

    la = sub.add_parser("lattice", help="satisfaction matrix and Hasse diagram")
    la.add_argument("--dot", metavar="FILE")
    la.add_argument("--matrix", metavar="FILE")
    la.add_argument("--n-max", type=int, default=3)
    la.set_defaults(func=cmd_lattice)

    s = sub.add_parser("satisfies", help="check an identity in one monoid")
    s.add_argument("identity", type=_identity, help="lhs=rhs")
    src = s.add_mutually_exclusive_group(required=True)
    src.add_argument("--monoid", choices=NAMES)
    src.add_argument("--table-file")
    src.add_argument("--presentation-file")
    s.add_argument("--adjoin", action="store_true", help="adjoin an identity to a presented semigroup")
    s.add_argument("--sampled", type=int, metavar="N", help="sample N assignments instead")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_satisfies)

    ct = sub.add_parser("checktrace", help="validate a trace file")
    ct.add_argument("file")
    ct.add_argument("--word", type=_word, help="expected start word")
    ct.set_defaults(func=cmd_checktrace)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR


def main() -> None:
    sys.exit(run())
