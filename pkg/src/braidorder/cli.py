"""``braidorder`` command-line front end."""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
import time

from .alternating import Arrangement
from .codes import code_to_ordinal
from .cutting import CuttingSequence, act, gamma1
from .errors import BraidError, BudgetExceeded
from .order import Conjugated, Normal, cnormal, compare, sign
from .ordinals import Comparison
from .words import BraidWord, PositiveBraidWord, word

EXIT_DOMAIN = 1
EXIT_PARSE = 2
EXIT_BUDGET = 3
EXIT_ORACLE = 4

_WORD_RE = re.compile(r"^\s*-\d+(\s+[-+]?\d+)*\s*$")


class _ParseError(Exception):
    pass


def _read_word(text: str, n: int) -> BraidWord:
    if text == "-":
        text = sys.stdin.read()
    try:
        return word(text.replace(",", " "), n)
    except ValueError as exc:
        raise _ParseError(f"cannot parse word {text!r}: {exc}") from exc


def _spec(args) -> Normal | Conjugated:
    n = args.strands
    try:
        a = Arrangement.parse(args.arrangement) if args.arrangement else Arrangement.dehornoy(n)
    except ValueError as exc:
        raise _ParseError(f"cannot parse arrangement {args.arrangement!r}: {exc}") from exc
    if a.strands != n:
        raise _ParseError(f"arrangement {a} is for {a.strands} strands, not {n}")
    if args.conjugator:
        P = _read_word(args.conjugator, n)
        return Conjugated(a, P.positive())
    return Normal(a)


def _check_cnormal(b: BraidWord, spec, got_code) -> str | None:
    from .oracle import brute_cnormal

    target = b.letters + (spec.conjugator.letters if isinstance(spec, Conjugated) else ())
    _, code = brute_cnormal(PositiveBraidWord(b.strands, target), spec.arrangement)
    if code != got_code:
        return f"oracle code {code} differs from {got_code}"
    return None


def _emit(args, payload: dict, plain: list[str]) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        for line in plain:
            print(line)


def cmd_normal_form(args) -> int:
    spec = _spec(args)
    b = _read_word(args.word, args.strands)
    w, c = cnormal(b, spec)
    if args.check_oracle and (msg := _check_cnormal(b, spec, c)):
        print(msg, file=sys.stderr)
        return EXIT_ORACLE
    _emit(
        args,
        {"word": list(w.letters), "code": c.to_nested(), "ordinal": str(code_to_ordinal(c))},
        [str(w), str(c)],
    )
    return 0


def cmd_code(args) -> int:
    spec = _spec(args)
    b = _read_word(args.word, args.strands)
    w, c = cnormal(b, spec)
    if args.check_oracle and (msg := _check_cnormal(b, spec, c)):
        print(msg, file=sys.stderr)
        return EXIT_ORACLE
    _emit(args, {"word": list(w.letters), "code": c.to_nested(), "ordinal": str(code_to_ordinal(c))}, [str(c)])
    return 0


def cmd_ordinal(args) -> int:
    spec = _spec(args)
    b = _read_word(args.word, args.strands)
    w, c = cnormal(b, spec)
    if args.check_oracle and (msg := _check_cnormal(b, spec, c)):
        print(msg, file=sys.stderr)
        return EXIT_ORACLE
    o = code_to_ordinal(c)
    _emit(args, {"word": list(w.letters), "code": c.to_nested(), "ordinal": str(o)}, [str(o)])
    return 0


def _witness_check(u: BraidWord, v: BraidWord, got: Comparison, spec) -> str | None:
    # one-sided: a sigma-positive witness for u^-1 v forces u < v (Dehornoy only)
    from .oracle import sigma_positive_witness

    if not isinstance(spec, Normal) or spec.arrangement != Arrangement.dehornoy(u.strands):
        return None
    if sigma_positive_witness(u.inverse() * v) is not None and got != Comparison.LESS:
        return f"witness says LESS, comparison says {got}"
    if sigma_positive_witness(v.inverse() * u) is not None and got != Comparison.GREATER:
        return f"witness says GREATER, comparison says {got}"
    return None


def cmd_compare(args) -> int:
    spec = _spec(args)
    u = _read_word(args.u, args.strands)
    v = _read_word(args.v, args.strands)
    got = compare(u, v, spec)
    if args.check_oracle and (msg := _witness_check(u, v, got, spec)):
        print(msg, file=sys.stderr)
        return EXIT_ORACLE
    _emit(args, {"result": str(got)}, [str(got)])
    return 0


def cmd_sign(args) -> int:
    spec = _spec(args)
    u = _read_word(args.word, args.strands)
    got = sign(u, spec)
    if args.check_oracle:
        e = BraidWord(u.strands)
        # a positive u means e < u
        cmp = {1: Comparison.LESS, 0: Comparison.EQUAL, -1: Comparison.GREATER}[got.value]
        if msg := _witness_check(e, u, cmp, spec):
            print(msg, file=sys.stderr)
            return EXIT_ORACLE
    _emit(args, {"result": str(got)}, [str(got)])
    return 0


def cmd_cutseq(args) -> int:
    n = args.strands
    b = _read_word(args.word, n)
    if args.arc:
        try:
            arc = CuttingSequence.parse(args.arc, n)
        except ValueError as exc:
            raise _ParseError(f"cannot parse cutting sequence {args.arc!r}: {exc}") from exc
    else:
        arc = gamma1(_spec(args).arrangement)
    got = act(b, arc)
    _emit(args, {"sequence": list(got.entries)}, [str(got)])
    return 0


def cmd_bench(args) -> int:
    from .alternating import _phi, _twisted, tail_twisted_normal_form

    n = args.strands
    a = Arrangement.parse(args.arrangement) if args.arrangement else Arrangement.dehornoy(n)
    rng = random.Random(args.seed)
    lengths = [int(x) for x in args.lengths.split(",")]
    rows = []
    for L in lengths:
        best = None
        for _ in range(args.repeat):
            w = PositiveBraidWord(n, tuple(rng.randint(1, n - 1) for _ in range(L)))
            _twisted.cache_clear()
            _phi.cache_clear()
            t0 = time.perf_counter()
            tail_twisted_normal_form(w, a)
            dt = time.perf_counter() - t0
            best = dt if best is None else min(best, dt)
        rows.append((L, best))
    if args.json:
        print(json.dumps([{"length": L, "seconds": s} for L, s in rows]))
    else:
        print("length,seconds")
        for L, s in rows:
            print(f"{L},{s:.6f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="braidorder", description="Thurston-type orderings of braid groups")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, word_args=("word",)):
        sp.add_argument("-n", "--strands", type=int, required=True, help="number of strands")
        sp.add_argument("-k", "--arrangement", help="comma-separated permutation k(1),...,k(n-1)")
        sp.add_argument("-P", "--conjugator", help="positive conjugating word for a non-normal ordering")
        sp.add_argument("--check-oracle", action="store_true", help="cross-check with brute force")
        sp.add_argument("--json", action="store_true", help="emit JSON")
        for name in word_args:
            sp.add_argument(name, help="word such as '1 -3 2', or '-' for stdin")

    for name, fn, words in [
        ("normal-form", cmd_normal_form, ("word",)),
        ("code", cmd_code, ("word",)),
        ("ordinal", cmd_ordinal, ("word",)),
        ("compare", cmd_compare, ("u", "v")),
        ("sign", cmd_sign, ("word",)),
    ]:
        sp = sub.add_parser(name)
        common(sp, words)
        sp.set_defaults(func=fn)

    sp = sub.add_parser("cutseq", help="act on an arc (default: the first arc of the diagram)")
    common(sp)
    sp.add_argument("--arc", help="cutting sequence such as '(+3,-2,+1,-4)'")
    sp.set_defaults(func=cmd_cutseq)

    sp = sub.add_parser("bench", help="time normal forms of random words (CSV: length,seconds)")
    sp.add_argument("-n", "--strands", type=int, default=8)
    sp.add_argument("-k", "--arrangement")
    sp.add_argument("--lengths", default="200,400,800,1600")
    sp.add_argument("--repeat", type=int, default=1)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_bench)
    return p


def _protect_words(argv: list[str]) -> list[str]:
    # "-1 2" would otherwise be taken for an option
    return [" " + a if _WORD_RE.match(a) else a for a in argv]


def run(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_protect_words(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except BraidError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
