"""``episturm`` command line: generate, catalog, analyze, decompose, enumerate, verify.

Exit codes: 0 success/pass, 1 a check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import __version__
from .analyzer import (classical_balance_check, coven_hedlund_witness,
                       finite_episturmian_check, palindromic_local_balance_check,
                       property_p_check)
from .decomposer import (Exhausted, TernaryCore, Unary, decompose,
                         enumerate_property_p)
from .generator import CATALOG, SpinnedDirective, catalog, episturmian_word, epistandard_word
from .suites import SUITES, verify
from .words import LETTERS, WordError, alphabet_of, check_word

CHECKS = ("local-balance", "palindromic", "property-p", "balance", "coven-hedlund")


class UsageError(Exception):
    pass


def report(command: str, inputs: dict, results) -> dict:
    return {"command": command, "inputs": inputs, "results": results, "version": __version__}


# ---------------------------------------------------------------- analyze

def _local_balance_payload(r) -> dict:
    out = {"verdict": r.verdict}
    if r.passed:
        out["witnesses"] = {u: sorted(e.witnesses) for u, e in r.per_factor.items()
                            if len(e.extensions) >= 2}
    else:
        e = r.per_factor[r.failing_factor]
        out["violation"] = {"u": r.failing_factor,
                            "extensions": sorted(c + r.failing_factor + d for c, d in e.extensions)}
    return out


def analyze_word(w: str, checks: Sequence[str], bound: int | None, strict: bool = False) -> dict:
    check_word(w)
    if bound is not None and bound > len(w) - 2:
        raise UsageError(f"--bound {bound} exceeds |w| - 2 = {len(w) - 2}")
    res: dict = {}
    for name in checks:
        if name == "local-balance":
            res[name] = _local_balance_payload(finite_episturmian_check(w, bound, strict=strict))
        elif name == "palindromic":
            res[name] = _local_balance_payload(
                palindromic_local_balance_check(w, bound, strict=strict))
        elif name == "property-p":
            r = property_p_check(w, bound)
            res[name] = {"verdict": r.verdict,
                         "violation": list(r.violation) if r.violation else None}
        elif name == "balance":
            viol = None
            for a in alphabet_of(w):
                ok, pair = classical_balance_check(w, a)
                if not ok:
                    viol = {"letter": a, "pair": list(pair)}
                    break
            res[name] = {"verdict": "pass" if viol is None else "fail", "violation": viol}
        elif name == "coven-hedlund":
            letters = alphabet_of(w)
            if len(letters) > 2:
                raise UsageError("coven-hedlund needs a word over at most two letters")
            pair = "".join(letters)
            for x in "ab" + "".join(LETTERS):
                if len(pair) == 2:
                    break
                if x not in pair:
                    pair = "".join(sorted(pair + x))
            found = coven_hedlund_witness(w, pair)
            res[name] = {"verdict": "pass" if found is None else "fail",
                         "violation": None if found is None
                         else {"t": found[0], "letters": list(found[1])}}
        else:
            raise UsageError(f"unknown check {name!r}; choose from {', '.join(CHECKS)}")
    return {"word": w, "bound": len(w) - 2 if bound is None else bound, "checks": res}


def _default_checks(w: str) -> list[str]:
    checks = list(CHECKS[:4])
    if len(alphabet_of(w)) <= 2:
        checks.append("coven-hedlund")
    return checks


def _human_analyze(res: dict) -> str:
    lines = [f"word   {res['word'] or '(empty)'}", f"bound  {res['bound']}"]
    for name, r in res["checks"].items():
        detail = ""
        if r["verdict"] == "fail":
            detail = json.dumps(r.get("violation"))
        lines.append(f"{name:<14} {r['verdict']:<5} {detail}".rstrip())
    return "\n".join(lines)


# ---------------------------------------------------------------- decompose

def _terminal_payload(t) -> dict:
    if isinstance(t, Exhausted):
        return {"kind": "exhausted", "depth": t.depth}
    if isinstance(t, Unary):
        return {"kind": "unary", "letter": t.letter}
    if isinstance(t, TernaryCore):
        return {"kind": "ternary-core", "letters": list(t.letters), "core": t.core}
    return {"kind": "blocked", "witness": list(t.witness)}


def trace_payload(trace) -> dict:
    return {
        "word": trace.word,
        "steps": [{"word": s.word, "letter": s.letter, "spin": s.spin, "case": s.case.value,
                   "ambiguous_tail": s.ambiguous_tail, "alternatives": list(s.alternatives)}
                  for s in trace.steps],
        "terminal": _terminal_payload(trace.terminal),
        "final_word": trace.final_word,
        "recovered": " ".join(s.spin + s.letter for s in trace.steps),
    }


def _human_trace(p: dict) -> str:
    lines = [f"{'#':>3} {'step':<5} {'case':<16} word"]
    for i, s in enumerate(p["steps"], 1):
        flag = " ?" if s["ambiguous_tail"] or s["alternatives"] else ""
        lines.append(f"{i:>3} {s['spin'] + s['letter']:<5} {s['case']:<16} {s['word']}{flag}")
    term = dict(p["terminal"])
    lines.append(f"terminal {term.pop('kind')} {json.dumps(term)}  final {p['final_word'] or '(empty)'}")
    lines.append(f"recovered {p['recovered']}")
    return "\n".join(lines)


# ---------------------------------------------------------------- plumbing

def _words_from(args) -> list[str]:
    if args.empty:
        return [""]
    if args.stdin:
        lines = sys.stdin.read().splitlines()
    elif args.file:
        with open(args.file, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    elif args.word is None:
        raise UsageError("give a word, --stdin, --file or --empty")
    elif args.word == "":
        raise UsageError("the empty word is passed with --empty")
    else:
        return [args.word]
    return [x.strip() for x in lines if x.strip()]


def _emit(args, chunks: list[str]):
    text = "\n".join(chunks) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def cmd_generate(args) -> int:
    d = SpinnedDirective.parse(args.directive)
    w = epistandard_word(d, args.length) if d.all_left() else episturmian_word(d, args.length)
    inputs = {"directive": str(d), "length": args.length}
    _emit(args, [_dump(report("generate", inputs, {"word": w}))] if args.json else [w])
    return 0


def cmd_catalog(args) -> int:
    w = catalog(args.name, args.length, n=args.n, inner=args.inner)
    inputs = {"name": args.name, "length": args.length, "n": args.n, "inner": args.inner}
    _emit(args, [_dump(report("catalog", inputs, {"word": w}))] if args.json else [w])
    return 0


def cmd_analyze(args) -> int:
    status = 0
    chunks = []
    for w in _words_from(args):
        checks = args.checks.split(",") if args.checks else _default_checks(w)
        res = analyze_word(w, checks, args.bound, args.strict)
        if any(r["verdict"] == "fail" for r in res["checks"].values()):
            status = 1
        inputs = {"word": w, "bound": args.bound, "checks": checks, "strict": args.strict}
        chunks.append(_dump(report("analyze", inputs, res)) if args.json else _human_analyze(res))
    _emit(args, chunks)
    return status


def cmd_decompose(args) -> int:
    status = 0
    chunks = []
    for w in _words_from(args):
        p = trace_payload(decompose(w, args.max_depth))
        if p["terminal"]["kind"] == "blocked":
            status = 1
        inputs = {"word": w, "max_depth": args.max_depth}
        chunks.append(_dump(report("decompose", inputs, p)) if args.json else _human_trace(p))
    _emit(args, chunks)
    return status


def cmd_enumerate(args) -> int:
    words = enumerate_property_p(args.alphabet, args.length, args.require_abc_cycle)
    if args.json:
        inputs = {"alphabet": args.alphabet, "length": args.length,
                  "require_abc_cycle": args.require_abc_cycle}
        _emit(args, [_dump(report("enumerate", inputs, {"count": len(words), "words": words}))])
    else:
        _emit(args, words or [""])
    return 0


def cmd_verify(args) -> int:
    names = [args.suite] if args.suite else list(SUITES)
    results = [verify(n) for n in names]
    status = 0 if all(r.passed for r in results) else 1
    if args.json:
        _emit(args, [_dump(report("verify", {"suites": names},
                                  [r.as_dict() for r in results]))])
    else:
        _emit(args, [f"{r.suite:<22} {'pass' if r.passed else 'FAIL':<5} checked={r.checked}"
                     + ("" if r.passed else f" counterexample={json.dumps(r.counterexample)}")
                     for r in results])
    return status


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the JSON report")
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--bound", type=int, help="largest factor length |u| to check")

    words = argparse.ArgumentParser(add_help=False)
    words.add_argument("word", nargs="?")
    src = words.add_mutually_exclusive_group()
    src.add_argument("--stdin", action="store_true", help="read one word per line")
    src.add_argument("--file", help="read one word per line from a file")
    src.add_argument("--empty", action="store_true", help="use the empty word")

    p = argparse.ArgumentParser(prog="episturm", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", parents=[common], help="prefix from a directive word")
    g.add_argument("--directive", required=True, help='e.g. "La Lb | La Lb"')
    g.add_argument("--length", type=int, required=True)
    g.set_defaults(func=cmd_generate)

    c = sub.add_parser("catalog", parents=[common], help="named example words")
    c.add_argument("name", choices=CATALOG)
    c.add_argument("--length", type=int, required=True)
    c.add_argument("--n", type=int, default=1, help="parameter of f, g1, g2")
    c.add_argument("--inner", default="a b", help="inner directive over {a, b}")
    c.set_defaults(func=cmd_catalog)

    a = sub.add_parser("analyze", parents=[common, words], help="run decision procedures")
    a.add_argument("--checks", help="comma separated: " + ",".join(CHECKS))
    a.add_argument("--strict", action="store_true",
                   help="also require every checked factor to extend on both sides")
    a.set_defaults(func=cmd_analyze)

    d = sub.add_parser("decompose", parents=[common, words], help="iterated desubstitution")
    d.add_argument("--max-depth", type=int, default=32)
    d.set_defaults(func=cmd_decompose)

    e = sub.add_parser("enumerate", parents=[common], help="list Property-P words")
    e.add_argument("--alphabet", default="abc")
    e.add_argument("--length", type=int, required=True)
    e.add_argument("--require-abc-cycle", action="store_true")
    e.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("verify", parents=[common], help="run a bundled acceptance suite")
    v.add_argument("--suite", choices=list(SUITES))
    v.set_defaults(func=cmd_verify)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except (UsageError, WordError, ValueError) as e:
        print(f"episturm {args.command}: error: {e}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
