"""Command-line front end.

Exit codes: 0 success, 1 domain error or failed verification, 2 usage
error, 3 internal consistency failure.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys

from .errors import DomainError, InternalCheckError
from .exactnum import cf_expand, format_number, parse_number
from .induction import regrow_palindrome, run_palindromic_induction, run_rauzy_induction
from .subst import alpha_from_incidence, expand_two_sided, format_rules, parse_rules
from .verify import PrecisionBudget, check_fixed_window, numeric_oracle_window
from .words import (
    FiniteWord,
    RotationSystem,
    SymmetryType,
    code_window,
    palindrome_start,
    palindrome_system,
    palindrome_window,
)

DEFAULT_RADIUS = 1000


class VerificationFailed(Exception):
    pass


def _number(text):
    try:
        return parse_number(text)
    except DomainError as e:
        raise argparse.ArgumentTypeError(str(e))


def _word_doc(w: FiniteWord) -> dict:
    return {"origin": w.origin, "letters": w.letters}


def cmd_cf(args):
    e = cf_expand(args.alpha, args.max_steps)
    doc = {"alpha": format_number(args.alpha), "preperiod": list(e.preperiod), "period": list(e.period)}
    text = f"preperiod={list(e.preperiod)} period={list(e.period)}"
    return doc, text


def cmd_word(args):
    sys_ = RotationSystem(args.alpha, args.start)
    w = code_window(sys_, args.lo, args.hi)
    doc = {
        "alpha": format_number(args.alpha),
        "start": format_number(args.start),
        "window": _word_doc(w),
    }
    return doc, w.letters


def cmd_palindromes(args):
    doc = {"alpha": format_number(args.alpha), "radius": args.radius, "palindromes": {}}
    lines = []
    for sym in SymmetryType:
        w = palindrome_window(args.alpha, sym, args.radius)
        start = palindrome_start(args.alpha, sym)
        doc["palindromes"][sym.value] = {"start": format_number(start), "window": _word_doc(w)}
        lines.append(f"{sym.value:>4}  start={format_number(start)}  {w.centered()}")
    return doc, "\n".join(lines)


def cmd_induce(args):
    if args.mode == "palindrome":
        result = run_palindromic_induction(args.alpha, SymmetryType(args.sym), args.max_steps)
    else:
        result = run_rauzy_induction(args.alpha, args.max_steps)
    doc = {"inputs": {"alpha": format_number(args.alpha), "mode": args.mode}}
    if args.mode == "palindrome":
        doc["inputs"]["sym"] = args.sym
    doc.update(result.as_dict(with_compositions=False))
    doc["psi"] = format_rules(result.psi)
    doc["phi"] = format_rules(result.phi)
    # every slope along the run lies in the field of the input
    doc["alpha_from_phi"] = format_number(alpha_from_incidence(result.phi_incidence, radicand=args.alpha.d))

    def fmt(state):
        return " ".join(f"{k}={v}" for k, v in state.items())

    lines = []
    for entry in doc["trace"]:
        lines.append(
            f"{entry['phase']:<9}  {fmt(entry['before'])}  --{entry['applied']}-->  {fmt(entry['after'])}"
        )
    lines.append(f"preperiod length: {len(result.preperiod)}  period length: {len(result.period)}")
    lines.append(f"psi: {_abbrev(doc['psi'])}")
    lines.append(f"phi: {_abbrev(doc['phi'])}")
    lines.append(f"alpha from phi: {doc['alpha_from_phi']}")
    return doc, "\n".join(lines)


def _abbrev(rules: str, limit: int = 200) -> str:
    if len(rules) <= limit:
        return rules
    parts = []
    for rule in rules.split(";"):
        letter, _, image = rule.partition(">")
        parts.append(f"{letter}>{image[:40]}...({len(image)} letters)")
    return ";".join(parts)


def cmd_fixpoint(args):
    s = parse_rules(args.rules)
    a, sep, b = args.seeds.partition("|")
    if not sep:
        raise DomainError(f"seeds must look like a|b, got {args.seeds!r}")
    w = expand_two_sided(s, a.strip(), b.strip(), args.radius)
    doc = {"rules": format_rules(s), "seeds": args.seeds, "radius": args.radius, "window": _word_doc(w)}
    return doc, w.centered()


def cmd_verify(args):
    sym = SymmetryType(args.sym)
    system = palindrome_system(args.alpha, sym)
    lo, hi = sym.span(args.radius)
    coded = code_window(system, lo, hi)
    oracle = numeric_oracle_window(system, lo, hi, PrecisionBudget())
    verdicts = {"oracle_agrees": oracle == coded}
    doc = {"inputs": {"alpha": format_number(args.alpha), "sym": args.sym, "radius": args.radius}}
    if args.rules:
        s = parse_rules(args.rules)
        fixed_system = system
    else:
        result = run_palindromic_induction(args.alpha, sym)
        verdicts["regrowth_agrees"] = regrow_palindrome(result, radius=args.radius) == coded
        s = result.phi
        cs = result.cycle_start
        fixed_system = palindrome_system(cs.alpha, cs.sym)
        doc["cycle_start"] = {"alpha": format_number(cs.alpha), "sym": cs.sym.value}
    doc["rules"] = format_rules(s)
    verdicts["fixed_window"] = check_fixed_window(s, fixed_system, max(args.radius, 1))
    doc["verdicts"] = verdicts
    doc["ok"] = all(verdicts.values())
    text = "\n".join(f"{k}: {'pass' if v else 'FAIL'}" for k, v in verdicts.items())
    if not doc["ok"]:
        raise VerificationFailed(doc, text)
    return doc, text


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sturmpal", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("text", "machine"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        return p

    p = add("cf", cmd_cf, "continued fraction with exact period detection")
    p.add_argument("--alpha", type=_number, required=True)
    p.add_argument("--max-steps", type=int)

    p = add("word", cmd_word, "coded window of a rotation")
    p.add_argument("--alpha", type=_number, required=True)
    p.add_argument("--start", type=_number, default=parse_number("0"))
    p.add_argument("--from", dest="lo", type=int, default=0)
    p.add_argument("--to", dest="hi", type=int, default=DEFAULT_RADIUS)

    p = add("palindromes", cmd_palindromes, "the three palindromic codings")
    p.add_argument("--alpha", type=_number, required=True)
    p.add_argument("--radius", type=int, default=DEFAULT_RADIUS)

    p = add("induce", cmd_induce, "classical or palindromic Rauzy induction")
    p.add_argument("--alpha", type=_number, required=True)
    p.add_argument("--mode", choices=("palindrome", "rauzy"), default="palindrome")
    p.add_argument("--sym", choices=[s.value for s in SymmetryType], default="one")
    p.add_argument("--max-steps", type=int)

    p = add("fixpoint", cmd_fixpoint, "two-sided fixed point of a substitution")
    p.add_argument("--rules", required=True)
    p.add_argument("--seeds", required=True)
    p.add_argument("--radius", type=int, default=DEFAULT_RADIUS)

    p = add("verify", cmd_verify, "cross-check coding, oracle, regrowth and a fixing substitution")
    p.add_argument("--alpha", type=_number, required=True)
    p.add_argument("--sym", choices=[s.value for s in SymmetryType], default="one")
    p.add_argument("--radius", type=int, default=DEFAULT_RADIUS)
    p.add_argument("--rules")
    return parser


def _emit(args, doc, text, stream):
    if args.format == "machine":
        stream.write(json.dumps(doc, indent=2) + "\n")
    else:
        stream.write(text + "\n")


def run_cli(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        doc, text = args.func(args)
    except VerificationFailed as e:
        doc, text = e.args
        _emit(args, doc, text, stdout)
        stderr.write("verification failed\n")
        return 1
    except DomainError as e:
        stderr.write(f"error: {e}\n")
        return 1
    except (InternalCheckError, AssertionError) as e:
        stderr.write(f"internal error: {e}\n")
        return 3
    _emit(args, doc, text, stdout)
    return 0


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
