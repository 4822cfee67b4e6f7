"""Command-line surface.

Subcommands: ``seq`` (emit counting sequences), ``vhc count|enumerate``,
``motzkin intervals``, ``bijection forward|inverse|roundtrip``, ``walks``,
``series``, ``root``, ``verify``.  Counts always serialize as decimal
strings; ``bfile`` format is ``n value`` per line starting at n = 1.

Exit codes: 0 success or verified, 1 verification mismatch, 2 usage or
parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Callable, Sequence

from . import bijection, counting, motzkin, series, verify, vhc, walks
from .perm import Perm, avoiders
from .vhc import HookConfig


class UsageError(Exception):
    pass


def _parse_perm(text: str) -> Perm:
    try:
        return tuple(int(tok) for tok in text.split(",") if tok != "")
    except ValueError:
        raise UsageError(f"bad permutation: {text!r}") from None


def _parse_patterns(text: str) -> tuple[Perm, ...]:
    # Patterns are comma-separated digit words; every pattern used here has
    # length at most 4, so single digits are unambiguous.
    out = []
    for word in text.split(","):
        word = word.strip()
        if not word.isdigit():
            raise UsageError(f"bad pattern: {word!r}")
        out.append(tuple(int(ch) for ch in word))
    return tuple(out)


def _parse_path(text: str) -> str:
    word = "" if text == "-" else text
    if not motzkin.is_motzkin_word(word):
        raise UsageError(f"not a Motzkin path: {text!r}")
    return word


def _show_path(word: str) -> str:
    return word if word else "-"


def _parse_hooks(text: str) -> tuple[int, ...]:
    if text in ("", "-"):
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise UsageError(f"bad hook list: {text!r}") from None


def _show_hooks(ne: tuple[int, ...]) -> str:
    return ",".join(str(j) for j in ne) if ne else "-"


def _emit_rows(rows: list[tuple[int, int]], fmt: str, out) -> None:
    if fmt == "csv":
        for n, value in rows:
            out.write(f"{n},{value}\n")
    elif fmt == "bfile":
        for n, value in rows:
            out.write(f"{n} {value}\n")
    else:
        out.write(
            json.dumps([{"n": n, "value": str(value)} for n, value in rows])
            + "\n"
        )


SEQ_FAMILIES: dict[str, tuple[Callable[[int], int], int]] = {
    "av312": (counting.count_av312, 1),
    "av231": (counting.count_av231, 1),
    "av132_321": (counting.closed_form_132_321, 1),
    "av231_321": (counting.count_av231_321, 1),
    "av312_321": (counting.count_av312_321, 1),
    "av231_1243": (counting.count_av231_1243, 1),
    "motzkin_pairs": (counting.pair_counts_motzkin, 1),
    "av132_231_321": (counting.count_av132_231_321, 1),
    "av132_312_321": (counting.count_av132_312_321, 1),
    "av132_231_312": (counting.count_av132_231_312, 1),
    "av132_231_312_321": (counting.count_av132_231_312_321, 1),
    "sankar": (counting.sankar_sum, 1),
    "walks": (walks.walk_counts, 1),
    "intervals_S": (lambda n: motzkin.count_intervals(n, "S"), 1),
    "intervals_C": (lambda n: motzkin.count_intervals(n, "C"), 1),
    "intervals_T": (lambda n: motzkin.count_intervals(n, "T"), 1),
    "intervals_A": (lambda n: motzkin.count_intervals(n, "A"), 1),
}


def cmd_seq(args, out) -> int:
    fn, start = SEQ_FAMILIES[args.family]
    rows = [(n, fn(n)) for n in range(start, args.max_n + 1)]
    _emit_rows(rows, args.format, out)
    return 0


def cmd_vhc(args, out) -> int:
    if args.vhc_cmd == "count":
        if args.perm is not None:
            out.write(f"{vhc.count_vhcs(_parse_perm(args.perm))}\n")
        elif args.n is not None and args.patterns is not None:
            total = vhc.count_vhcs_of_class(args.n, _parse_patterns(args.patterns))
            out.write(f"{total}\n")
        else:
            raise UsageError("need --perm, or both --n and --patterns")
        return 0
    perm = _parse_perm(args.perm)
    for cfg in vhc.enumerate_vhcs(perm):
        out.write(_show_hooks(cfg.ne_of_descent) + "\n")
    return 0


def cmd_motzkin(args, out) -> int:
    out.write(f"{motzkin.count_intervals(args.n, args.kind)}\n")
    return 0


def cmd_bijection(args, out) -> int:
    if args.bijection_cmd == "forward":
        cfg = HookConfig(_parse_perm(args.perm), _parse_hooks(args.hooks))
        try:
            iv = bijection.forward(cfg)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        out.write(f"{_show_path(iv.lower)} {_show_path(iv.upper)}\n")
        return 0
    if args.bijection_cmd == "inverse":
        lower = _parse_path(args.lower)
        upper = _parse_path(args.upper)
        try:
            cfg = bijection.inverse((lower, upper))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        perm_text = ",".join(str(v) for v in cfg.perm)
        out.write(f"{perm_text} {_show_hooks(cfg.ne_of_descent)}\n")
        return 0
    for n in range(1, args.max_n + 1):
        configs = 0
        for perm in avoiders(n, ((3, 1, 2),)):
            for cfg in vhc.enumerate_vhcs(perm):
                configs += 1
                if bijection.inverse(bijection.forward(cfg)) != cfg:
                    out.write(f"n={n}: round-trip failed at {cfg}\n")
                    return 1
        for iv in motzkin.intervals(n - 1, "C"):
            interval = bijection.PathInterval(*iv)
            if bijection.forward(bijection.inverse(interval)) != interval:
                out.write(f"n={n}: round-trip failed at {iv}\n")
                return 1
        out.write(f"n={n}: {configs} configurations ok\n")
    return 0


def cmd_walks(args, out) -> int:
    rows = [(k, walks.walk_counts(k)) for k in range(args.max_n + 1)]
    _emit_rows(rows, args.format, out)
    return 0


def cmd_series(args, out) -> int:
    if args.name == "q_residual":
        result = series.q_residual(args.order)
    else:
        result = series.named_gf(args.name, args.order)
    if args.format == "json":
        out.write(json.dumps([str(c) for c in result.coeffs]) + "\n")
    else:
        for i, c in enumerate(result.coeffs):
            out.write(f"{i}: {c}\n")
    return 0


def cmd_root(args, out) -> int:
    try:
        tol = Fraction(args.tol)
    except ValueError:
        raise UsageError(f"bad tolerance: {args.tol!r}") from None
    if tol <= 0:
        raise UsageError("tolerance must be positive")
    if args.name == "rho":
        value = series.rho_approx(tol)
    else:
        value = series.beta_approx(tol)
    digits = max(6, len(str(tol.denominator // tol.numerator)) + 1)
    out.write(f"{_decimal(value, digits)}\n")
    return 0


def _decimal(value: Fraction, digits: int) -> str:
    sign = "-" if value < 0 else ""
    value = abs(value)
    whole = value.numerator // value.denominator
    rest = value - whole
    scaled = rest * 10**digits
    frac_digits = scaled.numerator // scaled.denominator
    return f"{sign}{whole}.{frac_digits:0{digits}d}"


def cmd_verify(args, out) -> int:
    reports = verify.run_checks(args.level)
    if args.format == "json":
        out.write(
            json.dumps(
                [
                    {
                        "name": r.name,
                        "range": r.n_range,
                        "status": r.status,
                        "counterexample": r.counterexample,
                        "seconds": round(r.seconds, 3),
                    }
                    for r in reports
                ]
            )
            + "\n"
        )
    else:
        for r in reports:
            line = f"{r.status:<26} {r.name:<28} [{r.n_range}] {r.seconds:.2f}s"
            if r.counterexample:
                line += f"  counterexample: {r.counterexample}"
            out.write(line + "\n")
    return 0 if verify.all_passed(reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hookmotzkin",
        description="Exact enumeration of valid hook configurations and Motzkin path poset intervals.",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("seq", help="emit a counting sequence")
    p.add_argument("--family", required=True, choices=sorted(SEQ_FAMILIES))
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json", "bfile"), default="csv")

    p = sub.add_parser("vhc", help="count or enumerate hook configurations")
    vsub = p.add_subparsers(dest="vhc_cmd", required=True)
    pc = vsub.add_parser("count")
    pc.add_argument("--perm")
    pc.add_argument("--n", type=int)
    pc.add_argument("--patterns")
    pe = vsub.add_parser("enumerate")
    pe.add_argument("--perm", required=True)

    p = sub.add_parser("motzkin", help="Motzkin path posets")
    msub = p.add_subparsers(dest="motzkin_cmd", required=True)
    mi = msub.add_parser("intervals")
    mi.add_argument("--n", type=int, required=True)
    mi.add_argument("--kind", choices=motzkin.KINDS, required=True)

    p = sub.add_parser("bijection", help="configuration/interval bijection")
    bsub = p.add_subparsers(dest="bijection_cmd", required=True)
    bf = bsub.add_parser("forward")
    bf.add_argument("--perm", required=True)
    bf.add_argument("--hooks", default="-")
    bi = bsub.add_parser("inverse")
    bi.add_argument("--lower", required=True)
    bi.add_argument("--upper", required=True)
    br = bsub.add_parser("roundtrip")
    br.add_argument("--max-n", type=int, required=True)

    p = sub.add_parser("walks", help="quarter-plane walk counts")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json", "bfile"), default="csv")

    p = sub.add_parser("series", help="generating function coefficients")
    p.add_argument(
        "--name", required=True, choices=series.GF_NAMES + ("q_residual",)
    )
    p.add_argument("--order", type=int, default=40)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("root", help="isolate the asymptotic constants")
    p.add_argument("--name", required=True, choices=("rho", "beta"))
    p.add_argument("--tol", default="1e-9")

    p = sub.add_parser("verify", help="run the cross-verification suite")
    p.add_argument("--level", choices=("quick", "full"), default="quick")
    p.add_argument("--format", choices=("text", "json"), default="text")

    return parser


HANDLERS = {
    "seq": cmd_seq,
    "vhc": cmd_vhc,
    "motzkin": cmd_motzkin,
    "bijection": cmd_bijection,
    "walks": cmd_walks,
    "series": cmd_series,
    "root": cmd_root,
    "verify": cmd_verify,
}


def main(argv: Sequence[str] | None = None, out=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = out if out is not None else sys.stdout
    try:
        return HANDLERS[args.cmd](args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    sys.exit(main())
