"""Command line front end.

    palindefect analyze --builtin rote -L 20000 -n 64
    palindefect analyze --word abca
    palindefect graph --builtin fibonacci -L 10000 --n 2
    palindefect suite [--only TAG]

Exit codes: 0 on success (verdicts are data), 2 on configuration errors,
3 when the word cannot be generated, 1 when a suite scenario fails.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import warnings
from pathlib import Path

from . import __version__
from .factors import FactorIndex
from .graph import IndeterminateGraphError, build_graph, graph_zero_test
from .palindex import PalIndex
from .suite import SCENARIOS, run_suite
from .verify import (AuditCaps, NoSquareError, conjecture_report, equivalence_audit,
                     periodic_reduction, t_series)
from .words import BUILTIN_NAMES, ExplicitWord, builtin_source, load_source_config

EXIT_CONFIG = 2
EXIT_GENERATION = 3


class ConfigError(Exception):
    pass


def _add_source_args(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--builtin", choices=BUILTIN_NAMES, help="built-in infinite word")
    src.add_argument("--word", help="literal finite word over single-character letters")
    src.add_argument("--config", type=Path, help="JSON word-source config")
    p.add_argument("-L", type=int, dest="length", help="prefix length (default: word length, or 1000)")
    p.add_argument("-n", type=int, dest="n_max", help="largest n analysed (default: min(64, L - 1))")
    p.add_argument("--out", type=Path, help="write output here instead of stdout")


def _resolve(args):
    try:
        if args.builtin:
            source = builtin_source(args.builtin)
        elif args.word is not None:
            source = ExplicitWord(args.word)
        else:
            source = load_source_config(args.config)
    except (OSError, ValueError, TypeError) as exc:
        raise ConfigError(str(exc)) from exc
    length = args.length
    if length is None:
        length = len(args.word) if args.word is not None else 1000
    if length < 1:
        raise ConfigError("L must be positive")
    n_max = args.n_max if args.n_max is not None else min(64, length - 1)
    if n_max < 0 or n_max + 1 > length:
        raise ConfigError(f"need 0 <= n and n + 1 <= L (got n={n_max}, L={length})")
    return source, length, n_max


def _generate(source, length: int) -> str:
    try:
        return source.prefix(length)
    except ValueError as exc:
        raise _GenerationError(str(exc)) from exc


class _GenerationError(Exception):
    pass


def _json_default(value):
    if isinstance(value, float) and math.isinf(value):
        return "infinite"
    raise TypeError(f"cannot serialise {value!r}")


def _dumps(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, default=_json_default) + "\n"


def analysis_payload(source, word: str, length: int, n_max: int) -> dict:
    report = conjecture_report(word, length, n_max)
    report.word = source.name
    audit = equivalence_audit(word, length, AuditCaps(n_max=n_max, palindrome_len=min(48, n_max),
                                                      factor_len=min(48, n_max)))
    reduction = None
    if report.converged and audit.N is not None and audit.H is not None:
        try:
            r = periodic_reduction(word, length, n_max, max(audit.N, audit.H, 1))
            reduction = {"w": r.w, "claims": list(r.claims), "M": r.M,
                         "periodic_equality": r.periodic_equality}
        except NoSquareError as exc:
            reduction = {"w": None, "claims": [False, False, False], "error": str(exc)}
    return {
        "word": source.name,
        "source": source.describe(),
        "L": length,
        "n_max": n_max,
        "defect": report.defect,
        "defect_profile_summary": report.defect_profile_summary,
        "t_values": list(report.t_values),
        "t_sum": report.t_sum,
        "tail_zero_from": report.tail_zero_from,
        "closure": {"reversal_closed_up_to": report.reversal_closed_up_to,
                    "closed_all": report.reversal_closed_up_to == n_max + 1},
        "converged": report.converged,
        "K": audit.K,
        "H": audit.H,
        "N": audit.N,
        "audit_consistent": audit.consistent,
        "verdict": report.verdict,
        "gap": report.gap,
        "reason": report.reason,
        "reduction": reduction,
    }


def complexity_csv(word: str, n_max: int) -> str:
    idx = FactorIndex(word, n_max)
    ts = t_series(idx, idx.pal_index, n_max)
    buf = io.StringIO()
    out = csv.writer(buf, lineterminator="\n")
    out.writerow(["n", "C", "P", "T", "left_special", "right_special", "reversal_closed"])
    for n in range(n_max + 1):
        out.writerow([n, idx.complexity(n), idx.pal_index.palindromic_complexity(n), ts[n],
                      len(idx.special_factors(n, "left")), len(idx.special_factors(n, "right")),
                      int(idx.is_closed_under_reversal(n))])
    return buf.getvalue()


def defect_csv(word: str) -> str:
    buf = io.StringIO()
    out = csv.writer(buf, lineterminator="\n")
    out.writerow(["i", "D", "lps_length", "new"])
    for i, d, lps, new in PalIndex(word).profile_rows():
        out.writerow([i, d, lps, int(new)])
    return buf.getvalue()


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def cmd_analyze(args) -> int:
    source, length, n_max = _resolve(args)
    word = _generate(source, length)
    if args.format == "csv":
        _emit(complexity_csv(word, n_max), args.out)
        if args.out is not None:
            args.out.with_suffix(".defect.csv").write_text(defect_csv(word))
        return 0
    _emit(_dumps(analysis_payload(source, word, length, n_max)), args.out)
    if args.out is not None:
        args.out.with_suffix(".complexity.csv").write_text(complexity_csv(word, n_max))
        args.out.with_suffix(".defect.csv").write_text(defect_csv(word))
    return 0


def cmd_graph(args) -> int:
    if args.length is None and args.builtin:
        args.length = 10_000
    source, length, n_max = _resolve(args)
    n = args.graph_n
    if args.n_max is None:
        n_max = min(length - 1, max(64, 4 * n + 4))
    if not 0 <= n <= n_max:
        raise ConfigError(f"--n must lie in 0..{n_max}")
    word = _generate(source, length)
    idx = FactorIndex(word, n_max)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        try:
            g = build_graph(idx, n)
        except IndeterminateGraphError as exc:
            print(f"warning: G_{n} is undetermined: {exc}", file=sys.stderr)
            text = (json.dumps({"n": n, "unknown": str(exc)}, sort_keys=True) + "\n"
                    if args.format == "json" else f"graph G_{n} {{\n  // unknown: {exc}\n}}\n")
            _emit(text, args.out)
            return 0
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    z = graph_zero_test(g)
    if args.format == "json":
        payload = g.to_dict() | {"zero_test": z.holds, "diagnosis": z.diagnosis, "witness": list(z.witness)}
        text = _dumps(payload)
    else:
        text = g.to_dot(z)
    _emit(text, args.out)
    return 0


def cmd_suite(args) -> int:
    return 0 if run_suite(args.only) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="palindefect", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="defect, complexities, T series and verdict")
    _add_source_args(p)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("graph", help="G_n as DOT or JSON with its zero test")
    _add_source_args(p)
    p.add_argument("--n", type=int, dest="graph_n", required=True, help="graph parameter n")
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("suite", help="run the acceptance scenarios")
    p.add_argument("--only", choices=[s.tag for s in SCENARIOS], help="run one scenario")
    p.set_defaults(func=cmd_suite)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except _GenerationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GENERATION


if __name__ == "__main__":
    sys.exit(main())
