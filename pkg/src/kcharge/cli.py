"""Command line interface: enumerate, stat, table, verify."""

from __future__ import annotations

import argparse
import json
import os
import sys

from .cores import Partition, k_interior, n_stat
from .ktableaux import (
    enumerate_k_tableaux,
    parse_json_dict,
    parse_text,
    to_json_dict,
    to_text,
    validate,
)
from .statistics import (
    charge_table,
    k_charge,
    k_cocharge,
    kostka_foulkes_table,
    sequence_reports,
)
from .sweeps import run_statistics_sweep

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_INVALID_INPUT = 3


def _parse_csv_ints(text: str, what: str) -> tuple[int, ...]:
    try:
        values = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValueError(f"{what} must be comma-separated integers, got {text!r}")
    if any(v < 1 for v in values):
        raise ValueError(f"{what} parts must be positive, got {text!r}")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kcharge",
        description="k-tableau enumeration and affine charge/cocharge statistics",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--output", "-o", default=None, help="write to file instead of stdout")

    p_enum = sub.add_parser("enumerate", help="list all k-tableaux of a weight")
    p_enum.add_argument("--k", type=int, required=True)
    p_enum.add_argument("--weight", required=True, help="comma-separated, e.g. 3,2,1")
    p_enum.add_argument("--shape", default=None, help="restrict to one shape")
    p_enum.add_argument("--strategy", choices=("fast", "oracle"), default="fast")
    add_common(p_enum)

    p_stat = sub.add_parser("stat", help="statistics report for one tableau")
    p_stat.add_argument("input", help="tableau file (text or JSON), or - for stdin")
    add_common(p_stat)

    p_table = sub.add_parser("table", help="shape-grouped charge generating polynomials")
    p_table.add_argument("--k", type=int, default=None)
    p_table.add_argument("--weight", required=True)
    p_table.add_argument("--shape", default=None, help="restrict to one shape")
    p_table.add_argument("--classical", action="store_true",
                         help="use the classical charge over semistandard tableaux")
    p_table.add_argument("--formulation", choices=("lp", "morse"), default="morse")
    add_common(p_table)

    p_verify = sub.add_parser("verify", help="sweep identities over all small k-tableaux")
    p_verify.add_argument("--max-k", type=int, required=True)
    p_verify.add_argument("--max-weight", type=int, required=True)
    add_common(p_verify)

    return parser


def _emit(args: argparse.Namespace, text: str) -> None:
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_enumerate(args: argparse.Namespace) -> int:
    weight = _parse_csv_ints(args.weight, "weight")
    shape = Partition(_parse_csv_ints(args.shape, "shape")) if args.shape else None
    tableaux = enumerate_k_tableaux(args.k, weight, shape=shape, strategy=args.strategy)
    if args.format == "json":
        payload = {
            "k": args.k,
            "weight": list(weight),
            "count": len(tableaux),
            "tableaux": [to_json_dict(t) for t in tableaux],
        }
        _emit(args, json.dumps(payload, indent=2) + "\n")
    else:
        blocks = [to_text(t) for t in tableaux]
        _emit(args, "".join(b + "\n" for b in blocks) + f"count: {len(tableaux)}\n")
    return EXIT_OK


def _read_tableau(source: str):
    raw = sys.stdin.read() if source == "-" else open(source).read()
    stripped = raw.lstrip()
    if stripped.startswith("{"):
        return parse_json_dict(json.loads(raw))
    return parse_text(raw)


def _stat_payload(tab) -> dict:
    reports = sequence_reports(tab)
    mu = Partition(tab.weight)
    interior = len(k_interior(tab.shape, tab.k))
    return {
        "k": tab.k,
        "shape": list(tab.shape),
        "weight": list(mu),
        "n_weight": n_stat(mu),
        "interior": interior,
        "k_charge": {"lp": k_charge(tab, "lp"), "morse": k_charge(tab, "morse")},
        "k_cocharge": {"lp": k_cocharge(tab, "lp"), "morse": k_cocharge(tab, "morse")},
        "sequences": [
            {
                "letters": list(r.letters),
                "residues": list(r.residues),
                "L": list(r.L),
                "M": list(r.M),
                "I": list(r.I),
                "J": list(r.J),
                "diag_prev_low": list(r.diag_prev_low),
                "diag_prev_high": list(r.diag_prev_high),
                "diag_add_low": list(r.diag_add_low),
                "diag_add_high": list(r.diag_add_high),
                "low_orders": [str(o) if o else None for o in r.low_orders],
                "high_orders": [str(o) if o else None for o in r.high_orders],
            }
            for r in reports
        ],
    }


def _stat_text(payload: dict) -> str:
    lines = [
        "k={k} shape={shape} weight={weight}".format(
            k=payload["k"],
            shape="(" + ",".join(str(p) for p in payload["shape"]) + ")",
            weight="(" + ",".join(str(p) for p in payload["weight"]) + ")",
        )
    ]
    order_width = max(4 * payload["k"] + 1, len("low order"))
    for num, seq in enumerate(payload["sequences"], start=1):
        lines.append(f"sequence {num}:")
        header = (
            f"  {'i':>3} {'res':>3} | {'dL':>3} {'L':>3} "
            f"{'low order':>{order_width}} {'M':>3} {'dM':>3} | "
            f"{'dI':>3} {'I':>3} {'high order':>{order_width}} {'J':>3} {'dJ':>3}"
        )
        lines.append(header)
        for idx, letter in enumerate(seq["letters"]):
            low = seq["low_orders"][idx] or "-"
            high = seq["high_orders"][idx] or "-"
            lines.append(
                f"  {letter:>3} {seq['residues'][idx]:>3} | "
                f"{seq['diag_prev_low'][idx]:>3} {seq['L'][idx]:>3} "
                f"{low:>{order_width}} {seq['M'][idx]:>3} {seq['diag_add_low'][idx]:>3} | "
                f"{seq['diag_prev_high'][idx]:>3} {seq['I'][idx]:>3} "
                f"{high:>{order_width}} {seq['J'][idx]:>3} {seq['diag_add_high'][idx]:>3}"
            )
        lines.append(
            "  sums: L={L} M+d={Md} I={I} J+d={Jd}".format(
                L=sum(seq["L"]),
                Md=sum(seq["M"]) + sum(seq["diag_add_low"]),
                I=sum(seq["I"]),
                Jd=sum(seq["J"]) + sum(seq["diag_add_high"]),
            )
        )
    lines.append(
        "k-cocharge: lp={lp} morse={morse}".format(**payload["k_cocharge"])
    )
    lines.append("k-charge: lp={lp} morse={morse}".format(**payload["k_charge"]))
    lines.append(
        "n(weight) - interior = {n} - {i} = {v}".format(
            n=payload["n_weight"],
            i=payload["interior"],
            v=payload["n_weight"] - payload["interior"],
        )
    )
    return "\n".join(lines) + "\n"


def cmd_stat(args: argparse.Namespace) -> int:
    try:
        tab = _read_tableau(args.input)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = validate(tab)
    if not report.ok:
        where = f" at cell {tuple(report.cell)}" if report.cell else ""
        print(f"invalid tableau: {report.problem}{where}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    payload = _stat_payload(tab)
    if args.format == "json":
        _emit(args, json.dumps(payload, indent=2) + "\n")
    else:
        _emit(args, _stat_text(payload))
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    weight = _parse_csv_ints(args.weight, "weight")
    if args.classical:
        table = kostka_foulkes_table(weight)
    else:
        if args.k is None:
            raise ValueError("either --k or --classical is required")
        table = charge_table(args.k, weight, formulation=args.formulation)
    if args.shape:
        wanted = Partition(_parse_csv_ints(args.shape, "shape"))
        table = {shape: poly for shape, poly in table.items() if shape == wanted}
    if args.format == "json":
        payload = {
            "weight": list(weight),
            "classical": bool(args.classical),
            "k": args.k,
            "table": {str(shape): poly.to_json_dict() for shape, poly in table.items()},
        }
        _emit(args, json.dumps(payload, indent=2) + "\n")
    else:
        lines = [f"{shape}: {poly}" for shape, poly in table.items()]
        _emit(args, "\n".join(lines) + ("\n" if lines else ""))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    threads = int(os.environ.get("KCHARGE_THREADS", "1") or "1")
    report = run_statistics_sweep(args.max_k, args.max_weight, processes=threads)
    if args.format == "json":
        payload = {
            "tableaux_checked": report.subjects_checked,
            "identities_checked": report.identities_checked,
            "pass": report.ok,
            "failures": [
                {"identity": f.identity, "detail": f.detail, "context": f.context}
                for f in report.failures[:10]
            ],
        }
        _emit(args, json.dumps(payload, indent=2) + "\n")
    else:
        lines = [
            f"tableaux checked: {report.subjects_checked}",
            f"identities checked: {report.identities_checked}",
            f"result: {'PASS' if report.ok else 'FAIL'}",
        ]
        for f in report.failures[:10]:
            lines.append(f"counterexample [{f.identity}] {f.detail}")
            lines.append(f.context.rstrip())
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK if report.ok else EXIT_VERIFY_FAILED


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "enumerate": cmd_enumerate,
        "stat": cmd_stat,
        "table": cmd_table,
        "verify": cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
