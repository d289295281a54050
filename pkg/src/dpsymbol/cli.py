"""Command-line interface.

Subcommands: ``symbol``, ``det``, ``lucas``, ``scan`` and ``verify``.
Exit codes: 0 success / all rows match, 1 at least one mismatch or failed
criterion, 2 invalid arguments or no report produced.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .acceptance import index_claim_report, run_suite
from .arith import Prime, odd_primes
from .detcore import dp_det, dp_symbol
from .errors import DPSymbolError
from .lucas import lucas_uv
from .predict import PREDICTORS, predict

CSV_FIELDS = ("p", "b", "c", "oracle", "predicted", "source", "match")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class ScanConfig:
    pmin: int
    pmax: int
    b_set: Union[str, tuple[int, ...]]
    c_set: Union[str, tuple[int, ...]]
    predictors: tuple[str, ...]
    jobs: int = 1
    out_path: Optional[str] = None
    format: str = "csv"

    def __post_init__(self) -> None:
        if not 3 <= self.pmin <= self.pmax:
            raise UsageError(f"need 3 <= pmin <= pmax, got {self.pmin}, {self.pmax}")
        if self.jobs < 1:
            raise UsageError("jobs must be >= 1")
        unknown = set(self.predictors) - set(PREDICTORS)
        if unknown or not self.predictors:
            raise UsageError(f"unknown predictors: {sorted(unknown)}")
        if self.format not in ("csv", "json"):
            raise UsageError(f"unknown format {self.format!r}")


@dataclass(frozen=True)
class PredictionRecord:
    p: int
    b: int
    c: int
    oracle: int
    predicted: str
    source: str
    match: bool

    def sort_key(self):
        return (self.p, self.b, self.c, self.source)


def _expand(values, p: int) -> Sequence[int]:
    return range(p) if values == "all" else values


def scan_prime(p: int, config: ScanConfig) -> list[PredictionRecord]:
    rows = []
    for b in _expand(config.b_set, p):
        for c in _expand(config.c_set, p):
            oracle = dp_symbol(b, c, p)
            for source in config.predictors:
                pred = predict(source, b, c, p)
                rows.append(
                    PredictionRecord(p, b, c, oracle, pred.display(), source, pred.matches(oracle))
                )
    return rows


def run_scan(config: ScanConfig) -> list[PredictionRecord]:
    primes = odd_primes(config.pmin, config.pmax)
    if config.jobs == 1:
        chunks = [scan_prime(p, config) for p in primes]
    else:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            chunks = list(pool.map(scan_prime, primes, [config] * len(primes)))
    rows = [r for chunk in chunks for r in chunk]
    rows.sort(key=PredictionRecord.sort_key)
    return rows


def _predicted_json(s: str):
    try:
        return int(s)
    except ValueError:
        return s


def render(rows: list[PredictionRecord], fmt: str) -> str:
    if fmt == "json":
        data = [
            {
                "p": r.p,
                "b": r.b,
                "c": r.c,
                "oracle": r.oracle,
                "predicted": _predicted_json(r.predicted),
                "source": r.source,
                "match": r.match,
            }
            for r in rows
        ]
        return json.dumps(data, indent=1) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for r in rows:
        w.writerow([r.p, r.b, r.c, r.oracle, r.predicted, r.source, str(r.match).lower()])
    return buf.getvalue()


def _int_list(text: str):
    if text == "all":
        return "all"
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'all' or comma-separated integers: {text!r}")


def _prime(text: str) -> int:
    try:
        return Prime(int(text))
    except (ValueError, DPSymbolError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


def cmd_symbol(args) -> int:
    if args.method == "oracle":
        print(dp_symbol(args.b, args.c, args.p))
        return 0
    pred = predict(args.method, args.b, args.c, args.p)
    print(pred.display() if pred.applicable else f"NA ({pred.reason})")
    return 0


def cmd_det(args) -> int:
    print(dp_det(args.b, args.c, args.p))
    return 0


def cmd_lucas(args) -> int:
    if args.n < 0:
        raise UsageError("n must be non-negative")
    pair = lucas_uv((args.a, args.bb), args.n, args.p)
    print(f"u={pair.u} v={pair.v}")
    return 0


def cmd_scan(args) -> int:
    if args.config is not None:
        raise UsageError("--config is reserved and not supported yet")
    config = ScanConfig(
        args.pmin, args.pmax, args.b, args.c, tuple(args.predictors.split(",")),
        args.jobs, args.out, args.format,
    )
    rows = run_scan(config)
    text = render(rows, config.format)
    if config.out_path in (None, "-"):
        sys.stdout.write(text)
    else:
        try:
            with open(config.out_path, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            raise UsageError(f"cannot write {config.out_path}: {exc}")
    bad = [r for r in rows if not r.match]
    applicable = sum(r.predicted != "NA" for r in rows)
    print(f"rows={len(rows)} applicable={applicable} mismatches={len(bad)}", file=sys.stderr)
    for r in bad[:20]:
        print(f"mismatch p={r.p} b={r.b} c={r.c} source={r.source} "
              f"oracle={r.oracle} predicted={r.predicted}", file=sys.stderr)
    return 1 if bad else 0


def cmd_verify(args) -> int:
    results = run_suite(args.suite)
    for res in results:
        print(res.line())
    claims = index_claim_report(300 if args.suite == "full" else 100)
    held = [p for p, ok in claims.items() if ok]
    print(f"[INFO] v_((p+1)/2)(-3,1) = 0 mod p held at {len(held)}/{len(claims)} "
          f"primes p = 3 mod 4, +-2 mod 5: {held}")
    ok = all(r.passed for r in results)
    print(f"{sum(r.passed for r in results)}/{len(results)} criteria passed")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dpsymbol", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    methods = ["oracle", *PREDICTORS]
    p = sub.add_parser("symbol", help="Legendre symbol of D_p(b, c)")
    p.add_argument("--p", type=_prime, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--c", type=int, default=1)
    p.add_argument("--method", choices=methods, default="oracle")
    p.set_defaults(func=cmd_symbol)

    p = sub.add_parser("det", help="D_p(b, c) modulo p")
    p.add_argument("--p", type=_prime, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--c", type=int, default=1)
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("lucas", help="u_n(A, B), v_n(A, B) modulo p")
    p.add_argument("--a", type=int, required=True, help="A")
    p.add_argument("--bb", type=int, required=True, help="B")
    p.add_argument("--p", type=_prime, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_lucas)

    p = sub.add_parser("scan", help="compare predictors with the oracle over a range")
    p.add_argument("--pmin", type=int, default=3)
    p.add_argument("--pmax", type=int, required=True)
    p.add_argument("--b", type=_int_list, default="all", help="'all' or comma list")
    p.add_argument("--c", type=_int_list, default=(1,), help="'all' or comma list")
    p.add_argument("--predictors", default="shewu",
                   help="comma list from: " + ",".join(PREDICTORS))
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", default=None, help="output path, '-' or omitted for stdout")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--config", default=None, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", help="run the acceptance criteria")
    p.add_argument("--suite", choices=["fast", "full"], default="fast")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DPSymbolError) as exc:
        print(f"dpsymbol: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
