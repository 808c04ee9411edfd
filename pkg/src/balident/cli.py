"""Command line front end: ``balident verify | compute | list``.

Exit codes: 0 when every case passes, 1 when any case fails, 2 on usage or
configuration errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone

from gmpy2 import mpq

from . import identities
from .exact import parse_number
from .identities import HARD_CAPS, REGISTRY, ParameterError, UnknownIdentityError
from .sequences import SequenceCache

DEFAULTS = {"n_max": 30, "j_max": 6, "m_max": 4, "q_max": 5, "N_max": 15}
DEFAULT_ORDER = 25
ORDER_ENV = "BALIDENT_SERIES_ORDER"

_RANGE_KEYS = {"n": "n_max", "j": "j_max", "m": "m_max", "q": "q_max", "N": "N_max"}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    ids: list[str] = field(default_factory=list)
    n_max: int = DEFAULTS["n_max"]
    j_max: int = DEFAULTS["j_max"]
    m_max: int = DEFAULTS["m_max"]
    q_max: int = DEFAULTS["q_max"]
    N_max: int = DEFAULTS["N_max"]
    series_order: int = DEFAULT_ORDER
    mode: str = "both"
    format: str = "human"
    output: str | None = None
    parallel: int = 1
    bernoulli_overrides: dict[int, str] = field(default_factory=dict)

    def validate(self) -> None:
        for name, key in _RANGE_KEYS.items():
            value = getattr(self, key)
            if value < 0 or value > HARD_CAPS[name]:
                raise UsageError(f"--{key.replace('_', '-')} must be in [0, {HARD_CAPS[name]}], got {value}")
        if not 0 <= self.series_order <= HARD_CAPS["order"]:
            raise UsageError(f"--order must be in [0, {HARD_CAPS['order']}], got {self.series_order}")
        if self.parallel < 1:
            raise UsageError("--parallel must be at least 1")
        unknown = [i for i in self.ids if i not in REGISTRY]
        if unknown:
            raise UsageError(
                f"unknown identity {', '.join(map(repr, unknown))}; valid ids: {', '.join(REGISTRY)}"
            )

    def ranges(self) -> dict:
        out = {name: getattr(self, key) for name, key in _RANGE_KEYS.items()}
        out["order"] = self.series_order
        return out

    def report_header(self) -> dict:
        d = asdict(self)
        d.pop("output")
        d.pop("parallel")
        if not d["bernoulli_overrides"]:
            d.pop("bernoulli_overrides")
        else:
            d["bernoulli_overrides"] = {str(k): v for k, v in sorted(d["bernoulli_overrides"].items())}
        return d


def run_verify(config: RunConfig) -> dict:
    """Run the configured identities and return the report document."""
    config.validate()
    overrides = {k: mpq(v) for k, v in config.bernoulli_overrides.items()}
    ranges = config.ranges()
    tasks = []
    for id in config.ids:
        d = REGISTRY[id]
        for mode in d.modes:
            if config.mode != "both" and mode != config.mode:
                continue
            tasks.extend(identities.plan(id, ranges, mode, overrides))
    results = identities.run_tasks(tasks, config.parallel)
    cases = [r.as_dict() for r in results]
    passed = sum(1 for r in results if r.passed)
    return {
        "run": config.report_header(),
        "cases": cases,
        "summary": {"total": len(cases), "passed": passed, "failed": len(cases) - passed},
    }


def format_report(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["id", "params", "mode", "pass", "lhs", "rhs"])
        for case in report["cases"]:
            params = ";".join(f"{k}={v}" for k, v in case["params"].items())
            writer.writerow(
                [case["id"], params, case["mode"], str(case["pass"]).lower(), case["lhs"], case["rhs"]]
            )
        return buf.getvalue()
    lines = []
    for case in report["cases"]:
        if not case["pass"]:
            params = ", ".join(f"{k}={v}" for k, v in case["params"].items())
            lines.append(f"FAIL {case['id']} [{case['mode']}] {params}")
            lines.append(f"  lhs: {case['lhs']}")
            lines.append(f"  rhs: {case['rhs']}")
    lines.append(summary_line(report))
    return "\n".join(lines) + "\n"


def summary_line(report: dict) -> str:
    s = report["summary"]
    return f"{s['total']} cases, {s['passed']} passed, {s['failed']} failed"


# --------------------------------------------------------------------------
# compute

_NUMBER_FAMILIES = {
    "bernoulli": SequenceCache.bernoulli_number,
    "fibonacci": SequenceCache.fibonacci,
    "lucas": SequenceCache.lucas,
    "balancing": lambda c, n: int(c.balancing_number(n)),
    "lucas-balancing": lambda c, n: int(c.lucas_balancing_number(n)),
}
_POLY_FAMILIES = {
    "bernoulli-poly": SequenceCache.bernoulli_poly,
    "balancing-poly": SequenceCache.balancing_poly,
    "lucas-balancing-poly": SequenceCache.lucas_balancing_poly,
}
FAMILIES = tuple(_NUMBER_FAMILIES) + tuple(_POLY_FAMILIES)


def compute(sequence: str, n: int, at: str | None = None) -> str:
    if sequence not in FAMILIES:
        raise UsageError(f"unknown sequence {sequence!r}; choose from {', '.join(FAMILIES)}")
    if n < 0:
        raise UsageError("--n must be nonnegative")
    cache = SequenceCache()
    if sequence in _NUMBER_FAMILIES:
        if at is not None:
            raise UsageError(f"--at only applies to polynomial families, not {sequence}")
        return str(_NUMBER_FAMILIES[sequence](cache, n))
    poly = _POLY_FAMILIES[sequence](cache, n)
    if at is None:
        return str(poly)
    try:
        point = parse_number(at)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return str(poly(point))


# --------------------------------------------------------------------------
# list


def format_registry(fmt: str) -> str:
    rows = identities.registry_table()
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    lines = []
    for r in rows:
        params = ", ".join(f"{p}>={lo}" for p, lo in r["params"].items())
        lines.append(f"{r['id']} | {r['anchor']} | {r['domain']} | {params} | {'+'.join(r['modes'])}")
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# argument parsing


def _default_order() -> int:
    raw = os.environ.get(ORDER_ENV)
    if raw is None:
        return DEFAULT_ORDER
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{ORDER_ENV} must be an integer, got {raw!r}") from None


def _override(text: str) -> tuple[int, str]:
    k, sep, v = text.partition("=")
    if not sep:
        raise argparse.ArgumentTypeError("expected K=VALUE, e.g. 2=7/6")
    try:
        mpq(v)
        return int(k), v
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad override {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="balident",
        description="Exact verification of Bernoulli / balancing / Fibonacci identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="verify identities over parameter grids")
    sel = v.add_mutually_exclusive_group(required=True)
    sel.add_argument("--all", action="store_true", help="every registered identity")
    sel.add_argument("--id", action="append", dest="ids", metavar="ID", help="identity id (repeatable)")
    for name, key in _RANGE_KEYS.items():
        v.add_argument(f"--{key.replace('_', '-')}", type=int, default=DEFAULTS[key], dest=key)
    v.add_argument("--order", type=int, default=None, help=f"series order (default {DEFAULT_ORDER}, env {ORDER_ENV})")
    v.add_argument("--mode", choices=["direct", "series", "both"], default="both")
    v.add_argument("--format", choices=["human", "json", "csv"], default="human")
    v.add_argument("--output", "-o", help="write the report here instead of stdout")
    v.add_argument("--parallel", type=int, default=os.cpu_count() or 1)
    v.add_argument("--no-timestamp", action="store_true", help="omit the run timestamp")
    v.add_argument(
        "--override-bernoulli",
        type=_override,
        action="append",
        default=[],
        metavar="K=VALUE",
        help=argparse.SUPPRESS,
    )

    c = sub.add_parser("compute", help="print one exact sequence value")
    c.add_argument("--sequence", required=True, help=f"one of: {', '.join(FAMILIES)}")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--at", help="evaluation point for polynomial families, e.g. 1/2 or 1/2 + 1/2*sqrt5")

    ls = sub.add_parser("list", help="show the identity registry")
    ls.add_argument("--format", choices=["human", "json"], default="human")
    return parser


def _cmd_verify(args) -> int:
    config = RunConfig(
        ids=list(REGISTRY) if args.all else list(dict.fromkeys(args.ids)),
        n_max=args.n_max,
        j_max=args.j_max,
        m_max=args.m_max,
        q_max=args.q_max,
        N_max=args.N_max,
        series_order=args.order if args.order is not None else _default_order(),
        mode=args.mode,
        format=args.format,
        output=args.output,
        parallel=args.parallel,
        bernoulli_overrides=dict(args.override_bernoulli),
    )
    report = run_verify(config)
    if not args.no_timestamp:
        report["run"]["timestamp"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
    text = format_report(report, config.format)
    if config.output:
        with open(config.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(summary_line(report))
    else:
        sys.stdout.write(text)
    return 0 if report["summary"]["failed"] == 0 else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "compute":
            print(compute(args.sequence, args.n, args.at))
            return 0
        sys.stdout.write(format_registry(args.format))
        return 0
    except (UsageError, UnknownIdentityError, ParameterError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) else str(exc)
        print(f"balident: error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
