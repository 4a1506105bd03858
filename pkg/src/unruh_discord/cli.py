"""Batch front-end: ``unruh-discord sweep`` and ``unruh-discord transition``.

A run is described by an INI file and/or flags (flags win)::

    [state]
    c1 = 1
    c2 = -0.6
    c3 = 0.6

    [unruh]
    omega = 1
    temperature = 1/(2 ln cot(pi/8))

    [channel]
    kind = phase

    [grid]
    grid = 0:1:201

    [output]
    format = csv
    out = phase_T1.csv

Exit codes: 0 success, 2 invalid run spec, 3 numerical failure, 4 no
transition in the bracket.
"""

from __future__ import annotations

import argparse
import configparser
import csv
import io
import json
import math
import os
import re
import sys
import tempfile
from dataclasses import dataclass, field

import numpy as np

from .channels import ChannelKind
from .dynamics import DEFAULT_BRACKET, SweepConfig, SweepError, analyze, sweep
from .errors import DomainError, NoBracket, ParseError, UnruhDiscordError
from .states import INFINITE, BellDiagonalParams, UnruhParams

COLUMNS = ("lambda_t", "mutual_info", "classical", "discord", "concurrence", "theta_opt", "phi_opt")
NUMBER_FORMAT = ".12g"

EXIT_OK, EXIT_SPEC, EXIT_NUMERIC, EXIT_NO_BRACKET = 0, 2, 3, 4

_NUM = r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_COT_LOG = re.compile(
    rf"^1\s*/\s*\(\s*2\s*\*?\s*ln\s*\(?\s*cot\s*\(\s*pi\s*/\s*({_NUM})\s*\)\s*\)?\s*\)$"
)


def parse_temperature(token: str) -> float:
    """Parse ``"0"``, ``"inf"``, a float literal or ``"1/(2 ln cot(pi/N))"``.

    ``inf`` returns :data:`INFINITE`.
    """
    s = str(token).strip().lower()
    if s in ("inf", "infinity", "+inf"):
        return INFINITE
    m = _COT_LOG.match(s)
    if m:
        denom = float(m.group(1))
        if denom <= 4:
            raise ParseError(f"{token!r}: cot(pi/{m.group(1)}) must exceed 1 for a positive temperature")
        return 1.0 / (2.0 * math.log(1.0 / math.tan(math.pi / denom)))
    if re.fullmatch(_NUM, s):
        t = float(s)
        if t < 0:
            raise ParseError(f"{token!r}: temperature must be non-negative")
        return t
    raise ParseError(f"cannot parse temperature token {token!r}")


def parse_grid(token: str) -> tuple[float, ...]:
    """``START:STOP:COUNT`` -> evenly spaced lambda_t values (endpoints included)."""
    parts = str(token).split(":")
    if len(parts) != 3:
        raise ParseError(f"grid {token!r} is not START:STOP:COUNT")
    try:
        start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise ParseError(f"grid {token!r}: {exc}") from None
    if count < 0:
        raise ParseError(f"grid {token!r}: COUNT must be >= 0")
    return tuple(float(x) for x in np.linspace(start, stop, count))


def parse_bracket(token: str) -> tuple[float, float]:
    parts = str(token).split(":")
    try:
        lo, hi = (float(p) for p in parts)
    except ValueError:
        raise ParseError(f"bracket {token!r} is not LO:HI") from None
    return lo, hi


@dataclass
class RunSpec:
    c: tuple[float, float, float] = (1.0, -0.6, 0.6)
    omega: float = 1.0
    temperature: float = 0.0
    channel: ChannelKind = ChannelKind.PHASE_FLIP
    t_grid: tuple[float, ...] = ()
    fmt: str = "csv"
    out: str | None = None
    bracket: tuple[float, float] = DEFAULT_BRACKET
    errors: list[str] = field(default_factory=list)

    def params(self) -> BellDiagonalParams:
        return BellDiagonalParams(*self.c)

    def unruh(self) -> UnruhParams:
        return UnruhParams(self.omega, self.temperature)

    def validate(self, need_grid: bool) -> list[str]:
        out = list(self.errors)
        out += self.params().violations()
        try:
            self.unruh()
        except DomainError as exc:
            out.append(str(exc))
        if self.fmt not in ("csv", "json"):
            out.append(f"format must be csv or json, got {self.fmt!r}")
        if need_grid:
            grid = SweepConfig(self.params(), UnruhParams(), self.channel, self.t_grid)
            out += [v for v in grid.violations() if v.startswith("t_grid")]
        lo, hi = self.bracket
        if not 0 <= lo < hi:
            out.append(f"bracket must satisfy 0 <= lo < hi, got {self.bracket!r}")
        return out


def _channel(token: str) -> ChannelKind:
    try:
        return ChannelKind(str(token).strip().lower())
    except ValueError:
        raise ParseError(f"unknown channel {token!r} (expected phase, bit or phase-bit)") from None


def load_spec(args: argparse.Namespace) -> RunSpec:
    """Merge the config file (if any) with flag overrides; collect parse errors."""
    spec = RunSpec()

    def attempt(fn, *a):
        try:
            return fn(*a)
        except (ParseError, ValueError) as exc:
            spec.errors.append(str(exc))
            return None

    values: dict[str, str] = {}
    if args.config:
        cp = configparser.ConfigParser()
        try:
            with open(args.config, encoding="utf-8") as fh:
                cp.read_file(fh)
        except (OSError, configparser.Error) as exc:
            spec.errors.append(f"config {args.config!r}: {exc}")
        else:
            for section in cp.sections():
                for key, val in cp.items(section):
                    values[key] = val
            if "kind" in values:
                values.setdefault("channel", values["kind"])
    for key in ("c1", "c2", "c3", "omega", "temperature", "channel", "grid", "format", "out", "bracket"):
        flag = getattr(args, key, None)
        if flag is not None:
            values[key] = flag

    c = list(spec.c)
    for i, key in enumerate(("c1", "c2", "c3")):
        if key in values:
            v = attempt(float, values[key])
            if v is not None:
                c[i] = v
    spec.c = tuple(c)
    if "omega" in values:
        omega = attempt(float, values["omega"])
        if omega is not None:
            spec.omega = omega
    if "temperature" in values:
        t = attempt(parse_temperature, values["temperature"])
        if t is not None:
            spec.temperature = t
    if "channel" in values:
        spec.channel = attempt(_channel, values["channel"]) or spec.channel
    if "grid" in values:
        spec.t_grid = attempt(parse_grid, values["grid"]) or ()
    if "format" in values:
        spec.fmt = values["format"].strip().lower()
    if "out" in values:
        spec.out = values["out"]
    if "bracket" in values:
        spec.bracket = attempt(parse_bracket, values["bracket"]) or spec.bracket
    return spec


def format_number(x: float) -> str:
    return format(float(x), NUMBER_FORMAT)


def records_to_rows(records) -> list[dict]:
    return [
        {
            "lambda_t": r.lambda_t,
            "mutual_info": r.mutual_info,
            "classical": r.classical,
            "discord": r.discord,
            "concurrence": r.concurrence,
            "theta_opt": r.theta_opt,
            "phi_opt": r.phi_opt,
        }
        for r in records
    ]


def render_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COLUMNS)
    for row in rows:
        writer.writerow([format_number(row[k]) for k in COLUMNS])
    return buf.getvalue()


def render_json(rows) -> str:
    # round through the 12-significant-digit text form so CSV and JSON agree
    data = [{k: float(format_number(row[k])) for k in COLUMNS} for row in rows]
    return json.dumps(data, indent=1) + "\n"


def write_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(text: str, out: str | None) -> None:
    if out:
        write_atomic(out, text)
    else:
        sys.stdout.write(text)


def _report_invalid(problems: list[str]) -> int:
    for p in problems:
        print(f"error: {p}", file=sys.stderr)
    return EXIT_SPEC


def cmd_sweep(spec: RunSpec) -> int:
    problems = spec.validate(need_grid=True)
    if problems:
        return _report_invalid(problems)
    config = SweepConfig(spec.params(), spec.unruh(), spec.channel, spec.t_grid)
    try:
        records = sweep(config)
    except SweepError as exc:
        print(f"error: numerical failure at lambda_t={exc.lambda_t!r}: {exc.cause}", file=sys.stderr)
        return EXIT_NUMERIC
    rows = records_to_rows(records)
    _emit(render_csv(rows) if spec.fmt == "csv" else render_json(rows), spec.out)
    return EXIT_OK


def cmd_transition(spec: RunSpec) -> int:
    problems = spec.validate(need_grid=False)
    if problems:
        return _report_invalid(problems)
    try:
        report = analyze(spec.params(), spec.unruh(), spec.channel, spec.bracket)
    except NoBracket:
        print("error: no transition in bracket", file=sys.stderr)
        return EXIT_NO_BRACKET
    except UnruhDiscordError as exc:
        print(f"error: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    _emit(json.dumps(report.as_dict()) + "\n", spec.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unruh-discord",
        description="Correlation dynamics of Bell-diagonal states seen by an accelerated observer.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_ in (("sweep", "tabulate I, C, D and concurrence on a lambda_t grid"),
                        ("transition", "locate the transition and sudden-death times")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--config", metavar="PATH")
        p.add_argument("--channel", choices=[k.value for k in ChannelKind])
        p.add_argument("--c1")
        p.add_argument("--c2")
        p.add_argument("--c3")
        p.add_argument("--omega")
        p.add_argument("--temperature", metavar="TOKEN",
                       help='0, inf, a float, or "1/(2 ln cot(pi/N))"')
        p.add_argument("--format", choices=["csv", "json"])
        p.add_argument("--out", metavar="PATH")
        if name == "sweep":
            p.add_argument("--grid", metavar="START:STOP:COUNT")
        else:
            p.add_argument("--bracket", metavar="LO:HI")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    spec = load_spec(args)
    if args.command == "sweep":
        return cmd_sweep(spec)
    return cmd_transition(spec)


if __name__ == "__main__":
    sys.exit(main())
