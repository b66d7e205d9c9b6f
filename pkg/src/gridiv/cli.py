"""Command-line entry point: ``gridiv <command> [options]``.

Exit codes: 0 ok, 2 input error, 3 oracle disagreement, 4 guard exceeded.
Errors are reported on stderr as one JSON object.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from . import closedform, core, dpcount, recurrence, symmetry
from .errors import GridivError, InputError, OracleDisagreement, SizeError
from .polynomial import Polynomial, interpolate, interpolate_lagrange

ENGINES = ("auto", "brute", "recursion", "dp")
DEFAULT_SEED = 20240229


def parse_range(text: str) -> list[int]:
    """``"5"``, ``"1..20"`` or ``"2,4,7"`` to a sorted list of ints."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            values = list(range(int(lo), int(hi) + 1))
        else:
            values = sorted({int(x) for x in text.split(",")})
    except ValueError:
        raise InputError(f"bad range {text!r}; use N, A..B or A,B,C") from None
    if not values:
        raise InputError(f"empty range {text!r}")
    return values


@dataclass
class RunConfig:
    command: str
    m: list[int] = field(default_factory=lambda: [2])
    n: list[int] = field(default_factory=lambda: [1])
    k: list[int] = field(default_factory=lambda: [1])
    engine: str = "auto"
    output: Optional[str] = None
    fmt: str = "csv"
    edge_limit: Optional[int] = None
    seed: int = DEFAULT_SEED

    def __post_init__(self):
        for name in ("m", "n", "k"):
            if not getattr(self, name):
                raise InputError(f"--{name} range is empty")
        if self.engine not in ENGINES:
            raise InputError(f"unknown engine {self.engine!r}")
        if self.engine == "recursion" and set(self.m) != {2}:
            raise InputError("engine 'recursion' only applies to m=2")


def counts_for(shape: core.BoardShape, engine: str, edge_limit: Optional[int]) -> tuple[dict[int, int], str]:
    """All-k counts for one board plus the engine actually used."""
    if engine == "auto":
        if min(shape.rows, shape.cols) <= dpcount.DEFAULT_ROW_LIMIT:
            engine = "dp"
        else:
            engine = "brute"
    if engine == "dp":
        return dpcount.dp_count(shape), engine
    if engine == "brute":
        return core.brute_count_all(shape, edge_limit=edge_limit), engine
    if shape.rows != 2:
        raise InputError("engine 'recursion' only applies to m=2")
    last: dict[int, int] = {}
    for _, row, _ in recurrence.rows(shape.cols):
        last = row
    return {k: last.get(k, 0) for k in range(1, shape.size + 1)}, engine


def _emit(cfg: RunConfig, text: str):
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_count(cfg: RunConfig) -> int:
    lines = []
    for m in cfg.m:
        for n in cfg.n:
            shape = core.BoardShape(m, n)
            counts, _ = counts_for(shape, cfg.engine, cfg.edge_limit)
            for k in cfg.k:
                lines.append((m, n, k, counts.get(k, 0)))
    if len(lines) == 1:
        _emit(cfg, f"{lines[0][3]}\n")
    else:
        _emit(cfg, "m,n,k,count\n" + "".join(f"{m},{n},{k},{c}\n" for m, n, k, c in lines))
    return 0


def cmd_enumerate(cfg: RunConfig) -> int:
    if len(cfg.m) != 1 or len(cfg.n) != 1 or len(cfg.k) != 1:
        raise InputError("enumerate takes a single m, n and k")
    shape = core.BoardShape(cfg.m[0], cfg.n[0])
    divs = core.enumerate_divisions(shape, cfg.k[0], edge_limit=cfg.edge_limit)
    _emit(cfg, core.dumps_divisions(divs, shape=shape, k=cfg.k[0]))
    return 0


def build_table(m: int, ns: Sequence[int], ks: Sequence[int], engine: str,
                edge_limit: Optional[int]) -> recurrence.SequenceTable:
    table = recurrence.SequenceTable("d")
    if engine == "recursion" or (engine == "auto" and m == 2):
        wanted = set(ns)
        for n, row, _ in recurrence.rows(max(ns), max(ks)):
            if n in wanted:
                for k in ks:
                    table.set(k, n, row.get(k, 0), "recursion")
    else:
        for n in ns:
            counts, used = counts_for(core.BoardShape(m, n), engine, edge_limit)
            for k in ks:
                table.set(k, n, counts.get(k, 0), used)
    table.k_max, table.n_max = max(ks), max(ns)
    return table


def _table_text(table: recurrence.SequenceTable, ns: Sequence[int], ks: Sequence[int], fmt: str, m: int) -> str:
    if fmt == "csv":
        out = ["n,k,count\n"]
        out += [f"{n},{k},{table.get(k, n)}\n" for n in ns for k in ks]
        return "".join(out)
    if fmt == "json":
        doc = {
            "m": m,
            "k": list(ks),
            "rows": [{"n": n, "counts": [table.get(k, n) for k in ks]} for n in ns],
            "provenance": sorted(set(table.provenance.values())),
        }
        return json.dumps(doc, indent=2) + "\n"
    header = "| n\\k | " + " | ".join(map(str, ks)) + " |\n"
    rule = "|---" * (len(ks) + 1) + "|\n"
    body = "".join(f"| {n} | " + " | ".join(str(table.get(k, n)) for k in ks) + " |\n" for n in ns)
    return header + rule + body


def cmd_table(cfg: RunConfig) -> int:
    chunks = []
    for m in cfg.m:
        table = build_table(m, cfg.n, cfg.k, cfg.engine, cfg.edge_limit)
        chunks.append(_table_text(table, cfg.n, cfg.k, cfg.fmt, m))
    _emit(cfg, "".join(chunks))
    return 0


def cmd_fit(cfg: RunConfig) -> int:
    families = closedform.fit_families(max(cfg.k))
    chosen = [f for f in families if f.k in set(cfg.k)]
    if cfg.fmt == "markdown":
        _emit(cfg, closedform.markdown_table(chosen))
    else:
        _emit(cfg, "".join(f.to_json() + "\n" for f in chosen))
    return 0


def cmd_symmetry(cfg: RunConfig) -> int:
    lines = []
    for m in cfg.m:
        for n in cfg.n:
            for k in cfg.k:
                shape = core.BoardShape(m, n)
                if k > shape.size:
                    continue
                lines.append(symmetry.orbit_count(shape, k, edge_limit=cfg.edge_limit).to_json() + "\n")
    _emit(cfg, "".join(lines))
    return 0


def _disagree(what: str, **values):
    detail = ", ".join(f"{k}={v}" for k, v in values.items())
    raise OracleDisagreement(f"{what}: {detail}")


def run_verification(max_cells: int = 12, n_max: int = 20, k_max: int = 10, seed: int = DEFAULT_SEED,
                     edge_limit: Optional[int] = None) -> list[str]:
    """Cross-engine equivalence suite; raises OracleDisagreement on any mismatch."""
    log = []
    checked = 0
    for m in range(1, max_cells + 1):
        for n in range(1, max_cells // m + 1):
            shape = core.BoardShape(m, n)
            brute = core.brute_count_all(shape, edge_limit=edge_limit)
            dp = dpcount.dp_count(shape)
            if brute != dp:
                _disagree(f"brute vs dp on {m}x{n}", brute=brute, dp=dp)
            if m == 2:
                rec, _ = counts_for(shape, "recursion", edge_limit)
                if rec != brute:
                    _disagree(f"recursion vs brute on 2x{n}", recursion=rec, brute=brute)
            checked += 1
    log.append(f"brute = dp (= recursion for m=2) on {checked} shapes with m*n <= {max_cells}")

    dt, st = recurrence.tables(k_max, n_max)
    for n in range(1, n_max + 1):
        dp = dpcount.dp_count((2, n))
        sep = dpcount.dp_separation_all(n)
        for k in range(1, k_max + 1):
            if dp.get(k, 0) != dt(k, n) or sep.get(k, 0) != st(k, n):
                _disagree(f"dp vs recursion at k={k}, n={n}",
                          d_dp=dp.get(k, 0), d_rec=dt(k, n), s_dp=sep.get(k, 0), s_rec=st(k, n))
    log.append(f"dp = recursion for d and s, n <= {n_max}, k <= {k_max}")

    for fam in closedform.fit_families(k_max):
        for n in range(1, n_max + 1):
            if fam.d_poly(n) != dt(fam.k, n) or fam.s_poly(n) != st(fam.k, n):
                _disagree(f"closed form k={fam.k} at n={n}", poly=fam.d_poly(n), table=dt(fam.k, n))
    log.append(f"fitted closed forms k <= {k_max} match the table for n <= {n_max}")

    rng = random.Random(seed)
    for _ in range(50):
        deg = rng.randint(0, 12)
        p = Polynomial([Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(deg + 1)])
        pts = [(x, p(x)) for x in range(1, deg + 2)]
        if interpolate(pts) != p or interpolate_lagrange(pts) != p:
            _disagree("interpolation round-trip", poly=str(p))
    log.append(f"Newton = Lagrange = source on 50 random polynomials (seed {seed})")
    return log


def cmd_verify(cfg: RunConfig) -> int:
    for line in run_verification(seed=cfg.seed, edge_limit=cfg.edge_limit):
        print(f"ok  {line}")
    return 0


def cmd_bench(cfg: RunConfig) -> int:
    rows = []
    for m in cfg.m:
        for n in cfg.n:
            shape = core.BoardShape(m, n)
            t0 = time.perf_counter()
            dp = dpcount.dp_count(shape)
            t_dp = time.perf_counter() - t0
            try:
                core.check_guard(shape, cfg.edge_limit)
            except SizeError:
                rows.append({"m": m, "n": n, "dp_seconds": round(t_dp, 6), "brute_seconds": None,
                             "brute": "skipped: above edge limit"})
                continue
            t0 = time.perf_counter()
            brute = core.brute_count_all(shape, edge_limit=cfg.edge_limit)
            t_brute = time.perf_counter() - t0
            if brute != dp:
                _disagree(f"bench {m}x{n}", brute=brute, dp=dp)
            rows.append({"m": m, "n": n, "dp_seconds": round(t_dp, 6), "brute_seconds": round(t_brute, 6)})
    _emit(cfg, "".join(json.dumps(r) + "\n" for r in rows))
    return 0


COMMANDS = {
    "count": cmd_count,
    "enumerate": cmd_enumerate,
    "table": cmd_table,
    "fit": cmd_fit,
    "verify": cmd_verify,
    "symmetry": cmd_symmetry,
    "bench": cmd_bench,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gridiv", description="Count divisions of grid boards into connected pieces.")
    sub = parser.add_subparsers(dest="command", required=True)
    defaults = {
        "count": ("2", "1", "1", "csv"),
        "enumerate": ("2", "2", "2", "csv"),
        "table": ("2", "1..20", "1..10", "csv"),
        "fit": ("2", "1", "3..5", "json"),
        "verify": ("2", "1", "1", "csv"),
        "symmetry": ("2", "1..6", "2", "json"),
        "bench": ("2", "10", "1", "json"),
    }
    for name, (m, n, k, fmt) in defaults.items():
        p = sub.add_parser(name)
        p.add_argument("--m", default=m, help="rows: N, A..B or A,B,C")
        p.add_argument("--n", default=n, help="columns")
        p.add_argument("--k", default=k, help="piece counts")
        p.add_argument("--engine", default="auto", choices=ENGINES)
        p.add_argument("--format", dest="fmt", default=fmt, choices=("csv", "json", "markdown"))
        p.add_argument("--output", "-o", default=None, help="write here instead of stdout")
        p.add_argument("--edge-limit", type=int, default=None,
                       help=f"brute-force guard on edge count (default {core.DEFAULT_EDGE_LIMIT} or ${core.EDGE_LIMIT_ENV})")
        p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for randomized checks")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        m=parse_range(args.m),
        n=parse_range(args.n),
        k=parse_range(args.k),
        engine=args.engine,
        output=args.output,
        fmt=args.fmt,
        edge_limit=args.edge_limit,
        seed=args.seed,
    )


def run(cfg: RunConfig) -> int:
    return COMMANDS[cfg.command](cfg)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return run(config_from_args(args))
    except GridivError as exc:
        err = {"error": type(exc).__name__, "message": str(exc), "exit_code": exc.exit_code}
        if getattr(exc, "n", None) is not None:
            err["n"] = exc.n
        sys.stderr.write(json.dumps(err) + "\n")
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
