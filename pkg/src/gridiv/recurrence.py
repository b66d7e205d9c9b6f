"""Exact d_k(n) and s_k(n) for 2 x n boards from the two-row recursions.

    d_k(n+1) = d_{k-2}(n) + 3 d_{k-1}(n) + d_k(n) + 2 s_k(n)
    s_k(n+1) = d_{k-2}(n) + 2 d_{k-1}(n) + s_k(n)

``s_k(n)`` counts divisions whose two rightmost squares lie in different
pieces. Rows are anchored at n = 1; an all-zero n = 0 row cannot generate
d_2(1) = 1.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .errors import InputError, OracleDisagreement

PROVENANCES = ("recursion", "brute", "dp")

Row = dict[int, int]


def base_vector() -> tuple[Row, Row]:
    """``(d_row, s_row)`` for n = 1, sparse: absent k means 0."""
    return {1: 1, 2: 1}, {2: 1}


def step(d_row: Row, s_row: Row, k_max: Optional[int] = None) -> tuple[Row, Row]:
    """Advance one column. Entries with k > k_max are dropped when given."""
    top = max(d_row, default=0) + 2
    if k_max is not None:
        top = min(top, k_max)
    d_next: Row = {}
    s_next: Row = {}
    for k in range(1, top + 1):
        d2, d1 = d_row.get(k - 2, 0), d_row.get(k - 1, 0)
        dk, sk = d_row.get(k, 0), s_row.get(k, 0)
        d = d2 + 3 * d1 + dk + 2 * sk
        s = d2 + 2 * d1 + sk
        if d:
            d_next[k] = d
        if s:
            s_next[k] = s
    return d_next, s_next


def rows(n_max: int, k_max: Optional[int] = None) -> Iterator[tuple[int, Row, Row]]:
    """Yield ``(n, d_row, s_row)`` for n = 1..n_max."""
    if n_max < 1:
        raise InputError(f"n_max must be >= 1, got {n_max}")
    d, s = base_vector()
    if k_max is not None:
        d = {k: v for k, v in d.items() if k <= k_max}
        s = {k: v for k, v in s.items() if k <= k_max}
    for n in range(1, n_max + 1):
        yield n, d, s
        if n < n_max:
            d, s = step(d, s, k_max)


@dataclass
class SequenceTable:
    """Counts keyed by (k, n), each tagged with the engine that produced it.

    Rows are stored densely by n; within a row only nonzero k are kept.
    """

    name: str = "d"
    k_max: int = 0
    n_max: int = 0
    rows: dict[int, Row] = field(default_factory=dict)
    provenance: dict[tuple[int, int], str] = field(default_factory=dict)

    def set(self, k: int, n: int, value: int, provenance: str):
        if provenance not in PROVENANCES:
            raise InputError(f"unknown provenance {provenance!r}")
        if value < 0:
            raise InputError(f"counts are nonnegative, got {value} at k={k}, n={n}")
        existing = self.rows.get(n, {}).get(k)
        if existing is not None and existing != value:
            raise OracleDisagreement(
                f"{self.name}_{k}({n}): {self.provenance.get((k, n), '?')} gave {existing}, "
                f"{provenance} gave {value}"
            )
        row = self.rows.setdefault(n, {})
        if value:
            row[k] = value
        if existing is None:
            self.provenance[(k, n)] = provenance
        self.k_max = max(self.k_max, k)
        self.n_max = max(self.n_max, n)

    def get(self, k: int, n: int) -> int:
        return self.rows.get(n, {}).get(k, 0)

    __call__ = get

    def __getitem__(self, key: tuple[int, int]) -> int:
        k, n = key
        return self.get(k, n)

    def entries(self) -> Iterator[tuple[int, int, int]]:
        """``(n, k, count)`` for the full rectangle, ordered by n then k."""
        for n in range(1, self.n_max + 1):
            for k in range(1, self.k_max + 1):
                yield n, k, self.get(k, n)

    def column(self, k: int) -> list[int]:
        return [self.get(k, n) for n in range(1, self.n_max + 1)]

    def to_csv(self) -> str:
        buf = io.StringIO(newline="")
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "k", "count"])
        for n, k, c in self.entries():
            w.writerow([n, k, c])
        return buf.getvalue()

    def to_json(self, m: int = 2) -> str:
        ks = list(range(1, self.k_max + 1))
        doc = {
            "sequence": self.name,
            "m": m,
            "k": ks,
            "rows": [
                {
                    "n": n,
                    "counts": [self.get(k, n) for k in ks],
                    "provenance": sorted({self.provenance.get((k, n), "recursion") for k in ks}),
                }
                for n in range(1, self.n_max + 1)
            ],
        }
        return json.dumps(doc, indent=2) + "\n"


def tables(k_max: int, n_max: int) -> tuple[SequenceTable, SequenceTable]:
    if k_max < 1 or n_max < 1:
        raise InputError(f"k_max and n_max must be >= 1, got {k_max}, {n_max}")
    dt = SequenceTable("d")
    st = SequenceTable("s")
    for n, d, s in rows(n_max, k_max):
        for k in range(1, k_max + 1):
            dt.set(k, n, d.get(k, 0), "recursion")
            st.set(k, n, s.get(k, 0), "recursion")
    return dt, st


def d_table(k_max: int, n_max: int) -> SequenceTable:
    return tables(k_max, n_max)[0]


def s_table(k_max: int, n_max: int) -> SequenceTable:
    return tables(k_max, n_max)[1]


def t_value(d: SequenceTable, s: SequenceTable, k: int, n: int) -> int:
    """Divisions whose rightmost squares share a piece, derived as d - s."""
    return d.get(k, n) - s.get(k, n)


def d_value(k: int, n: int) -> int:
    for m, d, _ in rows(n, k):
        if m == n:
            return d.get(k, 0)
    raise AssertionError("unreachable")


def s_value(k: int, n: int) -> int:
    for m, _, s in rows(n, k):
        if m == n:
            return s.get(k, 0)
    raise AssertionError("unreachable")
