"""Board and division model plus the exhaustive edge-subset enumerator.

Squares are indexed column-major: square ``m*j + r`` sits in row ``r`` of
column ``j``. On a 2-row board this gives ``x_{2j}`` on top and ``x_{2j+1}``
underneath, so ``(i, i+1)`` is adjacent only for even ``i`` and ``(i, i+2)``
is always adjacent.

A division is stored as a canonical label array (restricted-growth string);
its cut set is derived. Every valid edge removal corresponds to exactly one
division and vice versa, which is what makes the brute-force sweep an oracle
for every other counter in the package.
"""
from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence, TextIO

from .errors import InputError, SizeError

DEFAULT_EDGE_LIMIT = 26
EDGE_LIMIT_ENV = "GRIDIV_EDGE_LIMIT"

Edge = tuple[int, int]


@dataclass(frozen=True, order=True)
class BoardShape:
    rows: int
    cols: int

    def __post_init__(self):
        if not isinstance(self.rows, int) or not isinstance(self.cols, int):
            raise InputError(f"board dimensions must be integers, got {self.rows!r}x{self.cols!r}")
        if self.rows < 1 or self.cols < 1:
            raise InputError(f"board dimensions must be positive, got {self.rows}x{self.cols}")

    @property
    def size(self) -> int:
        return self.rows * self.cols

    def index(self, row: int, col: int) -> int:
        return self.rows * col + row

    def position(self, square: int) -> tuple[int, int]:
        """Return ``(row, col)`` of a square index."""
        col, row = divmod(square, self.rows)
        return row, col


def as_shape(shape) -> BoardShape:
    if isinstance(shape, BoardShape):
        return shape
    rows, cols = shape
    return BoardShape(rows, cols)


def adjacency(shape) -> list[Edge]:
    """All grid edges ``(a, b)`` with ``a < b``, sorted."""
    shape = as_shape(shape)
    m, n = shape.rows, shape.cols
    edges = []
    for j in range(n):
        for r in range(m):
            i = m * j + r
            if r + 1 < m:
                edges.append((i, i + 1))
            if j + 1 < n:
                edges.append((i, i + m))
    edges.sort()
    return edges


def neighbours(shape) -> list[list[int]]:
    shape = as_shape(shape)
    out: list[list[int]] = [[] for _ in range(shape.size)]
    for a, b in adjacency(shape):
        out[a].append(b)
        out[b].append(a)
    return out


def canonical_labels(labels: Sequence) -> tuple[int, ...]:
    """Relabel by order of first appearance (restricted-growth form)."""
    seen: dict = {}
    out = []
    for x in labels:
        if x not in seen:
            seen[x] = len(seen)
        out.append(seen[x])
    return tuple(out)


def _is_connected(squares: list[int], nbrs: list[list[int]]) -> bool:
    members = set(squares)
    stack = [squares[0]]
    seen = {squares[0]}
    while stack:
        v = stack.pop()
        for w in nbrs[v]:
            if w in members and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(members)


@dataclass(frozen=True, order=True)
class Division:
    """A partition of the board's squares into connected pieces.

    ``labels[i]`` is the piece of square ``i``; labels are canonical.
    """

    shape: BoardShape
    labels: tuple[int, ...]

    def __post_init__(self):
        if len(self.labels) != self.shape.size:
            raise InputError(
                f"expected {self.shape.size} labels for a {self.shape.rows}x{self.shape.cols} board, "
                f"got {len(self.labels)}"
            )
        if canonical_labels(self.labels) != tuple(self.labels):
            raise InputError(f"labels are not canonical: {self.labels}")
        nbrs = neighbours(self.shape)
        for piece in self.pieces():
            if not _is_connected(piece, nbrs):
                raise InputError(f"piece {piece} is not connected")

    @classmethod
    def from_labels(cls, shape, labels: Sequence) -> "Division":
        return cls(as_shape(shape), canonical_labels(labels))

    @property
    def k(self) -> int:
        return max(self.labels) + 1

    def pieces(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(max(self.labels) + 1)]
        for square, label in enumerate(self.labels):
            out[label].append(square)
        return out

    def cuts(self) -> frozenset[Edge]:
        return frozenset((a, b) for a, b in adjacency(self.shape) if self.labels[a] != self.labels[b])


def components(size: int, edges: Iterable[Edge]) -> list[int]:
    """Root of each vertex under union-find over ``edges``."""
    parent = list(range(size))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    return [find(x) for x in range(size)]


def is_valid_removal(shape, removed: Iterable[Edge]) -> Optional[int]:
    """Number of pieces left after cutting ``removed``, or None if invalid.

    A removal is valid when the two squares of every removed edge end up in
    different connected components.
    """
    shape = as_shape(shape)
    all_edges = adjacency(shape)
    edge_set = set(all_edges)
    removed = {tuple(sorted(e)) for e in removed}
    stray = removed - edge_set
    if stray:
        raise InputError(f"not board edges: {sorted(stray)}")
    roots = components(shape.size, (e for e in all_edges if e not in removed))
    if any(roots[a] == roots[b] for a, b in removed):
        return None
    return len(set(roots))


def division_from_removal(shape, removed: Iterable[Edge]) -> Optional[Division]:
    shape = as_shape(shape)
    removed = {tuple(sorted(e)) for e in removed}
    if is_valid_removal(shape, removed) is None:
        return None
    roots = components(shape.size, (e for e in adjacency(shape) if e not in removed))
    return Division.from_labels(shape, roots)


def resolve_edge_limit(edge_limit: Optional[int] = None) -> int:
    if edge_limit is not None:
        return edge_limit
    env = os.environ.get(EDGE_LIMIT_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise InputError(f"{EDGE_LIMIT_ENV} must be an integer, got {env!r}") from None
    return DEFAULT_EDGE_LIMIT


def check_guard(shape, edge_limit: Optional[int] = None) -> list[Edge]:
    shape = as_shape(shape)
    edges = adjacency(shape)
    limit = resolve_edge_limit(edge_limit)
    if len(edges) > limit:
        raise SizeError(
            f"brute force on {shape.rows}x{shape.cols} needs 2^{len(edges)} edge subsets; "
            f"edge limit is {limit} (raise it with --edge-limit or {EDGE_LIMIT_ENV})"
        )
    return edges


def _sweep(size: int, edges: Sequence[Edge], lo: int, hi: int) -> Iterator[list[int]]:
    """Yield the component-root array of every valid removal mask in [lo, hi)."""
    e = len(edges)
    for mask in range(lo, hi):
        parent = list(range(size))
        for bit in range(e):
            if not mask >> bit & 1:
                a, b = edges[bit]
                while parent[a] != a:
                    a = parent[a]
                while parent[b] != b:
                    b = parent[b]
                if a != b:
                    parent[a] = b
        roots = []
        for x in range(size):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            roots.append(x)
        ok = True
        for bit in range(e):
            if mask >> bit & 1:
                a, b = edges[bit]
                if roots[a] == roots[b]:
                    ok = False
                    break
        if ok:
            yield roots


def _count_chunk(args) -> Counter:
    size, edges, lo, hi, pair = args
    out: Counter = Counter()
    for roots in _sweep(size, edges, lo, hi):
        k = len(set(roots))
        if pair is None:
            out[k] += 1
        elif roots[pair[0]] != roots[pair[1]]:
            out[k] += 1
    return out


def _split(total: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, total))
    step, extra = divmod(total, parts)
    bounds, lo = [], 0
    for i in range(parts):
        hi = lo + step + (1 if i < extra else 0)
        bounds.append((lo, hi))
        lo = hi
    return bounds


def brute_count_all(shape, *, edge_limit: Optional[int] = None, chunks: int = 1,
                    workers: int = 1, separated: Optional[Edge] = None) -> dict[int, int]:
    """Counts for every k at once, from one power-set sweep.

    The sweep can be split into ``chunks`` disjoint mask ranges, optionally
    evaluated in ``workers`` processes; partial counts are merged by
    addition, so the result does not depend on the split. With
    ``separated=(a, b)`` only divisions putting squares a and b in different
    pieces are counted.
    """
    shape = as_shape(shape)
    edges = check_guard(shape, edge_limit)
    jobs = [(shape.size, edges, lo, hi, separated) for lo, hi in _split(1 << len(edges), chunks)]
    total: Counter = Counter()
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_count_chunk, jobs):
                total.update(part)
    else:
        for job in jobs:
            total.update(_count_chunk(job))
    return {k: total.get(k, 0) for k in range(1, shape.size + 1)}


def _check_k(shape: BoardShape, k: int):
    if not isinstance(k, int) or k < 1 or k > shape.size:
        raise InputError(f"k must be in [1, {shape.size}] for a {shape.rows}x{shape.cols} board, got {k!r}")


def _trusted(shape: BoardShape, labels: tuple[int, ...]) -> Division:
    # labels straight from the sweep are canonical and connected by construction
    d = object.__new__(Division)
    object.__setattr__(d, "shape", shape)
    object.__setattr__(d, "labels", labels)
    return d


def enumerate_all_divisions(shape, *, edge_limit: Optional[int] = None) -> dict[int, list[Division]]:
    """Divisions for every k from a single sweep, each list sorted by labels."""
    shape = as_shape(shape)
    edges = check_guard(shape, edge_limit)
    by_k: dict[int, set] = {k: set() for k in range(1, shape.size + 1)}
    for roots in _sweep(shape.size, edges, 0, 1 << len(edges)):
        labels = canonical_labels(roots)
        by_k[max(labels) + 1].add(labels)
    return {k: [_trusted(shape, lab) for lab in sorted(found)] for k, found in by_k.items()}


def enumerate_divisions(shape, k: int, *, edge_limit: Optional[int] = None) -> list[Division]:
    """Every division of ``shape`` into ``k`` pieces, sorted by label array."""
    shape = as_shape(shape)
    _check_k(shape, k)
    edges = check_guard(shape, edge_limit)
    found = set()
    for roots in _sweep(shape.size, edges, 0, 1 << len(edges)):
        labels = canonical_labels(roots)
        if max(labels) == k - 1:
            found.add(labels)
    return [_trusted(shape, labels) for labels in sorted(found)]


def brute_count(shape, k: int, *, edge_limit: Optional[int] = None, **kwargs) -> int:
    shape = as_shape(shape)
    _check_k(shape, k)
    return brute_count_all(shape, edge_limit=edge_limit, **kwargs)[k]


def separation_count(n: int, k: int, *, edge_limit: Optional[int] = None, **kwargs) -> int:
    """Divisions of the 2 x n board into k pieces whose two rightmost squares differ."""
    shape = BoardShape(2, n)
    _check_k(shape, k)
    pair = (2 * n - 2, 2 * n - 1)
    return brute_count_all(shape, edge_limit=edge_limit, separated=pair, **kwargs)[k]


# Serialization: a header line "m n k", then one comma-separated label array per line.

def dump_divisions(divisions: Sequence[Division], fp: TextIO, shape=None, k: Optional[int] = None):
    if divisions:
        shape = divisions[0].shape
        k = divisions[0].k
    if shape is None or k is None:
        raise InputError("shape and k are required to serialize an empty division list")
    shape = as_shape(shape)
    fp.write(f"{shape.rows} {shape.cols} {k}\n")
    for d in divisions:
        if d.shape != shape or d.k != k:
            raise InputError("all divisions in one file must share shape and k")
        fp.write(",".join(map(str, d.labels)) + "\n")


def dumps_divisions(divisions: Sequence[Division], shape=None, k: Optional[int] = None) -> str:
    import io

    buf = io.StringIO(newline="")
    dump_divisions(divisions, buf, shape=shape, k=k)
    return buf.getvalue()


def loads_divisions(text: str) -> tuple[BoardShape, int, list[Division]]:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise InputError("empty division file")
    try:
        m, n, k = (int(x) for x in lines[0].split())
    except ValueError:
        raise InputError(f"bad header line {lines[0]!r}; expected 'm n k'") from None
    shape = BoardShape(m, n)
    out = []
    for line in lines[1:]:
        try:
            labels = tuple(int(x) for x in line.split(","))
        except ValueError:
            raise InputError(f"bad label line {line!r}") from None
        d = Division(shape, labels)
        if d.k != k:
            raise InputError(f"division {line!r} has {d.k} pieces, header says {k}")
        out.append(d)
    return shape, k, out
