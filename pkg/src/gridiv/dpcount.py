"""Column-profile dynamic programming over m x n boards.

Squares are added one at a time in column-major order. The frontier holds
the last ``m`` squares placed; each carries a pair ``(piece, component)``:
``piece`` says which final piece the square belongs to, ``component`` which
connected part of that piece (within the squares placed so far) it is in.
A piece may temporarily consist of several components that merge later, but
once a component leaves the frontier it can never grow again, so it must be
the whole piece. Both labelings are kept in restricted-growth form.

Each state maps to a list ``counts`` where ``counts[j]`` is the number of
partial boards with ``j`` pieces opened so far.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import zip_longest
from typing import Optional

from .core import BoardShape, as_shape
from .errors import InputError, SizeError

DEFAULT_ROW_LIMIT = 8

Entry = Optional[tuple[int, int]]
State = tuple[Entry, ...]


def _canon(entries) -> State:
    pieces: dict[int, int] = {}
    comps: dict[int, int] = {}
    out = []
    for e in entries:
        if e is None:
            out.append(None)
            continue
        p, c = e
        if p not in pieces:
            pieces[p] = len(pieces)
        if c not in comps:
            comps[c] = len(comps)
        out.append((pieces[p], comps[c]))
    return tuple(out)


@lru_cache(maxsize=None)
def transitions(state: State, row: int) -> tuple[tuple[State, int], ...]:
    """Successor states after placing the square at frontier position ``row``.

    Returns ``(next_state, opened)`` pairs where ``opened`` is 1 if the new
    square starts a new piece.
    """
    left = state[row]
    up = state[row - 1] if row > 0 else None
    pieces = sorted({e[0] for e in state if e is not None})
    fresh_piece = pieces[-1] + 1 if pieces else 0
    fresh_comp = max((e[1] for e in state if e is not None), default=-1) + 1
    out = []
    for p in pieces + [fresh_piece]:
        touching = {e[1] for e in (left, up) if e is not None and e[0] == p}
        comp = min(touching) if touching else fresh_comp
        entries = [
            (e[0], comp) if e is not None and e[1] in touching else e
            for e in state
        ]
        entries[row] = (p, comp)
        if left is not None:
            left_piece = left[0]
            left_comp = comp if left[1] in touching else left[1]
            still_open = any(e is not None and e[1] == left_comp for e in entries)
            if not still_open and any(e is not None and e[0] == left_piece for e in entries):
                # a finished component whose piece continues elsewhere: disconnected
                continue
        out.append((_canon(entries), 1 if p == fresh_piece else 0))
    return tuple(out)


def _is_final(state: State) -> bool:
    comp_of: dict[int, int] = {}
    for p, c in state:
        if comp_of.setdefault(p, c) != c:
            return False
    return True


def _add_into(acc: dict, key, vec: list[int], shift: int):
    if shift:
        vec = [0] * shift + vec
    cur = acc.get(key)
    if cur is None:
        acc[key] = vec
    else:
        acc[key] = [a + b for a, b in zip_longest(cur, vec, fillvalue=0)]


def run(rows: int, cols: int) -> dict[State, list[int]]:
    """Final frontier states with their piece-count vectors."""
    layer: dict[State, list[int]] = {(None,) * rows: [1]}
    for _ in range(cols):
        for r in range(rows):
            nxt: dict[State, list[int]] = {}
            for state, vec in layer.items():
                for succ, opened in transitions(state, r):
                    _add_into(nxt, succ, vec, opened)
            layer = nxt
    return {s: v for s, v in layer.items() if _is_final(s)}


def _frontier(shape: BoardShape, row_limit: int) -> tuple[int, int]:
    m, n = shape.rows, shape.cols
    if m > n:
        m, n = n, m  # counts are invariant under transposition
    if m > row_limit:
        raise SizeError(
            f"profile DP on {shape.rows}x{shape.cols} needs a frontier of {m} squares; limit is {row_limit}"
        )
    return m, n


def dp_count(shape, *, row_limit: int = DEFAULT_ROW_LIMIT) -> dict[int, int]:
    """Number of divisions into k connected pieces, for every k in 1..m*n."""
    shape = as_shape(shape)
    m, n = _frontier(shape, row_limit)
    totals = [0] * (shape.size + 1)
    for vec in run(m, n).values():
        for k, c in enumerate(vec):
            totals[k] += c
    return {k: totals[k] for k in range(1, shape.size + 1)}


def dp_count_k(shape, k: int, **kwargs) -> int:
    shape = as_shape(shape)
    if not 1 <= k <= shape.size:
        raise InputError(f"k must be in [1, {shape.size}], got {k}")
    return dp_count(shape, **kwargs)[k]


def dp_separation_all(n: int) -> dict[int, int]:
    """s_k(n) for every k: 2 x n divisions whose two rightmost squares differ."""
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}")
    totals = [0] * (2 * n + 1)
    for state, vec in run(2, n).items():
        if state[0][0] != state[1][0]:
            for k, c in enumerate(vec):
                totals[k] += c
    return {k: totals[k] for k in range(1, 2 * n + 1)}


def dp_separation_count(n: int, k: int) -> int:
    if not 1 <= k <= 2 * n:
        raise InputError(f"k must be in [1, {2 * n}], got {k}")
    return dp_separation_all(n)[k]
