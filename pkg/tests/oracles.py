"""Independent reference implementations used only by the tests."""
from itertools import product


def set_partitions(size):
    """All restricted-growth strings of length ``size``."""
    if size == 0:
        yield ()
        return

    def rec(prefix, top):
        if len(prefix) == size:
            yield tuple(prefix)
            return
        for label in range(top + 2):
            yield from rec(prefix + [label], max(top, label))

    yield from rec([0], 0)


def grid_neighbours(m, n):
    nb = {}
    for j, r in product(range(n), range(m)):
        cell = (r, j)
        nb[cell] = [(r + dr, j + dj) for dr, dj in ((1, 0), (-1, 0), (0, 1), (0, -1))
                    if 0 <= r + dr < m and 0 <= j + dj < n]
    return nb


def connected_partitions(m, n):
    """Set partitions of the m x n grid (row-major cell order) with connected blocks.

    Works on (row, col) cells directly, independent of the package's square
    indexing, edge lists and union-find.
    """
    cells = [(r, j) for r in range(m) for j in range(n)]
    nb = grid_neighbours(m, n)
    for rgs in set_partitions(len(cells)):
        blocks = {}
        for cell, label in zip(cells, rgs):
            blocks.setdefault(label, set()).add(cell)
        ok = True
        for block in blocks.values():
            start = next(iter(block))
            seen, stack = {start}, [start]
            while stack:
                c = stack.pop()
                for d in nb[c]:
                    if d in block and d not in seen:
                        seen.add(d)
                        stack.append(d)
            if seen != block:
                ok = False
                break
        if ok:
            yield {cell: label for cell, label in zip(cells, rgs)}


def connected_partition_counts(m, n):
    out = {}
    for part in connected_partitions(m, n):
        k = len(set(part.values()))
        out[k] = out.get(k, 0) + 1
    return out
