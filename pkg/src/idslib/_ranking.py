"""Lexicographic ranking for k-combinations.

Lets subset scans resume mid-stream, which is how work is split across
worker processes without changing the order anything is reported in.
"""

from __future__ import annotations

from math import comb
from typing import Iterator, Sequence


def chunk_ranges(total: int, parts: int) -> list[tuple[int, int]]:
    """Split ``range(total)`` into up to ``parts`` contiguous (start, count) runs."""
    size, extra = divmod(total, parts)
    ranges = []
    start = 0
    for i in range(parts):
        count = size + (1 if i < extra else 0)
        if count:
            ranges.append((start, count))
        start += count
    return ranges


def combination_rank(n: int, indices: Sequence[int]) -> int:
    """Rank of a strictly ascending index tuple among C(n, k), lexicographic."""
    k = len(indices)
    rank = 0
    prev = -1
    for slot, i in enumerate(indices):
        for x in range(prev + 1, i):
            rank += comb(n - x - 1, k - slot - 1)
        prev = i
    return rank


def combination_at_rank(n: int, k: int, rank: int) -> list[int]:
    """Inverse of :func:`combination_rank`."""
    if not 0 <= rank < comb(n, k):
        raise ValueError(f"rank {rank} out of range for C({n}, {k})")
    out: list[int] = []
    x = 0
    r = rank
    for slot in range(k):
        while True:
            c = comb(n - x - 1, k - slot - 1)
            if r < c:
                out.append(x)
                x += 1
                break
            r -= c
            x += 1
    return out


def iter_combinations_from(
    pool: Sequence[int], k: int, start_rank: int, count: int
) -> Iterator[tuple[int, ...]]:
    """Yield up to ``count`` k-combinations of ``pool`` starting at
    ``start_rank`` in lexicographic order."""
    if count <= 0:
        return
    n = len(pool)
    if k == 0:
        if start_rank == 0:
            yield ()
        return
    idx = combination_at_rank(n, k, start_rank)
    produced = 0
    while produced < count:
        yield tuple(pool[i] for i in idx)
        produced += 1
        j = k - 1
        while j >= 0 and idx[j] == n - k + j:
            j -= 1
        if j < 0:
            return
        idx[j] += 1
        for t in range(j + 1, k):
            idx[t] = idx[t - 1] + 1
