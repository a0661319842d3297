"""Checking and minimizing information dominating sets.

A vertex subset D is an *information dominating set* (IDS) when no two
distinct valid profiles agree on all of D; knowing the opinions inside D
then pins down the whole graph's opinions. ``check_ids`` decides the
property for one subset, ``solve_mids_exact`` finds a minimum subset by
exhaustive search, and ``vc_upper_bound`` produces a cheap upper bound
through the odd-degree transformation (in a graph whose degrees are all
odd, any vertex cover is an IDS, though generally not a minimum one).
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from ._ranking import chunk_ranges, iter_combinations_from
from .errors import ContractError, InternalConsistencyError
from .graph import Graph, VertexSet
from .profiles import DEFAULT_VERTEX_LIMIT, Profile, ValidProfileSet, enumerate_valid_profiles
from .transform import collapse_ids, odd_transform

__all__ = [
    "CheckResult",
    "MidsResult",
    "UpperBoundResult",
    "check_ids",
    "solve_mids_exact",
    "vc_sufficient_check",
    "vc_upper_bound",
]

# Below this many candidates a size class is scanned in-process even when
# more workers were requested; farming out tiny scans costs more than it saves.
_PARALLEL_MIN_COMBS = 8


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one IDS check.

    ``witness`` is None for a positive answer; otherwise it is the
    lexicographically first pair of valid profiles (ordered as unsigned
    integers) that agree on the checked subset, proving it insufficient.
    """

    is_ids: bool
    witness: tuple[Profile, Profile] | None
    profiles_examined: int

    def as_json_dict(self) -> dict:
        return {
            "is_ids": self.is_ids,
            "witness": None if self.witness is None else [p.to_text() for p in self.witness],
            "profiles_examined": self.profiles_examined,
        }


@dataclass(frozen=True)
class MidsResult:
    """A minimum-IDS answer (or a bounded-search verdict).

    When a size bound was given and nothing within it passes, ``vertices``
    falls back to the full vertex set (always an IDS), ``within_bound`` is
    False and ``optimal`` is False; ``size`` then equals the graph order.
    """

    vertices: VertexSet
    optimal: bool
    subsets_tested: int
    within_bound: bool = True

    @property
    def size(self) -> int:
        return len(self.vertices)

    def as_json_dict(self, graph: Graph) -> dict:
        return {
            "vertices": list(self.vertices.labels(graph)),
            "size": self.size,
            "optimal": self.optimal,
            "subsets_tested": self.subsets_tested,
            "within_bound": self.within_bound,
        }


@dataclass(frozen=True)
class UpperBoundResult:
    """An IDS obtained heuristically; no optimality or ratio is claimed."""

    vertices: VertexSet
    verified: bool

    @property
    def size(self) -> int:
        return len(self.vertices)

    def as_json_dict(self, graph: Graph) -> dict:
        return {
            "vertices": list(self.vertices.labels(graph)),
            "size": self.size,
            "verified": self.verified,
        }


def _usable_profile_set(
    graph: Graph, profile_set: ValidProfileSet | None, limit: int
) -> ValidProfileSet:
    if profile_set is None:
        return enumerate_valid_profiles(graph, limit=limit)
    if profile_set.graph_size != graph.vertex_count:
        raise ContractError(
            f"profile set sized for {profile_set.graph_size} vertices, "
            f"graph has {graph.vertex_count}"
        )
    if not profile_set.complete:
        raise ContractError("profile set is truncated; checking needs the complete set")
    return profile_set


def _require_same_graph(graph: Graph, vertices: VertexSet) -> None:
    if vertices.graph_size != graph.vertex_count:
        raise ContractError(
            f"vertex set sized for {vertices.graph_size} vertices, "
            f"graph has {graph.vertex_count}"
        )


def _projection_injective(masks: Sequence[int], mask: int) -> bool:
    seen: set[int] = set()
    for m in masks:
        key = m & mask
        if key in seen:
            return False
        seen.add(key)
    return True


def check_ids(
    graph: Graph,
    vertices: VertexSet,
    profile_set: ValidProfileSet | None = None,
    limit: int = DEFAULT_VERTEX_LIMIT,
) -> CheckResult:
    """Decide whether ``vertices`` is an information dominating set.

    Projects every valid profile onto the subset and looks for a
    collision. ``profile_set`` may carry a precomputed complete
    enumeration to amortize repeated checks on one graph.
    """
    _require_same_graph(graph, vertices)
    u = _usable_profile_set(graph, profile_set, limit)
    mask = vertices.mask
    groups: dict[int, list[int]] = {}
    for m in u.masks:
        groups.setdefault(m & mask, []).append(m)
    best: tuple[int, int] | None = None
    for grp in groups.values():
        if len(grp) >= 2:
            pair = (grp[0], grp[1])
            if best is None or pair < best:
                best = pair
    if best is None:
        return CheckResult(True, None, len(u.masks))
    n = graph.vertex_count
    return CheckResult(False, (Profile(best[0], n), Profile(best[1], n)), len(u.masks))


def _bits_of(ids: Iterable[int]) -> int:
    m = 0
    for v in ids:
        m |= 1 << v
    return m


def _scan_chunk(payload) -> int | None:
    """Worker: scan one rank range of a size class, return first passing rank."""
    masks, base_mask, pool, k, start, count = payload
    for offset, comb_ids in enumerate(iter_combinations_from(pool, k, start, count)):
        if _projection_injective(masks, base_mask | _bits_of(comb_ids)):
            return start + offset
    return None


def solve_mids_exact(
    graph: Graph,
    max_size: int | None = None,
    profile_set: ValidProfileSet | None = None,
    jobs: int = 1,
    limit: int = DEFAULT_VERTEX_LIMIT,
) -> MidsResult:
    """Find a minimum information dominating set by exhaustive search.

    Subsets are tested in ascending size and, within a size, in
    lexicographic order, so the answer is canonical. Vertices without
    neighbors are placed in every candidate up front: both opinions are
    always available to such a vertex, so no IDS can omit it. The valid
    set is enumerated once and shared by all candidate tests.

    With ``max_size`` set, the search stops after that size and reports
    ``within_bound=False`` when nothing passed.
    """
    if jobs < 1:
        raise ContractError("jobs must be at least 1")
    if max_size is not None and max_size < 0:
        raise ContractError("max_size must be non-negative")
    u = _usable_profile_set(graph, profile_set, limit)
    n = graph.vertex_count
    masks = u.masks
    forced = [v for v in range(n) if len(graph.neighbors[v]) == 0]
    rest = [v for v in range(n) if len(graph.neighbors[v]) > 0]
    forced_mask = _bits_of(forced)
    tested = 0
    executor: ProcessPoolExecutor | None = None
    try:
        for extra in range(len(rest) + 1):
            if max_size is not None and len(forced) + extra > max_size:
                break
            ncombs = math.comb(len(rest), extra)
            winner_rank: int | None = None
            if jobs > 1 and ncombs >= jobs * _PARALLEL_MIN_COMBS:
                if executor is None:
                    executor = ProcessPoolExecutor(max_workers=jobs)
                payloads = [
                    (masks, forced_mask, rest, extra, start, count)
                    for start, count in chunk_ranges(ncombs, jobs)
                ]
                hits = [r for r in executor.map(_scan_chunk, payloads) if r is not None]
                if hits:
                    winner_rank = min(hits)
            else:
                for rank, comb_ids in enumerate(combinations(rest, extra)):
                    if _projection_injective(masks, forced_mask | _bits_of(comb_ids)):
                        winner_rank = rank
                        break
            if winner_rank is None:
                tested += ncombs
                continue
            tested += winner_rank + 1
            comb_ids = next(iter_combinations_from(rest, extra, winner_rank, 1))
            chosen = VertexSet.of(list(forced) + list(comb_ids), n)
            return MidsResult(chosen, optimal=True, subsets_tested=tested)
    finally:
        if executor is not None:
            executor.shutdown()
    # Bounded search exhausted: fall back to the full vertex set, which
    # always distinguishes (the valid set holds no duplicates).
    return MidsResult(
        VertexSet.of(range(n), n), optimal=False, subsets_tested=tested, within_bound=False
    )


def vc_sufficient_check(graph: Graph, vertices: VertexSet) -> bool:
    """In an all-odd-degree graph, is ``vertices`` a vertex cover?

    A cover in such a graph is always an IDS, so True here is a sufficient
    certificate. False only means the cover test failed; the subset may
    still be an IDS, since the implication does not reverse.
    """
    for v in range(graph.vertex_count):
        if len(graph.neighbors[v]) % 2 == 0:
            raise ContractError(
                f"vertex {graph.labels[v]!r} has even degree; "
                "the cover criterion applies to all-odd-degree graphs only"
            )
    return graph.is_vertex_cover(vertices)


def _matching_cover(graph: Graph) -> list[int]:
    """Vertex cover from a greedy maximal matching (classic 2-approximation),
    with redundant vertices pruned in ascending id order afterwards."""
    matched = bytearray(graph.vertex_count)
    cover: set[int] = set()
    for i, j in graph.edges():
        if not matched[i] and not matched[j]:
            matched[i] = matched[j] = 1
            cover.add(i)
            cover.add(j)
    for v in sorted(cover):
        if all(u in cover for u in graph.neighbors[v]):
            cover.remove(v)
    return sorted(cover)


def vc_upper_bound(graph: Graph, limit: int = DEFAULT_VERTEX_LIMIT) -> UpperBoundResult:
    """Heuristic IDS via a vertex cover of the odd-degree transform.

    Covers the transformed graph with a matching-based approximation,
    maps the cover back, and re-checks the result whenever the graph is
    small enough to enumerate; otherwise the candidate is returned
    unverified. Upper bound only; no approximation ratio is claimed for
    minimum IDS sizes.
    """
    transformed, tmap = odd_transform(graph)
    cover = _matching_cover(transformed)
    collapsed = collapse_ids(tmap, VertexSet.of(cover, transformed.vertex_count))
    if graph.vertex_count <= limit:
        result = check_ids(graph, collapsed, limit=limit)
        if not result.is_ids:
            raise InternalConsistencyError(
                "a collapsed vertex cover of the odd-degree transform failed the IDS check"
            )
        return UpperBoundResult(collapsed, verified=True)
    return UpperBoundResult(collapsed, verified=False)
