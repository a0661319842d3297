"""Hardness-reduction instance builders and their desk-scale oracles.

The chain goes: an equal-sum partition instance (a set of positive
integers) becomes a clique-pair gadget graph whose *strong community
bisections* correspond to equal-sum partitions; a doubling construction
then turns the bisection question into an IDS size question. The builders
here emit those graphs deterministically; ``solve_spp`` and ``check_scb``
are small exact solvers used to exercise the equivalences on instances a
desk machine can exhaust.

A strong community bisection splits the vertices into two equal halves
such that every vertex has strictly more neighbors on its own side than
on the other side.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from ._ranking import chunk_ranges, iter_combinations_from
from .errors import ContractError, LimitError
from .graph import Graph, VertexSet

__all__ = [
    "DEFAULT_BISECTION_CAP",
    "IntegerSet",
    "GadgetMeta",
    "Bisection",
    "build_scb_gadget",
    "build_idsc_gadget",
    "build_mids_gadget",
    "solve_spp",
    "check_scb",
]

DEFAULT_BISECTION_CAP = 10_000_000


@dataclass(frozen=True)
class IntegerSet:
    """A multiset of positive integers, the partition-problem input."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        for x in self.values:
            if not isinstance(x, int) or x < 1:
                raise ContractError(f"integer set values must be positive integers, got {x!r}")

    @property
    def k(self) -> int:
        return len(self.values)

    @property
    def total(self) -> int:
        return sum(self.values)


def _coerce(values: IntegerSet | Sequence[int]) -> IntegerSet:
    if isinstance(values, IntegerSet):
        return values
    return IntegerSet(tuple(values))


@dataclass(frozen=True)
class GadgetMeta:
    """Construction record emitted next to a gadget graph.

    ``clique_membership`` maps a vertex id to ``(component, clique,
    position)`` with component 1-based and clique one of "C1"/"C2";
    ``copy_membership`` maps ids of doubled vertices to "G1"/"G2".
    Fields not applicable to a kind are empty/None.
    """

    kind: str
    clique_membership: dict[int, tuple[int, str, int]]
    copy_membership: dict[int, str]
    connector_ids: tuple[int, int] | None
    threshold: int | None

    def to_json(self) -> str:
        doc = {
            "kind": self.kind,
            "clique_membership": {
                str(v): {"component": c, "clique": q, "position": p}
                for v, (c, q, p) in self.clique_membership.items()
            },
            "copy_membership": {str(v): side for v, side in self.copy_membership.items()},
            "connector_ids": list(self.connector_ids) if self.connector_ids else None,
            "threshold": self.threshold,
        }
        return json.dumps(doc, sort_keys=True)


@dataclass(frozen=True)
class Bisection:
    """An equal split of the vertices into two sides."""

    side_a: VertexSet
    side_b: VertexSet

    def __post_init__(self) -> None:
        if self.side_a.graph_size != self.side_b.graph_size:
            raise ContractError("bisection sides belong to different graphs")
        if len(self.side_a) != len(self.side_b):
            raise ContractError("bisection sides must have equal size")
        if self.side_a.mask & self.side_b.mask:
            raise ContractError("bisection sides overlap")
        if len(self.side_a) + len(self.side_b) != self.side_a.graph_size:
            raise ContractError("bisection sides must cover every vertex")


def build_scb_gadget(values: IntegerSet | Sequence[int]) -> tuple[Graph, GadgetMeta]:
    """One clique-pair component per integer.

    For the integer x the component has two cliques of 2x vertices each,
    and every clique vertex is additionally joined to all positions of the
    opposite clique except its own position. Each vertex then has 4x-2
    neighbors: 2x-1 clique mates and 2x-1 cross partners. Components of
    different integers are disjoint. Labels are ``x<i>.C1.<p>`` style with
    1-based component indices and positions.
    """
    s = _coerce(values)
    labels: list[str] = []
    edges: list[tuple[int, int]] = []
    membership: dict[int, tuple[int, str, int]] = {}
    base = 0
    for comp, x in enumerate(s.values, start=1):
        width = 2 * x
        c1 = list(range(base, base + width))
        c2 = list(range(base + width, base + 2 * width))
        for p, vtx in enumerate(c1, start=1):
            labels.append(f"x{comp}.C1.{p}")
            membership[vtx] = (comp, "C1", p)
        for p, vtx in enumerate(c2, start=1):
            labels.append(f"x{comp}.C2.{p}")
            membership[vtx] = (comp, "C2", p)
        edges.extend(combinations(c1, 2))
        edges.extend(combinations(c2, 2))
        for p in range(width):
            for q in range(width):
                if p != q:
                    edges.append((c1[p], c2[q]))
        base += 2 * width
    graph = Graph.from_edges(labels, edges)
    meta = GadgetMeta(
        kind="scb",
        clique_membership=membership,
        copy_membership={},
        connector_ids=None,
        threshold=None,
    )
    return graph, meta


def build_idsc_gadget(graph: Graph) -> tuple[Graph, VertexSet, GadgetMeta]:
    """Doubling construction tying the IDS question to bisections.

    Requires every input degree even. Emits two copies of the input plus
    two connectors: connector v1 adjacent to all of copy G1, connector v2
    adjacent to all of copy G2, and to each other. The returned candidate
    subset is everything except the connectors; it fails the IDS check
    exactly when the input admits a strong community bisection.
    """
    n = graph.vertex_count
    for vtx in range(n):
        if len(graph.neighbors[vtx]) % 2 != 0:
            raise ContractError(
                f"vertex {graph.labels[vtx]!r} has odd degree; "
                "the doubling gadget needs an all-even-degree input"
            )
    labels = [f"G1.{s}" for s in graph.labels]
    labels += [f"G2.{s}" for s in graph.labels]
    labels += ["conn.v1", "conn.v2"]
    v1, v2 = 2 * n, 2 * n + 1
    edges: list[tuple[int, int]] = []
    for i, j in graph.edges():
        edges.append((i, j))
        edges.append((n + i, n + j))
    edges.extend((i, v1) for i in range(n))
    edges.extend((n + i, v2) for i in range(n))
    edges.append((v1, v2))
    doubled = Graph.from_edges(labels, edges)
    candidate = VertexSet.of(range(2 * n), 2 * n + 2)
    meta = GadgetMeta(
        kind="idsc",
        clique_membership={},
        copy_membership={**{i: "G1" for i in range(n)}, **{n + i: "G2" for i in range(n)}},
        connector_ids=(v1, v2),
        threshold=None,
    )
    return doubled, candidate, meta


def build_mids_gadget(values: IntegerSet | Sequence[int]) -> tuple[Graph, int, GadgetMeta]:
    """Composition of the two constructions, plus the size threshold 2k.

    The integer set has an equal-sum partition exactly when the emitted
    graph has no IDS of size at most the threshold.
    """
    s = _coerce(values)
    inner, inner_meta = build_scb_gadget(s)
    doubled, _, idsc_meta = build_idsc_gadget(inner)
    n = inner.vertex_count
    membership = {}
    for vtx, slot in inner_meta.clique_membership.items():
        membership[vtx] = slot
        membership[n + vtx] = slot
    meta = GadgetMeta(
        kind="mids",
        clique_membership=membership,
        copy_membership=idsc_meta.copy_membership,
        connector_ids=idsc_meta.connector_ids,
        threshold=2 * s.k,
    )
    return doubled, 2 * s.k, meta


def solve_spp(values: IntegerSet | Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Split the integers into two equal-sum halves, or report impossibility.

    Pseudo-polynomial subset-sum dynamic program over reachable sums
    (bitset per prefix), with a deterministic walk-back that prefers
    leaving an item out when both choices work.
    """
    s = _coerce(values)
    total = s.total
    if total % 2 != 0:
        return None
    target = total // 2
    reachable = [1]  # prefix i reaches sum t iff bit t of reachable[i+1]
    acc = 1
    for x in s.values:
        acc |= acc << x
        reachable.append(acc)
    if not reachable[-1] >> target & 1:
        return None
    take = []
    t = target
    for i in range(s.k - 1, -1, -1):
        if reachable[i] >> t & 1:
            continue
        take.append(i)
        t -= s.values[i]
    taken = set(take)
    side_a = tuple(s.values[i] for i in range(s.k) if i in taken)
    side_b = tuple(s.values[i] for i in range(s.k) if i not in taken)
    return side_a, side_b


def _bisection_valid(adj: Sequence[int], degrees: Sequence[int], n: int, a_mask: int) -> bool:
    b_mask = ((1 << n) - 1) ^ a_mask
    for v in range(n):
        side = a_mask if a_mask >> v & 1 else b_mask
        if 2 * (adj[v] & side).bit_count() <= degrees[v]:
            return False
    return True


def _scan_bisection_chunk(payload) -> int | None:
    adj, degrees, n, half, start, count = payload
    pool = list(range(1, n))
    for offset, comb_ids in enumerate(iter_combinations_from(pool, half - 1, start, count)):
        a_mask = 1
        for v in comb_ids:
            a_mask |= 1 << v
        if _bisection_valid(adj, degrees, n, a_mask):
            return start + offset
    return None


def check_scb(
    graph: Graph,
    cap: int = DEFAULT_BISECTION_CAP,
    jobs: int = 1,
) -> Bisection | None:
    """Exhaustively look for a strong community bisection.

    Scans balanced splits with vertex 0 pinned to side A (each split is
    otherwise counted twice) in lexicographic order, so the witness
    returned is canonical. Refuses graphs whose C(n, n/2) split count
    exceeds ``cap``, and graphs with fewer than 4 or an odd number of
    vertices, for which the notion is degenerate or empty.
    """
    if jobs < 1:
        raise ContractError("jobs must be at least 1")
    n = graph.vertex_count
    if n % 2 != 0:
        raise ContractError("a bisection needs an even number of vertices")
    if n < 4:
        raise ContractError("bisection search needs at least 4 vertices")
    total_splits = math.comb(n, n // 2)
    if total_splits > cap:
        raise LimitError(f"{total_splits} balanced splits exceed the cap of {cap}")
    half = n // 2
    adj = graph.adjacency_masks
    degrees = [len(nb) for nb in graph.neighbors]
    scan_total = math.comb(n - 1, half - 1)
    winner_rank: int | None = None
    if jobs > 1 and scan_total >= jobs * 8:
        payloads = [
            (adj, degrees, n, half, start, count)
            for start, count in chunk_ranges(scan_total, jobs)
        ]
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            hits = [r for r in executor.map(_scan_bisection_chunk, payloads) if r is not None]
        if hits:
            winner_rank = min(hits)
    else:
        for rank, comb_ids in enumerate(combinations(range(1, n), half - 1)):
            a_mask = 1
            for v in comb_ids:
                a_mask |= 1 << v
            if _bisection_valid(adj, degrees, n, a_mask):
                winner_rank = rank
                break
    if winner_rank is None:
        return None
    comb_ids = next(iter_combinations_from(list(range(1, n)), half - 1, winner_rank, 1))
    side_a = VertexSet.of((0, *comb_ids), n)
    side_b = VertexSet.of(set(range(n)) - set(side_a), n)
    return Bisection(side_a, side_b)
