"""Linear-time minimum IDS and IDS checking on forests.

On a tree whose degrees are all odd, a minimum vertex cover that avoids
leaves has exactly the size of a minimum IDS, and such a cover is found by
one greedy leaves-upward pass. Combining that with the odd-degree
transformation solves every forest without enumerating profiles: the
auxiliaries attached by the transformation are leaves, so the cover never
contains one and maps straight back to the original vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContractError
from .graph import Graph, VertexSet
from .solver import MidsResult
from .transform import collapse_ids, odd_transform

__all__ = [
    "TreePlan",
    "plan_forest",
    "nonleaf_mvc_tree",
    "solve_mids_tree",
    "check_ids_tree",
]


@dataclass(frozen=True)
class TreePlan:
    """Rooting and traversal order for one forest.

    ``order`` lists every vertex with children before parents (the
    leaves-upward order the greedy pass consumes); ``parents[v]`` is -1
    for roots. Roots are the smallest-id non-leaf of each component, or
    the smallest id when the component has no vertex of degree 2 or more.
    """

    roots: tuple[int, ...]
    order: tuple[int, ...]
    parents: tuple[int, ...]
    leaf_flags: tuple[bool, ...]


def plan_forest(graph: Graph) -> TreePlan:
    """Root every component and fix the bottom-up processing order."""
    if not graph.is_forest():
        raise ContractError("graph contains a cycle; tree algorithms need a forest")
    n = graph.vertex_count
    parents = [-1] * n
    roots = []
    order: list[int] = []
    for comp in graph.components():
        root = min(
            (v for v in comp if len(graph.neighbors[v]) >= 2),
            default=comp.members[0],
        )
        roots.append(root)
        preorder = []
        stack = [root]
        seen = {root}
        while stack:
            v = stack.pop()
            preorder.append(v)
            # Reversed push so the smallest-id child is visited first.
            for u in reversed(graph.neighbors[v]):
                if u not in seen:
                    seen.add(u)
                    parents[u] = v
                    stack.append(u)
        order.extend(reversed(preorder))
    return TreePlan(
        roots=tuple(sorted(roots)),
        order=tuple(order),
        parents=tuple(parents),
        leaf_flags=tuple(len(graph.neighbors[v]) == 1 for v in range(n)),
    )


def _greedy_parent_cover(plan: TreePlan) -> list[int]:
    """Leaves-upward pass: whenever the edge to the parent is uncovered,
    take the parent. On trees this yields a minimum vertex cover."""
    chosen = bytearray(len(plan.parents))
    for v in plan.order:
        p = plan.parents[v]
        if p >= 0 and not chosen[v] and not chosen[p]:
            chosen[p] = 1
    return [v for v, c in enumerate(chosen) if c]


def nonleaf_mvc_tree(graph: Graph) -> VertexSet:
    """Minimum vertex cover containing no leaf, for forests whose
    components have three or more vertices.

    Single vertices contribute nothing. A single-edge component is
    rejected: its only covers are leaves.
    """
    plan = plan_forest(graph)
    for comp in graph.components():
        if len(comp) == 2:
            a, b = comp.members
            raise ContractError(
                f"component {{{graph.labels[a]}, {graph.labels[b]}}} is a single edge "
                "and has no non-leaf vertex cover"
            )
    cover = _greedy_parent_cover(plan)
    return VertexSet.of(cover, graph.vertex_count)


def solve_mids_tree(graph: Graph) -> MidsResult:
    """Minimum IDS of a forest in linear time, no profile enumeration.

    Runs the greedy cover on the odd-degree transform and maps it back.
    Components of the transform that are a single edge (an isolated input
    vertex with its auxiliary, or an input component that is itself a
    single edge) take their smaller-id endpoint, which the greedy pass
    produces by rooting at the smallest id.
    """
    if not graph.is_forest():
        raise ContractError("graph contains a cycle; solve_mids_tree needs a forest")
    transformed, tmap = odd_transform(graph)
    plan = plan_forest(transformed)
    cover = _greedy_parent_cover(plan)
    chosen = collapse_ids(tmap, VertexSet.of(cover, transformed.vertex_count))
    return MidsResult(chosen, optimal=True, subsets_tested=0)


def check_ids_tree(graph: Graph, vertices: VertexSet) -> bool:
    """Decide the IDS property on a forest without enumerating profiles.

    In the odd-degree transform, a leaf can always be traded for its only
    neighbor without weakening the subset, and a leaf-free subset is an
    IDS exactly when it covers every edge. So: replace each leaf of the
    transform that appears in ``vertices`` by its unique neighbor, merge
    duplicates, and test for a vertex cover.
    """
    if not graph.is_forest():
        raise ContractError("graph contains a cycle; check_ids_tree needs a forest")
    if vertices.graph_size != graph.vertex_count:
        raise ContractError(
            f"vertex set sized for {vertices.graph_size} vertices, "
            f"graph has {graph.vertex_count}"
        )
    transformed, _ = odd_transform(graph)
    moved = set()
    for v in vertices:
        if len(transformed.neighbors[v]) == 1:
            moved.add(transformed.neighbors[v][0])
        else:
            moved.add(v)
    return transformed.is_vertex_cover(VertexSet.of(moved, transformed.vertex_count))
