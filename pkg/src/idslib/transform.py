"""The odd-degree transformation and its profile/vertex mappings.

``odd_transform`` attaches one fresh degree-1 auxiliary vertex to every
even-degree vertex of the input, producing a graph in which every vertex
has odd degree. An auxiliary's only neighbor is its host, so in any valid
profile of the transformed graph the auxiliary must copy its host's
opinion; valid profiles of the two graphs therefore correspond one to one,
which is what makes the transformation useful for solving and checking.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import ContractError, InternalConsistencyError
from .graph import Graph, VertexSet
from .profiles import Profile

__all__ = [
    "TransformMap",
    "odd_transform",
    "lift_profile",
    "project_profile",
    "collapse_ids",
]


@dataclass(frozen=True)
class TransformMap:
    """Host/auxiliary correspondence of one odd-degree transformation.

    Auxiliary ids are appended after the original ids in host order:
    the auxiliary of ``even_hosts[j]`` is ``original_count + j``. The map
    is therefore fully reconstructible from the two fields.
    """

    original_count: int
    even_hosts: tuple[int, ...]
    _aux_index: dict[int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        prev = -1
        for v in self.even_hosts:
            if not 0 <= v < self.original_count:
                raise ContractError(f"host id {v} out of range")
            if v <= prev:
                raise ContractError("host ids must be strictly ascending")
            prev = v
        object.__setattr__(self, "_aux_index", {v: j for j, v in enumerate(self.even_hosts)})

    @property
    def total_count(self) -> int:
        return self.original_count + len(self.even_hosts)

    @property
    def aux_map(self) -> dict[int, int]:
        """host id -> auxiliary id"""
        return {v: self.original_count + j for j, v in enumerate(self.even_hosts)}

    @property
    def host_map(self) -> dict[int, int]:
        """auxiliary id -> host id"""
        return {self.original_count + j: v for j, v in enumerate(self.even_hosts)}

    def is_aux(self, v: int) -> bool:
        if not 0 <= v < self.total_count:
            raise ContractError(f"vertex id {v} out of range")
        return v >= self.original_count

    def aux_of(self, host: int) -> int:
        try:
            return self.original_count + self._aux_index[host]
        except KeyError:
            raise ContractError(f"vertex {host} has no auxiliary (its degree was odd)") from None

    def host_of(self, aux: int) -> int:
        if not self.is_aux(aux):
            raise ContractError(f"vertex {aux} is not an auxiliary")
        return self.even_hosts[aux - self.original_count]

    def to_json(self) -> str:
        return json.dumps({"aux_of": {str(h): a for h, a in self.aux_map.items()}}, sort_keys=True)


def odd_transform(graph: Graph) -> tuple[Graph, TransformMap]:
    """Attach an auxiliary leaf to every even-degree vertex.

    Always succeeds. Auxiliary labels are ``<host label>+aux`` (suffixed
    with '+' further if that label is somehow already taken). Graphs that
    already have all degrees odd come back unchanged apart from identity,
    with an empty map.
    """
    n = graph.vertex_count
    evens = [v for v in range(n) if len(graph.neighbors[v]) % 2 == 0]
    taken = set(graph.labels)
    labels = list(graph.labels)
    edges = graph.edges()
    for j, v in enumerate(evens):
        label = graph.labels[v] + "+aux"
        while label in taken:
            label += "+"
        taken.add(label)
        labels.append(label)
        edges.append((v, n + j))
    transformed = Graph.from_edges(labels, edges)
    return transformed, TransformMap(n, tuple(evens))


def lift_profile(tmap: TransformMap, profile: Profile) -> Profile:
    """Extend a profile of the original graph by copying each host's opinion
    onto its auxiliary. Lifting a valid profile yields a valid one."""
    if profile.size != tmap.original_count:
        raise ContractError(
            f"profile sized for {profile.size} vertices, transformation expects {tmap.original_count}"
        )
    bits = profile.bits
    for j, host in enumerate(tmap.even_hosts):
        if bits >> host & 1:
            bits |= 1 << (tmap.original_count + j)
    return Profile(bits, tmap.total_count)


def project_profile(tmap: TransformMap, profile: Profile) -> Profile:
    """Restrict a valid profile of the transformed graph to the originals.

    In a valid profile every auxiliary copies its host, so projection
    loses nothing. Finding an auxiliary that disagrees with its host
    therefore means the caller's profile was not a valid one, or the
    library itself produced a broken lift; either way it is reported as an
    internal consistency failure rather than silently ignored.
    """
    if profile.size != tmap.total_count:
        raise ContractError(
            f"profile sized for {profile.size} vertices, transformation expects {tmap.total_count}"
        )
    bits = profile.bits
    for j, host in enumerate(tmap.even_hosts):
        if (bits >> host & 1) != (bits >> (tmap.original_count + j) & 1):
            raise InternalConsistencyError(
                f"auxiliary of vertex {host} disagrees with its host; "
                "the profile is not a valid profile of the transformed graph"
            )
    return Profile(bits & ((1 << tmap.original_count) - 1), tmap.original_count)


def collapse_ids(tmap: TransformMap, vertices: VertexSet) -> VertexSet:
    """Map a vertex set of the transformed graph back to the original:
    auxiliaries are replaced by their hosts, originals kept, duplicates
    merged. The result is not automatically an information dominating set
    of the original; callers re-check it where that matters."""
    if vertices.graph_size != tmap.total_count:
        raise ContractError(
            f"vertex set sized for {vertices.graph_size}, transformation expects {tmap.total_count}"
        )
    mapped = [tmap.host_of(v) if v >= tmap.original_count else v for v in vertices]
    return VertexSet.of(mapped, tmap.original_count)
