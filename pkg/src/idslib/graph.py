"""Simple undirected graphs with dense integer ids and string labels.

Vertices are the integers ``0..n-1``; ``labels[i]`` is the external name of
vertex ``i``. Labels are assigned ids in first-appearance order when parsing,
so a parsed graph round-trips exactly through :func:`to_edge_list`. Graphs
are immutable once built and safe to share across threads or workers.

The edge-list text format, one record per line:

* ``a b``      an undirected edge between the vertices labelled a and b
* ``v a``      declares the vertex labelled a (used for isolated vertices)
* ``# ...``    comment, ignored
* blank lines are ignored

Duplicate edges, self-loops, and lines that are not one of the above are
rejected with a :class:`~idslib.errors.FormatError` naming the line number.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import ContractError, FormatError

__all__ = [
    "Graph",
    "VertexSet",
    "parse_graph",
    "to_edge_list",
    "graph_to_json",
    "graph_from_json",
    "to_dot",
]


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph.

    ``neighbors[i]`` is the strictly ascending tuple of ids adjacent to
    ``i``. ``adjacency_masks[i]`` is the same information as a bitmask
    (bit ``j`` set iff ``j`` is a neighbor of ``i``); it is derived in
    ``__post_init__`` and shared by the profile and solver machinery.
    """

    labels: tuple[str, ...]
    neighbors: tuple[tuple[int, ...], ...]
    adjacency_masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        n = len(self.labels)
        if len(set(self.labels)) != n:
            raise FormatError("vertex labels must be unique")
        if len(self.neighbors) != n:
            raise FormatError("adjacency list length does not match label count")
        masks = []
        for v, nbrs in enumerate(self.neighbors):
            mask = 0
            prev = -1
            for u in nbrs:
                if not 0 <= u < n:
                    raise FormatError(f"neighbor id {u} out of range for {n} vertices")
                if u == v:
                    raise FormatError(f"self-loop at vertex {self.labels[v]!r}")
                if u <= prev:
                    raise FormatError(f"neighbors of {self.labels[v]!r} not strictly ascending")
                prev = u
                mask |= 1 << u
            masks.append(mask)
        for v in range(n):
            for u in self.neighbors[v]:
                if not masks[u] >> v & 1:
                    raise FormatError(
                        f"edge {self.labels[v]}-{self.labels[u]} is missing its reverse direction"
                    )
        object.__setattr__(self, "adjacency_masks", tuple(masks))

    @classmethod
    def from_edges(cls, labels: Sequence[str], edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph from labels and undirected ``(i, j)`` id pairs."""
        n = len(labels)
        seen: set[tuple[int, int]] = set()
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for i, j in edges:
            if not (0 <= i < n and 0 <= j < n):
                raise FormatError(f"edge ({i}, {j}) out of range for {n} vertices")
            if i == j:
                raise FormatError(f"self-loop at vertex {labels[i]!r}")
            key = (i, j) if i < j else (j, i)
            if key in seen:
                raise FormatError(f"duplicate edge {labels[key[0]]} {labels[key[1]]}")
            seen.add(key)
            nbrs[i].add(j)
            nbrs[j].add(i)
        return cls(tuple(labels), tuple(tuple(sorted(s)) for s in nbrs))

    @property
    def vertex_count(self) -> int:
        return len(self.labels)

    @property
    def edge_count(self) -> int:
        return sum(len(nb) for nb in self.neighbors) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(i, j)`` with ``i < j``, in ascending order."""
        return [(i, j) for i in range(self.vertex_count) for j in self.neighbors[i] if i < j]

    def degree(self, v: int) -> int:
        self._require_vertex(v)
        return len(self.neighbors[v])

    def id_of(self, label: str) -> int:
        """Id of the vertex with the given label."""
        try:
            return self.labels.index(label)
        except ValueError:
            raise ContractError(f"unknown vertex label {label!r}") from None

    def components(self) -> list[VertexSet]:
        """Connected components, ordered by their smallest member."""
        n = self.vertex_count
        seen = bytearray(n)
        out: list[VertexSet] = []
        for start in range(n):
            if seen[start]:
                continue
            seen[start] = 1
            stack = [start]
            comp = []
            while stack:
                v = stack.pop()
                comp.append(v)
                for u in self.neighbors[v]:
                    if not seen[u]:
                        seen[u] = 1
                        stack.append(u)
            out.append(VertexSet.of(comp, n))
        return out

    def is_forest(self) -> bool:
        """True when the graph is acyclic."""
        return self.edge_count == self.vertex_count - len(self.components())

    def is_vertex_cover(self, cover: VertexSet) -> bool:
        """True when every edge has at least one endpoint in ``cover``."""
        if cover.graph_size != self.vertex_count:
            raise ContractError(
                f"vertex set sized for {cover.graph_size} vertices, graph has {self.vertex_count}"
            )
        mask = cover.mask
        return all(mask & (1 << i | 1 << j) for i, j in self.edges())

    def _require_vertex(self, v: int) -> None:
        if not 0 <= v < self.vertex_count:
            raise ContractError(f"vertex id {v} out of range for {self.vertex_count} vertices")


@dataclass(frozen=True)
class VertexSet:
    """A sorted, duplicate-free set of vertex ids tied to a graph size."""

    members: tuple[int, ...]
    graph_size: int

    def __post_init__(self) -> None:
        prev = -1
        for v in self.members:
            if not 0 <= v < self.graph_size:
                raise ContractError(f"vertex id {v} out of range for {self.graph_size} vertices")
            if v <= prev:
                raise ContractError("vertex set members must be strictly ascending")
            prev = v

    @classmethod
    def of(cls, ids: Iterable[int], graph_size: int) -> VertexSet:
        """Normalize an iterable of ids into a sorted duplicate-free set."""
        return cls(tuple(sorted(set(ids))), graph_size)

    @classmethod
    def from_labels(cls, graph: Graph, labels: Iterable[str]) -> VertexSet:
        return cls.of((graph.id_of(s) for s in labels), graph.vertex_count)

    @property
    def mask(self) -> int:
        """The members as a bitmask (bit ``v`` set iff ``v`` is a member)."""
        m = 0
        for v in self.members:
            m |= 1 << v
        return m

    def labels(self, graph: Graph) -> tuple[str, ...]:
        if graph.vertex_count != self.graph_size:
            raise ContractError("vertex set does not belong to this graph")
        return tuple(graph.labels[v] for v in self.members)

    def __contains__(self, v: object) -> bool:
        return v in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format described in the module docstring."""
    labels: list[str] = []
    index: dict[str, int] = {}
    edges: set[tuple[int, int]] = set()

    def vid(label: str) -> int:
        if label not in index:
            index[label] = len(labels)
            labels.append(label)
        return index[label]

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "v":
            if len(parts) != 2:
                raise FormatError("vertex line must be 'v <label>'", line=lineno)
            vid(parts[1])
            continue
        if len(parts) != 2:
            raise FormatError(
                f"expected two whitespace-separated labels, got {len(parts)} token(s)",
                line=lineno,
            )
        a, b = vid(parts[0]), vid(parts[1])
        if a == b:
            raise FormatError(f"self-loop at vertex {parts[0]!r}", line=lineno)
        key = (a, b) if a < b else (b, a)
        if key in edges:
            raise FormatError(f"duplicate edge {parts[0]} {parts[1]}", line=lineno)
        edges.add(key)
    return Graph.from_edges(labels, sorted(edges))


def _require_writable_label(label: str) -> None:
    if not label or label != "".join(label.split()) or label == "v" or label.startswith("#"):
        raise FormatError(f"label {label!r} cannot be written to the edge-list format")


def to_edge_list(graph: Graph) -> str:
    """Serialize to the edge-list format.

    Every vertex is declared with a ``v`` line first (in id order) so that
    re-parsing assigns identical ids regardless of edge order.
    """
    for label in graph.labels:
        _require_writable_label(label)
    lines = [f"v {label}" for label in graph.labels]
    lines.extend(f"{graph.labels[i]} {graph.labels[j]}" for i, j in graph.edges())
    return "\n".join(lines) + ("\n" if lines else "")


def graph_to_json(graph: Graph) -> str:
    """JSON form: ``{"vertices": [labels...], "edges": [[i, j], ...]}``."""
    doc = {"vertices": list(graph.labels), "edges": [list(e) for e in graph.edges()]}
    return json.dumps(doc, sort_keys=True)


def graph_from_json(text: str) -> Graph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or "vertices" not in doc or "edges" not in doc:
        raise FormatError("JSON graph needs 'vertices' and 'edges' keys")
    vertices = doc["vertices"]
    if not isinstance(vertices, list) or not all(isinstance(s, str) for s in vertices):
        raise FormatError("'vertices' must be a list of labels")
    edges = []
    for item in doc["edges"]:
        if not (isinstance(item, list) and len(item) == 2 and all(isinstance(x, int) for x in item)):
            raise FormatError(f"bad edge entry {item!r}")
        edges.append((item[0], item[1]))
    return Graph.from_edges(tuple(vertices), edges)


def to_dot(graph: Graph, name: str = "G") -> str:
    """Best-effort Graphviz export for eyeballing small instances."""
    lines = [f"graph {name} {{"]
    lines.extend(f'  "{label}";' for label in graph.labels)
    lines.extend(f'  "{graph.labels[i]}" -- "{graph.labels[j]}";' for i, j in graph.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
