"""Binary opinion profiles and enumeration of the valid ones.

A profile assigns opinion 0 or 1 to every vertex. It is *valid* under the
local majority rule when every vertex has at least as many same-minded
neighbors as opposite-minded ones; on a tie either opinion is allowed, and
a vertex without neighbors is unconstrained.

Profiles are stored as unsigned integers with vertex 0 in the least
significant bit. The text form is a string of '0'/'1' characters whose
leftmost character is vertex 0, so ``Profile.from_text("0011")`` has bits
``0b1100``.
"""

from __future__ import annotations

import json
from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterator

from .errors import ContractError, FormatError, LimitError
from .graph import Graph

__all__ = [
    "DEFAULT_VERTEX_LIMIT",
    "Profile",
    "ValidProfileSet",
    "is_valid_profile",
    "enumerate_valid_profiles",
    "complement_profile",
]

# Hard ceiling on enumeration size; 2**26 assignments is already generous
# for a desk-scale tool. Callers may override per call.
DEFAULT_VERTEX_LIMIT = 26


@dataclass(frozen=True)
class Profile:
    """An opinion per vertex, packed into an int (vertex 0 = bit 0)."""

    bits: int
    size: int

    def __post_init__(self) -> None:
        if self.size < 0:
            raise ContractError("profile size must be non-negative")
        if not 0 <= self.bits < 1 << self.size:
            raise ContractError(f"bits 0x{self.bits:x} do not fit {self.size} vertices")

    @classmethod
    def from_text(cls, text: str) -> Profile:
        bits = 0
        for v, ch in enumerate(text):
            if ch == "1":
                bits |= 1 << v
            elif ch != "0":
                raise FormatError(f"profile text may contain only '0' and '1', got {ch!r}")
        return cls(bits, len(text))

    def to_text(self) -> str:
        return "".join("1" if self.bits >> v & 1 else "0" for v in range(self.size))

    def opinion(self, v: int) -> int:
        if not 0 <= v < self.size:
            raise ContractError(f"vertex id {v} out of range for profile of size {self.size}")
        return self.bits >> v & 1

    def complement(self) -> Profile:
        return Profile(self.bits ^ ((1 << self.size) - 1), self.size)


@dataclass(frozen=True)
class ValidProfileSet:
    """All valid profiles of one graph, as ascending bitmasks.

    ``complete`` is False only when enumeration was truncated by a cap, in
    which case ``masks`` holds the numerically smallest profiles found.
    """

    graph_size: int
    masks: tuple[int, ...]
    complete: bool

    def __post_init__(self) -> None:
        prev = -1
        for m in self.masks:
            if not prev < m < 1 << self.graph_size:
                raise ContractError("profile masks must be ascending and in range")
            prev = m

    def __len__(self) -> int:
        return len(self.masks)

    def __iter__(self) -> Iterator[int]:
        return iter(self.masks)

    def contains(self, bits: int) -> bool:
        i = bisect_left(self.masks, bits)
        return i < len(self.masks) and self.masks[i] == bits

    def profiles(self) -> Iterator[Profile]:
        for m in self.masks:
            yield Profile(m, self.graph_size)

    def texts(self) -> list[str]:
        return [p.to_text() for p in self.profiles()]

    def to_json(self) -> str:
        return json.dumps({"complete": self.complete, "profiles": self.texts()}, sort_keys=True)


def is_valid_profile(graph: Graph, profile: Profile) -> bool:
    """Does every vertex satisfy the local majority rule under ``profile``?"""
    n = graph.vertex_count
    if profile.size != n:
        raise ContractError(f"profile sized for {profile.size} vertices, graph has {n}")
    bits = profile.bits
    for v, adj in enumerate(graph.adjacency_masks):
        deg = len(graph.neighbors[v])
        ones = (adj & bits).bit_count()
        if bits >> v & 1:
            if 2 * ones < deg:
                return False
        elif 2 * ones > deg:
            return False
    return True


def enumerate_valid_profiles(
    graph: Graph,
    cap: int | None = None,
    limit: int = DEFAULT_VERTEX_LIMIT,
) -> ValidProfileSet:
    """Enumerate every valid profile of ``graph`` in ascending order.

    The search assigns opinions vertex by vertex from the highest id down
    and abandons a partial assignment as soon as some vertex is certain to
    end in the minority: once its already-assigned opposite-minded
    neighbors outnumber the same-minded ones by more than its count of
    still-unassigned neighbors, no completion can rescue it. Only such
    certain violations are pruned, so the result equals filtering all
    ``2**n`` profiles.

    Args:
        cap: optional maximum number of profiles to return. When more
            exist, the numerically smallest ``cap`` are returned and the
            set is marked incomplete.
        limit: refuse graphs with more than this many vertices.

    Raises:
        LimitError: the graph exceeds ``limit`` vertices.
    """
    n = graph.vertex_count
    if n > limit:
        raise LimitError(
            f"graph has {n} vertices; profile enumeration is limited to {limit} "
            "(pass a higher limit to override)"
        )
    if cap is not None and cap < 0:
        raise ContractError("cap must be non-negative")

    neighbors = graph.neighbors
    degrees = [len(nb) for nb in neighbors]
    ones = [0] * n          # assigned neighbors holding opinion 1
    unassigned = degrees[:]  # neighbors below the cursor, not yet assigned
    found: list[int] = []
    stop_at = None if cap is None else cap + 1
    state = {"bits": 0, "truncated": False}

    def violates(v: int, value: int) -> bool:
        assigned = degrees[v] - unassigned[v]
        same = ones[v] if value else assigned - ones[v]
        return assigned - 2 * same > unassigned[v]

    def search(v: int) -> None:
        if v < 0:
            found.append(state["bits"])
            if stop_at is not None and len(found) == stop_at:
                state["truncated"] = True
            return
        for value in (0, 1):
            for u in neighbors[v]:
                unassigned[u] -= 1
                ones[u] += value
            ok = not violates(v, value)
            if ok:
                for u in neighbors[v]:
                    if u > v and violates(u, state["bits"] >> u & 1):
                        ok = False
                        break
            if ok:
                if value:
                    state["bits"] |= 1 << v
                search(v - 1)
                if value:
                    state["bits"] &= ~(1 << v)
            for u in neighbors[v]:
                unassigned[u] += 1
                ones[u] -= value
            if state["truncated"]:
                return

    search(n - 1)
    if state["truncated"]:
        return ValidProfileSet(n, tuple(found[:cap]), False)
    return ValidProfileSet(n, tuple(found), True)


def complement_profile(profile: Profile) -> Profile:
    """Flip every opinion. Validity is preserved because the rule is symmetric."""
    return profile.complement()
