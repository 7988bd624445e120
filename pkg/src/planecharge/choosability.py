"""Exact list-coloring and choosability decisions.

Choosability is decided by canonical enumeration of list-intersection
patterns: an assignment of lists is determined up to color renaming by how
many colors are shared by exactly each subset of vertices ("atoms"), so it
suffices to enumerate nonnegative atom sizes meeting the per-vertex demands
and test one concrete instantiation of each pattern.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .errors import MissingList, TooManyVertices
from .square import SimpleGraph

MAX_CHOOSABILITY_VERTICES = 6
MAX_CHROMATIC_VERTICES = 12
MAX_DEMAND = 12


@dataclass(frozen=True)
class ListAssignment:
    """Per-vertex color sets; an empty set marks an explicitly infeasible vertex."""

    lists: tuple[frozenset[int], ...]

    @classmethod
    def from_lists(cls, lists: Sequence[Sequence[int]]) -> "ListAssignment":
        return cls(tuple(frozenset(colors) for colors in lists))

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.lists)


@dataclass(frozen=True)
class DemandFunction:
    """Required list size per vertex, each between 0 and 12."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        for v, f in enumerate(self.values):
            if not isinstance(f, int) or not 0 <= f <= MAX_DEMAND:
                raise ValueError(f"demand f({v})={f} outside 0..{MAX_DEMAND}")

    @classmethod
    def constant(cls, k: int, n: int) -> "DemandFunction":
        return cls((k,) * n)


@dataclass(frozen=True)
class ChoosabilityVerdict:
    choosable: bool
    bad_assignment: Optional[ListAssignment]
    patterns_checked: int


def l_coloring(
    graph: SimpleGraph, assignment: ListAssignment
) -> Optional[dict[int, int]]:
    """A proper coloring picking each vertex's color from its own list.

    Exhaustive backtracking with most-constrained-vertex ordering; returns
    None iff no list-respecting proper coloring exists.
    """
    n = graph.vertex_count
    if len(assignment.lists) < n:
        raise MissingList(len(assignment.lists))
    lists = assignment.lists
    adjacency = graph._adjacency
    coloring: dict[int, int] = {}

    def extend(uncolored: set[int]) -> bool:
        if not uncolored:
            return True
        v, avail = -1, None
        for w in uncolored:
            options = lists[w].difference(
                coloring[u] for u in adjacency[w] if u in coloring
            )
            if avail is None or len(options) < len(avail) or (
                len(options) == len(avail) and w < v
            ):
                v, avail = w, options
                if len(options) <= 1:
                    if not options:
                        return False
                    break  # a forced vertex is always a best pick
        uncolored.discard(v)
        for c in sorted(avail):
            coloring[v] = c
            if extend(uncolored):
                return True
            del coloring[v]
        uncolored.add(v)
        return False

    if not extend(set(range(n))):
        return None
    for v in range(n):
        assert coloring[v] in lists[v]
        for u in adjacency[v]:
            assert coloring[u] != coloring[v]
    return dict(coloring)


def _instantiate(n: int, pattern: Mapping[int, int]) -> ListAssignment:
    """Fresh concrete lists for an atom-size pattern (atom = vertex bitmask)."""
    lists: list[list[int]] = [[] for _ in range(n)]
    color = 0
    for atom, count in sorted(pattern.items()):
        for _ in range(count):
            for v in range(n):
                if atom >> v & 1:
                    lists[v].append(color)
            color += 1
    return ListAssignment.from_lists(lists)


def is_f_choosable(graph: SimpleGraph, demand: DemandFunction) -> ChoosabilityVerdict:
    """Decide whether every assignment with sizes f admits a proper coloring.

    Enumerates atom-size patterns (canonical up to color renaming); each
    pattern is instantiated with fresh colors and tested via l_coloring.
    The first failing pattern is returned as a re-verified witness.
    """
    n = graph.vertex_count
    if n > MAX_CHOOSABILITY_VERTICES:
        raise TooManyVertices(n, MAX_CHOOSABILITY_VERTICES)
    if len(demand.values) != n:
        raise MissingList(len(demand.values))
    if n == 0:
        return ChoosabilityVerdict(True, None, 1)

    if any(f == 0 for f in demand.values):
        # A vertex with an empty list can never be colored.
        lists: list[list[int]] = []
        color = 0
        for f in demand.values:
            lists.append(list(range(color, color + f)))
            color += f
        witness = ListAssignment.from_lists(lists)
        return _failing_verdict(graph, demand, witness, 1)

    # Non-singleton atoms first, largest first; singleton sizes are then
    # forced by the leftover demand, closing each pattern immediately.
    atoms = sorted(
        (m for m in range(1, 1 << n) if bin(m).count("1") >= 2),
        key=lambda m: (-bin(m).count("1"), m),
    )
    members = {m: [v for v in range(n) if m >> v & 1] for m in atoms}
    checked = 0
    pattern: dict[int, int] = {}
    remaining = list(demand.values)

    def close_and_test() -> Optional[ListAssignment]:
        nonlocal checked
        full = dict(pattern)
        for v in range(n):
            if remaining[v]:
                full[1 << v] = full.get(1 << v, 0) + remaining[v]
        assignment = _instantiate(n, full)
        checked += 1
        if l_coloring(graph, assignment) is None:
            return assignment
        return None

    def search(i: int) -> Optional[ListAssignment]:
        if i == len(atoms):
            return close_and_test()
        atom = atoms[i]
        cap = min(remaining[v] for v in members[atom])
        for x in range(cap, -1, -1):
            if x:
                pattern[atom] = x
                for v in members[atom]:
                    remaining[v] -= x
            bad = search(i + 1)
            if x:
                for v in members[atom]:
                    remaining[v] += x
                del pattern[atom]
            if bad is not None:
                return bad
        return None

    bad = search(0)
    if bad is None:
        return ChoosabilityVerdict(True, None, checked)
    return _failing_verdict(graph, demand, bad, checked)


def _failing_verdict(
    graph: SimpleGraph,
    demand: DemandFunction,
    witness: ListAssignment,
    checked: int,
) -> ChoosabilityVerdict:
    assert witness.sizes() == demand.values
    assert l_coloring(graph, witness) is None
    return ChoosabilityVerdict(False, witness, checked)


def is_k_choosable(graph: SimpleGraph, k: int) -> ChoosabilityVerdict:
    """Choosability from every assignment of k-element lists."""
    if not 0 <= k <= MAX_DEMAND:
        raise ValueError(f"list size k={k} outside 0..{MAX_DEMAND}")
    return is_f_choosable(graph, DemandFunction.constant(k, graph.vertex_count))


def clique_f_choosable(f_values: Sequence[int]) -> bool:
    """f-choosability of a complete graph, by the distinct-representatives rule.

    A proper list coloring of a clique is a system of distinct
    representatives of the lists, so Hall's condition reduces to: after
    sorting the demands ascending, the i-th smallest must be at least i.
    """
    values = sorted(f_values)
    if not values:
        raise ValueError("empty demand multiset")
    return all(f >= i + 1 for i, f in enumerate(values))


def chromatic_number(graph: SimpleGraph) -> int:
    """Exact chromatic number by canonical backtracking (at most 12 vertices)."""
    n = graph.vertex_count
    if n > MAX_CHROMATIC_VERTICES:
        raise TooManyVertices(n, MAX_CHROMATIC_VERTICES)
    if n == 0:
        return 0
    adjacency = [graph.adjacency(v) for v in range(n)]
    colors = [-1] * n

    def colorable(k: int, v: int, used: int) -> bool:
        if v == n:
            return True
        banned = {colors[u] for u in adjacency[v] if colors[u] >= 0}
        # New colors are introduced in order, killing color-permutation symmetry.
        for c in range(min(used + 1, k)):
            if c in banned:
                continue
            colors[v] = c
            if colorable(k, v + 1, max(used, c + 1)):
                return True
            colors[v] = -1
        return False

    for k in range(1, n + 1):
        if colorable(k, 0, 0):
            return k
    return n
