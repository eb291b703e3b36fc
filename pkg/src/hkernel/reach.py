"""H-walk recognition and reachability.

Every H-walk question is answered on the *transition digraph*: its states
are the arcs of D and it has a transition e -> f whenever head(e) = tail(f)
and (colour(e), colour(f)) is an arc of H.  An H-walk of length k >= 1 is
exactly a path of k states in this digraph, so u reaches v by an H-walk iff
some state leaving u reaches some state entering v.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from .core import (
    Arc,
    ArcPartition,
    ColouredInstance,
    HostDigraph,
    Vertex,
    Walk,
    check_partition,
    walk_arcs,
)
from .errors import InvalidArgument, ResourceLimitError

# closures are plain loopless digraphs
ClosureDigraph = HostDigraph

DEFAULT_PATH_GUARD = 9


@dataclass(frozen=True)
class TransitionDigraph:
    states: tuple[Arc, ...]
    successors: Mapping[Arc, tuple[Arc, ...]]

    @property
    def transitions(self) -> list[tuple[Arc, Arc]]:
        return [(e, f) for e in self.states for f in self.successors[e]]


def _within_key(instance: ColouredInstance, within: Iterable[Arc] | None) -> frozenset[Arc] | None:
    if within is None:
        return None
    key = frozenset(within)
    if key == instance.arcs:
        return None
    unknown = key - instance.arcs
    if unknown:
        raise InvalidArgument(f"`within` contains non-arcs {sorted(unknown)}")
    return key


def transition_digraph(instance: ColouredInstance, within: Iterable[Arc] | None = None) -> TransitionDigraph:
    key = _within_key(instance, within)
    cache = instance._cache.setdefault("transitions", {})
    if key in cache:
        return cache[key]
    arcs = instance.arcs if key is None else key
    states = tuple(sorted(arcs))
    col = instance.colouring.as_dict()
    F = instance.pattern.arcs
    leaving: dict[Vertex, list[Arc]] = {}
    for e in states:
        leaving.setdefault(e[0], []).append(e)
    succ = {
        e: tuple(f for f in leaving.get(e[1], ()) if (col[e], col[f]) in F)
        for e in states
    }
    td = cache[key] = TransitionDigraph(states, succ)
    return td


def _leaving(td: TransitionDigraph) -> dict[Vertex, list[Arc]]:
    out: dict[Vertex, list[Arc]] = {}
    for e in td.states:
        out.setdefault(e[0], []).append(e)
    return out


def reach_table(instance: ColouredInstance, within: Iterable[Arc] | None = None) -> Mapping[Vertex, frozenset[Vertex]]:
    """For every u, the set of v (possibly u itself) with an H-walk u -> v of length >= 1."""
    cache = instance._cache.setdefault("reach", {})
    if within is None and None in cache:
        return cache[None]
    key = _within_key(instance, within)
    if key in cache:
        return cache[key]
    td = transition_digraph(instance, key)
    leaving = _leaving(td)
    table: dict[Vertex, frozenset[Vertex]] = {}
    for u in instance.host.order:
        seen = set(leaving.get(u, ()))
        stack = list(seen)
        while stack:
            e = stack.pop()
            for f in td.successors[e]:
                if f not in seen:
                    seen.add(f)
                    stack.append(f)
        table[u] = frozenset(e[1] for e in seen)
    cache[key] = table
    return table


def _check_vertex(instance: ColouredInstance, *vs: Vertex) -> None:
    for v in vs:
        if v not in instance.vertices:
            raise InvalidArgument(f"unknown vertex {v!r}")


def is_h_walk(instance: ColouredInstance, walk: Walk) -> bool:
    arcs = walk_arcs(instance.host, walk)
    return all(instance.compatible(arcs[i], arcs[i + 1]) for i in range(len(arcs) - 1))


def h_walk_exists(instance: ColouredInstance, u: Vertex, v: Vertex,
                  within: Iterable[Arc] | None = None) -> bool:
    """Is there an H-walk of length >= 1 from u to v using only arcs in ``within``?

    With u == v this asks for a closed H-walk through u.
    """
    _check_vertex(instance, u, v)
    return v in reach_table(instance, within)[u]


def shortest_h_walk(instance: ColouredInstance, u: Vertex, v: Vertex,
                    within: Iterable[Arc] | None = None) -> Walk | None:
    """A minimum-length H-walk u -> v, lexicographically smallest among those."""
    _check_vertex(instance, u, v)
    if v not in reach_table(instance, within)[u]:
        return None
    td = transition_digraph(instance, within)
    # backward BFS: dist[e] = fewest extra states needed after e to end at v
    pred: dict[Arc, list[Arc]] = {e: [] for e in td.states}
    for e in td.states:
        for f in td.successors[e]:
            pred[f].append(e)
    dist: dict[Arc, int] = {}
    queue = deque()
    for e in td.states:
        if e[1] == v:
            dist[e] = 0
            queue.append(e)
    while queue:
        f = queue.popleft()
        for e in pred[f]:
            if e not in dist:
                dist[e] = dist[f] + 1
                queue.append(e)
    starts = [e for e in td.states if e[0] == u and e in dist]
    best = min(dist[e] for e in starts)
    # successors of one state have distinct heads, so the greedy choice is unique
    cur = min((e for e in starts if dist[e] == best), key=lambda e: e[1])
    seq = [u, cur[1]]
    while dist[cur] > 0:
        cur = min((f for f in td.successors[cur] if dist.get(f) == dist[cur] - 1), key=lambda f: f[1])
        seq.append(cur[1])
    return Walk(seq)


def h_closure(instance: ColouredInstance) -> ClosureDigraph:
    """The H-closure: arc u -> v (u != v) iff D has an H-walk from u to v."""
    table = reach_table(instance)
    arcs = [(u, v) for u in instance.host.order for v in table[u] if v != u]
    return HostDigraph(instance.vertices, arcs)


def _guard(instance: ColouredInstance, size_guard: int) -> None:
    if len(instance.vertices) > size_guard:
        raise ResourceLimitError(
            f"path search needs |V| <= {size_guard}, got {len(instance.vertices)}", bound="vertices")


def h_path_targets(instance: ColouredInstance, u: Vertex, size_guard: int = DEFAULT_PATH_GUARD) -> frozenset[Vertex]:
    """All v != u reachable from u by an H-path (no repeated vertex)."""
    _check_vertex(instance, u)
    _guard(instance, size_guard)
    succ = instance.host.succ
    col = instance.colouring.as_dict()
    F = instance.pattern.arcs
    found: set[Vertex] = set()
    on_path = {u}

    def extend(last: Arc) -> None:
        y = last[1]
        found.add(y)
        for z in succ[y]:
            if z not in on_path and (col[last], col[(y, z)]) in F:
                on_path.add(z)
                extend((y, z))
                on_path.discard(z)

    for z in succ[u]:
        on_path.add(z)
        extend((u, z))
        on_path.discard(z)
    return frozenset(found)


def h_path_exists(instance: ColouredInstance, u: Vertex, v: Vertex,
                  size_guard: int = DEFAULT_PATH_GUARD) -> bool:
    if u == v:
        raise InvalidArgument("h_path_exists needs distinct endpoints")
    _check_vertex(instance, v)
    return v in h_path_targets(instance, u, size_guard)


def h_path_closure(instance: ColouredInstance, size_guard: int = DEFAULT_PATH_GUARD) -> ClosureDigraph:
    """Like :func:`h_closure` but with H-paths instead of H-walks."""
    _guard(instance, size_guard)
    arcs = [(u, v) for u in instance.host.order for v in h_path_targets(instance, u, size_guard)]
    return HostDigraph(instance.vertices, arcs)


def walk_implies_path_holds(instance: ColouredInstance, size_guard: int = DEFAULT_PATH_GUARD) -> bool:
    """True iff every pair joined by an H-walk is also joined by an H-path."""
    return h_path_closure(instance, size_guard).arcs == h_closure(instance).arcs


def straddling_transition(instance: ColouredInstance, partition: ArcPartition) -> tuple[Arc, Arc] | None:
    """First transition whose two arcs lie in different blocks, if any."""
    check_partition(instance.host, partition)
    block = partition.block_of()
    td = transition_digraph(instance)
    for e, f in td.transitions:
        if block[e] != block[f]:
            return e, f
    return None


def h_walks_respect_partition(instance: ColouredInstance, partition: ArcPartition) -> bool:
    """Is every H-walk of D contained in a single block?

    An H-walk leaving its block has a consecutive arc pair in two blocks, and
    such a pair is itself an H-walk, so checking transitions suffices.
    """
    return straddling_transition(instance, partition) is None
