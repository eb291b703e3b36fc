"""Simple cycles, H-cycles and structural predicates on plain digraphs."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterator
from dataclasses import dataclass
from typing import Literal

from .core import ColouredInstance, HostDigraph, Vertex, Walk, walk_arcs
from .errors import InvalidArgument, ResourceLimitError

DEFAULT_MAX_CYCLES = 10**6

PredicateKind = Literal["acyclic", "bipartite-underlying", "strongly-connected", "odd-directed-cycle-free"]


@dataclass(frozen=True)
class CycleEnumerationLimit:
    max_cycles: int = DEFAULT_MAX_CYCLES
    # None means |V|, which can never be exceeded by a simple cycle
    max_length: int | None = None

    def __post_init__(self) -> None:
        if self.max_cycles < 1 or (self.max_length is not None and self.max_length < 1):
            raise InvalidArgument("cycle enumeration limits must be positive")


def _scc_of(digraph: HostDigraph, s: Vertex, allowed: set[Vertex]) -> set[Vertex]:
    def reach(start: Vertex, nbrs) -> set[Vertex]:
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in nbrs[x]:
                if y in allowed and y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen

    return reach(s, digraph.succ) & reach(s, digraph.pred)


def iter_simple_cycles(digraph: HostDigraph, limit: CycleEnumerationLimit | None = None) -> Iterator[Walk]:
    """Johnson's algorithm.  Each cycle is yielded once, starting at its smallest vertex.

    Raises :class:`ResourceLimitError` as soon as a bound is exceeded; the
    caller never sees a silently truncated enumeration.
    """
    limit = limit or CycleEnumerationLimit()
    max_len = limit.max_length if limit.max_length is not None else max(len(digraph.vertices), 1)
    succ = digraph.succ
    order = digraph.order
    count = 0

    for idx, s in enumerate(order):
        allowed = set(order[idx:])
        comp = _scc_of(digraph, s, allowed)
        if len(comp) < 2:
            continue
        blocked: set[Vertex] = set()
        bmap: dict[Vertex, set[Vertex]] = {v: set() for v in comp}
        path = [s]

        def unblock(v: Vertex) -> None:
            stack = [v]
            while stack:
                x = stack.pop()
                if x in blocked:
                    blocked.discard(x)
                    stack.extend(bmap[x])
                    bmap[x].clear()

        def circuit(v: Vertex) -> Iterator[Walk]:
            nonlocal count
            found = False
            blocked.add(v)
            for w in succ[v]:
                if w not in comp:
                    continue
                if w == s:
                    count += 1
                    if count > limit.max_cycles:
                        raise ResourceLimitError(f"more than {limit.max_cycles} simple cycles", bound="max_cycles")
                    if len(path) > max_len:
                        raise ResourceLimitError(f"a simple cycle is longer than {max_len}", bound="max_length")
                    yield Walk(path + [s])
                    found = True
                elif w not in blocked:
                    path.append(w)
                    sub_found = yield from circuit(w)
                    path.pop()
                    found = found or sub_found
            if found:
                unblock(v)
            else:
                for w in succ[v]:
                    if w in comp:
                        bmap[w].add(v)
            return found

        yield from circuit(s)


def enumerate_simple_cycles(digraph: HostDigraph, limit: CycleEnumerationLimit | None = None) -> list[Walk]:
    return sorted(iter_simple_cycles(digraph, limit), key=lambda w: w.vertices)


def is_h_cycle(instance: ColouredInstance, cycle: Walk, wrap_around: bool = True) -> bool:
    """Does the colour sequence of the closed walk follow arcs of H?

    With ``wrap_around`` (the default) the pair (last arc, first arc) must
    be an H-arc as well.
    """
    if not cycle.closed or cycle.length < 2:
        raise InvalidArgument("is_h_cycle needs a closed walk of length >= 2")
    arcs = walk_arcs(instance.host, cycle)
    k = len(arcs)
    pairs = range(k) if wrap_around else range(k - 1)
    return all(instance.compatible(arcs[i], arcs[(i + 1) % k]) for i in pairs)


def non_h_cycle(instance: ColouredInstance, limit: CycleEnumerationLimit | None = None,
                wrap_around: bool = True) -> Walk | None:
    """The first enumerated simple cycle of D that is not an H-cycle, if any."""
    for c in iter_simple_cycles(instance.host, limit):
        if not is_h_cycle(instance, c, wrap_around):
            return c
    return None


def all_cycles_are_h_cycles(instance: ColouredInstance, limit: CycleEnumerationLimit | None = None,
                            wrap_around: bool = True) -> bool:
    return non_h_cycle(instance, limit, wrap_around) is None


# -- symmetric arcs ---------------------------------------------------------


def asymmetric_part(digraph: HostDigraph) -> HostDigraph:
    return HostDigraph(digraph.vertices, [(a, b) for a, b in digraph.arcs if (b, a) not in digraph.arcs])


def find_cycle(digraph: HostDigraph) -> Walk | None:
    """Some directed cycle of ``digraph`` (deterministic), or None if acyclic."""
    colour: dict[Vertex, int] = {v: 0 for v in digraph.order}
    parent: dict[Vertex, Vertex] = {}
    succ = digraph.succ
    for root in digraph.order:
        if colour[root]:
            continue
        colour[root] = 1
        stack = [(root, iter(succ[root]))]
        while stack:
            v, it = stack[-1]
            for w in it:
                if colour[w] == 1:
                    cyc = [v]
                    while cyc[-1] != w:
                        cyc.append(parent[cyc[-1]])
                    cyc.reverse()
                    return Walk(cyc + [w])
                if colour[w] == 0:
                    colour[w] = 1
                    parent[w] = v
                    stack.append((w, iter(succ[w])))
                    break
            else:
                colour[v] = 2
                stack.pop()
    return None


def is_acyclic(digraph: HostDigraph) -> bool:
    indeg = {v: 0 for v in digraph.vertices}
    for _, b in digraph.arcs:
        indeg[b] += 1
    queue = [v for v, d in indeg.items() if d == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for w in digraph.succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return seen == len(digraph.vertices)


def asymmetric_cycle(digraph: HostDigraph) -> Walk | None:
    """A cycle using no symmetric arc, if one exists."""
    return find_cycle(asymmetric_part(digraph))


def every_cycle_has_symmetric_arc(digraph: HostDigraph) -> bool:
    # a cycle avoiding symmetric arcs lives in the asymmetric part, and vice versa
    return is_acyclic(asymmetric_part(digraph))


# -- predicates -------------------------------------------------------------


def strongly_connected_components(digraph: HostDigraph) -> list[frozenset[Vertex]]:
    """Tarjan's algorithm, iterative; components in reverse topological order."""
    index: dict[Vertex, int] = {}
    low: dict[Vertex, int] = {}
    on_stack: set[Vertex] = set()
    stack: list[Vertex] = []
    out: list[frozenset[Vertex]] = []
    succ = digraph.succ
    counter = 0
    for root in digraph.order:
        if root in index:
            continue
        work = [(root, iter(succ[root]))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(succ[w])))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                low[work[-1][0]] = min(low[work[-1][0]], low[v])
            if low[v] == index[v]:
                comp = set()
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.add(w)
                    if w == v:
                        break
                out.append(frozenset(comp))
    return out


def underlying_bipartition(digraph: HostDigraph) -> tuple[frozenset[Vertex], frozenset[Vertex]] | None:
    """2-colour the underlying undirected graph; side A holds each component's smallest vertex."""
    nbrs: dict[Vertex, set[Vertex]] = {v: set() for v in digraph.vertices}
    for a, b in digraph.arcs:
        nbrs[a].add(b)
        nbrs[b].add(a)
    side: dict[Vertex, int] = {}
    for root in digraph.order:
        if root in side:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in sorted(nbrs[x]):
                if y not in side:
                    side[y] = 1 - side[x]
                    queue.append(y)
                elif side[y] == side[x]:
                    return None
    return (frozenset(v for v, s in side.items() if s == 0),
            frozenset(v for v, s in side.items() if s == 1))


def _odd_cycle_free(digraph: HostDigraph) -> bool:
    # a strong component is free of odd cycles iff its arcs all flip BFS-depth parity
    for comp in strongly_connected_components(digraph):
        if len(comp) < 2:
            continue
        root = min(comp)
        parity = {root: 0}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in digraph.succ[x]:
                if y in comp and y not in parity:
                    parity[y] = 1 - parity[x]
                    queue.append(y)
        for a, b in digraph.arcs:
            if a in comp and b in comp and parity[a] == parity[b]:
                return False
    return True


def digraph_predicate(digraph: HostDigraph, kind: PredicateKind) -> bool:
    if kind == "acyclic":
        return is_acyclic(digraph)
    if kind == "bipartite-underlying":
        return underlying_bipartition(digraph) is not None
    if kind == "strongly-connected":
        return len(strongly_connected_components(digraph)) <= 1
    if kind == "odd-directed-cycle-free":
        return _odd_cycle_free(digraph)
    raise InvalidArgument(f"unknown predicate {kind!r}")
