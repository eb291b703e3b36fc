"""Brute-force oracles.

Nothing here touches the transition digraph or the reachability cache in
:mod:`hkernel.reach`; these functions re-derive the same answers straight
from the definitions so that the fast paths can be checked against them.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from itertools import combinations, permutations

from .core import Arc, ColouredInstance, HostDigraph, Vertex


def iter_h_walks(instance: ColouredInstance, max_length: int, start: Vertex | None = None,
                 within: Iterable[Arc] | None = None) -> Iterator[tuple[Vertex, ...]]:
    """Every H-walk of length 1..max_length as a vertex tuple.  Exponential."""
    arcs = instance.arcs if within is None else frozenset(within)
    col = instance.colouring.as_dict()
    F = instance.pattern.arcs
    out: dict[Vertex, list[Vertex]] = {}
    for a, b in sorted(arcs):
        out.setdefault(a, []).append(b)

    def grow(seq: list[Vertex]) -> Iterator[tuple[Vertex, ...]]:
        yield tuple(seq)
        if len(seq) - 1 >= max_length:
            return
        last = (seq[-2], seq[-1])
        for z in out.get(seq[-1], ()):
            if (col[last], col[(seq[-1], z)]) in F:
                seq.append(z)
                yield from grow(seq)
                seq.pop()

    starts = sorted(instance.vertices) if start is None else [start]
    for u in starts:
        for v in out.get(u, ()):
            yield from grow([u, v])


def naive_reach_all(instance: ColouredInstance,
                    within: Iterable[Arc] | None = None) -> dict[Vertex, set[Vertex]]:
    """Endpoints of H-walks of length 1..|E| from every vertex, enumerated layer by layer.

    Layer k holds the final arcs of the H-walks of length k from u; walks
    sharing a final arc extend identically, so the layer set suffices.  A
    shortest H-walk never traverses an arc twice, hence the |E| bound.  Layer
    k + 1 depends only on layer k, so a repeated layer ends the scan early.
    """
    arcs = instance.arcs if within is None else frozenset(within)
    col = instance.colouring.as_dict()
    F = instance.pattern.arcs
    out: dict[Vertex, list[Vertex]] = {}
    for a, b in arcs:
        out.setdefault(a, []).append(b)
    # arcs that may follow arc e in an H-walk
    follow = {(a, b): [(b, c) for c in out.get(b, ()) if (col[(a, b)], col[(b, c)]) in F] for a, b in arcs}
    result = {}
    for u in instance.vertices:
        layer = frozenset((u, b) for b in out.get(u, ()))
        ends = {b for _, b in layer}
        seen = {layer}
        for _ in range(len(arcs) - 1):
            layer = frozenset(f for e in layer for f in follow[e])
            if layer in seen:
                break
            seen.add(layer)
            ends |= {b for _, b in layer}
        result[u] = ends
    return result


def naive_reachable(instance: ColouredInstance, u: Vertex,
                    within: Iterable[Arc] | None = None) -> set[Vertex]:
    return naive_reach_all(instance, within)[u]


def naive_h_walk_exists(instance: ColouredInstance, u: Vertex, v: Vertex,
                        within: Iterable[Arc] | None = None) -> bool:
    return v in naive_reachable(instance, u, within)


def naive_closure_arcs(instance: ColouredInstance) -> set[Arc]:
    return {(u, v) for u, ends in naive_reach_all(instance).items() for v in ends if v != u}


def naive_shortest_length(instance: ColouredInstance, u: Vertex, v: Vertex) -> int | None:
    best = None
    for w in iter_h_walks(instance, len(instance.arcs), start=u):
        if w[-1] == v and (best is None or len(w) - 1 < best):
            best = len(w) - 1
    return best


def monochromatic_closure_arcs(instance: ColouredInstance) -> set[Arc]:
    """Pairs joined by a monochromatic directed path: plain BFS in each colour class."""
    out: set[Arc] = set()
    by_colour: dict[str, dict[Vertex, list[Vertex]]] = {}
    for (a, b), c in instance.colouring.items():
        by_colour.setdefault(c, {}).setdefault(a, []).append(b)
    for adj in by_colour.values():
        for u in adj:
            seen = set()
            stack = list(adj[u])
            while stack:
                x = stack.pop()
                if x in seen:
                    continue
                seen.add(x)
                stack.extend(adj.get(x, ()))
            out |= {(u, x) for x in seen if x != u}
    return out


def kernels_of_arcs(vertices: Iterable[Vertex], arcs: set[Arc]) -> list[frozenset]:
    """Kernels by direct definition over combinations, smallest sets first."""
    vs = sorted(vertices)
    found = []
    for r in range(len(vs) + 1):
        for S in combinations(vs, r):
            s = set(S)
            if any((a, b) in arcs for a in S for b in S):
                continue
            if all(any((v, w) in arcs for w in S) for v in vs if v not in s):
                found.append(frozenset(S))
    return found


def naive_kernels(digraph: HostDigraph) -> list[frozenset]:
    return kernels_of_arcs(digraph.vertices, set(digraph.arcs))


def cycles_by_permutation(digraph: HostDigraph) -> set[tuple[Vertex, ...]]:
    """All simple cycles as vertex tuples rotated to start at their minimum."""
    found = set()
    vs = sorted(digraph.vertices)
    for r in range(2, len(vs) + 1):
        for combo in combinations(vs, r):
            first, rest = combo[0], combo[1:]
            for perm in permutations(rest):
                seq = (first,) + perm
                if all((seq[i], seq[(i + 1) % r]) in digraph.arcs for i in range(r)):
                    found.add(seq)
    return found
