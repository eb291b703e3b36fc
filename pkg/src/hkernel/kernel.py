"""Kernels and H-kernels by walks.

Classical kernels live on plain digraphs; H-kernels on coloured instances.
The two meet through the H-closure: S is an H-kernel of D exactly when it
is a kernel of the closure.
"""

from __future__ import annotations

from collections.abc import Iterable

from .core import ColouredInstance, HostDigraph, Vertex, check_vertices, subset_key
from .cycles import (
    CycleEnumerationLimit,
    asymmetric_cycle,
    non_h_cycle,
)
from .errors import Counterexample, HypothesisViolation, ResourceLimitError
from .reach import h_closure, reach_table

KernelCandidate = frozenset

DEFAULT_SIZE_GUARD = 16


def is_kernel(digraph: HostDigraph, S: Iterable[Vertex]) -> bool:
    S = check_vertices(digraph, S)
    if any(a in S and b in S for a, b in digraph.arcs):
        return False
    succ = digraph.succ
    return all(any(w in S for w in succ[v]) for v in digraph.vertices - S)


def _subsets(order: tuple[Vertex, ...], size_guard: int):
    if len(order) > size_guard:
        raise ResourceLimitError(f"brute force needs |V| <= {size_guard}, got {len(order)}", bound="vertices")
    n = len(order)
    for mask in range(1 << n):
        yield frozenset(order[i] for i in range(n) if mask >> i & 1)


def _sorted_sets(sets: Iterable[frozenset]) -> list[frozenset]:
    return sorted(sets, key=subset_key)


def find_kernels_bruteforce(digraph: HostDigraph, size_guard: int = DEFAULT_SIZE_GUARD) -> list[frozenset]:
    """Every kernel of ``digraph``, sorted lexicographically as sorted tuples."""
    order = digraph.order
    idx = {v: i for i, v in enumerate(order)}
    n = len(order)
    if n > size_guard:
        raise ResourceLimitError(f"brute force needs |V| <= {size_guard}, got {n}", bound="vertices")
    out_mask = [0] * n
    for a, b in digraph.arcs:
        out_mask[idx[a]] |= 1 << idx[b]
    found = []
    for mask in range(1 << n):
        ok = True
        for i in range(n):
            inside = mask >> i & 1
            if inside and out_mask[i] & mask:
                ok = False
                break
            if not inside and not out_mask[i] & mask:
                ok = False
                break
        if ok:
            found.append(frozenset(order[i] for i in range(n) if mask >> i & 1))
    return _sorted_sets(found)


def kernel_constructive_symmetric(digraph: HostDigraph) -> frozenset:
    """Kernel of a digraph in which every cycle has a symmetric arc.

    Greedy: take the smallest vertex with no asymmetric out-arc inside the
    remaining set, keep it and discard it together with its in-neighbours.
    """
    cyc = asymmetric_cycle(digraph)
    if cyc is not None:
        raise HypothesisViolation(f"cycle without symmetric arc: {cyc}", witness=cyc,
                                  failed=("every-cycle-has-symmetric-arc",))
    arcs = digraph.arcs
    remaining = set(digraph.vertices)
    kernel: set[Vertex] = set()
    succ, pred = digraph.succ, digraph.pred
    while remaining:
        v = min(x for x in remaining
                if not any(w in remaining and (w, x) not in arcs for w in succ[x]))
        kernel.add(v)
        remaining.discard(v)
        remaining.difference_update(pred[v])
    out = frozenset(kernel)
    if not is_kernel(digraph, out):
        raise Counterexample("greedy construction did not produce a kernel", obj=out)
    return out


def is_h_independent(instance: ColouredInstance, S: Iterable[Vertex]) -> bool:
    """No H-walk between two distinct members of S."""
    S = check_vertices(instance, S)
    table = reach_table(instance)
    return all(not ((table[u] & S) - {u}) for u in S)


def is_h_absorbent(instance: ColouredInstance, S: Iterable[Vertex]) -> bool:
    S = check_vertices(instance, S)
    table = reach_table(instance)
    return all(table[v] & S for v in instance.vertices - S)


def is_h_kernel(instance: ColouredInstance, S: Iterable[Vertex]) -> bool:
    S = check_vertices(instance, S)
    return is_h_independent(instance, S) and is_h_absorbent(instance, S)


def find_h_kernels_bruteforce(instance: ColouredInstance, size_guard: int = DEFAULT_SIZE_GUARD) -> list[frozenset]:
    """Every H-kernel by walks, checked definitionally over the power set."""
    return _sorted_sets(S for S in _subsets(instance.host.order, size_guard) if is_h_kernel(instance, S))


def h_kernel_via_closure(instance: ColouredInstance, limit: CycleEnumerationLimit | None = None,
                         force: bool = False) -> frozenset:
    """An H-kernel of D obtained from a kernel of its H-closure.

    Requires every cycle of D to be an H-cycle (skipped with ``force``).
    Failure of the closure to have all cycles symmetric, or of the result
    to be an H-kernel, raises :class:`Counterexample`.
    """
    if not force:
        bad = non_h_cycle(instance, limit)
        if bad is not None:
            raise HypothesisViolation(f"cycle {bad} is not an H-cycle", witness=bad,
                                      failed=("all-cycles-are-h-cycles",))
    closure = h_closure(instance)
    cyc = asymmetric_cycle(closure)
    if cyc is not None:
        if force:
            raise HypothesisViolation(f"closure has a cycle without symmetric arc: {cyc}", witness=cyc,
                                      failed=("every-cycle-has-symmetric-arc",))
        raise Counterexample(f"closure cycle {cyc} has no symmetric arc", instance=instance, obj=cyc)
    K = kernel_constructive_symmetric(closure)
    if not is_h_kernel(instance, K):
        raise Counterexample(f"{sorted(K)} is a closure kernel but not an H-kernel", instance=instance, obj=K)
    return K
