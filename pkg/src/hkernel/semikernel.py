"""H-semikernels modulo E1 and the kernel pipelines built on them.

Throughout, a two-block :class:`ArcPartition` is read as (E1, E2).  A set S
is an H-semikernel mod E1 when it is H-independent and every vertex that S
reaches by an H-walk inside E2 has an H-walk (anywhere in D) back into S.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from typing import Literal

from .core import (
    ArcPartition,
    ColouredInstance,
    HostDigraph,
    Vertex,
    check_partition,
    check_vertices,
    restrict_arcs,
    subset_key,
)
from .cycles import (
    CycleEnumerationLimit,
    digraph_predicate,
    find_cycle,
    is_acyclic,
    non_h_cycle,
    underlying_bipartition,
)
from .errors import Counterexample, HypothesisViolation, InvalidArgument, ResourceLimitError
from .kernel import is_h_kernel
from .rainbow import find_rainbow
from .reach import h_closure, reach_table, straddling_transition

DEFAULT_SEMIKERNEL_GUARD = 10

CorollaryMode = Literal["bipartite", "strong-no-odd"]


def _two_blocks(instance: ColouredInstance, partition: ArcPartition) -> tuple[frozenset, frozenset]:
    if len(partition) != 2:
        raise InvalidArgument(f"semikernels need a 2-block partition (E1, E2), got {len(partition)} blocks")
    check_partition(instance.host, partition)
    return partition.e1, partition.e2


def _semikernel_mask_checker(instance: ColouredInstance, partition: ArcPartition):
    e1, e2 = _two_blocks(instance, partition)
    full = reach_table(instance)
    in_e2 = reach_table(instance, e2)

    def check(S: frozenset) -> bool:
        for u in S:
            if (full[u] & S) - {u}:
                return False
        for z in instance.vertices - S:
            if any(z in in_e2[s] for s in S) and not (full[z] & S):
                return False
        return True

    return check


def is_h_semikernel_mod(instance: ColouredInstance, partition: ArcPartition, S: Iterable[Vertex]) -> bool:
    S = check_vertices(instance, S)
    return _semikernel_mask_checker(instance, partition)(S)


def semikernel_witness(instance: ColouredInstance, partition: ArcPartition, v: Vertex) -> Vertex | None:
    """Smallest z reached from v by an H-walk in E2 with no H-walk z -> v in D."""
    _, e2 = _two_blocks(instance, partition)
    full = reach_table(instance)
    in_e2 = reach_table(instance, e2)
    cands = [z for z in in_e2[v] if z != v and v not in full[z]]
    return min(cands) if cands else None


@dataclass(frozen=True)
class WitnessChase:
    vertices: tuple[Vertex, ...]

    @property
    def result(self) -> Vertex:
        return self.vertices[-1]


def find_singleton_semikernel(instance: ColouredInstance, partition: ArcPartition,
                              limit: CycleEnumerationLimit | None = None,
                              force: bool = False) -> Vertex:
    return chase_witnesses(instance, partition, limit, force).result


def chase_witnesses(instance: ColouredInstance, partition: ArcPartition,
                    limit: CycleEnumerationLimit | None = None,
                    force: bool = False) -> WitnessChase:
    """Follow witnesses from the smallest vertex until a singleton semikernel appears.

    Requires every cycle of (V, E2) to be an H-cycle.  A repeated vertex in
    the chase contradicts that guarantee and raises :class:`Counterexample`.
    """
    _, e2 = _two_blocks(instance, partition)
    if not instance.vertices:
        raise InvalidArgument("empty digraph has no singleton semikernel")
    if not force:
        bad = non_h_cycle(restrict_arcs(instance, e2), limit)
        if bad is not None:
            raise HypothesisViolation(f"cycle {bad} of D2 is not an H-cycle", witness=bad,
                                      failed=("d2-cycles-are-h-cycles",))
    chase = [instance.host.order[0]]
    seen = {chase[0]}
    while True:
        z = semikernel_witness(instance, partition, chase[-1])
        if z is None:
            return WitnessChase(tuple(chase))
        chase.append(z)
        if z in seen:
            raise Counterexample(f"witness chase revisits {z}: {'->'.join(chase)}",
                                 instance=instance, partition=partition, obj=tuple(chase))
        seen.add(z)


def enumerate_h_semikernels(instance: ColouredInstance, partition: ArcPartition,
                            size_guard: int = DEFAULT_SEMIKERNEL_GUARD) -> list[frozenset]:
    """All nonempty H-semikernels mod E1, sorted lexicographically."""
    order = instance.host.order
    n = len(order)
    if n > size_guard:
        raise ResourceLimitError(f"semikernel enumeration needs |V| <= {size_guard}, got {n}", bound="vertices")
    check = _semikernel_mask_checker(instance, partition)
    found = []
    for mask in range(1, 1 << n):
        S = frozenset(order[i] for i in range(n) if mask >> i & 1)
        if check(S):
            found.append(S)
    return sorted(found, key=subset_key)


def _arc_rule(instance: ColouredInstance, partition: ArcPartition):
    e1, _ = _two_blocks(instance, partition)
    full = reach_table(instance)
    in_e1 = reach_table(instance, e1)

    def rule(S: frozenset, T: frozenset) -> bool:
        if S == T:
            return False
        for v in S - T:
            if not any(w in in_e1[v] and not (full[w] & S) for w in T):
                return False
        return True

    return rule


def semikernel_arc(instance: ColouredInstance, partition: ArcPartition, S: frozenset, T: frozenset) -> bool:
    """Arc rule of the semikernel digraph.

    S -> T iff S != T and every v in S \\ T has some w in T with an H-walk
    v -> w inside E1 and no H-walk from w into S.  The rule is vacuous when
    S is a proper subset of T.
    """
    return _arc_rule(instance, partition)(frozenset(S), frozenset(T))


@dataclass(frozen=True)
class SemikernelDigraph:
    nodes: tuple[frozenset, ...]
    arcs: frozenset[tuple[int, int]]

    def label(self, i: int) -> str:
        return "{" + ",".join(sorted(self.nodes[i])) + "}"

    def as_digraph(self) -> HostDigraph:
        """The same digraph with nodes named ``"0"``, ``"1"``, ... (zero-padded)."""
        w = len(str(max(len(self.nodes) - 1, 0)))
        name = [f"{i:0{w}d}" for i in range(len(self.nodes))]
        return HostDigraph(name, [(name[i], name[j]) for i, j in self.arcs])

    def out_degree(self, i: int) -> int:
        return sum(1 for a, _ in self.arcs if a == i)

    def is_acyclic(self) -> bool:
        return is_acyclic(self.as_digraph())

    def find_cycle(self) -> list[frozenset] | None:
        cyc = find_cycle(self.as_digraph())
        if cyc is None:
            return None
        return [self.nodes[int(x)] for x in cyc.vertices]

    def sinks(self) -> list[frozenset]:
        tails = {a for a, _ in self.arcs}
        return [self.nodes[i] for i in range(len(self.nodes)) if i not in tails]


def build_semikernel_digraph(instance: ColouredInstance, partition: ArcPartition,
                             size_guard: int = DEFAULT_SEMIKERNEL_GUARD) -> SemikernelDigraph:
    nodes = enumerate_h_semikernels(instance, partition, size_guard)
    check = _semikernel_mask_checker(instance, partition)
    assert all(check(S) for S in nodes)
    rule = _arc_rule(instance, partition)
    arcs = frozenset(
        (i, j)
        for i, S in enumerate(nodes)
        for j, T in enumerate(nodes)
        if rule(S, T)
    )
    return SemikernelDigraph(tuple(nodes), arcs)


def theorem4_hypotheses(instance: ColouredInstance, partition: ArcPartition,
                        limit: CycleEnumerationLimit | None = None) -> list[tuple[str, object]]:
    """Failed preconditions of the Theorem-4 pipeline as ``(name, witness)`` pairs."""
    e1, e2 = _two_blocks(instance, partition)
    failed: list[tuple[str, object]] = []
    for name, block in (("d1-cycles-are-h-cycles", e1), ("d2-cycles-are-h-cycles", e2)):
        bad = non_h_cycle(restrict_arcs(instance, block), limit)
        if bad is not None:
            failed.append((name, bad))
    for kind in ("C3", "P3"):
        w = find_rainbow(instance, kind)
        if w is not None:
            failed.append(("rainbow-free", w))
            break
    cross = straddling_transition(instance, partition)
    if cross is not None:
        failed.append(("h-walks-respect-partition", cross))
    return failed


def h_kernel_via_theorem4(instance: ColouredInstance, partition: ArcPartition,
                          size_guard: int = DEFAULT_SEMIKERNEL_GUARD,
                          limit: CycleEnumerationLimit | None = None,
                          force: bool = False) -> frozenset:
    """An H-kernel found as a sink of the semikernel digraph."""
    if not force:
        failed = theorem4_hypotheses(instance, partition, limit)
        if failed:
            names = tuple(n for n, _ in failed)
            raise HypothesisViolation("unmet: " + ", ".join(f"{n} ({w})" for n, w in failed),
                                      witness=failed, failed=names)
    if not instance.vertices:
        return frozenset()
    sdg = build_semikernel_digraph(instance, partition, size_guard)
    sinks = sdg.sinks()
    if not sinks:
        raise Counterexample("semikernel digraph has no vertex of out-degree zero",
                             instance=instance, partition=partition, obj=sdg.find_cycle())
    K = min(sinks, key=subset_key)
    if not is_h_kernel(instance, K):
        raise Counterexample(f"sink {sorted(K)} of the semikernel digraph is not an H-kernel",
                             instance=instance, partition=partition, obj=K)
    return K


def corollary_hypotheses(instance: ColouredInstance, blocks: ArcPartition, mode: CorollaryMode,
                         limit: CycleEnumerationLimit | None = None) -> list[tuple[str, object]]:
    """Failed preconditions of Corollary 5 (``bipartite``) or 6 (``strong-no-odd``)."""
    check_partition(instance.host, blocks)
    failed: list[tuple[str, object]] = []
    for k, block in enumerate(blocks.blocks):
        bad = non_h_cycle(restrict_arcs(instance, block), limit)
        if bad is not None:
            failed.append((f"block{k + 1}-cycles-are-h-cycles", bad))
    for kind in ("C3", "P3"):
        w = find_rainbow(instance, kind)
        if w is not None:
            failed.append(("rainbow-free", w))
            break
    cross = straddling_transition(instance, blocks)
    if cross is not None:
        failed.append(("h-walks-respect-partition", cross))
    closure = h_closure(instance)
    if mode == "bipartite":
        if not digraph_predicate(closure, "bipartite-underlying"):
            failed.append(("closure-bipartite", None))
    elif mode == "strong-no-odd":
        if not digraph_predicate(closure, "strongly-connected"):
            failed.append(("closure-strongly-connected", None))
        if not digraph_predicate(closure, "odd-directed-cycle-free"):
            failed.append(("closure-odd-cycle-free", None))
    else:
        raise InvalidArgument(f"unknown corollary mode {mode!r}")
    return failed


def derive_partition_corollary(instance: ColouredInstance, blocks: ArcPartition, mode: CorollaryMode,
                               limit: CycleEnumerationLimit | None = None,
                               force: bool = False) -> ArcPartition:
    """(E1, E2) = (arcs from side A to side B, arcs from B to A) of the closure bipartition.

    Side A holds the smallest vertex of each component of the closure.
    """
    if not force:
        failed = corollary_hypotheses(instance, blocks, mode, limit)
        if failed:
            names = tuple(n for n, _ in failed)
            raise HypothesisViolation("unmet: " + ", ".join(names), witness=failed, failed=names)
    parts = underlying_bipartition(h_closure(instance))
    if parts is None:
        if mode == "strong-no-odd" and not force:
            # strong + odd-cycle-free closures are bipartite; reaching here is a finding
            raise Counterexample("strongly connected, odd-cycle-free closure is not bipartite",
                                 instance=instance, partition=blocks)
        raise HypothesisViolation("closure is not bipartite", failed=("closure-bipartite",))
    side_a, _ = parts
    e1 = [(a, b) for a, b in instance.arcs if a in side_a]
    e2 = [(a, b) for a, b in instance.arcs if a not in side_a]
    return ArcPartition([e1, e2])
