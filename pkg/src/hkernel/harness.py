"""Random instance generation, per-claim verification and campaigns.

Randomness comes from :class:`random.Random` (Mersenne Twister MT19937)
seeded with an integer, so a ``(params, seed)`` pair always reproduces the
same instance.  Campaign instance ``i`` is drawn with seed
``derive_seed(campaign_seed, i)``.
"""

from __future__ import annotations

import enum
import json
import random
import time
from collections import Counter
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from typing import Any, Literal

from .core import ArcPartition, ColouredInstance, Colouring, HostDigraph, PatternDigraph, restrict_arcs
from .cycles import (
    CycleEnumerationLimit,
    asymmetric_cycle,
    every_cycle_has_symmetric_arc,
    iter_simple_cycles,
    non_h_cycle,
)
from .errors import Counterexample, HypothesisViolation, InvalidArgument, ResourceLimitError
from .io import parse_instance, serialize_instance
from .kernel import find_h_kernels_bruteforce, h_kernel_via_closure, is_h_kernel, is_kernel
from .naive import kernels_of_arcs, naive_closure_arcs, naive_reach_all
from .reach import h_closure, h_path_closure, transition_digraph
from .semikernel import (
    build_semikernel_digraph,
    chase_witnesses,
    corollary_hypotheses,
    derive_partition_corollary,
    h_kernel_via_theorem4,
    is_h_semikernel_mod,
)

RNG_ALGORITHM = "python-random-mt19937"

Strategy = Literal["uniform", "acyclic-host", "complete-looped-pattern", "rejection-filtered"]
STRATEGIES: tuple[str, ...] = ("uniform", "acyclic-host", "complete-looped-pattern", "rejection-filtered")

CLAIMS: tuple[str, ...] = ("lemma", "theorem1", "theorem2", "theorem3", "theorem4",
                           "corollary5", "corollary6", "walk-implies-path")
PARTITION_CLAIMS = frozenset({"theorem2", "theorem3", "theorem4", "corollary5", "corollary6"})

# desk-scale bounds
MAX_KERNEL_VERTICES = 8
MAX_SEMIKERNEL_VERTICES = 6


class Status(str, enum.Enum):
    HOLDS = "holds"
    HYPOTHESIS_NOT_MET = "hypothesis-not-met"
    COUNTEREXAMPLE = "COUNTEREXAMPLE"
    RESOURCE_LIMIT = "resource-limit"


@dataclass(frozen=True)
class GeneratorParams:
    n_vertices: int
    n_colours: int
    arc_probability: float = 0.4
    pattern_density: float = 0.5
    strategy: str = "uniform"
    seed: int = 0
    # 0 = no partition; otherwise number of blocks
    partition_blocks: int = 0
    # "independent": each arc picks a block; "respecting": whole transition components do
    partition_mode: str = "independent"
    max_attempts: int = 5000

    def __post_init__(self) -> None:
        if self.n_vertices < 1 or self.n_colours < 1:
            raise InvalidArgument("n_vertices and n_colours must be positive")
        for name in ("arc_probability", "pattern_density"):
            if not 0.0 <= getattr(self, name) <= 1.0:
                raise InvalidArgument(f"{name} must lie in [0, 1]")
        if self.strategy not in STRATEGIES:
            raise InvalidArgument(f"unknown strategy {self.strategy!r}")
        if self.partition_blocks < 0:
            raise InvalidArgument("partition_blocks must be >= 0")
        if self.partition_mode not in ("independent", "respecting"):
            raise InvalidArgument(f"unknown partition mode {self.partition_mode!r}")
        if self.max_attempts < 1:
            raise InvalidArgument("max_attempts must be positive")


@dataclass(frozen=True)
class GeneratedInstance:
    instance: ColouredInstance
    partition: ArcPartition | None
    attempts: int = 1


def _labels(prefix: str, n: int) -> list[str]:
    width = len(str(n - 1))
    return [f"{prefix}{i:0{width}d}" for i in range(n)]


def _draw(params: GeneratorParams, rng: random.Random, acyclic: bool, complete_pattern: bool) -> ColouredInstance:
    vs = _labels("v", params.n_vertices)
    cs = _labels("c", params.n_colours)
    if acyclic:
        rank = vs[:]
        rng.shuffle(rank)
        pairs = [(rank[i], rank[j]) for i in range(len(rank)) for j in range(i + 1, len(rank))]
    else:
        pairs = [(a, b) for a in vs for b in vs if a != b]
    arcs = [p for p in pairs if rng.random() < params.arc_probability]
    colouring = {e: cs[rng.randrange(len(cs))] for e in sorted(arcs)}
    if complete_pattern:
        pattern = PatternDigraph.complete(cs)
    else:
        pattern = PatternDigraph(cs, [(a, b) for a in cs for b in cs if rng.random() < params.pattern_density])
    return ColouredInstance(HostDigraph(vs, arcs), pattern, Colouring(colouring))


def _transition_components(instance: ColouredInstance) -> list[list]:
    td = transition_digraph(instance)
    parent = {e: e for e in td.states}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e, f in td.transitions:
        ra, rb = find(e), find(f)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    comps: dict = {}
    for e in td.states:
        comps.setdefault(find(e), []).append(e)
    return [comps[k] for k in sorted(comps)]


def draw_partition(instance: ColouredInstance, n_blocks: int, rng: random.Random,
                   mode: str = "independent") -> ArcPartition:
    labels = {}
    if mode == "independent":
        for e in sorted(instance.arcs):
            labels[e] = rng.randrange(n_blocks)
    else:
        for comp in _transition_components(instance):
            k = rng.randrange(n_blocks)
            for e in comp:
                labels[e] = k
    return ArcPartition.from_labels(labels, n_blocks)


def generate_instance(params: GeneratorParams) -> GeneratedInstance:
    rng = random.Random(params.seed)
    s = params.strategy
    attempts = 1
    if s == "rejection-filtered":
        for attempts in range(1, params.max_attempts + 1):
            inst = _draw(params, rng, acyclic=False, complete_pattern=False)
            if non_h_cycle(inst) is None:
                break
        else:
            raise ResourceLimitError(
                f"rejection budget of {params.max_attempts} exhausted (acceptance rate 0/{params.max_attempts})",
                bound="rejection-budget")
    else:
        inst = _draw(params, rng, acyclic=(s == "acyclic-host"), complete_pattern=(s == "complete-looped-pattern"))
    partition = None
    if params.partition_blocks:
        partition = draw_partition(inst, params.partition_blocks, rng, params.partition_mode)
    return GeneratedInstance(inst, partition, attempts)


def dag_with_symmetric_pairs(n_vertices: int, rng: random.Random, arc_probability: float = 0.3,
                             symmetric_probability: float = 0.15) -> HostDigraph:
    """A random DAG (arcs follow a shuffled rank) plus random 2-cycles.

    Every cycle of the result uses a symmetric pair, so it meets the
    hypothesis of :func:`hkernel.kernel.kernel_constructive_symmetric`.
    """
    vs = _labels("v", n_vertices)
    rank = vs[:]
    rng.shuffle(rank)
    arcs = set()
    for i in range(n_vertices):
        for j in range(i + 1, n_vertices):
            r = rng.random()
            if r < symmetric_probability:
                arcs |= {(rank[i], rank[j]), (rank[j], rank[i])}
            elif r < symmetric_probability + arc_probability:
                arcs.add((rank[i], rank[j]))
    return HostDigraph(vs, arcs)


def mixed_generators(max_vertices: int = 6, max_colours: int = 3, partition_blocks: int = 0,
                     partition_mode: str = "independent", min_vertices: int = 1) -> list[GeneratorParams]:
    """A round-robin corpus whose instances all satisfy 'every cycle is an H-cycle'."""
    out = []
    for n in range(min_vertices, max_vertices + 1):
        for k in range(1, max_colours + 1):
            common = dict(n_vertices=n, n_colours=k, partition_blocks=partition_blocks,
                          partition_mode=partition_mode)
            out.append(GeneratorParams(strategy="acyclic-host", arc_probability=0.5, **common))
            out.append(GeneratorParams(strategy="complete-looped-pattern", arc_probability=0.4, **common))
            out.append(GeneratorParams(strategy="rejection-filtered", arc_probability=0.35,
                                       pattern_density=0.6, **common))
    return out


# -- verification ------------------------------------------------------------


@dataclass(frozen=True)
class Verdict:
    claim: str
    status: Status
    detail: str = ""
    witness: dict[str, Any] | None = None

    def to_dict(self) -> dict[str, Any]:
        out = {"claim": self.claim, "status": self.status.value, "detail": self.detail}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def _fmt(obj: Any) -> Any:
    if isinstance(obj, (frozenset, set)):
        return sorted(obj)
    if isinstance(obj, (list, tuple)):
        return [_fmt(x) for x in obj]
    if obj is None or isinstance(obj, (str, int, float, bool)):
        return obj
    return str(obj)


def _counter(claim: str, detail: str, instance: ColouredInstance, partition: ArcPartition | None,
             obj: Any = None) -> Verdict:
    return Verdict(claim, Status.COUNTEREXAMPLE, detail,
                   {"instance": serialize_instance(instance, partition), "object": _fmt(obj)})


def _naive_is_h_kernel(instance: ColouredInstance, K: frozenset) -> bool:
    return K in kernels_of_arcs(instance.vertices, naive_closure_arcs(instance))


def _check_lemma(instance, partition, limit, cross_check):
    bad = non_h_cycle(instance, limit)
    if bad is not None:
        return Verdict("lemma", Status.HYPOTHESIS_NOT_MET, f"cycle {bad} is not an H-cycle")
    closure = h_closure(instance)
    if cross_check and set(closure.arcs) != naive_closure_arcs(instance):
        return _counter("lemma", "H-closure disagrees with walk enumeration", instance, partition)
    fast = every_cycle_has_symmetric_arc(closure)
    slow = all(any((b, a) in closure.arcs for a, b in c.arcs()) for c in iter_simple_cycles(closure))
    if fast != slow:
        return _counter("lemma", "symmetric-arc predicate disagrees with cycle enumeration",
                        instance, partition)
    if not fast:
        return _counter("lemma", "closure has a cycle without symmetric arc", instance, partition,
                        asymmetric_cycle(closure))
    return Verdict("lemma", Status.HOLDS, "every closure cycle has a symmetric arc")


def _check_theorem1(instance, partition, limit, cross_check):
    try:
        K = h_kernel_via_closure(instance, limit)
    except HypothesisViolation as exc:
        return Verdict("theorem1", Status.HYPOTHESIS_NOT_MET, str(exc))
    except Counterexample as exc:
        return _counter("theorem1", str(exc), instance, partition, exc.obj)
    if not is_h_kernel(instance, K):
        return _counter("theorem1", "returned set is not an H-kernel", instance, partition, K)
    if len(instance.vertices) <= MAX_KERNEL_VERTICES and K not in find_h_kernels_bruteforce(instance):
        return _counter("theorem1", "returned set missing from brute-force H-kernels", instance, partition, K)
    if cross_check and not _naive_is_h_kernel(instance, K):
        return _counter("theorem1", "returned set fails the enumeration oracle", instance, partition, K)
    return Verdict("theorem1", Status.HOLDS, f"H-kernel {_fmt(K)}")


def _need_partition(claim: str, partition: ArcPartition | None, blocks: int | None = 2) -> None:
    if partition is None:
        raise InvalidArgument(f"claim {claim} needs an arc partition")
    if blocks is not None and len(partition) != blocks:
        raise InvalidArgument(f"claim {claim} needs a {blocks}-block partition, got {len(partition)}")


def _naive_semikernel(instance: ColouredInstance, partition: ArcPartition, S: frozenset) -> bool:
    full = naive_reach_all(instance)
    if any((full[u] & S) - {u} for u in S):
        return False
    in_e2 = naive_reach_all(instance, partition.e2)
    from_s = set().union(*(in_e2[s] for s in S)) if S else set()
    return all(full[z] & S for z in from_s - S)


def _check_theorem2(instance, partition, limit, cross_check):
    _need_partition("theorem2", partition)
    if not instance.vertices:
        return Verdict("theorem2", Status.HYPOTHESIS_NOT_MET, "empty digraph")
    try:
        chase = chase_witnesses(instance, partition, limit)
    except HypothesisViolation as exc:
        return Verdict("theorem2", Status.HYPOTHESIS_NOT_MET, str(exc))
    except Counterexample as exc:
        return _counter("theorem2", str(exc), instance, partition, exc.obj)
    S = frozenset({chase.result})
    if not is_h_semikernel_mod(instance, partition, S):
        return _counter("theorem2", "chase result is not a semikernel", instance, partition, chase.vertices)
    if cross_check and not _naive_semikernel(instance, partition, S):
        return _counter("theorem2", "chase result fails the enumeration oracle", instance, partition,
                        chase.vertices)
    return Verdict("theorem2", Status.HOLDS, f"singleton semikernel {chase.result} via {'->'.join(chase.vertices)}")


def _check_theorem3(instance, partition, limit, cross_check):
    _need_partition("theorem3", partition)
    bad = non_h_cycle(restrict_arcs(instance, partition.e1), limit)
    if bad is not None:
        return Verdict("theorem3", Status.HYPOTHESIS_NOT_MET, f"cycle {bad} of D1 is not an H-cycle")
    sdg = build_semikernel_digraph(instance, partition, MAX_SEMIKERNEL_VERTICES)
    if cross_check:
        for S in sdg.nodes:
            if not _naive_semikernel(instance, partition, S):
                return _counter("theorem3", "semikernel fails the enumeration oracle", instance, partition, S)
    cyc = sdg.find_cycle()
    if cyc is not None:
        return _counter("theorem3", "semikernel digraph has a cycle", instance, partition, cyc)
    return Verdict("theorem3", Status.HOLDS, f"acyclic semikernel digraph on {len(sdg.nodes)} semikernels")


def _check_theorem4(instance, partition, limit, cross_check):
    _need_partition("theorem4", partition)
    if len(instance.vertices) > MAX_SEMIKERNEL_VERTICES:
        raise ResourceLimitError(f"theorem4 needs |V| <= {MAX_SEMIKERNEL_VERTICES}", bound="vertices")
    try:
        K = h_kernel_via_theorem4(instance, partition, MAX_SEMIKERNEL_VERTICES, limit)
    except HypothesisViolation as exc:
        return Verdict("theorem4", Status.HYPOTHESIS_NOT_MET, "unmet: " + ", ".join(exc.failed))
    except Counterexample as exc:
        kernels = find_h_kernels_bruteforce(instance)
        why = "no H-kernel exists at all" if not kernels else f"H-kernels exist: {_fmt(kernels)}"
        return _counter("theorem4", f"{exc} ({why})", instance, partition, exc.obj)
    if K not in find_h_kernels_bruteforce(instance):
        return _counter("theorem4", "returned set missing from brute-force H-kernels", instance, partition, K)
    if cross_check and not _naive_is_h_kernel(instance, K):
        return _counter("theorem4", "returned set fails the enumeration oracle", instance, partition, K)
    return Verdict("theorem4", Status.HOLDS, f"H-kernel {_fmt(K)}")


def _check_corollary(claim: str, mode: str):
    def check(instance, partition, limit, cross_check):
        _need_partition(claim, partition, blocks=None)
        if len(instance.vertices) > MAX_SEMIKERNEL_VERTICES:
            raise ResourceLimitError(f"{claim} needs |V| <= {MAX_SEMIKERNEL_VERTICES}", bound="vertices")
        failed = corollary_hypotheses(instance, partition, mode, limit)
        if failed:
            return Verdict(claim, Status.HYPOTHESIS_NOT_MET, "unmet: " + ", ".join(n for n, _ in failed))
        try:
            derived = derive_partition_corollary(instance, partition, mode, limit)
        except Counterexample as exc:
            return _counter(claim, str(exc), instance, partition)
        kernels = find_h_kernels_bruteforce(instance)
        note = ""
        try:
            K = h_kernel_via_theorem4(instance, derived, MAX_SEMIKERNEL_VERTICES, limit)
        except HypothesisViolation as exc:
            K = None
            note = "derived (E1, E2) misses " + ", ".join(exc.failed) + "; conclusion checked by brute force"
        except Counterexample as exc:
            return _counter(claim, f"on derived partition: {exc}", instance, derived, exc.obj)
        if K is not None and K not in kernels:
            return _counter(claim, "returned set missing from brute-force H-kernels", instance, derived, K)
        if not kernels:
            return _counter(claim, "no H-kernel exists", instance, partition)
        found = K if K is not None else kernels[0]
        return Verdict(claim, Status.HOLDS, f"H-kernel {_fmt(found)}" + (f" ({note})" if note else ""))

    return check


def _check_walk_path(instance, partition, limit, cross_check):
    bad = non_h_cycle(instance, limit)
    if bad is not None:
        return Verdict("walk-implies-path", Status.HYPOTHESIS_NOT_MET, f"cycle {bad} is not an H-cycle")
    paths = h_path_closure(instance)
    if paths.arcs != h_closure(instance).arcs:
        missing = sorted(h_closure(instance).arcs - paths.arcs)
        return Verdict("walk-implies-path", Status.HYPOTHESIS_NOT_MET,
                       f"H-walk without H-path for {missing[0][0]}->{missing[0][1]}")
    try:
        K = h_kernel_via_closure(instance, limit)
    except Counterexample as exc:
        return _counter("walk-implies-path", str(exc), instance, partition, exc.obj)
    if not is_kernel(paths, K):
        return _counter("walk-implies-path", "H-kernel by walks is not an H-kernel by paths", instance, partition, K)
    return Verdict("walk-implies-path", Status.HOLDS, f"H-kernel by paths {_fmt(K)}")


_CHECKS = {
    "lemma": _check_lemma,
    "theorem1": _check_theorem1,
    "theorem2": _check_theorem2,
    "theorem3": _check_theorem3,
    "theorem4": _check_theorem4,
    "corollary5": _check_corollary("corollary5", "bipartite"),
    "corollary6": _check_corollary("corollary6", "strong-no-odd"),
    "walk-implies-path": _check_walk_path,
}


def verify_claim(instance: ColouredInstance, partition: ArcPartition | None, claim: str,
                 limit: CycleEnumerationLimit | None = None, cross_check: bool = True) -> Verdict:
    """Check one claim on one instance.

    The hypothesis is checked first; if it holds the conclusion is computed
    by the library pipeline and re-validated by brute force.  Resource
    limits become a ``resource-limit`` verdict rather than an exception.
    """
    if claim not in _CHECKS:
        raise InvalidArgument(f"unknown claim {claim!r}; expected one of {', '.join(CLAIMS)}")
    try:
        return _CHECKS[claim](instance, partition, limit, cross_check)
    except ResourceLimitError as exc:
        return Verdict(claim, Status.RESOURCE_LIMIT, str(exc))


def replay(verdict: Verdict, limit: CycleEnumerationLimit | None = None) -> Verdict:
    """Re-run a counterexample from its serialized witness."""
    if verdict.witness is None:
        raise InvalidArgument("verdict carries no witness")
    instance, partition = parse_instance(verdict.witness["instance"])
    return verify_claim(instance, partition, verdict.claim, limit)


# -- campaigns ---------------------------------------------------------------


def derive_seed(seed: int, index: int) -> int:
    return (seed * 0x9E3779B97F4A7C15 + index * 0xBF58476D1CE4E5B9 + 1) % (1 << 64)


@dataclass(frozen=True)
class CampaignConfig:
    claims: tuple[str, ...]
    generators: tuple[GeneratorParams, ...]
    instances: int
    seed: int = 0
    workers: int = 1
    cross_check: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "claims", tuple(self.claims))
        object.__setattr__(self, "generators", tuple(
            g if isinstance(g, GeneratorParams) else GeneratorParams(**g) for g in self.generators))
        for c in self.claims:
            if c not in _CHECKS:
                raise InvalidArgument(f"unknown claim {c!r}")
        if self.instances < 0 or self.workers < 1:
            raise InvalidArgument("instances must be >= 0 and workers >= 1")
        if self.instances and not self.generators:
            raise InvalidArgument("a campaign with instances needs at least one generator")
        if PARTITION_CLAIMS & set(self.claims):
            for g in self.generators:
                if g.partition_blocks < 1:
                    raise InvalidArgument("partition claims need generators with partition_blocks >= 1")

    @classmethod
    def from_dict(cls, doc: dict[str, Any]) -> CampaignConfig:
        known = {"claims", "generators", "instances", "seed", "workers", "cross_check"}
        unknown = set(doc) - known
        if unknown:
            raise InvalidArgument(f"unknown campaign keys {sorted(unknown)}")
        return cls(**doc)

    def to_dict(self) -> dict[str, Any]:
        return {
            "claims": list(self.claims),
            "generators": [asdict(g) for g in self.generators],
            "instances": self.instances,
            "seed": self.seed,
            "workers": self.workers,
            "cross_check": self.cross_check,
        }


@dataclass
class InstanceRecord:
    index: int
    seed: int
    strategy: str
    attempts: int
    verdicts: list[Verdict]
    generation_error: str | None = None


@dataclass
class CampaignReport:
    config: CampaignConfig
    records: list[InstanceRecord] = field(default_factory=list)
    wall_clock_seconds: float = 0.0

    def status_counts(self) -> dict[str, dict[str, int]]:
        out: dict[str, Counter] = {c: Counter() for c in self.config.claims}
        for r in self.records:
            for v in r.verdicts:
                out[v.claim][v.status.value] += 1
        return {c: {s.value: out[c][s.value] for s in Status} for c in self.config.claims}

    def acceptance_rates(self) -> dict[str, dict[str, Any]]:
        acc: dict[str, list[int]] = {}
        for r in self.records:
            a = acc.setdefault(r.strategy, [0, 0])
            a[0] += 0 if r.generation_error else 1
            a[1] += r.attempts
        return {s: {"accepted": a, "attempts": t, "rate": round(a / t, 6) if t else 0.0}
                for s, (a, t) in sorted(acc.items())}

    def counterexamples(self) -> list[dict[str, Any]]:
        out = []
        for r in self.records:
            for v in r.verdicts:
                if v.status is Status.COUNTEREXAMPLE:
                    out.append({"index": r.index, "seed": r.seed, **v.to_dict()})
        return out

    @property
    def found_counterexample(self) -> bool:
        return any(v.status is Status.COUNTEREXAMPLE for r in self.records for v in r.verdicts)

    def body(self) -> dict[str, Any]:
        """Everything except timing; byte-identical for identical configs."""
        return {
            "rng": RNG_ALGORITHM,
            "config": self.config.to_dict(),
            "instances": len(self.records),
            "generation_errors": sum(1 for r in self.records if r.generation_error),
            "status_counts": self.status_counts(),
            "acceptance_rates": self.acceptance_rates(),
            "counterexamples": self.counterexamples(),
        }

    def to_dict(self) -> dict[str, Any]:
        return {**self.body(), "timing": {"wall_clock_seconds": round(self.wall_clock_seconds, 3)}}

    def to_json(self, include_timing: bool = True) -> str:
        doc = self.to_dict() if include_timing else self.body()
        return json.dumps(doc, indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = [f"campaign: {len(self.records)} instances, seed {self.config.seed}, rng {RNG_ALGORITHM}"]
        for claim, counts in self.status_counts().items():
            parts = ", ".join(f"{k}={v}" for k, v in counts.items())
            lines.append(f"  {claim}: {parts}")
        for strat, rate in self.acceptance_rates().items():
            lines.append(f"  generator {strat}: {rate['accepted']}/{rate['attempts']} draws accepted")
        cx = self.counterexamples()
        lines.append(f"  counterexamples: {len(cx)}")
        for c in cx:
            lines.append(f"    #{c['index']} {c['claim']}: {c['detail']}")
        lines.append(f"  wall clock: {self.wall_clock_seconds:.2f}s")
        return "\n".join(lines)


def _run_one(config: CampaignConfig, index: int) -> InstanceRecord:
    gen = config.generators[index % len(config.generators)]
    seed = derive_seed(config.seed, index)
    params = replace(gen, seed=seed)
    try:
        g = generate_instance(params)
    except ResourceLimitError as exc:
        verdicts = [Verdict(c, Status.RESOURCE_LIMIT, str(exc)) for c in config.claims]
        return InstanceRecord(index, seed, gen.strategy, params.max_attempts, verdicts, str(exc))
    verdicts = [verify_claim(g.instance, g.partition, c, cross_check=config.cross_check) for c in config.claims]
    return InstanceRecord(index, seed, gen.strategy, g.attempts, verdicts)


def _run_chunk(args: tuple[CampaignConfig, Sequence[int]]) -> list[InstanceRecord]:
    config, indices = args
    return [_run_one(config, i) for i in indices]


def run_campaign(config: CampaignConfig) -> CampaignReport:
    start = time.perf_counter()
    indices = list(range(config.instances))
    if config.workers == 1 or len(indices) < 2:
        records = [_run_one(config, i) for i in indices]
    else:
        chunks = [indices[k::config.workers] for k in range(config.workers)]
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            records = [r for chunk in pool.map(_run_chunk, [(config, c) for c in chunks]) for r in chunk]
    records.sort(key=lambda r: r.index)
    return CampaignReport(config, records, time.perf_counter() - start)
