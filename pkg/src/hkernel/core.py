"""Immutable digraphs, arc colourings, partitions and walks.

Vertex and colour identifiers are plain strings; every deterministic choice
downstream uses their natural (lexicographic) order.  Constructors accept
any iterables and freeze them; they do not reject malformed input, that is
the job of :func:`validate`.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from typing import Any

from .errors import InvalidArgument

Vertex = str
Colour = str
Arc = tuple[str, str]


def _freeze_arcs(arcs: Iterable[Arc]) -> frozenset[Arc]:
    return frozenset((a, b) for a, b in arcs)


@dataclass(frozen=True)
class PatternDigraph:
    """The colour digraph H = (U, F).  Loops are allowed."""

    vertices: frozenset[Colour]
    arcs: frozenset[Arc]

    def __init__(self, vertices: Iterable[Colour], arcs: Iterable[Arc] = ()):
        object.__setattr__(self, "vertices", frozenset(vertices))
        object.__setattr__(self, "arcs", _freeze_arcs(arcs))

    @classmethod
    def complete(cls, colours: Iterable[Colour], loops: bool = True) -> PatternDigraph:
        cs = sorted(set(colours))
        return cls(cs, [(a, b) for a in cs for b in cs if loops or a != b])

    @classmethod
    def loops_only(cls, colours: Iterable[Colour]) -> PatternDigraph:
        cs = sorted(set(colours))
        return cls(cs, [(c, c) for c in cs])


@dataclass(frozen=True)
class HostDigraph:
    """The coloured digraph D = (V, E); also used for closures."""

    vertices: frozenset[Vertex]
    arcs: frozenset[Arc]
    _cache: dict = field(default_factory=dict, init=False, compare=False, repr=False, hash=False)

    def __init__(self, vertices: Iterable[Vertex], arcs: Iterable[Arc] = ()):
        object.__setattr__(self, "vertices", frozenset(vertices))
        object.__setattr__(self, "arcs", _freeze_arcs(arcs))
        object.__setattr__(self, "_cache", {})

    @property
    def order(self) -> tuple[Vertex, ...]:
        try:
            return self._cache["order"]
        except KeyError:
            out = self._cache["order"] = tuple(sorted(self.vertices))
            return out

    @property
    def sorted_arcs(self) -> tuple[Arc, ...]:
        try:
            return self._cache["sorted_arcs"]
        except KeyError:
            out = self._cache["sorted_arcs"] = tuple(sorted(self.arcs))
            return out

    @property
    def succ(self) -> Mapping[Vertex, tuple[Vertex, ...]]:
        """Out-neighbours of every vertex, sorted."""
        try:
            return self._cache["succ"]
        except KeyError:
            pass
        out: dict[Vertex, list[Vertex]] = {v: [] for v in self.order}
        for a, b in self.sorted_arcs:
            out.setdefault(a, []).append(b)
        frozen = {v: tuple(ns) for v, ns in out.items()}
        self._cache["succ"] = frozen
        return frozen

    @property
    def pred(self) -> Mapping[Vertex, tuple[Vertex, ...]]:
        """In-neighbours of every vertex, sorted."""
        try:
            return self._cache["pred"]
        except KeyError:
            pass
        out: dict[Vertex, list[Vertex]] = {v: [] for v in self.order}
        for a, b in sorted((b, a) for a, b in self.arcs):
            out.setdefault(a, []).append(b)
        frozen = {v: tuple(ns) for v, ns in out.items()}
        self._cache["pred"] = frozen
        return frozen

    def has_arc(self, u: Vertex, v: Vertex) -> bool:
        return (u, v) in self.arcs

    def induced(self, keep: Iterable[Vertex]) -> HostDigraph:
        keep = frozenset(keep)
        return HostDigraph(keep, [(a, b) for a, b in self.arcs if a in keep and b in keep])


class Colouring(Mapping):
    """A read-only map from arcs of D to colours (vertices of H)."""

    __slots__ = ("_data", "_hash")

    def __init__(self, assignment: Mapping[Arc, Colour] | Iterable[tuple[Arc, Colour]] = ()):
        items = assignment.items() if isinstance(assignment, Mapping) else assignment
        self._data: dict[Arc, Colour] = {(a, b): c for (a, b), c in items}
        self._hash: int | None = None

    def __getitem__(self, arc: Arc) -> Colour:
        return self._data[arc]

    def __iter__(self) -> Iterator[Arc]:
        return iter(self._data)

    def __len__(self) -> int:
        return len(self._data)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._data.items()))
        return self._hash

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Colouring):
            return self._data == other._data
        if isinstance(other, Mapping):
            return self._data == dict(other)
        return NotImplemented

    def __repr__(self) -> str:
        body = ", ".join(f"{a}->{b}: {c}" for (a, b), c in sorted(self._data.items()))
        return f"Colouring({{{body}}})"

    def used(self) -> frozenset[Colour]:
        return frozenset(self._data.values())

    def as_dict(self) -> dict[Arc, Colour]:
        """A plain dict copy (faster lookups in hot loops)."""
        return dict(self._data)


@dataclass(frozen=True)
class ColouredInstance:
    """An H-coloured digraph: host D, pattern H and the colouring of E(D)."""

    host: HostDigraph
    pattern: PatternDigraph
    colouring: Colouring
    # per-object memo for derived structures (transition digraphs, reachability)
    _cache: dict = field(default_factory=dict, init=False, compare=False, repr=False, hash=False)

    def __post_init__(self) -> None:
        if not isinstance(self.colouring, Colouring):
            object.__setattr__(self, "colouring", Colouring(self.colouring))

    @classmethod
    def build(
        cls,
        vertices: Iterable[Vertex],
        coloured_arcs: Iterable[tuple[Vertex, Vertex, Colour]],
        colours: Iterable[Colour],
        pattern_arcs: Iterable[Arc],
    ) -> ColouredInstance:
        """Convenience constructor from ``(u, v, colour)`` triples."""
        coloured_arcs = list(coloured_arcs)
        host = HostDigraph(vertices, [(u, v) for u, v, _ in coloured_arcs])
        return cls(host, PatternDigraph(colours, pattern_arcs),
                   Colouring({(u, v): c for u, v, c in coloured_arcs}))

    @property
    def vertices(self) -> frozenset[Vertex]:
        return self.host.vertices

    @property
    def arcs(self) -> frozenset[Arc]:
        return self.host.arcs

    def colour(self, arc: Arc) -> Colour:
        return self.colouring[arc]

    def compatible(self, e: Arc, f: Arc) -> bool:
        """True when the colour pair of two arcs is an arc of H."""
        return (self.colouring[e], self.colouring[f]) in self.pattern.arcs


@dataclass(frozen=True)
class ArcPartition:
    """An ordered partition of E(D) into blocks; block 0 is E1, block 1 is E2.

    Blocks may be empty.  Use :func:`check_partition` to verify it against a
    host.
    """

    blocks: tuple[frozenset[Arc], ...]

    def __init__(self, blocks: Iterable[Iterable[Arc]]):
        object.__setattr__(self, "blocks", tuple(_freeze_arcs(b) for b in blocks))

    @classmethod
    def from_labels(cls, labels: Mapping[Arc, int], n_blocks: int | None = None) -> ArcPartition:
        """Build from a map arc -> 0-based block index."""
        n = n_blocks if n_blocks is not None else (max(labels.values(), default=-1) + 1)
        blocks: list[set[Arc]] = [set() for _ in range(n)]
        for arc, k in labels.items():
            if not 0 <= k < n:
                raise InvalidArgument(f"block index {k} out of range for {n} blocks")
            blocks[k].add(arc)
        return cls(blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def block_of(self) -> dict[Arc, int]:
        return {arc: k for k, block in enumerate(self.blocks) for arc in block}

    @property
    def e1(self) -> frozenset[Arc]:
        return self.blocks[0]

    @property
    def e2(self) -> frozenset[Arc]:
        return self.blocks[1]


def check_partition(host: HostDigraph, partition: ArcPartition, n_blocks: int | None = None) -> None:
    """Raise :class:`InvalidArgument` unless ``partition`` partitions E(host)."""
    if n_blocks is not None and len(partition) != n_blocks:
        raise InvalidArgument(f"expected {n_blocks} blocks, got {len(partition)}")
    if len(partition) < 1:
        raise InvalidArgument("a partition needs at least one block")
    seen: set[Arc] = set()
    for k, block in enumerate(partition.blocks):
        if block & seen:
            raise InvalidArgument(f"block {k} overlaps an earlier block: {sorted(block & seen)}")
        seen |= block
    if seen != host.arcs:
        missing = sorted(host.arcs - seen)
        extra = sorted(seen - host.arcs)
        raise InvalidArgument(f"partition does not cover E(D): missing={missing} extra={extra}")


@dataclass(frozen=True)
class Walk:
    """A vertex sequence z0 ... zk; validity against a host is checked on use."""

    vertices: tuple[Vertex, ...]

    def __init__(self, vertices: Iterable[Vertex]):
        vs = tuple(vertices)
        if not vs:
            raise InvalidArgument("a walk needs at least one vertex")
        object.__setattr__(self, "vertices", vs)

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def closed(self) -> bool:
        return self.length >= 1 and self.vertices[0] == self.vertices[-1]

    @property
    def start(self) -> Vertex:
        return self.vertices[0]

    @property
    def end(self) -> Vertex:
        return self.vertices[-1]

    def arcs(self) -> list[Arc]:
        vs = self.vertices
        return [(vs[i], vs[i + 1]) for i in range(len(vs) - 1)]

    def __str__(self) -> str:
        return "->".join(self.vertices)


def walk_arcs(host: HostDigraph, walk: Walk) -> list[Arc]:
    """The arcs of ``walk``, raising if one of them is not an arc of ``host``."""
    arcs = walk.arcs()
    if walk.vertices[0] not in host.vertices:
        raise InvalidArgument(f"walk starts at unknown vertex {walk.vertices[0]!r}")
    for arc in arcs:
        if arc not in host.arcs:
            raise InvalidArgument(f"walk uses non-arc {arc[0]}->{arc[1]}")
    return arcs


# -- validation -------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def kinds(self) -> set[str]:
        return {v.kind for v in self.violations}

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        return "\n".join(f"{v.kind}: {v.detail}" for v in self.violations)


def validate(instance: ColouredInstance) -> ValidationReport:
    """List every broken invariant of ``instance``; empty iff well-formed.

    Kinds reported: ``pattern-dangling-arc``, ``loop``, ``dangling-arc``,
    ``missing-colour``, ``unknown colour``, ``colour-on-non-arc``.
    """
    out: list[Violation] = []
    H, D, col = instance.pattern, instance.host, instance.colouring
    for a, b in sorted(H.arcs):
        if a not in H.vertices or b not in H.vertices:
            out.append(Violation("pattern-dangling-arc", f"H-arc {a}->{b} has an endpoint outside U"))
    for a, b in sorted(D.arcs):
        if a == b:
            out.append(Violation("loop", f"D has a loop at {a}"))
        if a not in D.vertices or b not in D.vertices:
            out.append(Violation("dangling-arc", f"arc {a}->{b} has an endpoint outside V"))
        if (a, b) not in col:
            out.append(Violation("missing-colour", f"arc {a}->{b} is not coloured"))
        elif col[(a, b)] not in H.vertices:
            out.append(Violation("unknown colour", f"arc {a}->{b} has colour {col[(a, b)]!r} not in U"))
    for a, b in sorted(set(col) - D.arcs):
        out.append(Violation("colour-on-non-arc", f"colour given for non-arc {a}->{b}"))
    return ValidationReport(tuple(out))


def require_valid(instance: ColouredInstance) -> None:
    report = validate(instance)
    if not report.ok:
        raise InvalidArgument(f"malformed instance:\n{report}")


# -- restrictions -----------------------------------------------------------


def induced_subdigraph(instance: ColouredInstance, keep: Iterable[Vertex]) -> ColouredInstance:
    keep = frozenset(keep)
    unknown = keep - instance.vertices
    if unknown:
        raise InvalidArgument(f"unknown vertices {sorted(unknown)}")
    host = instance.host.induced(keep)
    return ColouredInstance(host, instance.pattern,
                            Colouring({e: instance.colouring[e] for e in host.arcs}))


def restrict_arcs(instance: ColouredInstance, arcs: Iterable[Arc]) -> ColouredInstance:
    """The spanning subdigraph (V, arcs) with the colouring restricted."""
    arcs = _freeze_arcs(arcs)
    unknown = arcs - instance.arcs
    if unknown:
        raise InvalidArgument(f"unknown arcs {sorted(unknown)}")
    return ColouredInstance(HostDigraph(instance.vertices, arcs), instance.pattern,
                            Colouring({e: instance.colouring[e] for e in arcs}))


def colour_sequence(instance: ColouredInstance, walk: Walk) -> tuple[Colour, ...]:
    return tuple(instance.colouring[e] for e in walk_arcs(instance.host, walk))


def subset_key(s: Iterable[Vertex]) -> tuple[Vertex, ...]:
    """Sort key giving the canonical lexicographic order on vertex sets."""
    return tuple(sorted(s))


def check_vertices(instance_or_host: Any, vs: Iterable[Vertex]) -> frozenset[Vertex]:
    host = instance_or_host.host if isinstance(instance_or_host, ColouredInstance) else instance_or_host
    s = frozenset(vs)
    unknown = s - host.vertices
    if unknown:
        raise InvalidArgument(f"unknown vertices {sorted(unknown)}")
    return s
