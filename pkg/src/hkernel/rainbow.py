"""Rainbow directed triangles (C3) and rainbow directed 3-arc paths (P3)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .core import Colour, ColouredInstance, Walk
from .errors import InvalidArgument

RainbowKind = Literal["C3", "P3"]


@dataclass(frozen=True)
class RainbowWitness:
    kind: RainbowKind
    walk: Walk
    colours: tuple[Colour, Colour, Colour]

    def __str__(self) -> str:
        return f"rainbow {self.kind}: {self.walk} coloured {','.join(self.colours)}"


def find_rainbow(instance: ColouredInstance, kind: RainbowKind) -> RainbowWitness | None:
    """The rainbow copy with the lexicographically smallest vertex tuple, if any.

    Scanning in lexicographic order means the first hit is the smallest.
    """
    if kind not in ("C3", "P3"):
        raise InvalidArgument(f"unknown rainbow kind {kind!r}")
    succ = instance.host.succ
    col = instance.colouring
    arcs = instance.arcs
    for u in instance.host.order:
        for v in succ[u]:
            c1 = col[(u, v)]
            for w in succ[v]:
                if w == u:
                    continue
                c2 = col[(v, w)]
                if c2 == c1:
                    continue
                if kind == "C3":
                    if (w, u) in arcs:
                        c3 = col[(w, u)]
                        if c3 != c1 and c3 != c2:
                            return RainbowWitness("C3", Walk((u, v, w, u)), (c1, c2, c3))
                    continue
                for x in succ[w]:
                    if x in (u, v):
                        continue
                    c3 = col[(w, x)]
                    if c3 != c1 and c3 != c2:
                        return RainbowWitness("P3", Walk((u, v, w, x)), (c1, c2, c3))
    return None


def is_rainbow_free(instance: ColouredInstance) -> bool:
    """No rainbow C3 and no rainbow P3."""
    return find_rainbow(instance, "C3") is None and find_rainbow(instance, "P3") is None
