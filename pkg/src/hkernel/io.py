"""The ``hcd`` instance file format.

A line-oriented UTF-8 text format; ``#`` starts a comment::

    hcd 1
    colour a
    colour b
    hedge a b
    vertex u
    vertex v
    blocks 2
    arc u v a block=1

``blocks <n>`` is present iff the document carries an arc partition; every
arc then has ``block=<k>`` with 1 <= k <= n (so empty blocks survive a round
trip).  :func:`serialize_instance` writes sections in the order above with
entries sorted, which makes its output byte-deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import ArcPartition, ColouredInstance, Colouring, HostDigraph, PatternDigraph
from .errors import InvalidArgument

MAGIC = "hcd"
VERSION = "1"


class ParseError(InvalidArgument):
    def __init__(self, message: str, line: int, column: int, kind: str = "syntax"):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.kind = kind


@dataclass
class _Tok:
    text: str
    line: int
    col: int


def _tokens(line: str, lineno: int) -> list[_Tok]:
    body = line.split("#", 1)[0]
    out = []
    i = 0
    while i < len(body):
        if body[i].isspace():
            i += 1
            continue
        j = i
        while j < len(body) and not body[j].isspace():
            j += 1
        out.append(_Tok(body[i:j], lineno, i + 1))
        i = j
    return out


def parse_instance(text: str) -> tuple[ColouredInstance, ArcPartition | None]:
    colours: dict[str, _Tok] = {}
    hedges: dict[tuple[str, str], tuple[_Tok, _Tok]] = {}
    vertices: dict[str, _Tok] = {}
    arcs: dict[tuple[str, str], tuple[_Tok, _Tok, _Tok, _Tok, _Tok | None]] = {}
    blocks_decl: tuple[int, _Tok] | None = None
    seen_magic = False

    def need(toks: list[_Tok], n: int, usage: str) -> None:
        if len(toks) != n:
            t = toks[n] if len(toks) > n else toks[-1]
            raise ParseError(f"expected `{usage}`", t.line, t.col)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = _tokens(raw, lineno)
        if not toks:
            continue
        head = toks[0]
        if not seen_magic:
            if head.text != MAGIC or len(toks) != 2 or toks[1].text != VERSION:
                raise ParseError(f"document must start with `{MAGIC} {VERSION}`", head.line, head.col)
            seen_magic = True
            continue
        kw = head.text
        if kw == "colour":
            need(toks, 2, "colour <id>")
            c = toks[1]
            if c.text in colours:
                raise ParseError(f"duplicate colour {c.text!r}", c.line, c.col, "duplicate-colour")
            colours[c.text] = c
        elif kw == "hedge":
            need(toks, 3, "hedge <c1> <c2>")
            key = (toks[1].text, toks[2].text)
            if key in hedges:
                raise ParseError(f"duplicate hedge {key[0]} {key[1]}", head.line, head.col, "duplicate-hedge")
            hedges[key] = (toks[1], toks[2])
        elif kw == "vertex":
            need(toks, 2, "vertex <id>")
            v = toks[1]
            if v.text in vertices:
                raise ParseError(f"duplicate vertex {v.text!r}", v.line, v.col, "duplicate-vertex")
            vertices[v.text] = v
        elif kw == "arc":
            if len(toks) not in (4, 5):
                raise ParseError("expected `arc <u> <v> <colour> [block=<k>]`", head.line, head.col)
            u, v, c = toks[1], toks[2], toks[3]
            blk = toks[4] if len(toks) == 5 else None
            if u.text == v.text:
                raise ParseError(f"loop at {u.text!r}: D must be loopless", u.line, u.col, "loop")
            key = (u.text, v.text)
            if key in arcs:
                first = arcs[key][0].line
                raise ParseError(f"duplicate arc {u.text} {v.text} (first on line {first})",
                                 head.line, head.col, "duplicate-arc")
            arcs[key] = (head, u, v, c, blk)
        elif kw == "blocks":
            need(toks, 2, "blocks <n>")
            if blocks_decl is not None:
                raise ParseError("duplicate blocks declaration", head.line, head.col)
            try:
                n = int(toks[1].text)
            except ValueError:
                raise ParseError("block count must be an integer", toks[1].line, toks[1].col) from None
            if n < 1:
                raise ParseError("block count must be positive", toks[1].line, toks[1].col)
            blocks_decl = (n, toks[1])
        else:
            raise ParseError(f"unknown directive {kw!r}", head.line, head.col)

    if not seen_magic:
        raise ParseError(f"document must start with `{MAGIC} {VERSION}`", 1, 1)

    for (a, b), (ta, tb) in hedges.items():
        for name, tok in ((a, ta), (b, tb)):
            if name not in colours:
                raise ParseError(f"unknown colour {name!r}", tok.line, tok.col, "unknown-colour")

    labels: dict[tuple[str, str], int] = {}
    colouring = {}
    for key, (head, u, v, c, blk) in arcs.items():
        for tok in (u, v):
            if tok.text not in vertices:
                raise ParseError(f"unknown vertex {tok.text!r}", tok.line, tok.col, "unknown-vertex")
        if c.text not in colours:
            raise ParseError(f"unknown colour {c.text!r}", c.line, c.col, "unknown-colour")
        colouring[key] = c.text
        if blk is not None:
            if blocks_decl is None:
                raise ParseError("block label without a `blocks <n>` declaration", blk.line, blk.col)
            if not blk.text.startswith("block="):
                raise ParseError("expected `block=<k>`", blk.line, blk.col)
            try:
                k = int(blk.text[len("block="):])
            except ValueError:
                raise ParseError("block label must be an integer", blk.line, blk.col) from None
            if not 1 <= k <= blocks_decl[0]:
                raise ParseError(f"block {k} outside 1..{blocks_decl[0]}", blk.line, blk.col)
            labels[key] = k - 1
        elif blocks_decl is not None:
            raise ParseError("arc lacks a block label", head.line, head.col, "missing-block")

    instance = ColouredInstance(
        HostDigraph(vertices, arcs),
        PatternDigraph(colours, hedges),
        Colouring(colouring),
    )
    partition = None
    if blocks_decl is not None:
        partition = ArcPartition.from_labels(labels, blocks_decl[0])
    return instance, partition


def serialize_instance(instance: ColouredInstance, partition: ArcPartition | None = None) -> str:
    lines = [f"{MAGIC} {VERSION}"]
    lines += [f"colour {c}" for c in sorted(instance.pattern.vertices)]
    lines += [f"hedge {a} {b}" for a, b in sorted(instance.pattern.arcs)]
    lines += [f"vertex {v}" for v in sorted(instance.vertices)]
    block = None
    if partition is not None:
        block = partition.block_of()
        lines.append(f"blocks {len(partition)}")
    for a, b in sorted(instance.arcs):
        line = f"arc {a} {b} {instance.colouring[(a, b)]}"
        if block is not None:
            line += f" block={block[(a, b)] + 1}"
        lines.append(line)
    return "\n".join(lines) + "\n"


def read_instance(path: str) -> tuple[ColouredInstance, ArcPartition | None]:
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read())


def write_instance(path: str, instance: ColouredInstance, partition: ArcPartition | None = None) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize_instance(instance, partition))
