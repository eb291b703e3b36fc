from __future__ import annotations

from hypothesis import strategies as st

from hkernel.core import ArcPartition, ColouredInstance, Colouring, HostDigraph, PatternDigraph


def inst(arcs, pattern_arcs=(), vertices=None, colours=None):
    """Build an instance from ``(u, v, colour)`` triples."""
    arcs = list(arcs)
    if vertices is None:
        vertices = {x for u, v, _ in arcs for x in (u, v)}
    if colours is None:
        colours = {c for *_, c in arcs} | {x for p in pattern_arcs for x in p}
    return ColouredInstance.build(vertices, arcs, colours, pattern_arcs)


@st.composite
def instances(draw, max_n=5, max_colours=3, min_n=1, partition=False, loops_only=False):
    n = draw(st.integers(min_n, max_n))
    k = draw(st.integers(1, max_colours))
    vs = [f"v{i}" for i in range(n)]
    cs = [f"c{i}" for i in range(k)]
    pairs = [(a, b) for a in vs for b in vs if a != b]
    arcs = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    colouring = {e: draw(st.sampled_from(cs)) for e in sorted(arcs)}
    if loops_only:
        parcs = [(c, c) for c in cs]
    else:
        cpairs = [(a, b) for a in cs for b in cs]
        parcs = draw(st.lists(st.sampled_from(cpairs), unique=True))
    instance = ColouredInstance(HostDigraph(vs, arcs), PatternDigraph(cs, parcs), Colouring(colouring))
    if not partition:
        return instance
    labels = {e: draw(st.integers(0, 1)) for e in sorted(arcs)}
    return instance, ArcPartition.from_labels(labels, 2)


# -- acceptance summary --------------------------------------------------------

_ACCEPTANCE: list[tuple[str, str]] = []


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        name = report.nodeid.split("::")[-1].removeprefix("test_")
        _ACCEPTANCE.append((name, "PASS" if report.passed else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _ACCEPTANCE:
        terminalreporter.write_line(f"{outcome}  {name}")
