import itertools
import random

import pytest
from hypothesis import given, settings

from hkernel.core import HostDigraph
from hkernel.cycles import all_cycles_are_h_cycles, every_cycle_has_symmetric_arc
from hkernel.errors import HypothesisViolation, InvalidArgument, ResourceLimitError
from hkernel.kernel import (
    find_h_kernels_bruteforce,
    find_kernels_bruteforce,
    h_kernel_via_closure,
    is_h_absorbent,
    is_h_independent,
    is_h_kernel,
    is_kernel,
    kernel_constructive_symmetric,
)
from hkernel.naive import kernels_of_arcs, monochromatic_closure_arcs, naive_closure_arcs, naive_kernels
from hkernel.reach import h_closure

from conftest import inst, instances
from test_cycles import digraphs

TRI = HostDigraph("uvw", [("u", "v"), ("v", "w"), ("w", "u")])


def test_kernel_examples():
    assert find_kernels_bruteforce(HostDigraph([], [])) == [frozenset()]
    assert find_kernels_bruteforce(HostDigraph("uv", [("u", "v")])) == [frozenset("v")]
    assert find_kernels_bruteforce(HostDigraph("uv", [("u", "v"), ("v", "u")])) == [frozenset("u"), frozenset("v")]
    assert find_kernels_bruteforce(TRI) == []
    assert is_kernel(HostDigraph("uv", [("u", "v")]), {"v"})
    assert not is_kernel(HostDigraph("uv", [("u", "v")]), {"u"})
    with pytest.raises(InvalidArgument):
        is_kernel(TRI, {"zz"})


def test_bruteforce_guard():
    vs = [f"v{i}" for i in range(5)]
    with pytest.raises(ResourceLimitError):
        find_kernels_bruteforce(HostDigraph(vs, []), size_guard=4)


@settings(max_examples=300, deadline=None)
@given(digraphs())
def test_bruteforce_matches_definition(d):
    got = find_kernels_bruteforce(d)
    assert set(got) == set(naive_kernels(d))
    assert got == sorted(got, key=lambda s: tuple(sorted(s)))
    assert all(is_kernel(d, k) for k in got)


def test_constructive_examples():
    path = HostDigraph("uvw", [("u", "v"), ("v", "w")])
    # the path u->v->w has the unique kernel {u, w}
    assert find_kernels_bruteforce(path) == [frozenset({"u", "w"})]
    assert kernel_constructive_symmetric(path) == frozenset({"u", "w"})
    with pytest.raises(HypothesisViolation) as err:
        kernel_constructive_symmetric(TRI)
    assert "every-cycle-has-symmetric-arc" in err.value.failed


def _dag_plus_symmetric(rng, n):
    vs = [f"v{i:02d}" for i in range(n)]
    arcs = {(vs[i], vs[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.3}
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.15:
                arcs |= {(vs[i], vs[j]), (vs[j], vs[i])}
    return HostDigraph(vs, arcs)


def test_constructive_on_random_dag_plus_symmetric():
    rng = random.Random(7)
    for _ in range(200):
        d = _dag_plus_symmetric(rng, rng.randint(1, 9))
        assert every_cycle_has_symmetric_arc(d)
        assert is_kernel(d, kernel_constructive_symmetric(d))


@settings(max_examples=300, deadline=None)
@given(digraphs())
def test_constructive_whenever_hypothesis_holds(d):
    if every_cycle_has_symmetric_arc(d):
        K = kernel_constructive_symmetric(d)
        assert K in naive_kernels(d)
    else:
        with pytest.raises(HypothesisViolation):
            kernel_constructive_symmetric(d)


def test_h_kernel_examples():
    # u <-> v with loop (a, a): both singletons are H-kernels
    d = inst([("u", "v", "a"), ("v", "u", "a")], [("a", "a")])
    assert find_h_kernels_bruteforce(d) == [frozenset("u"), frozenset("v")]
    # without the loop the H-closure is still u <-> v
    d2 = inst([("u", "v", "a"), ("v", "u", "a")])
    assert find_h_kernels_bruteforce(d2) == [frozenset("u"), frozenset("v")]
    path = inst([("u", "v", "a"), ("v", "w", "a")], [("a", "a")])
    assert find_h_kernels_bruteforce(path) == [frozenset("w")]
    assert is_h_independent(path, {"w"}) and is_h_absorbent(path, {"w"})
    assert not is_h_independent(path, {"u", "w"})
    no_loop = inst([("u", "v", "a"), ("v", "w", "a")])
    assert find_h_kernels_bruteforce(no_loop) == [frozenset({"u", "w"})]


@settings(max_examples=300, deadline=None)
@given(instances(max_n=5))
def test_h_kernels_are_closure_kernels(instance):
    closure_kernels = kernels_of_arcs(instance.vertices, naive_closure_arcs(instance))
    assert set(find_h_kernels_bruteforce(instance)) == set(closure_kernels)
    assert set(find_kernels_bruteforce(h_closure(instance))) == set(closure_kernels)


@settings(max_examples=300, deadline=None)
@given(instances(max_n=5, loops_only=True))
def test_monochromatic_specialisation(instance):
    mono = kernels_of_arcs(instance.vertices, monochromatic_closure_arcs(instance))
    assert set(find_h_kernels_bruteforce(instance)) == set(mono)


def test_via_closure_examples():
    d = inst([("u", "v", "a"), ("v", "u", "a")], [("a", "a")])
    assert h_kernel_via_closure(d) == frozenset("u")
    bad = inst([("u", "v", "a"), ("v", "u", "b")], [("a", "b")])
    with pytest.raises(HypothesisViolation) as err:
        h_kernel_via_closure(bad)
    assert "all-cycles-are-h-cycles" in err.value.failed
    # forced through, the closure u <-> v still gives a kernel
    assert is_h_kernel(bad, h_kernel_via_closure(bad, force=True))


@settings(max_examples=300, deadline=None)
@given(instances(max_n=5))
def test_via_closure_whenever_cycles_are_h_cycles(instance):
    if not all_cycles_are_h_cycles(instance):
        return
    K = h_kernel_via_closure(instance)
    assert K in find_h_kernels_bruteforce(instance)


def test_kernel_spec_examples():
    arcless = HostDigraph("uvw", [])
    assert is_kernel(arcless, "uvw")
    assert find_kernels_bruteforce(arcless) == [frozenset("uvw")]
    assert kernel_constructive_symmetric(arcless) == frozenset("uvw")
    k3 = HostDigraph("uvw", [(a, b) for a in "uvw" for b in "uvw" if a != b])
    assert kernel_constructive_symmetric(k3) == frozenset("u")
    single = inst([("u", "v", "a")])
    assert is_h_kernel(single, {"v"}) and not is_h_kernel(single, set())
    assert is_h_absorbent(single, {"u", "v"}) and not is_h_absorbent(single, set())
    assert is_h_independent(single, {"u"}) and not is_h_independent(single, {"u", "v"})
    assert find_h_kernels_bruteforce(inst([], vertices={"u", "v"}, colours={"a"})) == [frozenset("uv")]


@settings(max_examples=200, deadline=None)
@given(instances(max_n=4))
def test_h_predicates_match_closure_for_every_subset(instance):
    closure = naive_closure_arcs(instance)
    vs = sorted(instance.vertices)
    for r in range(len(vs) + 1):
        for S in itertools.combinations(vs, r):
            s = set(S)
            indep = not any((a, b) in closure for a in S for b in S)
            absorb = all(any((v, w) in closure for w in S) for v in vs if v not in s)
            assert is_h_independent(instance, S) == indep
            assert is_h_absorbent(instance, S) == absorb
            assert is_h_kernel(instance, S) == is_kernel(h_closure(instance), S)
