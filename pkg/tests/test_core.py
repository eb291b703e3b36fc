import pytest
from hypothesis import given, strategies as st

from hkernel.core import (
    ArcPartition,
    ColouredInstance,
    Colouring,
    HostDigraph,
    PatternDigraph,
    Walk,
    check_partition,
    colour_sequence,
    induced_subdigraph,
    restrict_arcs,
    validate,
)
from hkernel.errors import InvalidArgument

from conftest import inst, instances


def test_validate_well_formed():
    assert validate(inst([("u", "v", "a")])).ok


def test_validate_reports_loop():
    bad = ColouredInstance(HostDigraph({"u"}, [("u", "u")]), PatternDigraph({"a"}),
                           Colouring({("u", "u"): "a"}))
    assert "loop" in validate(bad).kinds()


def test_validate_reports_unknown_colour():
    good = inst([("u", "v", "a")])
    bad = ColouredInstance(good.host, good.pattern, Colouring({("u", "v"): "zz"}))
    assert "unknown colour" in validate(bad).kinds()


def test_validate_reports_missing_colour_and_dangling_arc():
    good = inst([("u", "v", "a")])
    bad = ColouredInstance(HostDigraph({"u", "v"}, [("u", "v"), ("v", "x")]), good.pattern,
                           Colouring({("u", "v"): "a"}))
    kinds = validate(bad).kinds()
    assert {"missing-colour", "dangling-arc"} <= kinds


@given(instances())
def test_validate_generated_and_mutated(instance):
    assert validate(instance).ok
    if instance.arcs:
        e = min(instance.arcs)
        dropped = {k: v for k, v in instance.colouring.items() if k != e}
        mutated = ColouredInstance(instance.host, instance.pattern, Colouring(dropped))
        assert "missing-colour" in validate(mutated).kinds()
    v = min(instance.vertices)
    looped = ColouredInstance(HostDigraph(instance.vertices, instance.arcs | {(v, v)}), instance.pattern,
                              Colouring({**instance.colouring, (v, v): min(instance.pattern.vertices)}))
    assert "loop" in validate(looped).kinds()


def test_induced_identity_and_empty():
    d = inst([("u", "v", "a"), ("v", "w", "a")])
    assert induced_subdigraph(d, d.vertices) == d
    empty = induced_subdigraph(d, [])
    assert not empty.vertices and not empty.arcs and not empty.colouring


def test_induced_path_endpoints():
    d = inst([("u", "v", "a"), ("v", "w", "a")])
    sub = induced_subdigraph(d, {"u", "w"})
    assert sub.vertices == {"u", "w"} and not sub.arcs
    assert sub.pattern == d.pattern


def test_induced_unknown_vertex():
    with pytest.raises(InvalidArgument):
        induced_subdigraph(inst([("u", "v", "a")]), {"zz"})


@given(instances(), st.data())
def test_induced_composes(instance, data):
    order = sorted(instance.vertices)
    X = data.draw(st.sets(st.sampled_from(order)))
    Y = data.draw(st.sets(st.sampled_from(sorted(X)))) if X else set()
    assert induced_subdigraph(induced_subdigraph(instance, X), Y) == induced_subdigraph(instance, Y)


def test_restrict_arcs():
    d = inst([("u", "v", "a"), ("v", "u", "b")])
    assert restrict_arcs(d, d.arcs) == d
    assert not restrict_arcs(d, []).arcs
    one = restrict_arcs(d, [("u", "v")])
    assert one.vertices == {"u", "v"} and one.arcs == {("u", "v")}
    assert dict(one.colouring) == {("u", "v"): "a"}
    with pytest.raises(InvalidArgument):
        restrict_arcs(d, [("u", "w")])


def test_colour_sequence():
    d = inst([("u", "v", "a"), ("v", "u", "b")])
    assert colour_sequence(d, Walk(["u"])) == ()
    assert colour_sequence(d, Walk(["u", "v"])) == ("a",)
    assert colour_sequence(d, Walk(["u", "v", "u"])) == ("a", "b")
    with pytest.raises(InvalidArgument):
        colour_sequence(d, Walk(["v", "w"]))


@given(instances(), st.data())
def test_colour_sequence_length(instance, data):
    # random walk along existing arcs
    v = data.draw(st.sampled_from(sorted(instance.vertices)))
    seq = [v]
    for _ in range(data.draw(st.integers(0, 6))):
        nxt = instance.host.succ[seq[-1]]
        if not nxt:
            break
        seq.append(data.draw(st.sampled_from(nxt)))
    w = Walk(seq)
    assert len(colour_sequence(instance, w)) == w.length


def test_walk_flags():
    assert not Walk(["u"]).closed and Walk(["u"]).length == 0
    assert Walk(["u", "v", "u"]).closed
    with pytest.raises(InvalidArgument):
        Walk([])


def test_partition_checks():
    d = inst([("u", "v", "a"), ("v", "u", "b")])
    check_partition(d.host, ArcPartition([[("u", "v")], [("v", "u")]]), n_blocks=2)
    with pytest.raises(InvalidArgument):
        check_partition(d.host, ArcPartition([[("u", "v")], []]))
    with pytest.raises(InvalidArgument):
        check_partition(d.host, ArcPartition([[("u", "v"), ("v", "u")], [("u", "v")]]))
    with pytest.raises(InvalidArgument):
        check_partition(d.host, ArcPartition([d.arcs]), n_blocks=2)


def test_instances_are_hashable_values():
    a = inst([("u", "v", "a")])
    b = inst([("u", "v", "a")])
    assert a == b and hash(a) == hash(b)
    assert len({a, b}) == 1
