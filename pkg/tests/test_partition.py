"""Good-partition construction, verification, and the exchange rules."""

import json

import pytest

from fracmatch.errors import InternalInconsistencyError, PreconditionError
from fracmatch.fm import FractionalMatching, alpha2
from fracmatch.generators import add_isolates, complete, cycle, disjoint_union, k2pql, path, star
from fracmatch.graph import Graph, bits
from fracmatch.halfint import HalfInt
from fracmatch.partition import (
    GoodPartition,
    _attempt_swap,
    check_partition_structure,
    good_partition,
    partition_dump,
    repair,
    swap_cycle_vertex_out,
    swap_half_triangle,
    swap_v11_edge,
    swap_x_edge,
    swap_x_v2_edge,
    verify_partition,
)


def all_graphs(n):
    for mask in range(1 << (n * (n - 1) // 2)):
        yield Graph.from_mask(n, mask)


# ------------------------------------------------------------- construction


def test_star_partition():
    g = star(8)
    p = good_partition(g)
    assert p.v11 == frozenset({0})
    assert p.v12 == frozenset({1})
    assert p.v21 == frozenset({2})
    assert p.v22 == frozenset({3, 4, 5, 6, 7})
    assert p.x == frozenset({1})
    assert p.s == 1
    assert p.t == HalfInt(2)
    assert p.pairing == ((0, 2),)
    assert verify_partition(g, p).all_ok()


def test_c5_partition():
    g = cycle(5)
    p = good_partition(g)
    assert p.unweighted_side == frozenset()
    assert p.s == 0
    assert p.x == frozenset()
    assert p.t == HalfInt(5)
    assert verify_partition(g, p).all_ok()


def test_two_k2_with_isolates():
    g = add_isolates(disjoint_union(complete(2), complete(2)), 4)
    p = good_partition(g)
    assert p.support_side == frozenset(range(4))
    assert p.s == 0
    assert p.v22 == frozenset(range(4, 8))


def test_double_star_partition():
    g = k2pql(3, 3, 0)
    p = good_partition(g)
    assert p.s == 2
    assert p.v11 == frozenset({0, 1})
    assert p.x == p.v12
    assert verify_partition(g, p).all_ok()


def test_exhaustive_small_orders():
    for n in range(7):
        for g in all_graphs(n):
            p = good_partition(g)
            check_partition_structure(g, p)
            assert verify_partition(g, p).all_ok(), g
            assert len(p.v12) == p.t.units - p.s
            assert len(p.v22) == g.n - p.t.units - p.s
            # the unweighted side is independent
            v2 = p.unweighted_side
            for v in v2:
                assert all(w not in v2 for w in bits(g.row(v)))
            # matching restricted to the support side is fractionally perfect
            for v in p.support_side:
                assert p.fm.load_units(v) == 2


def test_dump_roundtrip():
    g = star(8)
    p = good_partition(g)
    doc = json.loads(partition_dump(g, p))
    assert doc["s"] == 1
    assert doc["t"] == "1"
    assert doc["v22"] == [3, 4, 5, 6, 7]
    assert doc["fm"] == [[0, 1, 2]]


# ------------------------------------------------------------ structure gate


def _p4_suboptimal_partition():
    g = path(4)
    f = FractionalMatching(g, {(1, 2): 2})
    p = GoodPartition(
        v11=frozenset(),
        v12=frozenset({1, 2}),
        v21=frozenset(),
        v22=frozenset({0, 3}),
        x=frozenset(),
        s=0,
        t=HalfInt(2),
        fm=f,
        pairing=(),
    )
    return g, p


def test_repair_refuses_suboptimal():
    g, p = _p4_suboptimal_partition()
    check_partition_structure(g, p)  # structurally fine, value is the issue
    with pytest.raises(PreconditionError):
        repair(g, p)


def test_structure_check_rejects_bad_fields():
    g = star(8)
    p = good_partition(g)
    bad_x = GoodPartition(
        v11=p.v11, v12=p.v12, v21=p.v21, v22=p.v22,
        x=frozenset({3}), s=p.s, t=p.t, fm=p.fm, pairing=p.pairing,
    )
    with pytest.raises(ValueError):
        check_partition_structure(g, bad_x)
    bad_t = GoodPartition(
        v11=p.v11, v12=p.v12, v21=p.v21, v22=p.v22,
        x=p.x, s=p.s, t=HalfInt(4), fm=p.fm, pairing=p.pairing,
    )
    with pytest.raises(ValueError):
        check_partition_structure(g, bad_t)
    overlapping = GoodPartition(
        v11=p.v11, v12=p.v12 | p.v11, v21=p.v21, v22=p.v22,
        x=p.x, s=p.s, t=p.t, fm=p.fm, pairing=p.pairing,
    )
    with pytest.raises(ValueError):
        check_partition_structure(g, overlapping)


# ------------------------------------------------------------ exchange rules


def test_half_triangle_swap_gains_on_suboptimal():
    g = cycle(3)
    f = FractionalMatching(g, {(0, 1): 2})
    out = swap_half_triangle(f, 0, 1, 2)
    assert out.value == HalfInt(3)
    assert out.items() == [((0, 1), 1), ((0, 2), 1), ((1, 2), 1)]


def test_v11_edge_swap():
    # path x-u-v-y with the middle edge matched; re-route to the outside
    g = path(4)  # 0-1-2-3
    f = FractionalMatching(g, {(1, 2): 2})
    out = swap_v11_edge(f, 1, 2, 0, 3)
    assert out.value == HalfInt(4)
    assert out.weight_units(1, 2) == 0


def test_x_edge_swap():
    g = Graph.from_edges(6, [(0, 1), (2, 3), (1, 2), (0, 4), (3, 5)])
    f = FractionalMatching(g, {(0, 1): 2, (2, 3): 2})
    out = swap_x_edge(f, 1, 2, 0, 3, 4, 5)
    assert out.value == HalfInt(6)


def test_x_v2_edge_swap_distinct_targets():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (0, 3)])
    f = FractionalMatching(g, {(0, 1): 2})
    out = swap_x_v2_edge(f, 0, 1, 2, 3)
    assert out.value == HalfInt(4)


def test_x_v2_edge_swap_shared_target():
    g = cycle(3)
    f = FractionalMatching(g, {(0, 1): 2})
    out = swap_x_v2_edge(f, 0, 1, 2, 2)
    assert out.value == HalfInt(3)


def test_cycle_exit_swap_odd():
    g = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 5)])
    f = FractionalMatching(
        g, {(0, 1): 1, (1, 2): 1, (2, 3): 1, (3, 4): 1, (0, 4): 1}
    )
    out = swap_cycle_vertex_out(f, [0, 1, 2, 3, 4], 0, 5)
    assert out.value == HalfInt(6)
    assert out.weight_units(0, 5) == 2


def test_swap_premise_guards():
    g = cycle(3)
    f = FractionalMatching(g, {(0, 1): 1, (1, 2): 1, (0, 2): 1})
    with pytest.raises(InternalInconsistencyError):
        swap_half_triangle(f, 0, 1, 2)


def test_attempt_swap_without_configuration():
    g = disjoint_union(complete(2), complete(2))
    p = good_partition(g)
    with pytest.raises(InternalInconsistencyError):
        _attempt_swap(g, p, "one_edge_no_common_v2_neighbor")


def test_repair_resolves_even_half_cycle():
    """An even half-cycle is a legal optimal matching; a paired vertex on it
    fails the fullness property and the cycle-exit rule must resolve it."""
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4)])
    f = FractionalMatching(g, {(0, 1): 1, (1, 2): 1, (2, 3): 1, (0, 3): 1})
    assert f.value.units == alpha2(g)
    p = GoodPartition(
        v11=frozenset({0}),
        v12=frozenset({1, 2, 3}),
        v21=frozenset({4}),
        v22=frozenset(),
        x=frozenset({2}),
        s=1,
        t=HalfInt(4),
        fm=f,
        pairing=((0, 4),),
    )
    check_partition_structure(g, p)
    assert not verify_partition(g, p).all_ok()
    fixed = repair(g, p)
    assert verify_partition(g, fixed).all_ok()
    assert fixed.x == frozenset({4})
    assert fixed.fm.one_edges() == [(0, 4), (1, 2)]
