"""Support/unweighted vertex partition induced by a canonical optimal
fractional matching, refined by a maximum matching between the two sides.

Parts: v11/v12 split the support side, v21/v22 the unweighted side;
v11 and v21 are the endpoints of a maximum set of independent edges
between the sides (the pairing), s its size, and x collects the 1-edge
partners of v11 vertices. Five structural properties are verified on
every constructed partition; their textbook exchange arguments all raise
the matching value, so on a certified optimum a violation is an internal
error, not a reachable state.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Tuple

from .bipartite import BipartiteGraph, hopcroft_karp
from .errors import InternalInconsistencyError, PreconditionError
from .fm import FractionalMatching, alpha2, canonical_fm, canonicalize_fm
from .graph import Graph, VertexSet, bits
from .halfint import HalfInt

Pairing = Tuple[Tuple[int, int], ...]


@dataclass(frozen=True)
class GoodPartition:
    v11: VertexSet
    v12: VertexSet
    v21: VertexSet
    v22: VertexSet
    x: VertexSet
    s: int
    t: HalfInt
    fm: FractionalMatching
    pairing: Pairing

    @property
    def support_side(self) -> VertexSet:
        return self.v11 | self.v12

    @property
    def unweighted_side(self) -> VertexSet:
        return self.v21 | self.v22


@dataclass(frozen=True)
class PropertyReport:
    """Outcome of the five structural checks; True means the property holds."""

    one_edge_no_common_v2_neighbor: bool
    v11_internal_edges_unweighted: bool
    v11_all_full: bool
    x_independent: bool
    no_edge_x_to_v2: bool

    def all_ok(self) -> bool:
        return (
            self.one_edge_no_common_v2_neighbor
            and self.v11_internal_edges_unweighted
            and self.v11_all_full
            and self.x_independent
            and self.no_edge_x_to_v2
        )

    def failures(self) -> List[str]:
        return [name for name, ok in self.__dict__.items() if not ok]


def check_partition_structure(g: Graph, p: GoodPartition) -> None:
    """Raise ValueError unless p is structurally consistent with g."""
    parts = [p.v11, p.v12, p.v21, p.v22]
    union = 0
    total = 0
    for part in parts:
        for v in part:
            union |= 1 << v
        total += len(part)
    if total != g.n or union != (1 << g.n) - 1:
        raise ValueError("parts do not partition the vertex set")
    if p.fm.host != g:
        raise ValueError("matching belongs to a different graph")
    support = p.fm.support_mask()
    if _mask(p.v11 | p.v12) != support or _mask(p.v21 | p.v22) != support ^ ((1 << g.n) - 1):
        raise ValueError("sides do not match the matching's support")
    if p.t != p.fm.value:
        raise ValueError("t does not equal the matching value")
    if len(p.v11 | p.v12) != p.t.units:
        raise ValueError("support side is not twice the matching value")
    if not (len(p.v11) == len(p.v21) == len(p.x) == p.s == len(p.pairing)):
        raise ValueError("pairing sizes disagree with s")
    if not p.x <= p.v12:
        raise ValueError("x is not contained in v12")
    used = set()
    for u, w in p.pairing:
        if u not in p.v11 or w not in p.v21 or not g.adj(u, w):
            raise ValueError(f"pairing edge ({u},{w}) is not a v11-v21 edge")
        if u in used or w in used:
            raise ValueError("pairing edges are not independent")
        used.add(u)
        used.add(w)


def _mask(vs: FrozenSet[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def _build_partition(g: Graph, f: FractionalMatching) -> GoodPartition:
    v1 = sorted(bits(f.support_mask()))
    v2 = sorted(bits(f.unweighted_mask()))
    cross = BipartiteGraph(
        len(v1),
        len(v2),
        [tuple(j for j, w in enumerate(v2) if g.adj(u, w)) for u in v1],
    )
    m = hopcroft_karp(cross)
    pairing = tuple(
        sorted((v1[i], v2[m.pair_left[i]]) for i in range(len(v1)) if m.pair_left[i] != -1)
    )
    v11 = frozenset(u for u, _ in pairing)
    v21 = frozenset(w for _, w in pairing)
    v12 = frozenset(v1) - v11
    v22 = frozenset(v2) - v21

    partner: Dict[int, int] = {}
    for a, b in f.one_edges():
        partner[a] = b
        partner[b] = a
    x = set()
    for u in v11:
        if u not in partner:
            raise InternalInconsistencyError(f"paired vertex {u} has no weight-1 edge")
        x.add(partner[u])
    if len(x) != m.size or not x <= v12:
        raise InternalInconsistencyError("weight-1 partners of v11 do not land in v12")

    return GoodPartition(
        v11=v11,
        v12=v12,
        v21=v21,
        v22=v22,
        x=frozenset(x),
        s=m.size,
        t=f.value,
        fm=f,
        pairing=pairing,
    )


def verify_partition(g: Graph, p: GoodPartition) -> PropertyReport:
    """Check the five structural properties; returns a report, never raises."""
    v2_mask = _mask(p.v21 | p.v22)
    x_mask = _mask(p.x)
    v11_mask = _mask(p.v11)

    prop_a = True
    for u, v in p.fm.one_edges():
        if g.row(u) & g.row(v) & v2_mask:
            prop_a = False
            break

    prop_b = True
    for u in p.v11:
        for v in bits(g.row(u) & v11_mask):
            if p.fm.weight_units(u, v):
                prop_b = False

    full = p.fm.full_mask()
    prop_c = all((full >> u) & 1 for u in p.v11)

    prop_d = all(g.row(v) & x_mask == 0 for v in p.x)

    prop_e = all(g.row(v) & v2_mask == 0 for v in p.x)

    return PropertyReport(
        one_edge_no_common_v2_neighbor=prop_a,
        v11_internal_edges_unweighted=prop_b,
        v11_all_full=prop_c,
        x_independent=prop_d,
        no_edge_x_to_v2=prop_e,
    )


def good_partition(g: Graph) -> GoodPartition:
    """Partition from the canonical optimal matching and a deterministic
    maximum pairing between the sides. The five properties always hold on
    the result; a failure would mean a value-raising exchange exists on an
    optimal matching and is reported as an internal error via repair."""
    p = _build_partition(g, canonical_fm(g))
    if not verify_partition(g, p).all_ok():
        p = repair(g, p)
    return p


# ---------------------------------------------------------------------------
# Exchange rules. Each helper rewrites the matching along the configuration
# that witnesses a property violation. On feasible inputs every rule either
# raises the value by at least one half-unit or keeps it and strictly
# increases the number of weight-1 edges, so repair's loop measure
# (value, #weight-1 edges) strictly increases per application.


def swap_half_triangle(f: FractionalMatching, u: int, v: int, w: int) -> FractionalMatching:
    """1-edge uv plus a common unweighted neighbour w -> half triangle."""
    if f.weight_units(u, v) != 2 or f.load_units(w) != 0:
        raise InternalInconsistencyError("half-triangle premise does not hold")
    return f.replace({(u, v): 1, (u, w): 1, (v, w): 1})


def swap_v11_edge(
    f: FractionalMatching, u: int, v: int, wu: int, wv: int
) -> FractionalMatching:
    """1-edge uv inside v11 re-routed onto the two pairing partners."""
    if f.weight_units(u, v) != 2 or f.load_units(wu) or f.load_units(wv):
        raise InternalInconsistencyError("v11-edge premise does not hold")
    return f.replace({(u, v): 0, (u, wu): 2, (v, wv): 2})


def swap_x_edge(
    f: FractionalMatching,
    x1: int,
    x2: int,
    u1: int,
    u2: int,
    w1: int,
    w2: int,
) -> FractionalMatching:
    """Edge inside x: drop both 1-edges to v11, match x1x2 and both pairings."""
    if f.weight_units(u1, x1) != 2 or f.weight_units(u2, x2) != 2:
        raise InternalInconsistencyError("x-edge premise does not hold")
    if f.load_units(w1) or f.load_units(w2):
        raise InternalInconsistencyError("pairing partners are not unweighted")
    return f.replace({(u1, x1): 0, (u2, x2): 0, (x1, x2): 2, (u1, w1): 2, (u2, w2): 2})


def swap_x_v2_edge(f: FractionalMatching, u: int, x: int, y: int, w: int) -> FractionalMatching:
    """Edge from x into the unweighted side: re-route through it."""
    if f.weight_units(u, x) != 2:
        raise InternalInconsistencyError("x-to-v2 premise does not hold")
    if y == w:
        return swap_half_triangle(f, u, x, w)
    if f.load_units(y) or f.load_units(w):
        raise InternalInconsistencyError("x-to-v2 targets are not unweighted")
    return f.replace({(u, x): 0, (x, y): 2, (u, w): 2})


def swap_cycle_vertex_out(
    f: FractionalMatching, order: List[int], u: int, w: int
) -> FractionalMatching:
    """Half-cycle vertex u with an unweighted pairing partner w: dissolve the
    cycle, match the remainder as a path, give u the 1-edge uw. Raises value
    on odd cycles; value-neutral but 1-edge-increasing on even ones."""
    if u not in order or f.load_units(w):
        raise InternalInconsistencyError("cycle-exit premise does not hold")
    k = order.index(u)
    rot = order[k:] + order[:k]
    changes: Dict[Tuple[int, int], int] = {}
    for i, a in enumerate(rot):
        b = rot[(i + 1) % len(rot)]
        changes[(min(a, b), max(a, b))] = 0
    for i in range(1, len(rot) - 1, 2):
        a, b = rot[i], rot[i + 1]
        changes[(min(a, b), max(a, b))] = 2
    changes[(min(u, w), max(u, w))] = 2
    return f.replace(changes)


def _attempt_swap(g: Graph, p: GoodPartition, failure: str) -> Tuple[str, FractionalMatching]:
    f = p.fm
    pair_of = dict(p.pairing)
    v2_mask = _mask(p.v21 | p.v22)
    x_mask = _mask(p.x)
    v11_mask = _mask(p.v11)

    if failure == "one_edge_no_common_v2_neighbor":
        for u, v in f.one_edges():
            common = g.row(u) & g.row(v) & v2_mask
            for w in bits(common):
                return "half-triangle", swap_half_triangle(f, u, v, w)
    elif failure == "v11_internal_edges_unweighted":
        for u in sorted(p.v11):
            for v in bits(g.row(u) & v11_mask):
                if f.weight_units(u, v) == 2 and u < v:
                    return "v11-edge", swap_v11_edge(f, u, v, pair_of[u], pair_of[v])
    elif failure == "v11_all_full":
        full = f.full_mask()
        for kind, order in f.half_support_components():
            for u in sorted(p.v11):
                if not (full >> u) & 1 and u in order and kind == "cycle":
                    return "cycle-exit", swap_cycle_vertex_out(f, order, u, pair_of[u])
    elif failure == "x_independent":
        partner = {b: a for a, b in f.one_edges() if b in p.x}
        partner.update({a: b for a, b in f.one_edges() if a in p.x})
        for x1 in sorted(p.x):
            for x2 in bits(g.row(x1) & x_mask):
                if x1 < x2 and x1 in partner and x2 in partner:
                    u1, u2 = partner[x1], partner[x2]
                    if u1 not in pair_of or u2 not in pair_of:
                        break
                    return "x-edge", swap_x_edge(f, x1, x2, u1, u2, pair_of[u1], pair_of[u2])
    elif failure == "no_edge_x_to_v2":
        partner = {}
        for a, b in f.one_edges():
            partner[a] = b
            partner[b] = a
        for x in sorted(p.x):
            for y in bits(g.row(x) & v2_mask):
                u = partner.get(x)
                if u is None or u not in pair_of:
                    break
                return "x-to-v2", swap_x_v2_edge(f, u, x, y, pair_of[u])
    raise InternalInconsistencyError(
        f"property {failure} reported failing but no exchange configuration was found"
    )


def repair(g: Graph, p: GoodPartition) -> GoodPartition:
    """Run exchange rules to a fixpoint on a structurally valid partition.

    Refuses (PreconditionError) when p's matching is not optimal-value:
    the rules assume optimality, and a suboptimal matching should be
    re-extracted, not patched. On an optimal matching a value-raising rule
    cannot legitimately fire, so if one does the partition data contradicts
    the matching and an internal error is raised. Value-neutral rules
    (cycle exits on even half-cycles) are applied and the partition rebuilt;
    each application raises the weight-1 edge count, so the loop terminates.
    """
    check_partition_structure(g, p)
    best = alpha2(g)
    if p.fm.value.units != best:
        raise PreconditionError(
            f"matching value {p.fm.value} is not optimal ({HalfInt(best)}); refusing to repair"
        )
    while True:
        report = verify_partition(g, p)
        if report.all_ok():
            return p
        name, swapped = _attempt_swap(g, p, report.failures()[0])
        if swapped.value.units > best:
            raise InternalInconsistencyError(
                f"{name} exchange raised an optimal matching's value "
                f"{p.fm.value} -> {swapped.value}; partition data is inconsistent"
            )
        if len(swapped.one_edges()) <= len(p.fm.one_edges()):
            raise InternalInconsistencyError(f"{name} exchange did not make progress")
        p = _build_partition(g, canonicalize_fm(g, swapped))


def partition_dump(g: Graph, p: GoodPartition) -> str:
    """JSON debug dump of the parts, pairing, and matching weights."""
    return json.dumps(
        {
            "n": g.n,
            "t": str(p.t),
            "s": p.s,
            "v11": sorted(p.v11),
            "v12": sorted(p.v12),
            "v21": sorted(p.v21),
            "v22": sorted(p.v22),
            "x": sorted(p.x),
            "pairing": [list(e) for e in p.pairing],
            "fm": [[u, v, units] for (u, v), units in p.fm.items()],
        },
        indent=2,
    )
