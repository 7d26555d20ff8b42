"""Deterministic maximum bipartite matching with a certifying vertex cover."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import FrozenSet, List, Sequence, Tuple

from .errors import InternalInconsistencyError


class BipartiteGraph:
    """Bipartite graph on sides {0..n_left-1} and {0..n_right-1}; adj[u] is
    the ascending tuple of right neighbours of left vertex u."""

    __slots__ = ("n_left", "n_right", "adj")

    def __init__(self, n_left: int, n_right: int, adj: Sequence[Sequence[int]]):
        if len(adj) != n_left:
            raise ValueError(f"expected {n_left} adjacency lists, got {len(adj)}")
        rows: List[Tuple[int, ...]] = []
        for u, nbrs in enumerate(adj):
            row = tuple(sorted(nbrs))
            for v in row:
                if not 0 <= v < n_right:
                    raise ValueError(f"right vertex {v} out of range in row {u}")
            rows.append(row)
        self.n_left = n_left
        self.n_right = n_right
        self.adj = tuple(rows)

    def edge_count(self) -> int:
        return sum(len(r) for r in self.adj)


@dataclass(frozen=True)
class BipartiteMatching:
    """Maximum matching plus the equal-size vertex cover certifying it."""

    size: int
    pair_left: Tuple[int, ...]
    pair_right: Tuple[int, ...]
    cover_left: FrozenSet[int]
    cover_right: FrozenSet[int]


def hopcroft_karp(b: BipartiteGraph) -> BipartiteMatching:
    """Maximum matching via Hopcroft-Karp with a fixed exploration order
    (free vertices and adjacency ascending), so the matching and the derived
    cover are deterministic for a fixed input labeling."""
    nl, nr, adj = b.n_left, b.n_right, b.adj
    pair_l = [-1] * nl
    pair_r = [-1] * nr
    dist = [-1] * nl

    def bfs() -> bool:
        q = deque()
        for u in range(nl):
            if pair_l[u] == -1:
                dist[u] = 0
                q.append(u)
            else:
                dist[u] = -1
        found = False
        while q:
            u = q.popleft()
            for v in adj[u]:
                w = pair_r[v]
                if w == -1:
                    found = True
                elif dist[w] == -1:
                    dist[w] = dist[u] + 1
                    q.append(w)
        return found

    def dfs(u: int) -> bool:
        for v in adj[u]:
            w = pair_r[v]
            if w == -1 or (dist[w] == dist[u] + 1 and dfs(w)):
                pair_l[u] = v
                pair_r[v] = u
                return True
        dist[u] = -1
        return False

    size = 0
    while bfs():
        for u in range(nl):
            if pair_l[u] == -1 and dfs(u):
                size += 1

    # Alternating reachability from the free left vertices gives the
    # minimum vertex cover (uncovered-left union reached-right).
    seen_l = [False] * nl
    seen_r = [False] * nr
    q = deque()
    for u in range(nl):
        if pair_l[u] == -1:
            seen_l[u] = True
            q.append(u)
    while q:
        u = q.popleft()
        for v in adj[u]:
            if pair_l[u] == v or seen_r[v]:
                continue
            seen_r[v] = True
            w = pair_r[v]
            if w != -1 and not seen_l[w]:
                seen_l[w] = True
                q.append(w)
    cover_left = frozenset(u for u in range(nl) if not seen_l[u])
    cover_right = frozenset(v for v in range(nr) if seen_r[v])

    if len(cover_left) + len(cover_right) != size:
        raise InternalInconsistencyError(
            f"cover size {len(cover_left) + len(cover_right)} != matching size {size}"
        )
    for u in range(nl):
        if u in cover_left:
            continue
        for v in adj[u]:
            if v not in cover_right:
                raise InternalInconsistencyError(f"edge ({u},{v}) escapes the cover")

    return BipartiteMatching(
        size=size,
        pair_left=tuple(pair_l),
        pair_right=tuple(pair_r),
        cover_left=cover_left,
        cover_right=cover_right,
    )
