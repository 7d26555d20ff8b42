"""Graph enumeration, seeded sampling, and sweep execution.

The random stream is counter-mode splitmix64: graph k of a spec draws its
per-graph seed from finalize(seed + (k+1)*GOLDEN), and edge slot j is
present iff finalize(graph_seed + (j+1)*GOLDEN) < floor(p * 2^64). Every
draw is therefore random-access (no sequential state), which is what lets
sweeps fan out over index ranges and still produce identical output for
any worker count.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .errors import PreconditionError
from .graph import Graph, bits, edge_slots
from .ngbounds import SweepStats, empty_stats, sweep_with_rows

GOLDEN = 0x9E3779B97F4A7C15
_M64 = (1 << 64) - 1

ENUM_DEFAULT_MAX_N = 7
ENUM_HARD_MAX_N = 8


def splitmix64(z: int) -> int:
    z &= _M64
    z ^= z >> 30
    z = (z * 0xBF58476D1CE4E5B9) & _M64
    z ^= z >> 27
    z = (z * 0x94D049BB133111EB) & _M64
    z ^= z >> 31
    return z


def _splitmix64_np(z: np.ndarray) -> np.ndarray:
    z = z.astype(np.uint64, copy=True)
    z ^= z >> np.uint64(30)
    z *= np.uint64(0xBF58476D1CE4E5B9)
    z ^= z >> np.uint64(27)
    z *= np.uint64(0x94D049BB133111EB)
    z ^= z >> np.uint64(31)
    return z


# ---------------------------------------------------------------------------
# Enumeration.


@dataclass(frozen=True)
class EnumerationCursor:
    n: int
    mask: int


def enumeration_count(n: int) -> int:
    return 1 << (n * (n - 1) // 2)


def enumerate_graphs(n: int, allow_large: bool = False) -> Iterator[Graph]:
    """All labeled graphs on n vertices in ascending edge-mask order.
    Guarded at n <= 7 by default; n = 8 (2^28 graphs) needs allow_large."""
    limit = ENUM_HARD_MAX_N if allow_large else ENUM_DEFAULT_MAX_N
    if n > limit:
        raise PreconditionError(
            f"enumeration of n={n} exceeds the guard (limit {limit})"
        )
    if n < 0:
        raise PreconditionError("negative vertex count")
    return (Graph.from_mask(n, mask) for mask in range(enumeration_count(n)))


def graph_signature(g: Graph) -> Tuple:
    """Cheap isomorphism-invariant key (degree sequence plus sorted
    neighbour-degree multisets). Heuristic: distinct graphs may collide, so
    this is for report counting only, never for correctness filters."""
    degs = [g.degree(v) for v in range(g.n)]
    profile = sorted(
        (degs[v], tuple(sorted(degs[u] for u in bits(g.row(v)))))
        for v in range(g.n)
    )
    return (g.n, tuple(profile))


def dedup_by_signature(graphs: Iterator[Graph]) -> Iterator[Graph]:
    seen = set()
    for g in graphs:
        key = graph_signature(g)
        if key not in seen:
            seen.add(key)
            yield g


# ---------------------------------------------------------------------------
# Seeded sampling.


@dataclass(frozen=True)
class SampleSpec:
    n: int
    p_num: int
    p_den: int
    count: int
    seed: int

    def __post_init__(self) -> None:
        if not 2 <= self.n <= 64:
            raise PreconditionError(f"sample order {self.n} outside 2..64")
        if self.p_den <= 0 or not 0 <= self.p_num <= self.p_den:
            raise PreconditionError(
                f"edge probability {self.p_num}/{self.p_den} outside [0, 1]"
            )
        if self.count < 0:
            raise PreconditionError("negative sample count")
        if not 0 <= self.seed <= _M64:
            raise PreconditionError("seed must fit in 64 bits")

    @property
    def probability(self) -> Fraction:
        return Fraction(self.p_num, self.p_den)

    @property
    def threshold(self) -> int:
        return (self.p_num << 64) // self.p_den

    @classmethod
    def parse(cls, text: str) -> "SampleSpec":
        """Parse "n,p,count,seed" with p a fraction or decimal string."""
        parts = text.split(",")
        if len(parts) != 4:
            raise ValueError(f"expected n,p,count,seed, got {text!r}")
        n, p, count, seed = parts
        frac = Fraction(p.strip())
        return cls(
            n=int(n), p_num=frac.numerator, p_den=frac.denominator,
            count=int(count), seed=int(seed, 0),
        )

    def describe(self) -> str:
        return f"{self.n},{self.p_num}/{self.p_den},{self.count},{self.seed}"


def graph_seed(spec: SampleSpec, index: int) -> int:
    return splitmix64(spec.seed + (index + 1) * GOLDEN)


def sample_graph(spec: SampleSpec, index: int) -> Graph:
    """Scalar reference path for one draw; the batch path must agree."""
    if not 0 <= index < spec.count:
        raise PreconditionError(f"index {index} outside 0..{spec.count - 1}")
    gs = graph_seed(spec, index)
    thresh = spec.threshold
    mask = 0
    for j in range(len(edge_slots(spec.n))):
        if splitmix64(gs + (j + 1) * GOLDEN) < thresh:
            mask |= 1 << j
    return Graph.from_mask(spec.n, mask)


def sample_masks(spec: SampleSpec, lo: int, hi: int) -> List[int]:
    """Vectorized edge masks for draws lo..hi-1."""
    if not 0 <= lo <= hi <= spec.count:
        raise PreconditionError(f"range {lo}..{hi} outside 0..{spec.count}")
    if lo == hi:
        return []
    slots = len(edge_slots(spec.n))
    idx = np.arange(lo, hi, dtype=np.uint64)
    gs = _splitmix64_np(np.uint64(spec.seed) + (idx + np.uint64(1)) * np.uint64(GOLDEN))
    if slots == 0:
        return [0] * (hi - lo)
    j = (np.arange(slots, dtype=np.uint64) + np.uint64(1)) * np.uint64(GOLDEN)
    r = _splitmix64_np(gs[:, None] + j[None, :])
    thresh = spec.threshold
    if thresh >= 1 << 64:
        present = np.ones(r.shape, dtype=np.uint8)
    else:
        present = (r < np.uint64(thresh)).astype(np.uint8)
    packed = np.packbits(present, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def sample_graphs(spec: SampleSpec, lo: int = 0, hi: Optional[int] = None,
                  batch: int = 4096) -> Iterator[Graph]:
    if hi is None:
        hi = spec.count
    for start in range(lo, hi, batch):
        stop = min(start + batch, hi)
        for mask in sample_masks(spec, start, stop):
            yield Graph.from_mask(spec.n, mask)


# ---------------------------------------------------------------------------
# Sweep execution with optional process fan-out.


def resolve_workers(workers: Optional[int] = None) -> int:
    if workers is None:
        raw = os.environ.get("FRACMATCH_WORKERS", "1")
        try:
            workers = int(raw)
        except ValueError:
            raise PreconditionError(f"FRACMATCH_WORKERS={raw!r} is not an integer")
    if workers < 1:
        raise PreconditionError(f"worker count must be positive, got {workers}")
    return workers


def _chunk_ranges(total: int, pieces: int) -> List[Tuple[int, int]]:
    if total == 0:
        return []
    pieces = max(1, min(pieces, total))
    step = math.ceil(total / pieces)
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def _sweep_task(args) -> Tuple[SweepStats, List[str]]:
    kind, payload, which, lo, hi = args
    if kind == "enumerate":
        graphs = (Graph.from_mask(payload, mask) for mask in range(lo, hi))
    else:
        graphs = sample_graphs(payload, lo, hi)
    return sweep_with_rows(graphs, which)


def run_sweep(
    which: str,
    *,
    enumerate_n: Optional[int] = None,
    spec: Optional[SampleSpec] = None,
    allow_large: bool = False,
    workers: Optional[int] = None,
) -> Tuple[SweepStats, List[str]]:
    """Evaluate one bound over an enumerated or sampled stream. Rows come
    back sorted by graph6 key, so output is identical for any worker count."""
    if (enumerate_n is None) == (spec is None):
        raise PreconditionError("exactly one of enumerate_n and spec is required")
    workers = resolve_workers(workers)
    if enumerate_n is not None:
        limit = ENUM_HARD_MAX_N if allow_large else ENUM_DEFAULT_MAX_N
        if not 0 <= enumerate_n <= limit:
            raise PreconditionError(
                f"enumeration of n={enumerate_n} exceeds the guard (limit {limit})"
            )
        total = enumeration_count(enumerate_n)
        kind, payload = "enumerate", enumerate_n
    else:
        total = spec.count
        kind, payload = "sample", spec
    tasks = [
        (kind, payload, which, lo, hi)
        for lo, hi in _chunk_ranges(total, workers * 4)
    ]
    stats = empty_stats(which)
    rows: List[str] = []
    if workers == 1:
        results = map(_sweep_task, tasks)
    else:
        pool = ProcessPoolExecutor(max_workers=workers)
        try:
            results = list(pool.map(_sweep_task, tasks))
        finally:
            pool.shutdown()
    for part_stats, part_rows in results:
        stats = stats.merge(part_stats)
        rows.extend(part_rows)
    rows.sort()
    return stats, rows
