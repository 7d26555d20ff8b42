"""Whole-population matching numbers for tiny orders.

bulk_alpha2(n) evaluates every labeled graph on n vertices at once by
running the deficiency formula vectorized over edge masks: for each vertex
subset S, a vertex v outside S is isolated in G - S exactly when the graph
mask has no bit in the slots joining v to the rest of V - S. Twice the
matching number is then n minus the best deficiency. Used to cross-check
the per-graph solver over full enumerations without a Python-level loop
per graph.
"""

from __future__ import annotations

import numpy as np

from .errors import PreconditionError
from .graph import edge_slots

BULK_MAX_N = 7


def bulk_alpha2(n: int) -> np.ndarray:
    """Array a with a[mask] = 2 * (fractional matching number) of
    Graph.from_mask(n, mask), for every mask at once. n <= 7 only."""
    if not 0 <= n <= BULK_MAX_N:
        raise PreconditionError(f"bulk evaluation limited to n <= {BULK_MAX_N}, got {n}")
    slots = edge_slots(n)
    total = 1 << len(slots)
    masks = np.arange(total, dtype=np.uint32)
    best = np.full(total, -127, dtype=np.int8)
    for s in range(1 << n):
        acc = np.zeros(total, dtype=np.int8)
        for v in range(n):
            if s >> v & 1:
                continue
            out_slots = 0
            for j, (a, b) in enumerate(slots):
                u = b if a == v else a if b == v else -1
                if u >= 0 and not s >> u & 1:
                    out_slots |= 1 << j
            acc += (masks & np.uint32(out_slots)) == 0
        np.maximum(best, acc - np.int8(s.bit_count()), out=best)
    return (np.int8(n) - best).astype(np.int8)
