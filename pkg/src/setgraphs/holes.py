"""Triangle (3-cycle) counting and per-vertex triangle incidence.

Three routes are provided and deliberately kept apart:

* an exact bit-parallel count on explicit rows: for each edge (u, v) with
  u before v in canonical order, popcount the AND of the two rows restricted
  to vertices after v, so every triangle is counted exactly once at its
  lexicographically first edge;
* the claimed recursion h(n+1) = h(n) + C(2^n, 3) + 4*E(n), evaluated exactly
  as stated so the harness can adjudicate it (it is not ground truth);
* a corrected recursion that accounts for all three ways a triangle can use
  replica vertices, evaluated in closed form over cardinality classes so it
  reaches well beyond materialization range.

The exact kernel packs rows into 64-bit words and walks them with numpy; on
the n = 13 instance (8191 vertices, ~32.7M edges) it finishes in seconds.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb

import numpy as np

from .config import DEFAULT_CAPS, CapExceeded, Caps
from .core import MaterializedGraph, canonical_index, canonical_masks, check_ground_size
from .invariants import degree_closed, edge_count_closed


def h_complete(m: int) -> int:
    """Triangles in the complete graph on m vertices: C(m, 3)."""
    if m < 1:
        raise ValueError(f"vertex count must be positive, got {m}")
    return comb(m, 3)


def _packed_successor_rows(g: MaterializedGraph) -> np.ndarray:
    """Rows as uint64 words keeping only bits above each row's own index."""
    v = g.num_vertices
    words = (v + 63) // 64 or 1
    buf = bytearray()
    for u, row in enumerate(g.rows):
        suc = row >> (u + 1) << (u + 1)
        buf += suc.to_bytes(words * 8, "little")
    return np.frombuffer(bytes(buf), dtype=np.uint64).reshape(v, words)


def _count_range(packed: np.ndarray, masks: np.ndarray, lo: int, hi: int) -> int:
    total = 0
    for u in range(lo, hi):
        blk = packed[u + 1 :] & packed[u]
        pc = np.bitwise_count(blk).sum(axis=1, dtype=np.int64)
        adjacent_to_u = (masks[u + 1 :] & masks[u]) != 0
        total += int(pc[adjacent_to_u].sum())
    return total


def triangle_count_exact(
    g: MaterializedGraph, *, threads: int = 1, caps: Caps = DEFAULT_CAPS
) -> int:
    """Exact triangle count of the materialized graph.

    The work is a flat sum over vertex ranges, so it can be partitioned
    across threads without changing the result.
    """
    if g.n > caps.triangle_exact_max_n:
        raise CapExceeded(
            f"exact triangle count capped at n <= {caps.triangle_exact_max_n}, got n={g.n}"
        )
    v = g.num_vertices
    packed = _packed_successor_rows(g)
    masks = np.array(canonical_masks(g.n), dtype=np.int64)
    if threads <= 1 or v < 256:
        return _count_range(packed, masks, 0, v - 1)
    bounds = np.linspace(0, v - 1, num=8 * threads + 1, dtype=int)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = pool.map(
            lambda se: _count_range(packed, masks, se[0], se[1]),
            zip(bounds[:-1], bounds[1:]),
        )
        return sum(parts)


def triangle_count_claimed(n: int, *, caps: Caps = DEFAULT_CAPS) -> int:
    """The claimed recursion, evaluated literally from the base h(2) = 0.

    Kept separate from ground truth: the harness compares it against the
    exact count and reports the verdict.
    """
    check_ground_size(n, caps.count_max_n)
    if n < 2:
        raise ValueError(f"the claimed recursion starts at n=2, got n={n}")
    h = 0
    for m in range(2, n):
        h = h + comb(1 << m, 3) + 4 * edge_count_closed(m, caps=caps)
    return h


def triangle_count_corrected(n: int, *, caps: Caps = DEFAULT_CAPS) -> int:
    """Corrected recursion for the triangle count, from the base h(1) = 0.

    Extending G(m) to G(m+1) adds, beyond the C(2^m, 3) triples inside the
    replica clique:

    * for every old edge (S, T), one triangle per replica adjacent to both
      ends; there are 2^m - 2^(m-|S|) - 2^(m-|T|) + 2^(m-|S u T|) such
      subsets (count-by-complement over the two ends);
    * for every old vertex, one triangle per pair of adjacent replicas,
      C(d+1, 2) of them (the +1 is the vertex's own replica).

    Both sums are evaluated over cardinality classes: the number of ordered
    subset pairs with |S| = s, |T| = t, |S n T| = j is
    C(m,s) * C(s,j) * C(m-s, t-j).
    """
    check_ground_size(n, caps.count_max_n)
    if n > caps.corrected_max_n:
        raise CapExceeded(
            f"corrected triangle recursion capped at n <= {caps.corrected_max_n}, got n={n}"
        )
    h = 0
    for m in range(1, n):
        replica_clique = comb(1 << m, 3)
        edge_term_doubled = 0
        for s in range(1, m + 1):
            for t in range(1, m + 1):
                for j in range(max(1, s + t - m), min(s, t) + 1):
                    if j == s == t:
                        continue  # the (s,s,s) cell is exactly the diagonal S = T
                    pairs = comb(m, s) * comb(s, j) * comb(m - s, t - j)
                    union = s + t - j
                    common = (
                        (1 << m) - (1 << (m - s)) - (1 << (m - t)) + (1 << (m - union))
                    )
                    edge_term_doubled += pairs * common
        assert edge_term_doubled % 2 == 0
        vertex_term = sum(
            comb(m, k) * comb(degree_closed(m, k) + 1, 2) for k in range(1, m + 1)
        )
        h = h + replica_clique + edge_term_doubled // 2 + vertex_term
    return h


def primitive_degree(g: MaterializedGraph, m: int) -> int:
    """Number of triangles containing the vertex of mask m."""
    v = canonical_index(g.n, m)
    row_v = g.rows[v]
    twice = 0
    rest = row_v
    while rest:
        low = rest & -rest
        u = low.bit_length() - 1
        rest ^= low
        twice += (row_v & g.rows[u]).bit_count()
    assert twice % 2 == 0
    return twice // 2


def primitive_degrees(g: MaterializedGraph) -> tuple[int, ...]:
    """Per-vertex triangle incidence in canonical order (numpy-packed)."""
    v = g.num_vertices
    words = (v + 63) // 64 or 1
    buf = b"".join(row.to_bytes(words * 8, "little") for row in g.rows)
    packed = np.frombuffer(buf, dtype=np.uint64).reshape(v, words)
    masks = np.array(canonical_masks(g.n), dtype=np.int64)
    out = []
    for u in range(v):
        pc = np.bitwise_count(packed & packed[u]).sum(axis=1, dtype=np.int64)
        neighbor = (masks & masks[u]) != 0
        neighbor[u] = False
        twice = int(pc[neighbor].sum())
        out.append(twice // 2)
    return tuple(out)


def apex_primitive_degree(n: int, *, caps: Caps = DEFAULT_CAPS) -> int:
    """Triangle incidence of the full-set vertex: |E| - max degree.

    Every edge not touching the apex forms a triangle with it, because the
    apex meets every other subset.
    """
    check_ground_size(n, caps.count_max_n)
    return edge_count_closed(n, caps=caps) - ((1 << n) - 2)


@dataclass(frozen=True)
class HoleReport:
    """Triangle statistics of G(n); exact fields are None above their caps."""

    n: int
    h_exact: int | None
    h_paper_formula: int | None
    h_corrected: int | None
    apex_primitive_degree: int
    primitive_degree_histogram: dict[int, int] | None

    def as_dict(self) -> dict:
        hist = self.primitive_degree_histogram
        return {
            "n": self.n,
            "h_exact": self.h_exact,
            "h_paper_formula": self.h_paper_formula,
            "h_corrected": self.h_corrected,
            "apex_primitive_degree": self.apex_primitive_degree,
            "primitive_degree_histogram": (
                None if hist is None else {str(k): hist[k] for k in sorted(hist)}
            ),
        }


def hole_report(n: int, *, threads: int = 1, caps: Caps = DEFAULT_CAPS) -> HoleReport:
    from .core import materialize

    check_ground_size(n, caps.count_max_n)
    h_exact = None
    histogram = None
    if n <= min(caps.triangle_exact_max_n, caps.materialize_max_n):
        g = materialize(n, caps=caps)
        h_exact = triangle_count_exact(g, threads=threads, caps=caps)
        histogram = {}
        for dp in primitive_degrees(g):
            histogram[dp] = histogram.get(dp, 0) + 1
    claimed = triangle_count_claimed(n, caps=caps) if n >= 2 else None
    corrected = (
        triangle_count_corrected(n, caps=caps) if n <= caps.corrected_max_n else None
    )
    return HoleReport(
        n=n,
        h_exact=h_exact,
        h_paper_formula=claimed,
        h_corrected=corrected,
        apex_primitive_degree=apex_primitive_degree(n, caps=caps),
        primitive_degree_histogram=histogram,
    )
