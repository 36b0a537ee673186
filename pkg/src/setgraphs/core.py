"""Implicit construction of the subset intersection graph G(n).

The graph on ground set {a_1, ..., a_n} has one vertex per non-empty subset
and an edge between two distinct subsets whenever they intersect. A subset is
encoded as an n-bit integer mask (bit j-1 set iff a_j is in the subset), so
adjacency is a single AND. The graph is never stored unless explicitly
materialized; the canonical vertex order is (cardinality ascending, mask
ascending), which fixes the v_{s,i} labels used everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Iterator, NamedTuple

from .config import DEFAULT_CAPS, CapExceeded, Caps


class VertexLabel(NamedTuple):
    """Label v_{s,i}: cardinality s, 1-based rank i within the cardinality class."""

    s: int
    i: int


def check_ground_size(n: int, cap: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"ground-set size must be a positive integer, got {n!r}")
    if n > cap:
        raise CapExceeded(f"ground-set size {n} exceeds cap {cap}")


def is_valid_mask(n: int, m: int) -> bool:
    """True iff m encodes a non-empty subset of an n-element ground set."""
    return isinstance(m, int) and 0 < m < (1 << n)


def check_mask(n: int, m: int) -> None:
    if not is_valid_mask(n, m):
        raise ValueError(f"invalid subset mask {m!r} for ground-set size {n}")


def full_mask(n: int) -> int:
    return (1 << n) - 1


def mask_of_elements(elements) -> int:
    """Mask of a subset given 1-based element indices, e.g. [1, 3] -> 0b101."""
    m = 0
    for e in elements:
        if e < 1:
            raise ValueError(f"element indices are 1-based, got {e}")
        m |= 1 << (e - 1)
    return m


def elements_of_mask(m: int) -> tuple[int, ...]:
    """1-based element indices of a mask, ascending."""
    out = []
    while m:
        low = m & -m
        out.append(low.bit_length())
        m ^= low
    return tuple(out)


def subset_str(m: int) -> str:
    """Render a mask as '{a1,a3}'."""
    return "{" + ",".join(f"a{e}" for e in elements_of_mask(m)) + "}"


def adjacent(u: int, v: int) -> bool:
    """Edge predicate: distinct masks with non-empty intersection."""
    return u != v and (u & v) != 0


def vertex_count(n: int, *, caps: Caps = DEFAULT_CAPS) -> int:
    """Number of vertices, 2^n - 1 (always odd)."""
    check_ground_size(n, caps.count_max_n)
    return (1 << n) - 1


@lru_cache(maxsize=32)
def canonical_masks(n: int) -> tuple[int, ...]:
    """All masks in canonical vertex order: cardinality ascending, mask ascending."""
    return tuple(sorted(range(1, 1 << n), key=lambda m: (m.bit_count(), m)))


def class_offset(n: int, s: int) -> int:
    """Canonical index of the first vertex of cardinality s."""
    return sum(comb(n, t) for t in range(1, s))


def label_of_mask(n: int, m: int) -> VertexLabel:
    """Label v_{s,i} of a mask; inverse of mask_of_label."""
    check_mask(n, m)
    s = m.bit_count()
    # colex rank: masks of equal cardinality sort numerically
    rank = 0
    for j, p in enumerate(_bit_positions(m), start=1):
        rank += comb(p, j)
    return VertexLabel(s, rank + 1)


def mask_of_label(n: int, label: VertexLabel) -> int:
    """Mask of a label v_{s,i}; inverse of label_of_mask."""
    s, i = label
    if not 1 <= s <= n:
        raise ValueError(f"cardinality {s} out of range for n={n}")
    if not 1 <= i <= comb(n, s):
        raise ValueError(f"index {i} out of range: class s={s} has {comb(n, s)} vertices")
    rank = i - 1
    m = 0
    for j in range(s, 0, -1):
        # largest position p with C(p, j) <= rank
        p = j - 1
        while comb(p + 1, j) <= rank:
            p += 1
        m |= 1 << p
        rank -= comb(p, j)
    return m


def canonical_index(n: int, m: int) -> int:
    """0-based position of a mask in the canonical vertex order."""
    s, i = label_of_mask(n, m)
    return class_offset(n, s) + i - 1


def _bit_positions(m: int) -> Iterator[int]:
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


@dataclass(frozen=True)
class MaterializedGraph:
    """Explicit adjacency rows over the canonical vertex order.

    rows[u] is an integer bit vector: bit v set iff vertex u and vertex v are
    adjacent. Rows are symmetric and irreflexive by construction.
    """

    n: int
    rows: tuple[int, ...]

    @property
    def num_vertices(self) -> int:
        return len(self.rows)

    @property
    def masks(self) -> tuple[int, ...]:
        return canonical_masks(self.n)

    def degree(self, idx: int) -> int:
        return self.rows[idx].bit_count()

    def edge_indices(self) -> Iterator[tuple[int, int]]:
        """Edges as index pairs (u, v), u < v, ascending."""
        for u, row in enumerate(self.rows):
            suc = row >> (u + 1)
            for off in _bit_positions(suc):
                yield u, u + 1 + off


def materialize(n: int, *, caps: Caps = DEFAULT_CAPS) -> MaterializedGraph:
    """Build explicit adjacency rows; guarded because memory grows as V^2/8."""
    check_ground_size(n, caps.count_max_n)
    if n > caps.materialize_max_n:
        v = (1 << n) - 1
        mib = v * v / 8 / 2**20
        raise CapExceeded(
            f"materialize(n={n}) needs about {mib:.0f} MiB of adjacency bits; "
            f"cap is n <= {caps.materialize_max_n}"
        )
    masks = canonical_masks(n)
    v = len(masks)
    nbytes = (v + 7) // 8
    # star[e] = bit vector of vertices whose subset contains element e
    stars = [bytearray(nbytes) for _ in range(n)]
    for idx, m in enumerate(masks):
        for e in _bit_positions(m):
            stars[e][idx >> 3] |= 1 << (idx & 7)
    star_ints = [int.from_bytes(bytes(s), "little") for s in stars]
    rows = []
    for idx, m in enumerate(masks):
        row = 0
        for e in _bit_positions(m):
            row |= star_ints[e]
        rows.append(row & ~(1 << idx))  # no self-loop
    return MaterializedGraph(n, tuple(rows))


def edges_by_mask(n: int, *, caps: Caps = DEFAULT_CAPS) -> Iterator[tuple[int, int]]:
    """Edges as mask pairs (u, v), u < v numerically, in sorted order.

    Streams without materializing the graph; used by the exporters. The cap
    check happens up front, not on first pull.
    """
    check_ground_size(n, caps.materialize_max_n)

    def stream() -> Iterator[tuple[int, int]]:
        top = 1 << n
        for u in range(1, top):
            for v in range(u + 1, top):
                if u & v:
                    yield u, v

    return stream()


@dataclass(frozen=True)
class ExtensionMap:
    """Vertex classification for the step from G(n) to G(n+1).

    Every vertex of G(n+1) is either an erstwhile vertex (its mask avoids the
    new element), the replica of an erstwhile vertex (mask with the new
    element added), or the new singleton {a_{n+1}}. Each erstwhile vertex is
    adjacent to its own replica, and the replicas together with the new
    singleton induce a complete subgraph of order 2^n.
    """

    n: int
    erstwhile: tuple[int, ...] = field(repr=False)
    replicas: tuple[int, ...] = field(repr=False)
    new_singleton: int = 0

    def replica_of(self, m: int) -> int:
        check_mask(self.n, m)
        return m | self.new_singleton

    def classify(self, m: int) -> str:
        """'erstwhile', 'replica', or 'new' for a mask of G(n+1)."""
        check_mask(self.n + 1, m)
        if m == self.new_singleton:
            return "new"
        return "replica" if m & self.new_singleton else "erstwhile"


def extension_map(n: int, *, caps: Caps = DEFAULT_CAPS) -> ExtensionMap:
    """Classify the vertices of G(n+1) relative to G(n)."""
    check_ground_size(n + 1, caps.count_max_n)
    check_ground_size(n, caps.count_max_n)
    old = canonical_masks(n)
    new_bit = 1 << n
    return ExtensionMap(
        n=n,
        erstwhile=old,
        replicas=tuple(m | new_bit for m in old),
        new_singleton=new_bit,
    )
