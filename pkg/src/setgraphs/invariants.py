"""Degrees, edge counts, and tightness numbers of G(n).

Each quantity is available along independent routes: a closed form, the
recursion that the claims harness adjudicates, and a brute-force scan over
explicit rows. The routes are kept separate on purpose so they can be played
against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .config import DEFAULT_CAPS, Caps
from .core import (
    MaterializedGraph,
    canonical_index,
    canonical_masks,
    check_ground_size,
    check_mask,
)


def characteristic(a: int, b: int) -> int:
    """Intersection indicator: 1 iff the two subsets share an element."""
    return 1 if a & b else 0


def degree_closed(n: int, k: int) -> int:
    """Degree of any vertex of cardinality k: 2^n - 2^(n-k) - 1.

    Counts the subsets meeting a fixed k-set (all but the 2^(n-k) subsets of
    its complement) and excludes the vertex itself.
    """
    if not 1 <= k <= n:
        raise ValueError(f"cardinality {k} out of range for n={n}")
    return (1 << n) - (1 << (n - k)) - 1


def degree_inclusion_exclusion(n: int, m: int) -> int:
    """Degree of the vertex of mask m by inclusion-exclusion over element stars.

    Sums (-1)^(|J|-1) * 2^(n-|J|) over the non-empty sub-collections J of m's
    elements (each |J|-fold star intersection has 2^(n-|J|) subsets), then
    subtracts 1 for the vertex itself.
    """
    check_mask(n, m)
    total = 0
    # iterate all non-empty submasks of m
    sub = m
    while sub:
        j = sub.bit_count()
        total += (-1) ** (j - 1) * (1 << (n - j))
        sub = (sub - 1) & m
    return total - 1


def degree_brute(g: MaterializedGraph, m: int) -> int:
    """Degree read off the explicit adjacency row of mask m."""
    return g.rows[canonical_index(g.n, m)].bit_count()


def degree_extremes(n: int, *, caps: Caps = DEFAULT_CAPS) -> tuple[int, int]:
    """(min degree, max degree) = (2^(n-1) - 1, 2^n - 2); the max is twice the min."""
    check_ground_size(n, caps.count_max_n)
    return (1 << (n - 1)) - 1, (1 << n) - 2


@dataclass(frozen=True)
class DegreeProfile:
    """Degrees of G(n): one value per cardinality and the full canonical sequence.

    The per-vertex sequence is only spelled out while the vertex list is
    affordable (the materialization cap); above that it is empty and the
    per-cardinality values carry everything.
    """

    n: int
    by_cardinality: tuple[int, ...]  # index k-1 -> degree of any k-subset vertex
    sequence: tuple[int, ...]  # degree per vertex in canonical order

    @property
    def min_degree(self) -> int:
        return self.by_cardinality[0]

    @property
    def max_degree(self) -> int:
        return self.by_cardinality[-1]


def degree_profile(n: int, *, caps: Caps = DEFAULT_CAPS) -> DegreeProfile:
    check_ground_size(n, caps.count_max_n)
    by_card = tuple(degree_closed(n, k) for k in range(1, n + 1))
    if n <= caps.materialize_max_n:
        seq = tuple(by_card[m.bit_count() - 1] for m in canonical_masks(n))
    else:
        seq = ()
    return DegreeProfile(n, by_card, seq)


def edge_count_closed(n: int, *, caps: Caps = DEFAULT_CAPS) -> int:
    """Edge count: all pairs minus disjoint pairs.

    Ordered disjoint pairs of non-empty subsets are counted by assigning each
    element to the first set, the second set, or neither: 3^n - 2*2^n + 1.
    """
    check_ground_size(n, caps.count_max_n)
    v = (1 << n) - 1
    disjoint_pairs = (3**n - (1 << (n + 1)) + 1) // 2
    return comb(v, 2) - disjoint_pairs


def edge_count_recursive(n: int, *, caps: Caps = DEFAULT_CAPS) -> int:
    """Edge count by the extension recursion E(m+1) = 3E(m) + V(m) + C(V(m)+1, 2).

    The three terms are the doubled-plus-original old edges, the parallel
    linkages, and the clique on the replicas plus the new singleton.
    """
    check_ground_size(n, caps.count_max_n)
    e = 0  # single vertex, no edges
    for m in range(1, n):
        v = (1 << m) - 1
        e = 3 * e + v + comb(v + 1, 2)
    return e


def edge_count_brute(g: MaterializedGraph) -> int:
    """Half the sum of row popcounts."""
    total = sum(row.bit_count() for row in g.rows)
    assert total % 2 == 0
    return total // 2


def tightness(n: int, m: int) -> int:
    """Number of other non-empty subsets meeting m (definition-level sum)."""
    check_mask(n, m)
    return sum(characteristic(m, other) for other in range(1, 1 << n) if other != m)


@dataclass(frozen=True)
class TightnessVector:
    """Tightness value per vertex in canonical order; equals the degree sequence."""

    n: int
    values: tuple[int, ...]


def tightness_vector(n: int, *, caps: Caps = DEFAULT_CAPS) -> TightnessVector:
    check_ground_size(n, caps.materialize_max_n)
    return TightnessVector(n, tuple(tightness(n, m) for m in canonical_masks(n)))


def tightness_recursion_step(n: int, old_values) -> tuple[int, ...]:
    """Tightness values of G(n+1) from those of G(n), in canonical order.

    The new singleton gets 2^n - 1, an erstwhile vertex with old value k gets
    2k + 1, and the replica of a vertex with old value k gets 2^n + k.
    """
    old_values = tuple(old_values)
    expected = (1 << n) - 1
    if len(old_values) != expected:
        raise ValueError(f"expected {expected} values for n={n}, got {len(old_values)}")
    old_by_mask = dict(zip(canonical_masks(n), old_values))
    new_bit = 1 << n
    out = []
    for m in canonical_masks(n + 1):
        if m == new_bit:
            out.append((1 << n) - 1)
        elif m & new_bit:
            out.append((1 << n) + old_by_mask[m ^ new_bit])
        else:
            out.append(2 * old_by_mask[m] + 1)
    return tuple(out)


def tightness_checksum(n: int, *, caps: Caps = DEFAULT_CAPS) -> int:
    """Sum of all tightness values via the closed degree form; equals 2|E|."""
    check_ground_size(n, caps.count_max_n)
    return sum(comb(n, k) * degree_closed(n, k) for k in range(1, n + 1))
