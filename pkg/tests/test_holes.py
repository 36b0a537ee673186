"""Triangle counts: exact kernel, claimed and corrected recursions, incidence."""

import pytest

from setgraphs import (
    CapExceeded,
    apex_primitive_degree,
    edge_count_closed,
    enum_triangles,
    full_mask,
    h_complete,
    hole_report,
    materialize,
    primitive_degree,
    primitive_degrees,
    triangle_count_claimed,
    triangle_count_corrected,
    triangle_count_exact,
)
from setgraphs.config import DEFAULT_CAPS
from setgraphs.oracle import SmallGraph

# frozen from exhaustive triple enumeration
EXACT = {1: 0, 2: 0, 3: 13, 4: 222, 5: 2585, 6: 25830, 7: 238833}
# frozen from literal evaluation of the claimed recursion
CLAIMED = {2: 0, 3: 12, 4: 128, 5: 1008, 6: 7468}


def test_h_complete():
    assert h_complete(4) == 4
    assert h_complete(3) == 1
    assert h_complete(8) == 56
    assert h_complete(1) == 0
    with pytest.raises(ValueError):
        h_complete(0)


def test_exact_counts_pinned():
    for n, h in EXACT.items():
        assert triangle_count_exact(materialize(n)) == h


def test_exact_matches_triple_enumeration():
    for n in range(1, 6):
        g = materialize(n)
        triples = enum_triangles(SmallGraph.from_materialized(g))
        assert len(triples) == triangle_count_exact(g)


def test_claimed_recursion_pinned():
    for n, h in CLAIMED.items():
        assert triangle_count_claimed(n) == h
    with pytest.raises(ValueError):
        triangle_count_claimed(1)


def test_claimed_diverges_from_exact_at_3():
    assert triangle_count_claimed(2) == triangle_count_exact(materialize(2))
    assert triangle_count_claimed(3) == 12
    assert triangle_count_exact(materialize(3)) == 13


def test_corrected_matches_exact():
    for n in range(1, 10):
        assert triangle_count_corrected(n) == triangle_count_exact(materialize(n))


def _h_by_complement_counting(n: int) -> int:
    """Independent oracle: subtract triples carrying a disjoint pair.

    Inclusion-exclusion over the disjoint (complement) pairs inside a vertex
    triple: all triples, minus one term per disjoint pair times the free
    third vertex, plus paths of two disjoint pairs through a common subset,
    minus pairwise-disjoint triples. Each complement quantity has its own
    closed form (assign every ground element to one of the sets or to none).
    """
    from math import comb

    v = 2**n - 1
    disjoint_pairs = (3**n - 2 ** (n + 1) + 1) // 2
    # middle subset of size k is disjoint from 2^(n-k) - 1 non-empty subsets
    complement_paths = sum(
        comb(n, k) * comb(2 ** (n - k) - 1, 2) for k in range(1, n + 1)
    )
    disjoint_triples = (4**n - 3 * 3**n + 3 * 2**n - 1) // 6
    return (
        comb(v, 3)
        - disjoint_pairs * (v - 2)
        + complement_paths
        - disjoint_triples
    )


def test_corrected_matches_complement_counting_route():
    # a third derivation, independent of both the kernel and the extension
    # recursion, pins the corrected values over their whole range
    for n in range(1, 20):
        assert triangle_count_corrected(n) == _h_by_complement_counting(n)
    for n in range(1, 8):
        assert _h_by_complement_counting(n) == triangle_count_exact(materialize(n))


def test_h13_pinned():
    # frozen after the bit-parallel kernel and the corrected recursion agreed
    assert triangle_count_corrected(13) == 85_662_034_185


def test_corrected_cap():
    with pytest.raises(CapExceeded):
        triangle_count_corrected(DEFAULT_CAPS.corrected_max_n + 1)


def test_exact_cap():
    with pytest.raises(CapExceeded):
        triangle_count_exact(materialize(14))


def test_threads_do_not_change_the_count():
    g = materialize(8)
    lone = triangle_count_exact(g)
    assert triangle_count_exact(g, threads=2) == lone
    assert triangle_count_exact(g, threads=4) == lone


def test_primitive_degree_examples():
    g3 = materialize(3)
    assert primitive_degree(g3, full_mask(3)) == 9
    assert primitive_degree(g3, 0b001) == 3
    assert primitive_degree(g3, 0b011) == 7
    g2 = materialize(2)
    for m in g2.masks:
        assert primitive_degree(g2, m) == 0


def test_primitive_degree_sum_is_three_h():
    for n in range(1, 10):
        g = materialize(n)
        total = sum(primitive_degrees(g))
        assert total == 3 * triangle_count_exact(g)


def test_primitive_degrees_match_scalar_route():
    for n in range(1, 7):
        g = materialize(n)
        vec = primitive_degrees(g)
        for idx, m in enumerate(g.masks):
            assert vec[idx] == primitive_degree(g, m)


def test_apex_primitive_degree():
    assert apex_primitive_degree(3) == 15 - 6 == 9
    assert apex_primitive_degree(4) == 80 - 14 == 66
    assert apex_primitive_degree(2) == 0
    for n in range(2, 10):
        g = materialize(n)
        assert apex_primitive_degree(n) == primitive_degree(g, full_mask(n))
        assert apex_primitive_degree(n) == edge_count_closed(n) - (2**n - 2)


def test_hole_bounds_and_monotonicity():
    from math import comb

    prev = None
    for n in range(1, 13):
        h = triangle_count_corrected(n)
        assert 0 <= h <= comb(2**n - 1, 3)
        if prev is not None:
            assert prev <= h
        prev = h


def test_hole_report_fields():
    rep = hole_report(3).as_dict()
    assert rep["n"] == 3
    assert rep["h_exact"] == 13
    assert rep["h_paper_formula"] == 12
    assert rep["h_corrected"] == 13
    assert rep["apex_primitive_degree"] == 9
    # three singletons with 3, three pairs with 7, apex with 9
    assert rep["primitive_degree_histogram"] == {"3": 3, "7": 3, "9": 1}


def test_hole_report_above_exact_cap():
    rep = hole_report(15)
    assert rep.h_exact is None
    assert rep.primitive_degree_histogram is None
    assert rep.h_corrected == triangle_count_corrected(15)


def test_hole_report_json_serializable():
    import json

    for n in (1, 3, 15):
        doc = json.loads(json.dumps(hole_report(n).as_dict()))
        assert doc["n"] == n
        assert set(doc) == {
            "n",
            "h_exact",
            "h_paper_formula",
            "h_corrected",
            "apex_primitive_degree",
            "primitive_degree_histogram",
        }
