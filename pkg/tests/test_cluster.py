"""Cluster complexes: rotations, compatibility, face polynomials."""

from math import comb

import pytest

from coxcat.cluster import (
    ClusterComplex,
    compatibility_degree,
    f_polynomial,
    tau_map,
    verify_hf_conjecture,
    vertex_count,
)
from coxcat.exact import BiPoly
from coxcat.poset import enumerate_antichains
from coxcat.rootsys import build_root_system

HF_TYPES = ("A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C3", "D4", "G2", "F4")


def test_tau_maps_are_involutions():
    for label in ("A2", "A3", "B3", "D4", "G2"):
        rs = build_root_system(label)
        for eps in (1, -1):
            images = [tau_map(rs, eps, v) for v in range(vertex_count(rs))]
            assert sorted(images) == list(range(vertex_count(rs)))
            assert all(images[images[v]] == v for v in range(vertex_count(rs)))


def test_tau_orbit_size_divides_h_plus_2_on_a2():
    rs = build_root_system("A2")  # h + 2 = 6
    n_vertices = vertex_count(rs)

    def tau_product(v):
        return tau_map(rs, -1, tau_map(rs, 1, v))

    for v in range(n_vertices):
        orbit = 1
        w = tau_product(v)
        while w != v:
            w = tau_product(w)
            orbit += 1
        assert (rs.coxeter_number + 2) % orbit == 0


def test_compatibility_degree_examples_a2():
    rs = build_root_system("A2")
    neg0, neg1 = 0, 1
    a1 = 2 + rs.root_index((1, 0))
    a2 = 2 + rs.root_index((0, 1))
    a12 = 2 + rs.root_index((1, 1))
    # a negated simple is compatible with every root not containing it
    assert compatibility_degree(rs, neg0, a2) == 0
    assert compatibility_degree(rs, neg0, a1) == 1
    assert compatibility_degree(rs, neg0, a12) == 1
    assert compatibility_degree(rs, a1, a2) == 1
    assert compatibility_degree(rs, a1, a12) == 0
    assert compatibility_degree(rs, neg0, neg1) == 0


def test_compatibility_zero_is_symmetric():
    for label in ("A3", "B3", "G2"):
        rs = build_root_system(label)
        n_v = vertex_count(rs)
        for u in range(n_v):
            for v in range(u + 1, n_v):
                assert (compatibility_degree(rs, u, v) == 0) == (
                    compatibility_degree(rs, v, u) == 0
                )


def test_pentagon_face_polynomial():
    rs = build_root_system("A2")
    assert f_polynomial(rs) == BiPoly(
        {(0, 0): 1, (0, 1): 2, (0, 2): 1, (1, 0): 3, (1, 1): 2, (2, 0): 2}
    )


def test_facet_counts_match_antichain_totals():
    for label in ("A1", "A2", "A3", "B2", "B3", "G2", "D4", "F4"):
        rs = build_root_system(label)
        complex_ = ClusterComplex(rs)
        n_max, min_size = complex_.maximal_face_count()
        assert n_max == enumerate_antichains(rs).total
        assert min_size == rs.rank, "the complex is pure"


def test_a3_has_fourteen_facets():
    assert ClusterComplex(build_root_system("A3")).maximal_face_count() == (14, 3)


def test_negative_simple_faces_are_free():
    # any set of negated simples is a face: f_{0,l} = C(n, l)
    for label in ("A3", "B3", "D4", "F4"):
        rs = build_root_system(label)
        f_poly = f_polynomial(rs)
        for l in range(rs.rank + 1):
            assert f_poly.coefficient(0, l) == comb(rs.rank, l)


@pytest.mark.parametrize("label", HF_TYPES)
def test_h_transform_of_f(label):
    rs = build_root_system(label)
    result = verify_hf_conjecture(rs)
    assert result["transformed"] == result["h"]


def test_a2_golden_h_and_f_values():
    rs = build_root_system("A2")
    result = verify_hf_conjecture(rs)
    assert result["h"] == BiPoly({(0, 0): 1, (1, 0): 1, (1, 1): 2, (2, 2): 1})
    assert result["f"] == BiPoly(
        {(0, 0): 1, (1, 0): 3, (0, 1): 2, (2, 0): 2, (1, 1): 2, (0, 2): 1}
    )


def test_large_rank_needs_flag():
    from coxcat.errors import CapacityExceeded

    with pytest.raises(CapacityExceeded):
        ClusterComplex(build_root_system("A7"))
