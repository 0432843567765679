import random

import pytest

from binedge.bounds import (
    bounds_report,
    build_triangle_chain,
    chain_pendants,
    classify_unicyclic,
    generate_certificate,
    verify_certificate,
)
from binedge.complexes import build_complex_edge_ideal, is_spanning
from binedge.edgeideal import binomial, build_edge_ideal, height_and_unmixed
from binedge.errors import DisconnectedGraphError, FamilyMismatchError, GraphError
from binedge.graphs import Graph, complete_graph, cycle_graph, path_graph
from binedge.polyring import parse_polynomial

from oracles import all_connected_graphs, random_connected_graph

DOUBLE = Graph(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (1, 4), (3, 6)])
DOUBLE_SHARED = Graph(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (1, 4), (3, 4)])


def test_house_report(house):
    rep = bounds_report(house)
    assert (rep.ara_lower, rep.ara_upper, rep.ara_exact, rep.bar) == (5, 5, 5, 6)
    assert rep.lower_source == "vertex_connectivity" and rep.upper_source == "triangle_reduction"


@pytest.mark.parametrize("n", range(3, 7))
def test_cycles_are_exact(n):
    rep = bounds_report(cycle_graph(n))
    assert rep.ara_exact == n
    assert (rep.lower_source, rep.upper_source) == ("vertex_connectivity", "bar")


def test_double_triangle_report():
    rep = bounds_report(DOUBLE)
    assert (rep.ara_lower, rep.ara_upper, rep.ara_exact) == (6, 6, 6)


def test_complete_graphs():
    for n in range(3, 7):
        rep = bounds_report(complete_graph(n))
        assert rep.ara_exact == 2 * n - 3
        assert rep.stci is False  # ht = n - 1 < 2n - 3


def test_report_json_schema(diamond):
    d = bounds_report(diamond).to_json()
    keys = {"n", "m", "l", "bar", "ara_c", "graded_rank", "ara_lower", "ara_upper", "ara_exact", "ht",
            "unmixed", "family", "certificate_size", "provenance"}
    assert keys <= set(d)
    assert all({"bound", "theorem"} <= set(p) for p in d["provenance"])
    assert d["bar"] == 5 and d["ara_exact"] == 4


def test_report_rejects_bad_input():
    with pytest.raises(DisconnectedGraphError):
        bounds_report(Graph(4, [(1, 2), (3, 4)]))
    with pytest.raises(GraphError):
        bounds_report(Graph(1))


def test_report_invariants_on_small_graphs():
    graphs = [G for n in range(2, 5) for G in all_connected_graphs(n)]
    rnd = random.Random(5)
    graphs += [random_connected_graph(rnd.randint(5, 7), rnd, p=rnd.choice([0.2, 0.4, 0.7])) for _ in range(80)]
    for G in graphs:
        rep = bounds_report(G)
        assert rep.bar == rep.ara_c == rep.graded_rank == G.m
        assert rep.ht <= rep.ara_lower <= rep.ara_upper <= rep.bar
        assert rep.ara_lower == max(rep.ht, G.n + rep.l - 2)
        assert (rep.ara_exact is not None) == (rep.ara_lower == rep.ara_upper)
        # the certificate never claims fewer polynomials than the proven lower bound
        assert rep.certificate_size >= rep.ara_lower


def test_diamond_certificates(diamond):
    f1, f2, f3, f4, f5 = build_edge_ideal(diamond).generators
    cert = generate_certificate(diamond, sum_pairs=[[2, 3]])
    assert cert.polynomials == (f1, f2 + f3, f4, f5)
    assert generate_certificate(diamond, sum_pairs=[[(2, 3), (1, 4)]]).polynomials == cert.polynomials
    auto = generate_certificate(diamond)
    assert set(auto.polynomials) == {f1, f5, f3 + f2, f4}
    v = verify_certificate(diamond, cert)
    assert v.verified and v.max_exponent == 2


def test_paw_certificate(paw):
    cert = generate_certificate(paw)
    f = lambda i, j: binomial(i, j, 4)
    assert cert.polynomials == (f(1, 2), f(1, 3), f(1, 4) + f(2, 3))
    assert verify_certificate(paw, cert).verified


def test_house_certificate(house):
    f = lambda i, j: binomial(i, j, 5)
    expected = {f(1, 2), f(2, 3), f(1, 3) + f(2, 4), f(3, 5), f(4, 5)}
    cert = generate_certificate(house)
    assert set(cert.polynomials) == expected
    assert verify_certificate(house, cert).verified


def test_chain_certificate_uses_disjoint_reductions():
    G = build_triangle_chain(2, (2,))
    pends = chain_pendants(G)
    assert [(p.apex, p.outer) for p in pends] == [(3, 4), (5, 4)]
    cert = generate_certificate(G)
    assert cert.size == 6
    # same as the f12 + f34 style pairing: apex-3 reduction on triangle 123
    f = lambda i, j: binomial(i, j, 7)
    assert f(1, 2) + f(3, 4) in cert.polynomials


@pytest.mark.parametrize("G", [DOUBLE, DOUBLE_SHARED, build_triangle_chain(2, (2,)), build_triangle_chain(2, (4,)),
                               build_triangle_chain(3, (2, 2)), build_triangle_chain(3, (3, 2)),
                               cycle_graph(5), complete_graph(5), path_graph(4)])
def test_generated_certificates_verify(G):
    cert = generate_certificate(G)
    v = verify_certificate(G, cert)
    assert v.verified, v
    assert is_spanning(cert.polynomials, build_complex_edge_ideal(G))


def test_certificates_verify_on_random_graphs():
    rnd = random.Random(77)
    for _ in range(25):
        G = random_connected_graph(rnd.randint(4, 7), rnd, p=0.35)
        cert = generate_certificate(G)
        assert verify_certificate(G, cert).verified, G


def test_family_selection_errors(paw):
    with pytest.raises(FamilyMismatchError):
        generate_certificate(paw, "triangle_chain")
    with pytest.raises(FamilyMismatchError):
        generate_certificate(path_graph(4), "has_triangle")
    with pytest.raises(FamilyMismatchError):
        generate_certificate(cycle_graph(5), "double_triangle_bridges")
    assert generate_certificate(paw, "generators").size == 4
    assert generate_certificate(paw, "unicyclic_triangle").size == 3


def test_verification_failures(diamond):
    f1, f2, f3, f4, f5 = build_edge_ideal(diamond).generators
    v = verify_certificate(diamond, [f1, f4, f5])
    assert (v.status, v.failed_step) == ("rejected", "spanning")
    assert "spanning check failed" in v.message
    v = verify_certificate(diamond, [f1, f2, f3, f4, parse_polynomial("x1*x7", 8)])
    assert v.failed_step == "membership"
    # spanning, but three polynomials cannot beat the lower bound of four
    v = verify_certificate(diamond, [f1 + f4, f2 + f3, f5])
    assert (v.status, v.failed_step) == ("rejected", "radical")


def test_full_generators_verify_at_power_one():
    for G in (cycle_graph(4), complete_graph(4), path_graph(5)):
        v = verify_certificate(G, build_edge_ideal(G).generators)
        assert v.verified and v.max_exponent == 1


def test_classify_unicyclic(paw):
    c = classify_unicyclic(paw)
    assert c.all_equivalent and c.ht == c.ara_exact == 3
    two = Graph(5, [(1, 2), (2, 3), (1, 3), (1, 4), (1, 5)])
    c = classify_unicyclic(two)
    assert not c.all_equivalent and c.ara_exact == 4
    three = Graph(7, [(1, 2), (2, 3), (1, 3), (1, 4), (2, 5), (5, 6), (3, 7)])
    assert classify_unicyclic(three).all_equivalent
    with pytest.raises(FamilyMismatchError):
        classify_unicyclic(cycle_graph(5))


def test_build_triangle_chain():
    G = build_triangle_chain(2, (2,))
    assert (G.n, G.m) == (7, 8)
    assert height_and_unmixed(G)[0] == 6
    assert build_triangle_chain(1) == complete_graph(3)
    G = build_triangle_chain(3, (2, 3))
    assert G.n == 12 and height_and_unmixed(G)[0] == 11
    for bad in [(0, ()), (2, ()), (2, (1,)), (3, (2,))]:
        with pytest.raises(GraphError):
            build_triangle_chain(*bad)


@pytest.mark.slow
def test_long_chain_verifies():
    G = build_triangle_chain(4, (2, 3, 2))
    cert = generate_certificate(G)
    assert cert.size == 2 * 4 + 7
    assert verify_certificate(G, cert).verified
