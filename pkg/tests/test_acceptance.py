"""End-to-end acceptance checks, one per criterion, each printing a PASS/FAIL line."""

import random
import time
from contextlib import contextmanager

import pytest

from binedge.bounds import (
    bounds_report,
    build_triangle_chain,
    classify_unicyclic,
    generate_certificate,
    verify_certificate,
)
from binedge.complexes import b_and_r, build_complex_edge_ideal, delta_Q, is_spanning, omega
from binedge.edgeideal import build_edge_ideal, height_and_unmixed, minimal_primes
from binedge.graphs import Graph, cycle_graph, read_graph, unicyclic_path_decomposition, vertex_connectivity
from binedge.groebner import buchberger
from binedge.cli import bundled_corpus

from oracles import (
    all_connected_graphs,
    brute_vertex_connectivity,
    random_connected_graph,
    unicyclic_triangle_graphs,
)

DIAMOND = Graph(4, [(1, 2), (2, 3), (1, 4), (3, 4), (1, 3)])
HOUSE = Graph(5, [(1, 2), (2, 3), (1, 3), (2, 4), (4, 5), (3, 5)])
PAW = Graph(4, [(1, 2), (2, 3), (1, 3), (3, 4)])
TAIL6 = Graph(6, [(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (5, 6)])
DOUBLE = Graph(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (1, 4), (3, 6)])
DOUBLE_SHARED = Graph(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (1, 4), (3, 4)])


@contextmanager
def criterion(capsys, number, title, budget):
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        took = time.perf_counter() - start
        within = took < budget
        with capsys.disabled():
            status = "PASS" if ok and within else "FAIL"
            print(f"\n[{status}] criterion {number}: {title} ({took:.2f}s, budget {budget}s)")
    assert within, f"criterion {number} took {took:.2f}s > {budget}s"


def _report_and_certificate(G, expected_size):
    rep = bounds_report(G)
    cert = generate_certificate(G)
    assert cert.size == expected_size
    verdict = verify_certificate(G, cert)
    assert verdict.verified, verdict
    return rep, cert, verdict


def test_diamond_end_to_end(capsys):
    with criterion(capsys, 1, "diamond graph end to end", 5):
        rep = bounds_report(DIAMOND)
        assert (rep.bar, rep.ara_c, rep.graded_rank) == (5, 5, 5)
        cx = build_complex_edge_ideal(DIAMOND)
        assert delta_Q(cx, omega(cx))[0] == 5
        assert b_and_r(cx) == (5, 5)
        primes = minimal_primes(DIAMOND)
        assert [(p.S, p.dimension) for p in primes] == [((), 5), ((1, 3), 4)]
        f1, f2, f3, f4, f5 = build_edge_ideal(DIAMOND).generators
        verdict = verify_certificate(DIAMOND, [f1, f2 + f3, f4, f5])
        assert verdict.verified and verdict.max_exponent <= 2
        assert rep.ara_lower == max(rep.ht, rep.n + rep.l - 2) == 4
        assert rep.ara_exact == 4


def test_matching_number_equals_edge_count(capsys):
    with criterion(capsys, 2, "delta over {0,1} and Omega equals m", 60):
        graphs = [G for n in range(2, 6) for G in all_connected_graphs(n)]
        rnd = random.Random(2024)
        graphs += [random_connected_graph(6, rnd, p=rnd.choice([0.2, 0.4, 0.7])) for _ in range(60)]
        assert len(graphs) >= 50
        for G in graphs:
            cx = build_complex_edge_ideal(G)
            assert delta_Q(cx, {0, 1})[0] == G.m, G
            assert delta_Q(cx, omega(cx))[0] == G.m, G


def test_cycles(capsys):
    with criterion(capsys, 3, "cycles C3..C6 exact", 10):
        for n in range(3, 7):
            rep = bounds_report(cycle_graph(n))
            assert rep.ara_exact == n
            assert (rep.lower_source, rep.upper_source) == ("vertex_connectivity", "bar")


def test_triangle_with_tail(capsys):
    with criterion(capsys, 4, "paw and triangle with long tail", 30):
        rep, _, _ = _report_and_certificate(PAW, 3)
        assert rep.ara_exact == 3 == PAW.n - 1
        rep, _, _ = _report_and_certificate(TAIL6, 5)
        assert rep.ara_exact == 5 == TAIL6.n - 1


def test_double_triangle(capsys):
    with criterion(capsys, 5, "double triangle, both bridge shapes", 60):
        rep, _, _ = _report_and_certificate(DOUBLE, 6)
        assert rep.ara_exact == 6
        _report_and_certificate(DOUBLE_SHARED, DOUBLE_SHARED.m - 2)


def test_triangle_chains(capsys):
    with criterion(capsys, 6, "triangle chains k=2 and k=3", 120):
        G = build_triangle_chain(2, (2,))
        ht, unmixed, _ = height_and_unmixed(G)
        assert (ht, unmixed) == (6, True)
        rep, _, _ = _report_and_certificate(G, 6)
        assert rep.ara_exact == 6
        G3 = build_triangle_chain(3, (2, 2))
        rep3 = bounds_report(G3)
        assert rep3.ht == 10 and rep3.certificate_size == 10
        assert verify_certificate(G3, generate_certificate(G3)).verified


def test_house(capsys):
    with criterion(capsys, 7, "house graph", 30):
        rep = bounds_report(HOUSE)
        assert (rep.ara_exact, rep.bar) == (5, 6)
        E = build_edge_ideal(HOUSE)
        f = E.f
        cert = [f(1, 2), f(2, 3), f(1, 3) + f(2, 4), f(3, 5), f(4, 5)]
        assert verify_certificate(HOUSE, cert).verified


def test_property_suites(capsys):
    import test_complexes
    import test_edgeideal
    import test_groebner

    with criterion(capsys, 8, "property suites under fixed seeds", 120):
        rnd = random.Random(8)
        # generator annihilation on random edge ideals
        for _ in range(20):
            I = build_edge_ideal(random_connected_graph(rnd.randint(2, 5), rnd)).ideal
            gb = buchberger(I)
            assert all(gb.normal_form(g).is_zero() for g in I.generators)
        test_groebner.test_reduced_basis_properties(build_edge_ideal(DIAMOND).ideal)
        test_groebner.test_normal_form_properties()
        test_groebner.test_macaulay_oracle_agrees_with_groebner()

        corpus = [read_graph(p) for p in sorted(bundled_corpus().glob("*.graph"))]
        small = [G for G in corpus if G.n <= 7]
        small += [random_connected_graph(rnd.randint(3, 7), rnd, p=0.4) for _ in range(60)]
        for G in small:
            assert vertex_connectivity(G) == brute_vertex_connectivity(G), G

        test_complexes.test_delta_is_additive_over_components()
        test_edgeideal.test_minimal_primes_match_brute_force()

        # a verified certificate always spans the complex
        for G in [PAW, DIAMOND, HOUSE, DOUBLE] + [random_connected_graph(rnd.randint(3, 6), rnd, 0.4) for _ in range(15)]:
            cert = generate_certificate(G)
            if verify_certificate(G, cert).verified:
                assert is_spanning(cert.polynomials, build_complex_edge_ideal(G))
        test_complexes.test_J_complete_polynomials_give_simplices()


def test_unicyclic_characterisation(capsys):
    with criterion(capsys, 9, "unicyclic triangle graphs up to n=8", 60):
        count, seen = 0, set()
        for G in unicyclic_triangle_graphs(8):
            condition = unicyclic_path_decomposition(G).paths_ok
            _, unmixed, _ = height_and_unmixed(G)
            assert condition == unmixed, G
            assert classify_unicyclic(G).condition_d == condition
            count += 1
            seen.add(condition)
        assert count == 73 and seen == {True, False}
