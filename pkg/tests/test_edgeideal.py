import itertools
import random

import numpy as np
import pytest

from binedge.edgeideal import (
    binomial,
    build_edge_ideal,
    height_and_unmixed,
    is_minimal_prime_set,
    minimal_primes,
    primes_to_json,
    standard_gradings,
    t_min,
)
from binedge.errors import DisconnectedGraphError, ResourceCapError
from binedge.bounds import build_triangle_chain
from binedge.graphs import Graph, complete_graph, cycle_graph, path_graph
from binedge.groebner import Ideal, buchberger, ideal_member
from binedge.polyring import Polynomial, is_homogeneous, parse_polynomial

from oracles import brute_minimal_prime_sets, random_connected_graph


def test_generators_of_the_diamond(diamond):
    E = build_edge_ideal(diamond)
    expected = ["x1*x6 - x2*x5", "x2*x7 - x3*x6", "x1*x8 - x4*x5", "x3*x8 - x4*x7", "x1*x7 - x3*x5"]
    assert list(E.generators) == [parse_polynomial(t, 8) for t in expected]
    assert E.edge_index[(1, 4)] == parse_polynomial("x1*x8 - x4*x5", 8)


def test_small_edge_ideals():
    assert build_edge_ideal(Graph(2, [(1, 2)])).generators == (parse_polynomial("x1*x4 - x2*x3", 4),)
    E = build_edge_ideal(complete_graph(3))
    assert E.generators == tuple(binomial(i, j, 3) for i, j in [(1, 2), (1, 3), (2, 3)])
    assert binomial(2, 1, 3) == -binomial(1, 2, 3)
    with pytest.raises(DisconnectedGraphError):
        build_edge_ideal(Graph(4, [(1, 2), (3, 4)]))


def test_standard_gradings_at_n4():
    A, B = standard_gradings(4)
    D = np.array([[1, 0, 0, 0, 1, 0, 0, 0],
                  [0, 1, 0, 0, 0, 1, 0, 0],
                  [0, 0, 1, 0, 0, 0, 1, 0],
                  [0, 0, 0, 1, 0, 0, 0, 1]])
    Nm = np.vstack([[1, 1, 1, 1, 0, 0, 0, 0], D])
    assert np.array_equal(A.matrix, D)
    assert np.array_equal(B.matrix, Nm)


def test_generators_homogeneous_under_both_gradings():
    rnd = random.Random(1)
    graphs = [cycle_graph(5)] + [random_connected_graph(rnd.randint(2, 7), rnd) for _ in range(20)]
    for G in graphs:
        A, B = standard_gradings(G)
        for f in build_edge_ideal(G).generators:
            assert is_homogeneous(f, A) and is_homogeneous(f, B)


def test_t_min(diamond):
    expected = [{1, 6}, {2, 5}, {2, 7}, {3, 6}, {1, 8}, {4, 5}, {3, 8}, {4, 7}, {1, 7}, {3, 5}]
    assert [set(s) for s in t_min(diamond)] == expected
    assert [set(s) for s in t_min(Graph(2, [(1, 2)]))] == [{1, 4}, {2, 3}]
    assert len(t_min(complete_graph(3))) == 6


def test_minimal_primes_of_the_diamond(diamond):
    primes = minimal_primes(diamond)
    assert [(p.S, p.dimension) for p in primes] == [((), 5), ((1, 3), 4)]
    assert primes_to_json(primes) == '[{"S": [], "c": 1, "dimension": 5}, {"S": [1, 3], "c": 2, "dimension": 4}]'


@pytest.mark.parametrize("n", range(2, 7))
def test_complete_graph_has_one_minimal_prime(n):
    assert [p.S for p in minimal_primes(complete_graph(n))] == [()]


def test_minimal_primes_of_the_square():
    assert [p.S for p in minimal_primes(cycle_graph(4))] == [(), (1, 3), (2, 4)]


def test_prime_generators_contain_the_edge_ideal(diamond):
    E = build_edge_ideal(diamond)
    for p in minimal_primes(diamond):
        P = Ideal(p.generators())
        assert all(ideal_member(f, P) for f in E.generators)
    other = minimal_primes(diamond)[1]
    assert other.describe() == "(x1, x5, x3, x7)"
    # f_24 = x2*x8 - x4*x6 lies in the trivial component only
    f24 = parse_polynomial("x2*x8 - x4*x6", 8)
    assert ideal_member(f24, Ideal(minimal_primes(diamond)[0].generators()))
    assert not ideal_member(f24, Ideal(other.generators()))


def test_minimal_primes_match_brute_force():
    rnd = random.Random(23)
    graphs = [path_graph(8), cycle_graph(8), complete_graph(6)]
    graphs += [random_connected_graph(rnd.randint(3, 8), rnd, p=rnd.choice([0.15, 0.3, 0.5])) for _ in range(120)]
    for G in graphs:
        got = [p.S for p in minimal_primes(G)]
        assert got == brute_minimal_prime_sets(G), G
        for p in minimal_primes(G):
            assert is_minimal_prime_set(G, p.S)
            assert sorted(v for b in p.blocks for v in b) == sorted(set(G.vertices) - set(p.S))


def test_height_and_unmixed(diamond, paw):
    assert height_and_unmixed(build_triangle_chain(2, (2,)))[:2] == (6, True)
    ht, unmixed, dims = height_and_unmixed(diamond)
    assert (ht, unmixed, sorted(dims)) == (3, False, [4, 5])
    assert height_and_unmixed(paw)[:2] == (3, True)


def test_prime_vertex_cap():
    with pytest.raises(ResourceCapError):
        minimal_primes(path_graph(17))
    assert len(minimal_primes(path_graph(17), max_vertices=17)) > 1


def _dimension_from_initial_ideal(gens, nvars):
    # dim R/I = dim R/in(I) = largest set of variables containing no leading-term support
    lms = [frozenset(i for i, e in enumerate(lm) if e) for lm in buchberger(Ideal(gens)).leading_monomials()]
    for k in range(nvars, -1, -1):
        for U in itertools.combinations(range(nvars), k):
            U = set(U)
            if not any(s <= U for s in lms):
                return k


@pytest.mark.parametrize("G", [path_graph(3), cycle_graph(4), complete_graph(4),
                               Graph(4, [(1, 2), (2, 3), (1, 4), (3, 4), (1, 3)]),
                               Graph(4, [(1, 2), (2, 3), (1, 3), (1, 4)])])
def test_dimension_formula_via_groebner(G):
    for p in minimal_primes(G):
        assert _dimension_from_initial_ideal(p.generators(), 2 * G.n) == p.dimension
