"""Binomial edge ideals, their gradings, and their minimal primes.

Variables are ``x1..x2n``; ``x_{n+i}`` plays the role of the second row of
the generic ``2 x n`` matrix, so ``f_ij`` is the 2-minor on columns i, j.
Minimal primes are found combinatorially from component counts after
vertex deletion, never by primary decomposition.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import BinedgeError, DisconnectedGraphError, GraphError, ResourceCapError
from .graphs import Graph, component_count, components_after_deletion
from .groebner import Ideal
from .polyring import Grading, Polynomial

__all__ = [
    "EdgeIdeal",
    "PrimeComponent",
    "MAX_PRIME_VERTICES",
    "binomial",
    "build_edge_ideal",
    "standard_gradings",
    "t_min",
    "minimal_primes",
    "is_minimal_prime_set",
    "height_and_unmixed",
    "primes_to_json",
]

MAX_PRIME_VERTICES = 16


def binomial(i: int, j: int, n: int, modulus: int = 0) -> Polynomial:
    """``f_ij = x_i x_{n+j} - x_j x_{n+i}``; antisymmetric in ``i, j``."""
    if i == j:
        raise GraphError("f_ii is zero; need distinct vertices")
    N = 2 * n
    return Polynomial({_pair(i, n + j, N): 1, _pair(j, n + i, N): -1}, N, modulus)


def _pair(a: int, b: int, N: int) -> tuple[int, ...]:
    e = [0] * N
    e[a - 1] += 1
    e[b - 1] += 1
    return tuple(e)


@dataclass(frozen=True)
class EdgeIdeal:
    """``J_G`` with one generator per edge, in the graph's edge order."""

    graph: Graph
    ideal: Ideal
    modulus: int = 0

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def nvars(self) -> int:
        return 2 * self.graph.n

    @property
    def generators(self) -> tuple[Polynomial, ...]:
        return self.ideal.generators

    @property
    def edge_index(self) -> dict[tuple[int, int], Polynomial]:
        return dict(zip(self.graph.edges, self.ideal.generators))

    def f(self, i: int, j: int) -> Polynomial:
        """The generator for edge ``{i, j}`` with the sign of ``f_ij``."""
        if not self.graph.has_edge(i, j):
            raise GraphError(f"{{{i},{j}}} is not an edge")
        return binomial(i, j, self.n, self.modulus)


def build_edge_ideal(G: Graph, modulus: int = 0) -> EdgeIdeal:
    if G.n < 2:
        raise GraphError("binomial edge ideals need n >= 2")
    if not G.is_connected():
        raise DisconnectedGraphError("graph must be connected")
    gens = [binomial(i, j, G.n, modulus) for i, j in G.edges]
    return EdgeIdeal(G, Ideal(gens), modulus)


def standard_gradings(G: Graph | int) -> tuple[Grading, Grading]:
    """The gradings ``A`` (n x 2n) and ``B`` ((n+1) x 2n).

    ``A`` sends ``x_i`` and ``x_{n+i}`` to ``e_i``.  ``B`` sends ``x_i`` to
    ``w_1 + w_{i+1}`` and ``x_{n+i}`` to ``w_{i+1}``.
    """
    n = G if isinstance(G, int) else G.n
    eye = np.eye(n, dtype=np.int64)
    A = np.hstack([eye, eye])
    top = np.hstack([np.ones((1, n), dtype=np.int64), np.zeros((1, n), dtype=np.int64)])
    B = np.vstack([top, A])
    return Grading(A), Grading(B)


def t_min(G: Graph) -> list[frozenset[int]]:
    """Supports ``{i, n+j}`` and ``{j, n+i}`` of the monomials of each ``f_ij``."""
    n = G.n
    out: list[frozenset[int]] = []
    seen = set()
    for i, j in G.edges:
        for s in (frozenset((i, n + j)), frozenset((j, n + i))):
            if s not in seen:
                seen.add(s)
                out.append(s)
    return out


@dataclass(frozen=True)
class PrimeComponent:
    """``P_S(G)``: variables of ``S`` plus the 2-minors of each completed
    component of ``G - S``."""

    n: int
    S: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]

    @property
    def c(self) -> int:
        return len(self.blocks)

    @property
    def dimension(self) -> int:
        if not self.S:
            return self.n + 1
        return self.n - len(self.S) + self.c

    @property
    def height(self) -> int:
        return 2 * self.n - self.dimension

    def describe(self) -> str:
        vs = ", ".join(f"x{i}, x{self.n + i}" for i in self.S)
        parts = [f"({vs})"] if vs else []
        parts += [f"minors{{{','.join(map(str, b))}}}" for b in self.blocks if len(b) > 1]
        return " + ".join(parts) if parts else "(0)"

    def generators(self, modulus: int = 0) -> list[Polynomial]:
        """Materialize the generators; this can be quadratic in ``n``."""
        N = 2 * self.n
        gens = []
        for i in self.S:
            gens.append(Polynomial.var(i, N, modulus))
            gens.append(Polynomial.var(self.n + i, N, modulus))
        for b in self.blocks:
            gens.extend(binomial(i, j, self.n, modulus) for i, j in itertools.combinations(b, 2))
        return gens

    def to_json(self) -> dict:
        return {"S": list(self.S), "c": self.c, "dimension": self.dimension}


def is_minimal_prime_set(G: Graph, S) -> bool:
    """Direct criterion: ``S`` empty, or removing any one vertex of ``S``
    strictly lowers the component count."""
    S = set(S)
    if not S:
        return True
    c = component_count(G, S)
    return all(component_count(G, S - {i}) < c for i in S)


def _candidates(G: Graph) -> list[int]:
    # a vertex whose neighbourhood is a clique can never separate anything
    adj = G.adjacency
    out = []
    for v in G.vertices:
        nb = sorted(adj[v])
        if all(G.has_edge(a, b) for a, b in itertools.combinations(nb, 2)):
            continue
        out.append(v)
    return out


def _iter_subsets(items: list[int]) -> Iterator[tuple[int, ...]]:
    for k in range(len(items) + 1):
        yield from itertools.combinations(items, k)


def minimal_primes(G: Graph, max_vertices: int = MAX_PRIME_VERTICES) -> list[PrimeComponent]:
    """All ``P_S(G)`` minimal over ``J_G``, ordered by ``|S|`` then lexicographically."""
    if not G.is_connected():
        raise DisconnectedGraphError("graph must be connected")
    if G.n > max_vertices:
        raise ResourceCapError("max_prime_vertices", max_vertices, f"graph has {G.n} vertices")
    out = []
    for S in _iter_subsets(_candidates(G)):
        if is_minimal_prime_set(G, S):
            blocks = tuple(tuple(sorted(b)) for b in components_after_deletion(G, S))
            out.append(PrimeComponent(G.n, S, blocks))
    return out


def height_and_unmixed(G: Graph, primes: list[PrimeComponent] | None = None) -> tuple[int, bool, list[int]]:
    """``(ht, unmixed, dims)`` with dims listed in prime order."""
    primes = minimal_primes(G) if primes is None else primes
    if not primes:
        raise BinedgeError("no minimal primes found")
    dims = [p.dimension for p in primes]
    return 2 * G.n - max(dims), len(set(dims)) == 1, dims


def primes_to_json(primes: list[PrimeComponent]) -> str:
    return json.dumps([p.to_json() for p in primes])
