"""Simple undirected graphs on vertices 1..n and the combinatorics around them.

Besides components and vertex connectivity, this module recognizes the
graph families for which a rank value or a short radical-generating set is
known, and returns each recognition with an explicit vertex embedding so the
certificate generator can relabel its pattern onto the actual graph.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Mapping

from .errors import (
    DisconnectedGraphError,
    DuplicateEdgeError,
    FamilyMismatchError,
    GraphError,
    LoopError,
    MalformedLineError,
    VertexRangeError,
)

__all__ = [
    "Graph",
    "FamilyTag",
    "TrianglePendant",
    "UnicyclicDecomposition",
    "FAMILY_PRIORITY",
    "components_after_deletion",
    "component_count",
    "vertex_connectivity",
    "triangles",
    "triangle_pendants",
    "double_triangle_embeddings",
    "recognize_family",
    "recognize_triangle_chain",
    "unicyclic_path_decomposition",
    "parse_graph",
    "print_graph",
    "read_graph",
    "complete_graph",
    "cycle_graph",
    "path_graph",
]


class Graph:
    """A simple graph on ``1..n``.

    Edges are stored as pairs ``(i, j)`` with ``i < j`` in the order they
    were given; equality ignores that order.
    """

    __slots__ = ("n", "edges", "__dict__")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if not isinstance(n, int) or n < 1:
            raise GraphError(f"vertex count must be a positive int, got {n!r}")
        seen: set[tuple[int, int]] = set()
        ordered = []
        for e in edges:
            i, j = e
            if i == j:
                raise LoopError(f"loop at vertex {i}")
            if not (1 <= i <= n and 1 <= j <= n):
                raise VertexRangeError(f"edge {{{i},{j}}} has a vertex outside 1..{n}")
            key = (i, j) if i < j else (j, i)
            if key in seen:
                raise DuplicateEdgeError(f"duplicate edge {{{key[0]},{key[1]}}}")
            seen.add(key)
            ordered.append(key)
        self.n = n
        self.edges = tuple(ordered)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return {v: frozenset(s) for v, s in adj.items()}

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edge_set

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def is_connected(self) -> bool:
        return len(components_after_deletion(self, ())) == 1

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def edge_index(self, i: int, j: int) -> int:
        """0-based position of edge ``{i, j}`` in :attr:`edges`."""
        return self.edges.index((min(i, j), max(i, j)))

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edge_set == other.edge_set

    def __hash__(self):
        return hash((self.n, self.edge_set))

    def __repr__(self):
        return f"Graph({self.n}, {list(self.edges)})"


def complete_graph(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(1, n + 1), 2))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(1, n)])


# -- components and connectivity ---------------------------------------------


def components_after_deletion(G: Graph, S: Iterable[int]) -> list[frozenset[int]]:
    """Connected components of ``G`` with the vertices ``S`` removed.

    Components are listed by their smallest vertex.
    """
    removed = set(S)
    for v in removed:
        if not 1 <= v <= G.n:
            raise VertexRangeError(f"vertex {v} outside 1..{G.n}")
    adj = G.adjacency
    seen = set(removed)
    blocks = []
    for v in G.vertices:
        if v in seen:
            continue
        seen.add(v)
        block = [v]
        queue = deque([v])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    block.append(w)
                    queue.append(w)
        blocks.append(frozenset(block))
    return blocks


def component_count(G: Graph, S: Iterable[int]) -> int:
    """``c(S)``: number of components of ``G`` minus ``S``."""
    return len(components_after_deletion(G, S))


def _local_connectivity(G: Graph, s: int, t: int, limit: int) -> int:
    """Max number of internally vertex-disjoint s-t paths (s, t non-adjacent),
    stopping early once ``limit`` is reached."""
    # split v into v_in = 2v, v_out = 2v+1 with unit capacity; edges get capacity 1 each way
    cap: dict[int, dict[int, int]] = {}

    def arc(u, w, c):
        cap.setdefault(u, {})
        cap.setdefault(w, {})
        cap[u][w] = cap[u].get(w, 0) + c
        cap[w].setdefault(u, 0)

    for v in G.vertices:
        arc(2 * v, 2 * v + 1, 1 if v not in (s, t) else G.n)
    for i, j in G.edges:
        arc(2 * i + 1, 2 * j, 1)
        arc(2 * j + 1, 2 * i, 1)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < limit:
        parent = {source: None}
        queue = deque([source])
        while queue and sink not in parent:
            u = queue.popleft()
            for w, c in cap[u].items():
                if c > 0 and w not in parent:
                    parent[w] = u
                    queue.append(w)
        if sink not in parent:
            break
        w = sink
        while parent[w] is not None:
            u = parent[w]
            cap[u][w] -= 1
            cap[w][u] += 1
            w = u
        flow += 1
    return flow


def vertex_connectivity(G: Graph) -> int:
    """Largest ``l`` such that ``G`` is ``l``-vertex-connected.

    Complete graphs give ``n - 1``; otherwise this is the size of a minimum
    vertex cut, found as the minimum over non-adjacent pairs of the
    max-flow in the vertex-split network.
    """
    if not G.is_connected():
        raise DisconnectedGraphError("vertex connectivity needs a connected graph")
    if G.is_complete():
        return G.n - 1
    best = G.n - 2
    # some vertex of a minimum cut's complement lies in 1..best+1, so fixing s there suffices
    for s in range(1, G.n + 1):
        if s > best + 1:
            break
        for t in G.vertices:
            if t != s and not G.has_edge(s, t):
                best = min(best, _local_connectivity(G, s, t, best))
    return best


# -- pattern search -----------------------------------------------------------


def triangles(G: Graph) -> list[tuple[int, int, int]]:
    """All triangles as sorted triples, in lexicographic order."""
    adj = G.adjacency
    out = []
    for a in G.vertices:
        for b in sorted(w for w in adj[a] if w > a):
            for c in sorted(w for w in adj[b] if w > b):
                if c in adj[a]:
                    out.append((a, b, c))
    return out


@dataclass(frozen=True)
class TrianglePendant:
    """A triangle ``{apex, b, c}`` plus an extra edge ``{apex, outer}``.

    This is the subgraph behind the one-polynomial saving: ``f(apex,b)``,
    ``f(apex,c)`` and ``f(apex,outer) + f(b,c)`` generate the same radical
    as the four edge binomials.
    """

    apex: int
    b: int
    c: int
    outer: int

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(tuple(sorted(e)) for e in
                     ((self.apex, self.b), (self.apex, self.c), (self.apex, self.outer), (self.b, self.c)))


def triangle_pendants(G: Graph, tri: tuple[int, int, int] | None = None) -> list[TrianglePendant]:
    """All triangle-plus-incident-edge patterns, ordered by ``(apex, b, c, outer)``."""
    adj = G.adjacency
    out = []
    tris = [tri] if tri else triangles(G)
    for t in tris:
        for apex in t:
            b, c = sorted(v for v in t if v != apex)
            for outer in adj[apex]:
                if outer not in t:
                    out.append(TrianglePendant(apex, b, c, outer))
    out.sort(key=lambda p: (p.apex, p.b, p.c, p.outer))
    return out


def double_triangle_embeddings(G: Graph) -> list[dict]:
    """Pairs of vertex-disjoint triangles joined by at least two bridges.

    Each result fixes two bridges ``e1 < e2``; ``e1`` is used at its
    endpoint on the first triangle and ``e2`` at its endpoint on the second.
    Ordered lexicographically by ``(triangle1, triangle2, e1, e2)``.
    """
    tris = triangles(G)
    out = []
    for t1, t2 in itertools.combinations(tris, 2):
        if set(t1) & set(t2):
            continue
        bridges = sorted((min(a, b), max(a, b)) for a in t1 for b in t2 if G.has_edge(a, b))
        for e1, e2 in itertools.combinations(bridges, 2):
            a1 = e1[0] if e1[0] in t1 else e1[1]
            a2 = e2[0] if e2[0] in t2 else e2[1]
            p1 = TrianglePendant(a1, *sorted(v for v in t1 if v != a1), outer=(set(e1) - {a1}).pop())
            p2 = TrianglePendant(a2, *sorted(v for v in t2 if v != a2), outer=(set(e2) - {a2}).pop())
            out.append({
                "triangles": (t1, t2),
                "bridges": (e1, e2),
                "shared_vertex": bool(set(e1) & set(e2)),
                "pendants": (p1, p2),
            })
    return out


# -- families -----------------------------------------------------------------

FAMILY_PRIORITY = (
    "complete",
    "cycle",
    "triangle_chain",
    "unicyclic_triangle",
    "double_triangle_bridges",
    "has_triangle",
    "generic",
)


@dataclass(frozen=True)
class FamilyTag:
    """Most specific known family of a graph, with the embedding that proves it.

    ``params`` holds the family data (e.g. ``k`` and ``r`` for a triangle
    chain, the cyclic vertex order for a cycle) and ``embedding`` the
    pattern placement used for certificates.
    """

    kind: str
    params: Mapping = field(default_factory=dict)
    embedding: Mapping = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in FAMILY_PRIORITY:
            raise ValueError(f"unknown family {self.kind!r}")

    def to_json(self) -> dict:
        return {"kind": self.kind, "params": _jsonable(self.params)}


def _jsonable(obj):
    if isinstance(obj, Mapping):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, TrianglePendant):
        return {"apex": obj.apex, "b": obj.b, "c": obj.c, "outer": obj.outer}
    return obj


def _cycle_order(G: Graph) -> tuple[int, ...] | None:
    if G.n < 3 or G.m != G.n or any(G.degree(v) != 2 for v in G.vertices) or not G.is_connected():
        return None
    order = [1]
    prev, cur = None, 1
    while True:
        nxt = min(w for w in G.neighbors(cur) if w != prev) if prev is None else \
            next(w for w in G.neighbors(cur) if w != prev)
        if nxt == 1:
            break
        order.append(nxt)
        prev, cur = cur, nxt
    return tuple(order)


def recognize_triangle_chain(G: Graph) -> dict | None:
    """Triangles ``C_1..C_k`` (k >= 2, disjoint) strung together by single
    paths of length ``r_i >= 2``, and nothing else.

    Returns ``{"k", "r", "triangles", "paths"}`` with triangles in chain
    order and each path as its vertex sequence from ``C_i`` to ``C_{i+1}``.
    """
    tris = triangles(G)
    k = len(tris)
    if k < 2 or G.m != G.n + k - 1 or not G.is_connected():
        return None
    owner: dict[int, int] = {}
    for idx, t in enumerate(tris):
        for v in t:
            if v in owner:
                return None
            owner[v] = idx
    tri_edges = {tuple(sorted(e)) for t in tris for e in itertools.combinations(t, 2)}
    for v in G.vertices:
        if v not in owner and G.degree(v) != 2:
            return None
    # walk every path leaving a triangle vertex through non-triangle vertices
    paths: dict[frozenset[int], list[tuple[int, ...]]] = {}
    used: set[tuple[int, int]] = set()
    for v in sorted(owner):
        for w in sorted(G.neighbors(v)):
            e = (min(v, w), max(v, w))
            if e in tri_edges or e in used:
                continue
            walk = [v, w]
            used.add(e)
            while walk[-1] not in owner:
                u = walk[-1]
                nxt = [x for x in G.neighbors(u) if x != walk[-2]]
                if len(nxt) != 1:
                    return None
                walk.append(nxt[0])
                used.add((min(u, nxt[0]), max(u, nxt[0])))
            a, b = owner[walk[0]], owner[walk[-1]]
            if a == b or len(walk) - 1 < 2:
                return None
            paths.setdefault(frozenset((a, b)), []).append(tuple(walk))
    if len(paths) != k - 1 or any(len(p) != 1 for p in paths.values()):
        return None
    tri_deg = {i: 0 for i in range(k)}
    for pair in paths:
        for i in pair:
            tri_deg[i] += 1
    if any(d > 2 for d in tri_deg.values()):
        return None
    ends = sorted((i for i, d in tri_deg.items() if d == 1), key=lambda i: tris[i])
    if len(ends) != 2:
        return None
    chain = [ends[0]]
    while len(chain) < k:
        cur = chain[-1]
        nxt = [j for pair in paths if cur in pair for j in pair if j != cur and j not in chain]
        if len(nxt) != 1:
            return None
        chain.append(nxt[0])
    ordered_paths = []
    for i, j in zip(chain, chain[1:]):
        walk = paths[frozenset((i, j))][0]
        if owner[walk[0]] != i:
            walk = walk[::-1]
        ordered_paths.append(walk)
    return {
        "k": k,
        "r": tuple(len(p) - 1 for p in ordered_paths),
        "triangles": tuple(tris[i] for i in chain),
        "paths": tuple(ordered_paths),
    }


def _unique_triangle_cycle(G: Graph) -> tuple[int, int, int] | None:
    if G.n < 4 or G.m != G.n or not G.is_connected():
        return None
    tris = triangles(G)
    return tris[0] if len(tris) == 1 else None


def recognize_family(G: Graph) -> FamilyTag:
    """Most specific family of ``G`` in the order of :data:`FAMILY_PRIORITY`."""
    if not G.is_connected():
        raise DisconnectedGraphError("family recognition needs a connected graph")
    if G.is_complete():
        return FamilyTag("complete", {"n": G.n})
    order = _cycle_order(G)
    if order is not None:
        return FamilyTag("cycle", {"n": G.n, "order": order})
    chain = recognize_triangle_chain(G)
    if chain is not None:
        return FamilyTag("triangle_chain", {"k": chain["k"], "r": chain["r"]},
                         {"triangles": chain["triangles"], "paths": chain["paths"]})
    tri = _unique_triangle_cycle(G)
    if tri is not None:
        pend = triangle_pendants(G, tri)[0]
        return FamilyTag("unicyclic_triangle", {"triangle": tri}, {"pendant": pend})
    doubles = double_triangle_embeddings(G)
    if doubles:
        d = doubles[0]
        return FamilyTag("double_triangle_bridges",
                         {"triangles": d["triangles"], "bridges": d["bridges"], "shared_vertex": d["shared_vertex"]},
                         {"pendants": d["pendants"]})
    if G.n >= 4:
        pends = triangle_pendants(G)
        if pends:
            return FamilyTag("has_triangle", {"triangle": (pends[0].apex, pends[0].b, pends[0].c)},
                             {"pendant": pends[0]})
    return FamilyTag("generic")


@dataclass(frozen=True)
class UnicyclicDecomposition:
    """A unicyclic graph whose cycle is a triangle, split at the triangle.

    ``trees`` maps each triangle vertex with something attached to the
    vertex set of the tree hanging there.  ``paths_ok`` is the structural
    condition: every tree is a path starting at its triangle vertex (so
    attachment vertices are automatically distinct).  ``degrees_ok`` is the
    equivalent degree test: off-triangle vertices have degree <= 2 and
    triangle vertices degree <= 3.
    """

    triangle: tuple[int, int, int]
    trees: Mapping[int, frozenset[int]]
    paths_ok: bool
    degrees_ok: bool


def unicyclic_path_decomposition(G: Graph) -> UnicyclicDecomposition:
    tri = _unique_triangle_cycle(G)
    if tri is None:
        raise FamilyMismatchError("graph is not unicyclic with a triangle as its cycle (n >= 4)")
    tri_set = set(tri)
    trees: dict[int, frozenset[int]] = {}
    paths_ok = True
    for v in tri:
        others = tri_set - {v}
        block = next(b for b in components_after_deletion(G, others) if v in b)
        if len(block) == 1:
            continue
        trees[v] = block
        # a path hanging from v: v has one neighbour in the tree, the rest are at most 2
        if len(G.neighbors(v) - others) != 1 or any(G.degree(u) > 2 for u in block if u != v):
            paths_ok = False
    degrees_ok = all(G.degree(v) <= (3 if v in tri_set else 2) for v in G.vertices)
    return UnicyclicDecomposition(tri, trees, paths_ok, degrees_ok)


# -- text format --------------------------------------------------------------


def parse_graph(text: str) -> Graph:
    """Parse ``n m`` then ``m`` lines ``i j``; ``#`` starts a comment."""
    rows: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line))
    if not rows:
        raise MalformedLineError("no header line 'n m'")
    lineno, header = rows[0]
    parts = header.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise MalformedLineError(f"expected 'n m', got {header!r}", lineno)
    n, m = int(parts[0]), int(parts[1])
    if n < 1:
        raise MalformedLineError("vertex count must be at least 1", lineno)
    if len(rows) - 1 != m:
        raise MalformedLineError(f"header announces {m} edges, found {len(rows) - 1}", lineno)
    seen = set()
    edges = []
    for lineno, line in rows[1:]:
        parts = line.split()
        if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
            raise MalformedLineError(f"expected 'i j', got {line!r}", lineno)
        i, j = int(parts[0]), int(parts[1])
        if i == j:
            raise LoopError(f"loop at vertex {i}", lineno)
        if not (1 <= i <= n and 1 <= j <= n):
            raise VertexRangeError(f"vertex outside 1..{n} in {line!r}", lineno)
        key = (min(i, j), max(i, j))
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge {{{key[0]},{key[1]}}}", lineno)
        seen.add(key)
        edges.append(key)
    return Graph(n, edges)


def print_graph(G: Graph, comment: str | None = None) -> str:
    """Canonical text form with edges sorted lexicographically."""
    lines = [f"# {c}" for c in comment.splitlines()] if comment else []
    lines.append(f"{G.n} {G.m}")
    lines.extend(f"{i} {j}" for i, j in sorted(G.edges))
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text())
