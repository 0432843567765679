"""Rank bounds for binomial edge ideals, and certificates that realize them.

A certificate is a list of polynomials in ``J_G`` claimed to generate
``J_G`` up to radical.  All the patterns used here are unions of a
"triangle reduction" ``{f_ab, f_ac, f_ad + f_bc}`` (triangle ``abc`` plus an
edge ``ad``), which replaces four edge binomials by three, with the
remaining edge binomials kept as they are.  Edge-disjoint reductions
combine, which is how the double-triangle and chain certificates arise.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .complexes import build_complex_edge_ideal, is_spanning, uncovered_vertices
from .edgeideal import EdgeIdeal, build_edge_ideal, height_and_unmixed, minimal_primes
from .errors import (
    DisconnectedGraphError,
    FamilyMismatchError,
    GraphError,
    ResourceCapError,
)
from .graphs import (
    FamilyTag,
    Graph,
    TrianglePendant,
    double_triangle_embeddings,
    recognize_family,
    recognize_triangle_chain,
    triangle_pendants,
    unicyclic_path_decomposition,
    vertex_connectivity,
)
from .groebner import GroebnerConfig, Ideal, buchberger, radical_member
from .polyring import Polynomial

__all__ = [
    "Bound",
    "BoundsReport",
    "Certificate",
    "Verdict",
    "UnicyclicClassification",
    "CERTIFICATE_FAMILIES",
    "bounds_report",
    "generate_certificate",
    "certificate_from_polynomials",
    "verify_certificate",
    "classify_unicyclic",
    "build_triangle_chain",
    "chain_pendants",
]


@dataclass(frozen=True)
class Bound:
    side: str  # "lower" or "upper"
    theorem: str
    value: int
    active: bool = False

    def to_json(self) -> dict:
        return {"bound": self.side, "theorem": self.theorem, "value": self.value, "active": self.active}


@dataclass(frozen=True)
class BoundsReport:
    n: int
    m: int
    l: int
    bar: int
    ara_c: int
    graded_rank: int
    ara_lower: int
    ara_upper: int
    ara_exact: int | None
    ht: int
    unmixed: bool
    stci: bool | None
    family: FamilyTag
    certificate_size: int | None
    provenance: tuple[Bound, ...]
    dims: tuple[int, ...] = ()

    def __post_init__(self):
        if self.ara_lower > self.ara_upper:
            raise AssertionError(f"inconsistent bounds {self.ara_lower} > {self.ara_upper}")

    @property
    def lower_source(self) -> str:
        return next(b.theorem for b in self.provenance if b.side == "lower" and b.active)

    @property
    def upper_source(self) -> str:
        return next(b.theorem for b in self.provenance if b.side == "upper" and b.active)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "l": self.l,
            "bar": self.bar,
            "ara_c": self.ara_c,
            "graded_rank": self.graded_rank,
            "ara_lower": self.ara_lower,
            "ara_upper": self.ara_upper,
            "ara_exact": self.ara_exact,
            "ht": self.ht,
            "unmixed": self.unmixed,
            "stci": self.stci,
            "family": self.family.kind,
            "family_params": self.family.to_json()["params"],
            "certificate_size": self.certificate_size,
            "provenance": [b.to_json() for b in self.provenance],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=False)

    def to_text(self) -> str:
        exact = self.ara_exact if self.ara_exact is not None else "open"
        lines = [
            f"n = {self.n}, m = {self.m}, vertex connectivity l = {self.l}",
            f"family: {self.family.kind}",
            f"bar = ara_c = graded rank = {self.bar}",
            f"ht = {self.ht}, unmixed = {self.unmixed}, minimal prime dims = {list(self.dims)}",
            f"ara in [{self.ara_lower}, {self.ara_upper}]  (lower: {self.lower_source}, upper: {self.upper_source})",
            f"ara exact: {exact}",
            f"set-theoretic complete intersection: {'unknown' if self.stci is None else self.stci}",
            f"certificate size: {self.certificate_size if self.certificate_size is not None else '-'}",
        ]
        return "\n".join(lines)


# -- certificates ---------------------------------------------------------------

CERTIFICATE_FAMILIES = (
    "auto",
    "generators",
    "has_triangle",
    "unicyclic_triangle",
    "double_triangle_bridges",
    "triangle_chain",
)


@dataclass(frozen=True)
class Certificate:
    """Polynomials claimed to generate ``J_G`` up to radical.

    ``groups`` lists, per polynomial, the edges whose generators are summed
    (empty for hand-written polynomials); ``relabeling`` maps pattern
    vertex names to vertices of ``G``.
    """

    polynomials: tuple[Polynomial, ...]
    family: FamilyTag
    claim: str = "radical_generates"
    relabeling: Mapping = field(default_factory=dict)
    groups: tuple[tuple[tuple[int, int], ...], ...] = ()

    @property
    def size(self) -> int:
        return len(self.polynomials)

    def to_text(self, header: bool = True) -> str:
        lines = []
        if header:
            lines.append(f"# certificate for family {self.family.kind}, {self.size} polynomials")
            if self.groups:
                for grp in self.groups:
                    if len(grp) > 1:
                        lines.append("# " + " + ".join(f"f{i},{j}" for i, j in grp))
            lines.append(f"vars {self.polynomials[0].nvars}")
        lines.extend(str(p) for p in self.polynomials)
        return "\n".join(lines) + "\n"


def _pendant_groups(p: TrianglePendant) -> list[tuple[tuple[int, int], ...]]:
    def e(a, b):
        return (min(a, b), max(a, b))

    return [(e(p.apex, p.b),), (e(p.apex, p.c),), (e(p.apex, p.outer), e(p.b, p.c))]


def _pendant_relabel(p: TrianglePendant, tag: str = "") -> dict:
    return {f"a{tag}": p.apex, f"b{tag}": p.b, f"c{tag}": p.c, f"d{tag}": p.outer}


def chain_pendants(G: Graph, chain: dict | None = None) -> list[TrianglePendant]:
    """One reduction per triangle of a chain, pairwise edge-disjoint.

    The first triangle uses its exit vertex and the first edge of the
    outgoing path; every later triangle uses its entry vertex and the last
    edge of the incoming path.
    """
    chain = chain or recognize_triangle_chain(G)
    if chain is None:
        raise FamilyMismatchError("graph is not a triangle chain")
    tris, paths = chain["triangles"], chain["paths"]
    out = []
    first = paths[0]
    b, c = sorted(v for v in tris[0] if v != first[0])
    out.append(TrianglePendant(first[0], b, c, first[1]))
    for t, path in zip(tris[1:], paths):
        entry = path[-1]
        b, c = sorted(v for v in t if v != entry)
        out.append(TrianglePendant(entry, b, c, path[-2]))
    return out


def _assemble(E: EdgeIdeal, tag: FamilyTag, pendants: Sequence[TrianglePendant]) -> Certificate:
    groups: list[tuple[tuple[int, int], ...]] = []
    used: set[tuple[int, int]] = set()
    relabel: dict = {}
    for idx, p in enumerate(pendants, start=1):
        pg = _pendant_groups(p)
        for grp in pg:
            if used & set(grp):
                raise FamilyMismatchError("pattern embeddings overlap in an edge")
            used |= set(grp)
        groups.extend(pg)
        relabel.update(_pendant_relabel(p, str(idx) if len(pendants) > 1 else ""))
    groups.extend((e,) for e in E.graph.edges if e not in used)
    return _from_groups(E, tag, groups, relabel)


def _from_groups(E: EdgeIdeal, tag: FamilyTag, groups, relabel=None) -> Certificate:
    idx = E.edge_index
    polys = []
    for grp in groups:
        total = idx[grp[0]]
        for e in grp[1:]:
            total = total + idx[e]
        polys.append(total)
    return Certificate(tuple(polys), tag, relabeling=relabel or {}, groups=tuple(tuple(g) for g in groups))


def _sum_pairs_certificate(E: EdgeIdeal, sum_pairs) -> Certificate:
    G = E.graph
    groups: list[tuple[tuple[int, int], ...]] = []
    used: set[tuple[int, int]] = set()
    for grp in sum_pairs:
        edges = []
        for item in grp:
            if isinstance(item, int):
                if not 1 <= item <= G.m:
                    raise GraphError(f"generator index {item} outside 1..{G.m}")
                e = G.edges[item - 1]
            else:
                i, j = item
                if not G.has_edge(i, j):
                    raise GraphError(f"{{{i},{j}}} is not an edge")
                e = (min(i, j), max(i, j))
            if e in used:
                raise GraphError(f"edge {e} appears in two groups")
            used.add(e)
            edges.append(e)
        if edges:
            groups.append(tuple(edges))
    for e in G.edges:
        if e not in used:
            groups.append((e,))
    # keep the original generator order where possible
    pos = {e: k for k, e in enumerate(G.edges)}
    groups.sort(key=lambda g: min(pos[e] for e in g))
    tag = recognize_family(G)
    params = dict(tag.params, sum_pairs=[list(g) for g in groups if len(g) > 1])
    return _from_groups(E, FamilyTag(tag.kind, params, tag.embedding), groups)


def generate_certificate(G: Graph, family: str | FamilyTag = "auto", sum_pairs=None,
                         modulus: int = 0) -> Certificate:
    """Explicit radical-generating set for ``J_G``.

    ``family="auto"`` picks the smallest pattern that embeds: a triangle
    chain, two triangles with two bridges, a single triangle with an extra
    edge, or the edge binomials themselves.  ``sum_pairs`` instead sums the
    given groups of generators (1-based indices or edges) and keeps the rest.
    """
    E = build_edge_ideal(G, modulus)
    if sum_pairs is not None:
        return _sum_pairs_certificate(E, sum_pairs)
    kind = family.kind if isinstance(family, FamilyTag) else family
    if kind not in CERTIFICATE_FAMILIES and kind not in ("complete", "cycle", "generic"):
        raise FamilyMismatchError(f"unknown certificate family {kind!r}")
    tag = recognize_family(G)
    if isinstance(family, FamilyTag) and family.kind != tag.kind:
        raise FamilyMismatchError(f"graph is {tag.kind}, not {family.kind}")

    if kind == "auto":
        chain = recognize_triangle_chain(G)
        if chain is not None:
            return _assemble(E, tag, chain_pendants(G, chain))
        doubles = double_triangle_embeddings(G)
        if doubles:
            return _assemble(E, tag, doubles[0]["pendants"])
        pends = triangle_pendants(G)
        if pends:
            return _assemble(E, tag, [pends[0]])
        return _from_groups(E, tag, [(e,) for e in G.edges])
    if kind in ("generators", "generic", "cycle", "complete"):
        if kind in ("cycle", "complete") and tag.kind != kind:
            raise FamilyMismatchError(f"graph is {tag.kind}, not {kind}")
        return _from_groups(E, tag, [(e,) for e in G.edges])
    if kind == "triangle_chain":
        chain = recognize_triangle_chain(G)
        if chain is None:
            raise FamilyMismatchError("graph is not a triangle chain")
        return _assemble(E, tag, chain_pendants(G, chain))
    if kind == "double_triangle_bridges":
        doubles = double_triangle_embeddings(G)
        if not doubles:
            raise FamilyMismatchError("no two disjoint triangles joined by two bridges")
        return _assemble(E, tag, doubles[0]["pendants"])
    if kind == "unicyclic_triangle" and tag.kind != "unicyclic_triangle":
        raise FamilyMismatchError(f"graph is {tag.kind}, not unicyclic_triangle")
    pends = triangle_pendants(G)
    if not pends:
        raise FamilyMismatchError("no triangle with an incident edge (needs n >= 4)")
    return _assemble(E, tag, [pends[0]])


def certificate_from_polynomials(G: Graph, polys: Iterable[Polynomial]) -> Certificate:
    polys = tuple(polys)
    if not polys:
        raise ValueError("certificate is empty")
    return Certificate(polys, recognize_family(G))


# -- verification -------------------------------------------------------------------


@dataclass(frozen=True)
class Verdict:
    """Outcome of the three-step check.

    ``failed_step`` is one of ``membership``, ``spanning``, ``radical`` or
    ``None``; ``status`` is ``verified``, ``rejected`` or ``capped``.
    """

    status: str
    failed_step: str | None = None
    message: str = ""
    max_exponent: int | None = None
    methods: tuple[str, ...] = ()

    @property
    def verified(self) -> bool:
        return self.status == "verified"

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "failed_step": self.failed_step,
            "message": self.message,
            "max_exponent": self.max_exponent,
        }


def verify_certificate(G: Graph, cert: Certificate | Sequence[Polynomial], max_power: int = 3,
                       rabinowitsch: bool = True, config: GroebnerConfig | None = None) -> Verdict:
    """Membership in ``J_G``, then the spanning condition, then radical equality.

    ``J_G`` is radical, so membership settles one inclusion; the other needs
    every edge binomial in the radical of the certificate.
    """
    polys = tuple(cert.polynomials if isinstance(cert, Certificate) else cert)
    if not polys:
        return Verdict("rejected", "membership", "certificate is empty")
    modulus = polys[0].modulus
    E = build_edge_ideal(G, modulus)
    for p in polys:
        if p.nvars != E.nvars:
            return Verdict("rejected", "membership",
                           f"polynomial has {p.nvars} variables, expected {E.nvars}")
    step = "membership"
    try:
        gb = buchberger(E.ideal, config=config)
        for k, p in enumerate(polys, start=1):
            if not gb.contains(p):
                return Verdict("rejected", "membership", f"polynomial {k} is not in J_G: {p}")
        step = "spanning"
        delta = build_complex_edge_ideal(G)
        if not is_spanning(polys, delta):
            missing = ", ".join("{" + ",".join(map(str, sorted(s))) + "}" for s in uncovered_vertices(polys, delta))
            return Verdict("rejected", "spanning", f"spanning check failed; uncovered supports {missing}")
        step = "radical"
        F = Ideal([p for p in polys if not p.is_zero()])
        exps, methods = [], []
        for g in E.generators:
            res = radical_member(g, F, max_power, rabinowitsch, config=config)
            methods.append(res.method)
            if not res.member:
                if res.definitive:
                    return Verdict("rejected", "radical", f"{g} is not in the radical of the certificate",
                                   methods=tuple(methods))
                return Verdict("capped", "radical",
                               f"{g}: no power up to {max_power} in the certificate ideal (Rabinowitsch disabled)",
                               methods=tuple(methods))
            if res.exponent is not None:
                exps.append(res.exponent)
        return Verdict("verified", None, "radical generation verified",
                       max(exps) if exps and len(exps) == len(methods) else None, tuple(methods))
    except ResourceCapError as exc:
        return Verdict("capped", step, str(exc))


# -- bounds ---------------------------------------------------------------------------


def bounds_report(G: Graph, with_certificate: bool = True) -> BoundsReport:
    if G.n < 2:
        raise GraphError("need n >= 2")
    if not G.is_connected():
        raise DisconnectedGraphError("graph must be connected")
    n, m = G.n, G.m
    l = vertex_connectivity(G)
    primes = minimal_primes(G)
    ht, unmixed, dims = height_and_unmixed(G, primes)
    tag = recognize_family(G)

    # listed in tie-break order: the first of equal values is reported
    lower = [("vertex_connectivity", n + l - 2), ("height", ht)]
    upper = [("bar", m)]
    if tag.kind == "cycle":
        upper.append(("cycle", n))
    if tag.kind == "unicyclic_triangle":
        upper.append(("unicyclic_triangle", n - 1))
    if tag.kind == "triangle_chain":
        upper.append(("triangle_chain", 2 * tag.params["k"] + sum(tag.params["r"])))
    if tag.kind == "complete":
        upper.append(("complete_graph", 2 * n - 3))
    if double_triangle_embeddings(G):
        upper.append(("double_triangle_bridges", m - 2))
    if n >= 4 and triangle_pendants(G):
        upper.append(("triangle_reduction", m - 1))

    lo_tag, lo = max(lower, key=lambda t: t[1])  # max keeps the first of ties
    up_tag, up = min(upper, key=lambda t: t[1])
    prov = tuple(Bound("lower", t, v, t == lo_tag) for t, v in lower) + \
        tuple(Bound("upper", t, v, t == up_tag) for t, v in upper)
    exact = lo if lo == up else None
    if exact is not None:
        stci = exact == ht
    elif lo > ht:
        stci = False
    else:
        stci = None
    cert_size = generate_certificate(G).size if with_certificate else None
    return BoundsReport(n, m, l, m, m, m, lo, up, exact, ht, unmixed, stci, tag, cert_size, prov, tuple(dims))


# -- families -------------------------------------------------------------------------


@dataclass(frozen=True)
class UnicyclicClassification:
    """Unicyclic graph with a triangle: path condition vs. unmixedness.

    ``all_equivalent`` is the common value of unmixed, Cohen-Macaulay,
    set-theoretic complete intersection and the path condition; the last
    two are equivalent by the known classification and both are computed
    here independently.
    """

    n: int
    condition_d: bool
    unmixed: bool
    all_equivalent: bool
    ht: int
    ara_exact: int
    dims: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "condition_d": self.condition_d,
            "unmixed": self.unmixed,
            "all_equivalent": self.all_equivalent,
            "ht": self.ht,
            "ara_exact": self.ara_exact,
            "dims": list(self.dims),
        }


def classify_unicyclic(G: Graph) -> UnicyclicClassification:
    dec = unicyclic_path_decomposition(G)
    ht, unmixed, dims = height_and_unmixed(G)
    if dec.paths_ok != unmixed:
        raise AssertionError(f"path condition {dec.paths_ok} disagrees with unmixedness {unmixed} on {G!r}")
    return UnicyclicClassification(G.n, dec.paths_ok, unmixed, unmixed, ht, G.n - 1, tuple(dims))


def build_triangle_chain(k: int, r: Sequence[int] = ()) -> Graph:
    """Canonical chain: triangle ``i`` is ``(s, s+1, s+2)`` and its path
    leaves from ``s+2`` and lands on the first vertex of the next triangle."""
    r = tuple(r)
    if not isinstance(k, int) or k < 1:
        raise GraphError("k must be a positive integer")
    if len(r) != k - 1:
        raise GraphError(f"need {k - 1} path lengths, got {len(r)}")
    if any(not isinstance(x, int) or x < 2 for x in r):
        raise GraphError("every path length must be an integer >= 2")
    edges = []
    s = 1
    for i in range(k):
        edges += [(s, s + 1), (s + 1, s + 2), (s, s + 2)]
        if i < k - 1:
            a = s + 2
            edges += [(a + t, a + t + 1) for t in range(r[i])]
            s = a + r[i]
    return Graph(s + 2, edges)
