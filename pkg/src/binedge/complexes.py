"""Simplicial complexes on minimal supports, and matchings inside them.

Vertices of a complex are supports (sets of variable indices); faces are
sets of vertex positions (0-based in the API, 1-based in files).  For a
binomial edge ideal the complex is known in closed form; for other ideals a
bounded-degree oracle groups monomials by their normal forms.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

from .edgeideal import t_min
from .errors import ComplexParseError, ResourceCapError
from .graphs import Graph
from .groebner import GroebnerBasis, Ideal, buchberger
from .polyring import Polynomial, support

__all__ = [
    "SimplicialComplex",
    "QMatching",
    "MAX_COMPONENT_VERTICES",
    "build_complex_edge_ideal",
    "build_complex_generic",
    "is_J_complete",
    "delta_of_polynomial",
    "is_spanning",
    "delta_Q",
    "omega",
    "b_and_r",
    "parse_complex",
    "format_complex",
    "read_complex",
]

MAX_COMPONENT_VERTICES = 24


class SimplicialComplex:
    """Downward-closed face family over a list of support vertices.

    ``verified_degree`` is ``None`` when the faces are exact and otherwise
    the monomial degree up to which non-faces were ruled out.
    """

    def __init__(self, vertices: Sequence[Iterable[int]], faces: Iterable[Iterable[int]] = (),
                 verified_degree: int | None = None):
        self.vertices: tuple[frozenset[int], ...] = tuple(frozenset(v) for v in vertices)
        k = len(self.vertices)
        gens = {frozenset([i]) for i in range(k)}
        for f in faces:
            f = frozenset(f)
            if not f:
                continue
            if any(not 0 <= i < k for i in f):
                raise ValueError(f"face {sorted(f)} uses a vertex outside 0..{k - 1}")
            gens.add(f)
        # keep only maximal generators; closure is implicit
        self.facets: tuple[frozenset[int], ...] = tuple(sorted(
            (f for f in gens if not any(f < g for g in gens)),
            key=lambda f: (len(f), sorted(f)),
        ))
        self.verified_degree = verified_degree

    @property
    def nvertices(self) -> int:
        return len(self.vertices)

    @cached_property
    def faces(self) -> frozenset[frozenset[int]]:
        out = set()
        for F in self.facets:
            for r in range(1, len(F) + 1):
                out.update(frozenset(c) for c in itertools.combinations(sorted(F), r))
        return frozenset(out)

    @property
    def dim(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def is_face(self, s: Iterable[int]) -> bool:
        s = frozenset(s)
        return not s or any(s <= F for F in self.facets)

    def induced(self, keep: Iterable[int]) -> "SimplicialComplex":
        """Induced subcomplex, vertices renumbered in increasing order."""
        keep = sorted(set(keep))
        pos = {v: i for i, v in enumerate(keep)}
        faces = [[pos[v] for v in F if v in pos] for F in self.facets]
        return SimplicialComplex([self.vertices[v] for v in keep], faces, self.verified_degree)

    def components(self) -> list[frozenset[int]]:
        """Vertex sets of the connected components, by smallest vertex."""
        parent = list(range(self.nvertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for F in self.facets:
            first, *rest = sorted(F)
            for v in rest:
                parent[find(v)] = find(first)
        groups: dict[int, list[int]] = {}
        for v in range(self.nvertices):
            groups.setdefault(find(v), []).append(v)
        return sorted((frozenset(g) for g in groups.values()), key=min)

    def vertex_index(self, s: Iterable[int]) -> int:
        return self.vertices.index(frozenset(s))

    def __eq__(self, other):
        return (isinstance(other, SimplicialComplex) and self.vertices == other.vertices
                and set(self.facets) == set(other.facets))

    def __hash__(self):
        return hash((self.vertices, frozenset(self.facets)))

    def __repr__(self):
        return f"SimplicialComplex({self.nvertices} vertices, facets={[sorted(f) for f in self.facets]})"


def omega(delta: SimplicialComplex) -> frozenset[int]:
    """All dimensions ``0..dim``."""
    return frozenset(range(delta.dim + 1))


# -- construction --------------------------------------------------------------


def build_complex_edge_ideal(G: Graph) -> SimplicialComplex:
    """The complex of ``J_G``: one 1-simplex per edge, nothing else.

    The two monomials of ``f_ij`` are congruent, and no monomials attached to
    different edges can be, because their ``A``-degrees ``e_i + e_j`` differ.
    """
    verts = t_min(G)
    return SimplicialComplex(verts, [(2 * k, 2 * k + 1) for k in range(G.m)])


def _monomials_with_support(supp: Sequence[int], nvars: int, max_degree: int):
    supp = sorted(supp)
    k = len(supp)
    for extra in range(max(0, max_degree - k) + 1):
        for bump in itertools.combinations_with_replacement(supp, extra):
            e = [0] * nvars
            for i in supp:
                e[i - 1] = 1
            for i in bump:
                e[i - 1] += 1
            yield tuple(e)


def build_complex_generic(J: Ideal, vertices: Sequence[Iterable[int]], max_degree: int = 4,
                          gb: GroebnerBasis | None = None) -> SimplicialComplex:
    """Faces found by grouping monomials of degree ``<= max_degree`` into
    classes modulo ``J``.

    A set of vertices is reported as a face when one class holds a monomial
    of each support.  That is a proof; a missing face is only ruled out up
    to ``max_degree``, recorded in ``verified_degree``.
    """
    gb = gb or buchberger(J)
    N = J.nvars
    classes: dict[Polynomial, set[int]] = {}
    for idx, supp in enumerate(vertices):
        for e in _monomials_with_support(supp, N, max_degree):
            nf = gb.normal_form(Polynomial.monomial(e, modulus=J.modulus))
            if nf.is_zero():
                continue
            classes.setdefault(nf, set()).add(idx)
    faces = [members for members in classes.values() if len(members) > 1]
    return SimplicialComplex(vertices, faces, verified_degree=max_degree)


# -- polynomials against the complex --------------------------------------------


def is_J_complete(F: Polynomial, J: Ideal | GroebnerBasis) -> bool:
    """Every pairwise difference of the monomials of ``F`` lies in ``J``."""
    gb = J if isinstance(J, GroebnerBasis) else buchberger(J)
    monos = list(F.terms)
    if len(monos) < 2:
        return True
    forms = {gb.normal_form(Polynomial.monomial(e, modulus=F.modulus)) for e in monos}
    return len(forms) == 1


def _vertices_of(F: Polynomial, delta: SimplicialComplex) -> set[int]:
    pos = {v: i for i, v in enumerate(delta.vertices)}
    return {pos[s] for s in (support(e) for e in F.terms) if s in pos}


def delta_of_polynomial(F: Polynomial, delta: SimplicialComplex) -> SimplicialComplex:
    """Induced subcomplex on the vertices that occur as the support of a monomial of ``F``."""
    return delta.induced(_vertices_of(F, delta))


def is_spanning(polys: Iterable[Polynomial], delta: SimplicialComplex) -> bool:
    covered: set[int] = set()
    for F in polys:
        covered |= _vertices_of(F, delta)
    return len(covered) == delta.nvertices


def uncovered_vertices(polys: Iterable[Polynomial], delta: SimplicialComplex) -> list[frozenset[int]]:
    covered: set[int] = set()
    for F in polys:
        covered |= _vertices_of(F, delta)
    return [v for i, v in enumerate(delta.vertices) if i not in covered]


# -- matchings ---------------------------------------------------------------------


@dataclass(frozen=True)
class QMatching:
    simplices: tuple[frozenset[int], ...]
    Q: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        seen: set[int] = set()
        for s in self.simplices:
            if seen & s:
                raise ValueError("simplices of a matching must be disjoint")
            if len(s) - 1 not in self.Q:
                raise ValueError(f"simplex of dimension {len(s) - 1} not allowed by Q={sorted(self.Q)}")
            seen |= s

    @property
    def card(self) -> int:
        return len(self.simplices)

    @property
    def supp(self) -> frozenset[int]:
        return frozenset().union(*self.simplices) if self.simplices else frozenset()


def _component_faces(delta: SimplicialComplex, comp: frozenset[int], dims: frozenset[int]) -> list[frozenset[int]]:
    return sorted((f for f in delta.faces if f <= comp and len(f) - 1 in dims), key=lambda f: (len(f), sorted(f)))


def _check_size(comp: frozenset[int], cap: int) -> None:
    if len(comp) > cap:
        raise ResourceCapError("max_component_vertices", cap, f"component has {len(comp)} vertices")


def _best_matching(order: list[int], faces: list[frozenset[int]]) -> tuple[int, int, list[frozenset[int]]]:
    """Max covered vertices, then min simplices; returns (covered, count, simplices)."""
    bit = {v: 1 << i for i, v in enumerate(order)}
    masks = [(sum(bit[v] for v in f), f) for f in faces]
    by_low: dict[int, list[tuple[int, frozenset[int]]]] = {}
    for m, f in masks:
        low = m & -m
        by_low.setdefault(low, []).append((m, f))
    memo: dict[int, tuple[int, int, int, frozenset[int] | None]] = {}

    def solve(mask: int) -> tuple[int, int]:
        if mask == 0:
            return (0, 0)
        hit = memo.get(mask)
        if hit is not None:
            return hit[0], hit[1]
        low = mask & -mask
        rest = mask ^ low
        cov, neg = solve(rest)
        best = (cov, neg, rest, None)
        # faces are indexed by their lowest vertex: the lowest free vertex is either
        # left out or covered by a face whose lowest vertex it is
        for m, f in by_low.get(low, ()):
            if m & mask == m:
                c2, n2 = solve(mask ^ m)
                cand = (c2 + len(f), n2 - 1)
                if cand > best[:2]:
                    best = (cand[0], cand[1], mask ^ m, f)
        memo[mask] = best
        return best[0], best[1]

    full = sum(bit.values())
    covered, neg = solve(full)
    picked = []
    mask = full
    while mask:
        _, _, nxt, f = memo[mask]
        if f is not None:
            picked.append(f)
        mask = nxt
    return covered, -neg, picked


def delta_Q(delta: SimplicialComplex, Q: Iterable[int], cap: int = MAX_COMPONENT_VERTICES) -> tuple[int, QMatching]:
    """Fewest simplices among the ``Q``-matchings of largest support.

    Solved independently on each connected component and summed.
    """
    Q = frozenset(Q)
    usable = frozenset(q for q in Q if 0 <= q <= delta.dim)
    if not usable:
        return 0, QMatching((), Q)
    total = 0
    chosen: list[frozenset[int]] = []
    for comp in delta.components():
        _check_size(comp, cap)
        _, count, picked = _best_matching(sorted(comp), _component_faces(delta, comp, usable))
        total += count
        chosen.extend(picked)
    chosen.sort(key=sorted)
    return total, QMatching(tuple(chosen), Q)


def _min_cover(order: list[int], faces: list[frozenset[int]]) -> int:
    bit = {v: 1 << i for i, v in enumerate(order)}
    masks = [sum(bit[v] for v in f) for f in faces]
    memo: dict[int, int] = {0: 0}

    def solve(mask: int) -> int:
        if mask in memo:
            return memo[mask]
        low = mask & -mask
        best = min(1 + solve(mask & ~m) for m in masks if m & low)
        memo[mask] = best
        return best

    return solve(sum(bit.values()))


def _maximal(faces: list[frozenset[int]]) -> list[frozenset[int]]:
    return [f for f in faces if not any(f < g for g in faces)]


def b_and_r(delta: SimplicialComplex, cap: int = MAX_COMPONENT_VERTICES) -> tuple[int, int]:
    """Minimum spanning covers: ``b`` by simplices of dimension <= 1, ``r`` by any simplices.

    Plain set cover, overlaps allowed, independent of :func:`delta_Q`.
    """
    if delta.nvertices == 0:
        raise ValueError("empty complex")
    b = r = 0
    for comp in delta.components():
        _check_size(comp, cap)
        order = sorted(comp)
        small = [f for f in delta.faces if f <= comp and len(f) <= 2]
        b += _min_cover(order, _maximal(small))
        r += _min_cover(order, [f for f in delta.facets if f <= comp])
    return b, r


# -- file format ----------------------------------------------------------------------

_SUPPORT_RE = re.compile(r"^\{\s*(\d+(?:\s*,\s*\d+)*)?\s*\}$")


def parse_complex(text: str) -> SimplicialComplex:
    """``vertices k``, then k lines ``{i,j,...}``, then ``faces`` and one
    face per line as 1-based vertex positions."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line))
    if not rows:
        raise ComplexParseError("missing 'vertices k' header")
    lineno, head = rows[0]
    m = re.fullmatch(r"vertices\s+(\d+)", head)
    if not m:
        raise ComplexParseError(f"expected 'vertices k', got {head!r}", lineno)
    k = int(m.group(1))
    if len(rows) < 1 + k:
        raise ComplexParseError(f"expected {k} support lines", rows[-1][0])
    verts = []
    for lineno, line in rows[1:1 + k]:
        sm = _SUPPORT_RE.match(line)
        if not sm or not sm.group(1):
            raise ComplexParseError(f"expected a support like '{{1,6}}', got {line!r}", lineno)
        verts.append(frozenset(int(x) for x in sm.group(1).split(",")))
    if len(set(verts)) != len(verts):
        raise ComplexParseError("repeated support among vertices")
    faces = []
    rest = rows[1 + k:]
    if rest:
        lineno, line = rest[0]
        if line != "faces":
            raise ComplexParseError(f"expected 'faces', got {line!r}", lineno)
        for lineno, line in rest[1:]:
            parts = line.replace(",", " ").split()
            if not parts or not all(p.isdigit() for p in parts):
                raise ComplexParseError(f"expected vertex numbers, got {line!r}", lineno)
            idx = [int(p) - 1 for p in parts]
            if any(not 0 <= i < k for i in idx):
                raise ComplexParseError(f"vertex number outside 1..{k}", lineno)
            faces.append(idx)
    return SimplicialComplex(verts, faces)


def format_complex(delta: SimplicialComplex) -> str:
    lines = [f"vertices {delta.nvertices}"]
    lines += ["{" + ",".join(map(str, sorted(v))) + "}" for v in delta.vertices]
    lines.append("faces")
    lines += [" ".join(str(i + 1) for i in sorted(F)) for F in delta.facets if len(F) > 1]
    return "\n".join(lines) + "\n"


def read_complex(path: str | Path) -> SimplicialComplex:
    return parse_complex(Path(path).read_text())
