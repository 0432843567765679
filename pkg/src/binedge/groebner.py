"""Buchberger Groebner bases, normal forms, and (radical) ideal membership.

Over the rationals the engine never touches :class:`~fractions.Fraction`
internally: polynomials are kept primitive over the integers (content
removed after every reduction step) and are only made monic when the
reduced basis is handed back.  Over GF(p) everything is monic mod p.

Pair handling follows the Gebauer-Moeller update with the normal selection
strategy (smallest lcm first).

:func:`macaulay_member` is an independent membership test by exact linear
algebra over a bounded-degree monomial basis.  It shares no code with the
Buchberger path and is used to cross-check it.
"""

from __future__ import annotations

import enum
import functools
import itertools
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from operator import add, sub
from pathlib import Path
from typing import Iterable, Sequence

from .errors import DimensionError, FieldMismatchError, IndeterminateError, PolynomialParseError, ResourceCapError
from .polyring import DEGREVLEX, Exps, Grading, MonomialOrder, Polynomial, is_homogeneous, parse_polynomial

__all__ = [
    "GroebnerConfig",
    "Ideal",
    "GroebnerBasis",
    "MembershipResult",
    "OracleVerdict",
    "buchberger",
    "normal_form",
    "ideal_member",
    "radical_member",
    "radical_equal",
    "radical_containment",
    "macaulay_member",
    "parse_ideal",
    "read_ideal",
    "format_ideal",
]


@dataclass(frozen=True)
class GroebnerConfig:
    """Caps on a single Groebner computation.  Exceeding one raises
    :class:`~binedge.errors.ResourceCapError`."""

    max_pairs: int = 200_000
    max_basis: int = 10_000
    max_degree: int = 60

    @classmethod
    def from_env(cls, environ=None) -> "GroebnerConfig":
        """Defaults overridden by ``BINEDGE_MAX_PAIRS``, ``BINEDGE_MAX_BASIS``
        and ``BINEDGE_MAX_DEGREE``."""
        env = os.environ if environ is None else environ
        kwargs = {}
        for name, var in (("max_pairs", "BINEDGE_MAX_PAIRS"), ("max_basis", "BINEDGE_MAX_BASIS"),
                          ("max_degree", "BINEDGE_MAX_DEGREE")):
            if env.get(var):
                kwargs[name] = int(env[var])
        return cls(**kwargs)


DEFAULT_CONFIG = GroebnerConfig()


class Ideal:
    """An ideal given by a non-empty list of nonzero generators."""

    __slots__ = ("generators", "nvars", "modulus", "_hash")

    def __init__(self, generators: Iterable[Polynomial]):
        gens = tuple(g for g in generators if not g.is_zero())
        if not gens:
            raise ValueError("an ideal needs at least one nonzero generator")
        nvars, modulus = gens[0].nvars, gens[0].modulus
        for g in gens:
            if g.nvars != nvars:
                raise DimensionError(f"generators live in rings with {nvars} and {g.nvars} variables")
            if g.modulus != modulus:
                raise FieldMismatchError("generators use different coefficient fields")
        self.generators = gens
        self.nvars = nvars
        self.modulus = modulus
        self._hash = hash(gens)

    def __eq__(self, other):
        return isinstance(other, Ideal) and self.generators == other.generators

    def __hash__(self):
        return self._hash

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __repr__(self):
        return f"Ideal([{', '.join(map(str, self.generators))}])"

    def groebner(self, order: MonomialOrder = DEGREVLEX, config: GroebnerConfig | None = None) -> "GroebnerBasis":
        return buchberger(self, order, config)

    def __contains__(self, f: Polynomial) -> bool:
        return ideal_member(f, self)


# -- monomial arithmetic on order keys ----------------------------------------
#
# Keys come from MonomialOrder.key, are compared as plain tuples, and
# multiply by componentwise addition.  For degrevlex the first component is
# the degree and the rest are negated exponents.


class _KeyOps:
    __slots__ = ("kind",)

    def __init__(self, kind: str):
        self.kind = kind

    @staticmethod
    def mul(a, b):
        return tuple(map(add, a, b))

    @staticmethod
    def quo(a, b):
        # b / a, assuming a | b
        return tuple(map(sub, b, a))

    def divides(self, a, b) -> bool:
        if self.kind == "lex":
            return all(x <= y for x, y in zip(a, b))
        return all(x >= y for x, y in zip(a[1:], b[1:]))

    def lcm(self, a, b):
        if self.kind == "lex":
            return tuple(map(max, a, b))
        t = tuple(map(min, a[1:], b[1:]))
        return (-sum(t),) + t

    def degree(self, a) -> int:
        return sum(a) if self.kind == "lex" else a[0]

    def is_one(self, a) -> bool:
        return not any(a)


def _encode(f: Polynomial, order: MonomialOrder) -> tuple[dict, Fraction]:
    """Integer-coefficient key-space copy of ``f`` and the factor it was scaled by."""
    p = f.modulus
    key = order.key
    if p:
        return {key(e): c for e, c in f.items()}, Fraction(1)
    den = 1
    for c in f.terms.values():
        den = den * c.denominator // math.gcd(den, c.denominator)
    return {key(e): int(c * den) for e, c in f.items()}, Fraction(den)


def _decode(terms: dict, scale: Fraction, order: MonomialOrder, nvars: int, modulus: int) -> Polynomial:
    unkey = order.unkey
    if modulus:
        inv = pow(int(scale) % modulus, -1, modulus) if scale != 1 else 1
        return Polynomial._raw({unkey(k): c * inv % modulus for k, c in terms.items()}, nvars, modulus)
    return Polynomial._raw({unkey(k): Fraction(c) / scale for k, c in terms.items()}, nvars, modulus)


class _Engine:
    """Reduction machinery over Z (fraction-free, p == 0) or GF(p)."""

    def __init__(self, kind: str, modulus: int):
        self.ops = _KeyOps(kind)
        self.p = modulus

    def normalize(self, f: dict) -> dict:
        """Primitive with positive leading coefficient (Q) or monic (GF(p))."""
        if not f:
            return f
        lc = f[max(f)]
        if self.p:
            if lc == 1:
                return f
            inv = pow(lc, -1, self.p)
            return {m: c * inv % self.p for m, c in f.items()}
        g = math.gcd(*f.values())
        if lc < 0:
            g = -g
        if g == 1:
            return f
        return {m: c // g for m, c in f.items()}

    def reduce(self, f: dict, basis: Sequence[tuple], full: bool = True) -> tuple[dict, Fraction]:
        """Reduce ``f`` by ``basis`` entries ``(lm, lc, terms)``.

        Returns ``(r, scale)`` with ``r`` congruent to ``scale * f`` modulo
        the basis.  With ``full=False`` stops at the first irreducible
        leading term (enough to decide whether the remainder is zero).
        """
        ops, p = self.ops, self.p
        divides, mul, quo = ops.divides, ops.mul, ops.quo
        f = dict(f)
        r: dict = {}
        scale = Fraction(1)
        while f:
            lm = max(f)
            c = f[lm]
            for glm, glc, g in basis:
                if divides(glm, lm):
                    break
            else:
                if not full:
                    r[lm] = c
                    return r, scale
                r[lm] = c
                del f[lm]
                continue
            q = quo(glm, lm)
            if p:
                b = c if glc == 1 else c * pow(glc, -1, p) % p
                for m, a in g.items():
                    mm = mul(m, q)
                    v = (f.get(mm, 0) - b * a) % p
                    if v:
                        f[mm] = v
                    else:
                        f.pop(mm, None)
                continue
            gg = math.gcd(c, glc)
            a, b = glc // gg, c // gg
            if a != 1:
                f = {m: a * v for m, v in f.items()}
                if r:
                    r = {m: a * v for m, v in r.items()}
                scale *= a
            for m, coef in g.items():
                mm = mul(m, q)
                v = f.get(mm, 0) - b * coef
                if v:
                    f[mm] = v
                else:
                    f.pop(mm, None)
            if f:
                cont = math.gcd(*f.values(), *r.values())
                if cont != 1:
                    f = {m: v // cont for m, v in f.items()}
                    r = {m: v // cont for m, v in r.items()}
                    scale /= cont
        return r, scale

    def spoly(self, a: tuple, b: tuple) -> dict:
        ops, p = self.ops, self.p
        lm1, lc1, f1 = a
        lm2, lc2, f2 = b
        L = ops.lcm(lm1, lm2)
        q1, q2 = ops.quo(lm1, L), ops.quo(lm2, L)
        if p:
            c1, c2 = lc2 % p, lc1 % p
        else:
            g = math.gcd(lc1, lc2)
            c1, c2 = lc2 // g, lc1 // g
        out: dict = {}
        for m, v in f1.items():
            mm = ops.mul(m, q1)
            out[mm] = out.get(mm, 0) + c1 * v
        for m, v in f2.items():
            mm = ops.mul(m, q2)
            out[mm] = out.get(mm, 0) - c2 * v
        if p:
            return {m: v % p for m, v in out.items() if v % p}
        return {m: v for m, v in out.items() if v}


def _entry(f: dict) -> tuple:
    lm = max(f)
    return (lm, f[lm], f)


def _buchberger_keys(polys: list[dict], kind: str, modulus: int, config: GroebnerConfig,
                     stop_on_unit: bool = False) -> list[dict]:
    """Reduced Groebner basis (as normalized key-space dicts, ascending LM)."""
    eng = _Engine(kind, modulus)
    ops = eng.ops
    entries: list[tuple] = []
    G: list[int] = []
    B: set[tuple[int, int]] = set()

    def update(ih: int):
        nonlocal G, B
        mh = entries[ih][0]
        lcm = ops.lcm

        C = list(G)
        D: list[tuple[int, int]] = []
        while C:
            ig = C.pop()
            mg = entries[ig][0]
            L = lcm(mh, mg)
            coprime = ops.mul(mh, mg) == L
            if coprime or (not any(ops.divides(lcm(mh, entries[jx][0]), L) for jx in C)
                           and not any(ops.divides(lcm(mh, entries[jd][0]), L) for _, jd in D)):
                D.append((ih, ig))
        E = [(ih, ig) for _, ig in D
             if ops.mul(mh, entries[ig][0]) != lcm(mh, entries[ig][0])]
        B_new = set()
        for i1, i2 in B:
            m1, m2 = entries[i1][0], entries[i2][0]
            L12 = lcm(m1, m2)
            if not ops.divides(mh, L12) or lcm(m1, mh) == L12 or lcm(m2, mh) == L12:
                B_new.add((i1, i2))
        B_new.update(E)
        G = [ig for ig in G if not ops.divides(mh, entries[ig][0])]
        G.append(ih)
        B = B_new

    unit = None
    for f in sorted((eng.normalize(f) for f in polys if f), key=max):
        if all(ops.is_one(m) for m in f):
            unit = f
            break
        entries.append(_entry(f))
        update(len(entries) - 1)

    pairs_done = 0
    while B and unit is None:
        pair = min(B, key=lambda ij: (ops.lcm(entries[ij[0]][0], entries[ij[1]][0]), ij))
        B.discard(pair)
        pairs_done += 1
        if pairs_done > config.max_pairs:
            raise ResourceCapError("max_pairs", config.max_pairs)
        s = eng.spoly(entries[pair[0]], entries[pair[1]])
        if not s:
            continue
        basis = [entries[i] for i in sorted(G)]
        h, _ = eng.reduce(s, basis)
        if not h:
            continue
        h = eng.normalize(h)
        hm = max(h)
        if ops.is_one(hm):
            unit = h
            break
        if ops.degree(hm) > config.max_degree:
            raise ResourceCapError("max_degree", config.max_degree,
                                   f"basis element of degree {ops.degree(hm)}")
        entries.append(_entry(h))
        if len(entries) > config.max_basis:
            raise ResourceCapError("max_basis", config.max_basis)
        update(len(entries) - 1)

    if unit is not None:
        return [{max(unit): 1}]
    if stop_on_unit:
        return [entries[i][2] for i in G]

    # minimal then fully inter-reduced
    cand = sorted((entries[i] for i in G), key=lambda e: e[0])
    minimal: list[tuple] = []
    for e in cand:
        if not any(ops.divides(m[0], e[0]) for m in minimal):
            minimal.append(e)
    reduced = []
    for k, e in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        r, _ = eng.reduce(e[2], others)
        reduced.append(eng.normalize(r))
    return sorted(reduced, key=max)


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis of ``source`` under ``order``.

    Basis elements are monic and sorted by increasing leading monomial.
    """

    order: MonomialOrder
    basis: tuple[Polynomial, ...]
    source: Ideal
    _encoded: tuple = field(default=(), repr=False, compare=False)

    @property
    def nvars(self) -> int:
        return self.source.nvars

    def is_unit(self) -> bool:
        return len(self.basis) == 1 and self.basis[0].is_constant()

    def leading_monomials(self) -> list[Exps]:
        return [g.leading_monomial(self.order) for g in self.basis]

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self)

    def contains(self, f: Polynomial) -> bool:
        if f.nvars != self.nvars:
            raise DimensionError(f"polynomial has {f.nvars} variables, ideal has {self.nvars}")
        if f.is_zero():
            return True
        eng = _Engine(self.order.kind, self.source.modulus)
        enc, _ = _encode(f, self.order)
        r, _ = eng.reduce(enc, self._encoded, full=False)
        return not r


def buchberger(I: Ideal, order: MonomialOrder = DEGREVLEX, config: GroebnerConfig | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of ``I``.

    Results are memoized per ``(ideal, order, config)``.
    """
    return _buchberger_cached(I, order, config or DEFAULT_CONFIG)


@functools.lru_cache(maxsize=512)
def _buchberger_cached(I: Ideal, order: MonomialOrder, config: GroebnerConfig) -> GroebnerBasis:
    polys = [_encode(g, order)[0] for g in I.generators]
    keys = _buchberger_keys(polys, order.kind, I.modulus, config)
    basis = tuple(_decode(k, Fraction(k[max(k)]), order, I.nvars, I.modulus) for k in keys)
    encoded = tuple(_entry(k) for k in keys)
    return GroebnerBasis(order, basis, I, encoded)


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """The unique remainder of ``f`` modulo the reduced basis ``gb``."""
    if f.nvars != gb.nvars:
        raise DimensionError(f"polynomial has {f.nvars} variables, ideal has {gb.nvars}")
    if f.modulus != gb.source.modulus:
        raise FieldMismatchError("polynomial and ideal use different coefficient fields")
    if f.is_zero():
        return f
    eng = _Engine(gb.order.kind, f.modulus)
    enc, den = _encode(f, gb.order)
    r, scale = eng.reduce(enc, gb._encoded)
    return _decode(r, scale * den, gb.order, f.nvars, f.modulus)


def ideal_member(f: Polynomial, I: Ideal, order: MonomialOrder = DEGREVLEX,
                 config: GroebnerConfig | None = None) -> bool:
    if f.nvars != I.nvars:
        raise DimensionError(f"polynomial has {f.nvars} variables, ideal has {I.nvars}")
    return buchberger(I, order, config).contains(f)


@dataclass(frozen=True)
class MembershipResult:
    """Outcome of a radical membership test.

    ``exponent`` is the least ``r`` found with ``f**r`` in the ideal when the
    bounded-power search succeeded.  A negative bounded-power result is not
    definitive; a Rabinowitsch result always is.
    """

    member: bool
    exponent: int | None
    method: str

    @property
    def definitive(self) -> bool:
        return self.member or self.method == "rabinowitsch"


def _rabinowitsch(f: Polynomial, I: Ideal, config: GroebnerConfig) -> bool:
    N = I.nvars + 1
    y = Polynomial.var(N, N, I.modulus)
    gens = [g.extend(N) for g in I.generators]
    gens.append(Polynomial.one(N, I.modulus) - y * f.extend(N))
    polys = [_encode(g, DEGREVLEX)[0] for g in gens]
    keys = _buchberger_keys(polys, "degrevlex", I.modulus, config, stop_on_unit=True)
    return len(keys) == 1 and not any(max(keys[0]))


def radical_member(f: Polynomial, I: Ideal, max_power: int = 3, rabinowitsch: bool = True,
                   order: MonomialOrder = DEGREVLEX, config: GroebnerConfig | None = None) -> MembershipResult:
    """Is ``f`` in the radical of ``I``?

    Tries ``f**r`` in ``I`` for ``r = 1..max_power``; if none is, decides
    with the Rabinowitsch test (``1 in I + (1 - y*f)``) unless disabled.
    """
    if max_power < 1:
        raise ValueError("max_power must be >= 1")
    if f.nvars != I.nvars:
        raise DimensionError(f"polynomial has {f.nvars} variables, ideal has {I.nvars}")
    config = config or DEFAULT_CONFIG
    gb = buchberger(I, order, config)
    power = f
    for r in range(1, max_power + 1):
        if gb.contains(power):
            return MembershipResult(True, r, "bounded-power")
        if r < max_power:
            power = power * f
    if not rabinowitsch:
        return MembershipResult(False, None, "bounded-power")
    return MembershipResult(_rabinowitsch(f, I, config), None, "rabinowitsch")


def radical_containment(polys: Sequence[Polynomial], I: Ideal, max_power: int = 3, rabinowitsch: bool = True,
                        order: MonomialOrder = DEGREVLEX,
                        config: GroebnerConfig | None = None) -> list[MembershipResult]:
    """:func:`radical_member` for every polynomial in ``polys`` (one GB of ``I``)."""
    return [radical_member(f, I, max_power, rabinowitsch, order, config) for f in polys]


def radical_equal(J: Ideal, F: Sequence[Polynomial], max_power: int = 3, rabinowitsch: bool = True,
                  J_is_radical: bool = False, order: MonomialOrder = DEGREVLEX,
                  config: GroebnerConfig | None = None) -> bool:
    """Decide ``rad(J) == rad(F)``.

    Each ``F_i`` must lie in ``rad(J)``; ordinary membership is tried first
    and is conclusive when ``J_is_radical``.  Each generator of ``J`` must
    lie in ``rad(F)``.  Raises :class:`~binedge.errors.IndeterminateError`
    when a bounded search fails with ``rabinowitsch=False``.
    """
    F = [f for f in F]
    if not F:
        raise ValueError("F must be non-empty")
    for f in F:
        if f.nvars != J.nvars:
            raise DimensionError(f"polynomial has {f.nvars} variables, ideal has {J.nvars}")
    for f in F:
        if ideal_member(f, J, order, config):
            continue
        if J_is_radical:
            return False
        res = radical_member(f, J, max_power, rabinowitsch, order, config)
        if not res.member:
            if res.definitive:
                return False
            raise IndeterminateError(f"{f} not found in rad(J) up to power {max_power}")
    nonzero = [f for f in F if not f.is_zero()]
    if not nonzero:
        return False
    FI = Ideal(nonzero)
    for g in J.generators:
        res = radical_member(g, FI, max_power, rabinowitsch, order, config)
        if not res.member:
            if res.definitive:
                return False
            raise IndeterminateError(f"{g} not found in rad(F) up to power {max_power}")
    return True


# -- independent linear-algebra oracle ----------------------------------------


class OracleVerdict(str, enum.Enum):
    MEMBER = "member"
    UNKNOWN = "unknown"


def _monomials_of_degree(nvars: int, d: int) -> Iterable[Exps]:
    for combo in itertools.combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        yield tuple(e)


def _in_span(columns: Iterable[dict], target: dict, modulus: int) -> bool:
    """Is ``target`` a linear combination of ``columns`` (sparse vectors)?"""
    pivots: dict = {}  # pivot coordinate -> vector with entry 1 there; insertion ordered

    def reduce(v: dict) -> dict:
        v = dict(v)
        for piv, vec in pivots.items():
            c = v.get(piv)
            if c:
                for k, a in vec.items():
                    val = v.get(k, 0) - c * a
                    if modulus:
                        val %= modulus
                    if val:
                        v[k] = val
                    else:
                        v.pop(k, None)
        return v

    for col in columns:
        v = reduce(col)
        if not v:
            continue
        piv = min(v)
        inv = pow(v[piv], -1, modulus) if modulus else 1 / Fraction(v[piv])
        vec = {k: (a * inv % modulus if modulus else a * inv) for k, a in v.items()}
        pivots[piv] = vec
    return not reduce(target)


def macaulay_member(f: Polynomial, I: Ideal, degree_bound: int) -> OracleVerdict:
    """Solve ``f = sum h_i g_i`` with every ``deg(h_i g_i) <= degree_bound``.

    Returns ``MEMBER`` when the linear system has an exact solution and
    ``UNKNOWN`` otherwise (a certificate may still exist at higher degree).
    When all generators are homogeneous the system splits by degree, and
    each homogeneous part of ``f`` is solved on its own.
    """
    if f.nvars != I.nvars:
        raise DimensionError(f"polynomial has {f.nvars} variables, ideal has {I.nvars}")
    if f.is_zero():
        return OracleVerdict.MEMBER
    if degree_bound < f.degree:
        raise ValueError(f"degree_bound {degree_bound} is below deg(f) = {f.degree}")
    N, p = f.nvars, f.modulus
    gens = I.generators
    std = Grading.standard(N)
    if all(is_homogeneous(g, std) for g in gens):
        targets = [(d, part) for d, part in f.homogeneous_components().items()]
        exact = True
    else:
        targets = [(degree_bound, f)]
        exact = False

    for d, part in targets:
        columns = []
        for g in gens:
            gd = g.degree
            lo = d - gd if exact else 0
            hi = d - gd
            for k in range(max(lo, 0), hi + 1):
                for mono in _monomials_of_degree(N, k):
                    columns.append({tuple(map(add, mono, e)): c for e, c in g.items()})
        if not _in_span(columns, dict(part.items()), p):
            return OracleVerdict.UNKNOWN
    return OracleVerdict.MEMBER


# -- ideal files -----------------------------------------------------------------


def parse_ideal(text: str, modulus: int = 0, nvars: int | None = None) -> Ideal:
    """Parse an ideal file: ``vars N`` first, then one polynomial per line.

    ``#`` starts a comment.  The ``vars`` line may be omitted when ``nvars``
    is given.
    """
    polys = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("vars"):
            parts = line.split()
            if len(parts) != 2 or not parts[1].isdigit() or int(parts[1]) < 1:
                raise PolynomialParseError(f"bad vars line {raw!r}", lineno)
            if polys:
                raise PolynomialParseError("vars line must precede the polynomials", lineno)
            nvars = int(parts[1])
            continue
        if nvars is None:
            raise PolynomialParseError("missing 'vars N' line", lineno)
        polys.append(parse_polynomial(line, nvars, modulus, line=lineno))
    if not polys:
        raise PolynomialParseError("no polynomials in ideal file")
    return Ideal(polys)


def read_ideal(path: str | Path, modulus: int = 0, nvars: int | None = None) -> Ideal:
    return parse_ideal(Path(path).read_text(), modulus, nvars)


def format_ideal(I: Ideal | Sequence[Polynomial], header: str | None = None) -> str:
    gens = I.generators if isinstance(I, Ideal) else tuple(I)
    lines = []
    if header:
        lines.extend(f"# {h}" for h in header.splitlines())
    lines.append(f"vars {gens[0].nvars}")
    lines.extend(str(g) for g in gens)
    return "\n".join(lines) + "\n"
