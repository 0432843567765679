"""Sparse multivariate polynomials with exact coefficients.

Coefficients are :class:`fractions.Fraction` by default.  Passing a prime
``modulus`` switches to the prime field GF(p), where coefficients are plain
ints in ``range(p)``.  Monomials are dense exponent tuples of length
``nvars``; variable ``x<i>`` (1-based) is position ``i - 1``.

Text form::

    >>> f = Polynomial.parse("x1*x6 - x2*x5", nvars=8)
    >>> str(f)
    'x1*x6 - x2*x5'
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from types import MappingProxyType
from typing import Mapping, Sequence, Union

import numpy as np

from .errors import DimensionError, FieldMismatchError, PolynomialParseError

Exps = tuple[int, ...]
Coeff = Union[Fraction, int]

__all__ = [
    "Monomial",
    "MonomialOrder",
    "DEGREVLEX",
    "LEX",
    "Polynomial",
    "Grading",
    "poly_arith",
    "support",
    "multidegree",
    "is_homogeneous",
    "parse_polynomial",
    "format_polynomial",
]


@dataclass(frozen=True)
class Monomial:
    """A monomial ``x^u`` stored as a dense exponent tuple."""

    exps: Exps

    def __post_init__(self):
        if any((not isinstance(e, int)) or e < 0 for e in self.exps):
            raise ValueError(f"exponents must be non-negative ints: {self.exps!r}")

    @classmethod
    def from_dict(cls, exponents: Mapping[int, int], nvars: int) -> "Monomial":
        """Build from ``{variable index (1-based): exponent}``."""
        exps = [0] * nvars
        for var, e in exponents.items():
            if not 1 <= var <= nvars:
                raise DimensionError(f"variable x{var} outside 1..{nvars}")
            exps[var - 1] = e
        return cls(tuple(exps))

    @classmethod
    def one(cls, nvars: int) -> "Monomial":
        return cls((0,) * nvars)

    @property
    def nvars(self) -> int:
        return len(self.exps)

    @property
    def exponents(self) -> dict[int, int]:
        """Sparse view: 1-based variable index to positive exponent."""
        return {i + 1: e for i, e in enumerate(self.exps) if e}

    @property
    def degree(self) -> int:
        return sum(self.exps)

    def support(self) -> frozenset[int]:
        return frozenset(i + 1 for i, e in enumerate(self.exps) if e)

    def divides(self, other: "Monomial") -> bool:
        _check_nvars(self.nvars, other.nvars)
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def __mul__(self, other: "Monomial") -> "Monomial":
        _check_nvars(self.nvars, other.nvars)
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __str__(self) -> str:
        return _format_monomial(self.exps) or "1"


class MonomialOrder:
    """A term order on exponent tuples: ``lex`` or ``degrevlex``.

    ``perm`` lists 0-based variable positions from largest to smallest
    variable; the default is ``x1 > x2 > ... > xN``.

    :meth:`key` maps an exponent tuple to a tuple whose natural comparison
    agrees with the order, and that map is additive (``key(a + b) ==
    key(a) + key(b)`` componentwise).  The Groebner engine works directly on
    these keys.
    """

    KINDS = ("lex", "degrevlex")

    __slots__ = ("kind", "perm")

    def __init__(self, kind: str = "degrevlex", perm: Sequence[int] | None = None):
        if kind not in self.KINDS:
            raise ValueError(f"unknown monomial order {kind!r}; expected one of {self.KINDS}")
        self.kind = kind
        self.perm = None if perm is None else tuple(perm)
        if self.perm is not None and sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError(f"perm must be a permutation of 0..N-1, got {self.perm}")

    def _permuted(self, exps: Exps) -> Exps:
        if self.perm is None:
            return exps
        if len(self.perm) != len(exps):
            raise DimensionError(f"order permutation has length {len(self.perm)}, monomial has {len(exps)}")
        return tuple(exps[p] for p in self.perm)

    def key(self, exps: Exps) -> tuple[int, ...]:
        e = self._permuted(exps)
        if self.kind == "lex":
            return e
        return (sum(e),) + tuple(-x for x in reversed(e))

    def unkey(self, key: tuple[int, ...]) -> Exps:
        if self.kind == "lex":
            e = key
        else:
            e = tuple(-x for x in reversed(key[1:]))
        if self.perm is None:
            return tuple(e)
        out = [0] * len(e)
        for pos, p in enumerate(self.perm):
            out[p] = e[pos]
        return tuple(out)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and (self.kind, self.perm) == (other.kind, other.perm)

    def __hash__(self):
        return hash((self.kind, self.perm))

    def __repr__(self):
        if self.perm is None:
            return f"MonomialOrder({self.kind!r})"
        return f"MonomialOrder({self.kind!r}, perm={self.perm})"


DEGREVLEX = MonomialOrder("degrevlex")
LEX = MonomialOrder("lex")


def _check_nvars(a: int, b: int) -> None:
    if a != b:
        raise DimensionError(f"polynomial rings differ: {a} vs {b} variables")


def _to_coeff(c, modulus: int) -> Coeff:
    if modulus:
        if isinstance(c, int):
            return c % modulus
        if isinstance(c, Rational):
            den = int(c.denominator) % modulus
            if den == 0:
                raise ZeroDivisionError(f"denominator {c.denominator} vanishes mod {modulus}")
            return int(c.numerator) * pow(den, -1, modulus) % modulus
        raise TypeError(f"cannot use {c!r} as a coefficient")
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational, str)):
        return Fraction(c)
    raise TypeError(f"cannot use {c!r} as an exact coefficient")


class Polynomial:
    """Immutable sparse polynomial over QQ (``modulus=0``) or GF(p).

    ``terms`` maps exponent tuples (or :class:`Monomial`) to coefficients;
    zero coefficients are dropped on construction.
    """

    __slots__ = ("_terms", "_nvars", "_modulus", "_hash")

    def __init__(self, terms: Mapping | None = None, nvars: int = 1, modulus: int = 0):
        if nvars < 1:
            raise ValueError("nvars must be at least 1")
        if modulus < 0 or modulus == 1:
            raise ValueError("modulus must be 0 (rationals) or a prime")
        clean: dict[Exps, Coeff] = {}
        for mono, c in (terms or {}).items():
            exps = mono.exps if isinstance(mono, Monomial) else tuple(mono)
            if len(exps) != nvars:
                raise DimensionError(f"monomial {exps} does not have {nvars} variables")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            c = _to_coeff(c, modulus)
            if exps in clean:
                c = clean[exps] + c
                if modulus:
                    c %= modulus
            if c:
                clean[exps] = c
            else:
                clean.pop(exps, None)
        self._terms = clean
        self._nvars = nvars
        self._modulus = modulus
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Exps, Coeff], nvars: int, modulus: int) -> "Polynomial":
        # trusted constructor: terms already clean
        p = object.__new__(cls)
        p._terms = terms
        p._nvars = nvars
        p._modulus = modulus
        p._hash = None
        return p

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int, modulus: int = 0) -> "Polynomial":
        return cls._raw({}, nvars, modulus)

    @classmethod
    def constant(cls, c, nvars: int, modulus: int = 0) -> "Polynomial":
        return cls({(0,) * nvars: c}, nvars, modulus)

    @classmethod
    def one(cls, nvars: int, modulus: int = 0) -> "Polynomial":
        return cls.constant(1, nvars, modulus)

    @classmethod
    def var(cls, i: int, nvars: int, modulus: int = 0) -> "Polynomial":
        """The variable ``x<i>`` (1-based)."""
        if not 1 <= i <= nvars:
            raise DimensionError(f"x{i} outside 1..{nvars}")
        exps = [0] * nvars
        exps[i - 1] = 1
        return cls._raw({tuple(exps): _to_coeff(1, modulus)}, nvars, modulus)

    @classmethod
    def monomial(cls, exps: Exps | Monomial, coeff=1, modulus: int = 0) -> "Polynomial":
        exps = exps.exps if isinstance(exps, Monomial) else tuple(exps)
        return cls({exps: coeff}, len(exps), modulus)

    @classmethod
    def parse(cls, text: str, nvars: int | None = None, modulus: int = 0) -> "Polynomial":
        return parse_polynomial(text, nvars, modulus)

    # -- accessors ----------------------------------------------------------

    @property
    def nvars(self) -> int:
        return self._nvars

    @property
    def modulus(self) -> int:
        return self._modulus

    @property
    def terms(self) -> Mapping[Exps, Coeff]:
        return MappingProxyType(self._terms)

    def items(self):
        return self._terms.items()

    def monomials(self) -> list[Monomial]:
        return [Monomial(e) for e in self._terms]

    def coefficient(self, mono: Exps | Monomial) -> Coeff:
        exps = mono.exps if isinstance(mono, Monomial) else tuple(mono)
        return self._terms.get(exps, _to_coeff(0, self._modulus))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def sorted_terms(self, order: MonomialOrder = DEGREVLEX) -> list[tuple[Exps, Coeff]]:
        """Terms in decreasing ``order``."""
        return sorted(self._terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def leading_monomial(self, order: MonomialOrder = DEGREVLEX) -> Exps:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading monomial")
        return max(self._terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder = DEGREVLEX) -> Coeff:
        return self._terms[self.leading_monomial(order)]

    def homogeneous_components(self) -> dict[int, "Polynomial"]:
        parts: dict[int, dict[Exps, Coeff]] = {}
        for e, c in self._terms.items():
            parts.setdefault(sum(e), {})[e] = c
        return {d: Polynomial._raw(t, self._nvars, self._modulus) for d, t in parts.items()}

    def evaluate(self, point: Sequence) -> Coeff:
        """Evaluate at ``point`` (one value per variable)."""
        if len(point) != self._nvars:
            raise DimensionError(f"point has {len(point)} coordinates, ring has {self._nvars}")
        vals = [_to_coeff(v, self._modulus) for v in point]
        total = _to_coeff(0, self._modulus)
        for e, c in self._terms.items():
            t = c
            for v, k in zip(vals, e):
                if k:
                    t = t * v**k
            total += t
        if self._modulus:
            total %= self._modulus
        return total

    def extend(self, nvars: int) -> "Polynomial":
        """The same polynomial in a ring with extra trailing variables."""
        if nvars < self._nvars:
            raise DimensionError("cannot shrink the ring")
        pad = (0,) * (nvars - self._nvars)
        return Polynomial._raw({e + pad: c for e, c in self._terms.items()}, nvars, self._modulus)

    def rename(self, mapping: Mapping[int, int], nvars: int | None = None) -> "Polynomial":
        """Substitute variables ``x_i -> x_{mapping[i]}`` (1-based, injective)."""
        nvars = nvars or self._nvars
        out: dict[Exps, Coeff] = {}
        for e, c in self._terms.items():
            new = [0] * nvars
            for i, k in enumerate(e):
                if k:
                    new[mapping.get(i + 1, i + 1) - 1] += k
            out[tuple(new)] = c
        return Polynomial(out, nvars, self._modulus)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            _check_nvars(self._nvars, other._nvars)
            if self._modulus != other._modulus:
                raise FieldMismatchError(f"coefficient fields differ: mod {self._modulus} vs {other._modulus}")
            return other
        if isinstance(other, (int, Rational)):
            return Polynomial.constant(other, self._nvars, self._modulus)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self._modulus
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if p:
                v %= p
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial._raw(out, self._nvars, p)

    __radd__ = __add__

    def __neg__(self):
        p = self._modulus
        if p:
            return Polynomial._raw({e: (-c) % p for e, c in self._terms.items()}, self._nvars, p)
        return Polynomial._raw({e: -c for e, c in self._terms.items()}, self._nvars, p)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self._modulus
        out: dict[Exps, Coeff] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        if p:
            out = {e: c % p for e, c in out.items() if c % p}
        else:
            out = {e: c for e, c in out.items() if c}
        return Polynomial._raw(out, self._nvars, p)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative int")
        result = Polynomial.one(self._nvars, self._modulus)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return (self._nvars, self._modulus) == (other._nvars, other._modulus) and self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self == Polynomial.constant(other, self._nvars, self._modulus)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((frozenset(self._terms.items()), self._nvars, self._modulus))
        return self._hash

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        mod = f", modulus={self._modulus}" if self._modulus else ""
        return f"Polynomial({format_polynomial(self)!r}, nvars={self._nvars}{mod})"


def poly_arith(a: Polynomial, b: Polynomial, op: str) -> Polynomial:
    """``a op b`` for ``op`` in ``{"add", "sub", "mul"}``."""
    if a.nvars != b.nvars:
        raise DimensionError(f"polynomial rings differ: {a.nvars} vs {b.nvars} variables")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def support(m: Monomial | Exps) -> frozenset[int]:
    """1-based indices of the variables dividing ``m``."""
    exps = m.exps if isinstance(m, Monomial) else m
    return frozenset(i + 1 for i, e in enumerate(exps) if e)


class Grading:
    """Multigrading by a d x N integer matrix; column j is the degree of x_{j+1}."""

    __slots__ = ("matrix",)

    def __init__(self, matrix):
        arr = np.array(matrix, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError(f"grading matrix must be 2-D and non-empty, got shape {arr.shape}")
        if not np.array_equal(arr, np.asarray(matrix)):
            raise ValueError("grading matrix must have integer entries")
        arr.setflags(write=False)
        self.matrix = arr

    @classmethod
    def standard(cls, nvars: int) -> "Grading":
        """Total degree."""
        return cls(np.ones((1, nvars), dtype=np.int64))

    @property
    def nvars(self) -> int:
        return self.matrix.shape[1]

    def degree(self, exps: Exps) -> tuple[int, ...]:
        if len(exps) != self.nvars:
            raise DimensionError(f"grading has {self.nvars} columns, monomial has {len(exps)} variables")
        return tuple(int(v) for v in self.matrix @ np.asarray(exps, dtype=np.int64))

    def __eq__(self, other):
        return isinstance(other, Grading) and np.array_equal(self.matrix, other.matrix)

    def __hash__(self):
        return hash(self.matrix.tobytes() + bytes(self.matrix.shape))

    def __repr__(self):
        return f"Grading({self.matrix.tolist()})"


def multidegree(m: Monomial | Exps, g: Grading) -> tuple[int, ...]:
    exps = m.exps if isinstance(m, Monomial) else tuple(m)
    return g.degree(exps)


def is_homogeneous(f: Polynomial, g: Grading) -> bool:
    """True iff every monomial of ``f`` has the same ``g``-degree."""
    if f.nvars != g.nvars:
        raise DimensionError(f"grading has {g.nvars} columns, polynomial has {f.nvars} variables")
    degrees = {g.degree(e) for e in f.terms}
    return len(degrees) <= 1


# -- text form ---------------------------------------------------------------

_TERM_RE = re.compile(r"\s*([+-])?\s*([^+-]+)")
_VAR_RE = re.compile(r"x(\d+)(?:\^(\d+))?")
_NUM_RE = re.compile(r"\d+(?:/\d+)?")


def parse_polynomial(text: str, nvars: int | None = None, modulus: int = 0, line: int | None = None) -> Polynomial:
    """Parse ``x1*x6 - x2*x5``-style text.

    Terms are joined by ``+``/``-``; a term is an optional rational
    coefficient followed by ``*``-separated powers ``x<i>^<e>``.  When
    ``nvars`` is omitted it is the largest variable index seen (at least 1).
    """
    src = text.strip()
    if not src:
        raise PolynomialParseError("empty polynomial", line)
    pos = 0
    raw_terms: list[tuple[Fraction, dict[int, int]]] = []
    while pos < len(src):
        m = _TERM_RE.match(src, pos)
        if not m or m.end() == pos:
            raise PolynomialParseError(f"cannot parse near {src[pos:]!r}", line)
        sign, body = m.group(1), m.group(2).strip()
        if raw_terms and sign is None:
            raise PolynomialParseError(f"missing operator before {body!r}", line)
        coeff = Fraction(-1 if sign == "-" else 1)
        powers: dict[int, int] = {}
        for factor in body.split("*"):
            factor = factor.strip()
            if not factor:
                raise PolynomialParseError(f"empty factor in term {body!r}", line)
            if _NUM_RE.fullmatch(factor):
                num = Fraction(factor)
                coeff *= num
                continue
            vm = _VAR_RE.fullmatch(factor)
            if not vm:
                raise PolynomialParseError(f"bad factor {factor!r}", line)
            idx = int(vm.group(1))
            exp = int(vm.group(2)) if vm.group(2) else 1
            if idx < 1:
                raise PolynomialParseError(f"variable index must be >= 1 in {factor!r}", line)
            powers[idx] = powers.get(idx, 0) + exp
        raw_terms.append((coeff, powers))
        pos = m.end()
    top = max((i for _, pw in raw_terms for i in pw), default=1)
    if nvars is None:
        nvars = top
    elif top > nvars:
        raise PolynomialParseError(f"variable x{top} outside 1..{nvars}", line)
    terms: dict[Exps, Fraction] = {}
    for coeff, powers in raw_terms:
        exps = [0] * nvars
        for i, e in powers.items():
            exps[i - 1] = e
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + coeff
    try:
        return Polynomial(terms, nvars, modulus)
    except ZeroDivisionError as exc:
        raise PolynomialParseError(str(exc), line) from exc


def _format_monomial(exps: Exps) -> str:
    parts = []
    for i, e in enumerate(exps):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts)


def format_polynomial(f: Polynomial, order: MonomialOrder = DEGREVLEX) -> str:
    """Canonical text: terms in decreasing ``order``, unit coefficients suppressed."""
    if f.is_zero():
        return "0"
    out = []
    for k, (exps, c) in enumerate(f.sorted_terms(order)):
        neg = c < 0
        a = -c if neg else c
        mono = _format_monomial(exps)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if k == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)
