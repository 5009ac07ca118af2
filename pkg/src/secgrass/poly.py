"""
Sparse multivariate polynomials over the rationals.

A polynomial is a map from monomials to nonzero coefficients.  A monomial is
a tuple of ``(Var, exponent)`` pairs sorted by variable, with no zero
exponents.  Coefficients are ``int`` when integral and ``Fraction``
otherwise, so the common integer case stays fast.

Example
-------
>>> x, y = Poly.var("x"), Poly.var("y")
>>> str((x - y) * (x + y))
'x^2 - y^2'
"""

from __future__ import annotations

import json
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Dict, Iterable, Mapping, NamedTuple, Tuple, Union


class Var(NamedTuple):
    """Interned variable: a family name plus a structured index."""

    name: str
    index: tuple = ()

    def __str__(self):
        if not self.index:
            return self.name
        return self.name + _fmt_index(self.index)


def _fmt_index(ix):
    if isinstance(ix, tuple):
        return "(" + ",".join(_fmt_index(i) for i in ix) + ")"
    return str(ix)


Monomial = Tuple[Tuple[Var, int], ...]
Scalar = Union[int, Fraction]


class UnboundVariable(KeyError):
    """Raised by :meth:`Poly.eval` when a variable has no value."""


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def as_rational(c) -> Scalar:
    if isinstance(c, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return _norm(c)
    if isinstance(c, _RationalABC):
        return _norm(Fraction(c.numerator, c.denominator))
    if isinstance(c, str):
        return _norm(Fraction(c))
    raise TypeError(f"not an exact rational: {c!r}")


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def make_monomial(spec) -> Monomial:
    """Build a monomial from a dict ``{Var: exp}`` or an iterable of pairs."""
    items = spec.items() if isinstance(spec, Mapping) else spec
    d: Dict[Var, int] = {}
    for v, e in items:
        if e < 0:
            raise ValueError("negative exponent")
        if e:
            d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


class Poly:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        out = {}
        if terms:
            for m, c in terms.items():
                c = as_rational(c)
                if c:
                    out[m] = c
        self._terms = out
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        # terms already normalized and pruned
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c) -> "Poly":
        c = as_rational(c)
        return cls._raw({(): c} if c else {})

    @classmethod
    def var(cls, name, index: tuple = ()) -> "Poly":
        v = name if isinstance(name, Var) else Var(name, tuple(index))
        return cls._raw({((v, 1),): 1})

    @classmethod
    def monomial(cls, spec, coef=1) -> "Poly":
        return cls({make_monomial(spec): coef})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> Dict[Monomial, Scalar]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and () in self._terms)

    def constant_value(self) -> Scalar:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._terms.get((), 0)

    def variables(self) -> Tuple[Var, ...]:
        """The variable universe: every variable occurring, in declared order."""
        vs = set()
        for m in self._terms:
            for v, _ in m:
                vs.add(v)
        return tuple(sorted(vs))

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(mono_degree(m) for m in self._terms)

    def degree_in(self, v: Var) -> int:
        return max((dict(m).get(v, 0) for m in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        degs = {mono_degree(m) for m in self._terms}
        return len(degs) <= 1

    def coefficient(self, monomial) -> Scalar:
        return self._terms.get(make_monomial(monomial), 0)

    def sorted_terms(self):
        """Terms in descending lexicographic order of exponent vectors."""
        universe = self.variables()
        pos = {v: i for i, v in enumerate(universe)}

        def key(m):
            ev = [0] * len(universe)
            for v, e in m:
                ev[pos[v]] = e
            return tuple(-e for e in ev)

        return sorted(self._terms.items(), key=lambda mc: key(mc[0]))

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, Poly):
            return other
        return Poly.const(other)

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if len(other._terms) > len(self._terms):
            a, b = other._terms, self._terms
        else:
            a, b = self._terms, other._terms
        out = dict(a)
        for m, c in b.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = _norm(s)
            else:
                out.pop(m, None)
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            try:
                c = as_rational(other)
            except TypeError:
                return NotImplemented
            if not c:
                return Poly._raw({})
            return Poly._raw({m: _norm(v * c) for m, v in self._terms.items()})
        a, b = self._terms, other._terms
        if not a or not b:
            return Poly._raw({})
        if len(a) < len(b):
            a, b = b, a
        out: Dict[Monomial, Scalar] = {}
        get = out.get
        for m2, c2 in b.items():
            if not m2:
                for m1, c1 in a.items():
                    out[m1] = get(m1, 0) + c1 * c2
                continue
            for m1, c1 in a.items():
                m = mono_mul(m1, m2)
                out[m] = get(m, 0) + c1 * c2
        return Poly._raw({m: _norm(c) for m, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = as_rational(other)
        if not c:
            raise ZeroDivisionError("polynomial division by zero")
        inv = Fraction(1) / c
        return self * inv

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Poly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._terms == other._terms
        try:
            return self._terms == Poly.const(other)._terms
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- composition ------------------------------------------------------

    def subs(self, bindings: Mapping[Var, object]) -> "Poly":
        """Substitute polynomials (or scalars) for variables; unbound variables stay."""
        binds = {v: (b if isinstance(b, Poly) else Poly.const(b)) for v, b in bindings.items()}
        powers: Dict[Tuple[Var, int], Poly] = {}

        def power(v, e):
            key = (v, e)
            p = powers.get(key)
            if p is None:
                p = binds[v] if e == 1 else power(v, e - 1) * binds[v]
                powers[key] = p
            return p

        acc: Dict[Monomial, Scalar] = {}
        for m, c in self._terms.items():
            free = []
            term = None
            for v, e in m:
                if v in binds:
                    f = power(v, e)
                    term = f if term is None else term * f
                else:
                    free.append((v, e))
            if term is None:
                term = Poly._raw({(): 1})
            fm = tuple(free)
            for tm, tc in term._terms.items():
                mm = mono_mul(tm, fm)
                acc[mm] = acc.get(mm, 0) + tc * c
        return Poly._raw({m: _norm(c) for m, c in acc.items() if c})

    def eval(self, point: Mapping[Var, object]) -> Scalar:
        total: Scalar = 0
        vals = {}
        for m, c in self._terms.items():
            t = c
            for v, e in m:
                if v not in vals:
                    if v not in point:
                        raise UnboundVariable(str(v))
                    vals[v] = as_rational(point[v])
                t = t * vals[v] ** e
            total += t
        return _norm(Fraction(total)) if isinstance(total, Fraction) else total

    def map_coefficients(self, f) -> "Poly":
        return Poly({m: f(c) for m, c in self._terms.items()})

    def diff(self, v: Var) -> "Poly":
        out = {}
        for m, c in self._terms.items():
            d = dict(m)
            e = d.get(v, 0)
            if not e:
                continue
            if e == 1:
                del d[v]
            else:
                d[v] = e - 1
            nm = tuple(sorted(d.items()))
            out[nm] = out.get(nm, 0) + c * e
        return Poly(out)

    def homogenize(self, v: Var, degree: int | None = None) -> "Poly":
        """Pad every term with powers of ``v`` up to ``degree`` (default: total degree)."""
        if degree is None:
            degree = self.degree()
        out = {}
        for m, c in self._terms.items():
            gap = degree - mono_degree(m)
            if gap < 0:
                raise ValueError("term exceeds homogenization degree")
            nm = mono_mul(m, ((v, gap),)) if gap else m
            out[nm] = out.get(nm, 0) + c
        return Poly(out)

    # -- serialization ----------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            mono = "*".join(str(v) if e == 1 else f"{v}^{e}" for v, e in m)
            neg = c < 0
            a = -c if neg else c
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"Poly({str(self)!r})"

    def to_json_terms(self) -> list:
        return [
            {
                "coef": str(c),
                "monomial": [[v.name, _jsonable(v.index), e] for v, e in m],
            }
            for m, c in self.sorted_terms()
        ]

    def to_json(self) -> str:
        return json.dumps(self.to_json_terms(), separators=(",", ":"))

    @classmethod
    def from_json_terms(cls, data) -> "Poly":
        terms = {}
        for t in data:
            m = make_monomial((Var(name, _tuplify(ix)), e) for name, ix, e in t["monomial"])
            terms[m] = terms.get(m, 0) + Fraction(t["coef"])
        return cls(terms)


def _jsonable(ix):
    if isinstance(ix, tuple):
        return [_jsonable(i) for i in ix]
    return ix


def _tuplify(ix):
    if isinstance(ix, list):
        return tuple(_tuplify(i) for i in ix)
    return ix


def poly_sum(polys: Iterable[Poly]) -> Poly:
    acc: Dict[Monomial, Scalar] = {}
    for p in polys:
        for m, c in p._terms.items():
            acc[m] = acc.get(m, 0) + c
    return Poly._raw({m: _norm(c) for m, c in acc.items() if c})


def poly_prod(polys: Iterable[Poly]) -> Poly:
    out = Poly.const(1)
    for p in polys:
        out = out * p
    return out


# Contract-level names.

def poly_add(p: Poly, q: Poly) -> Poly:
    return p + q


def poly_mul(p: Poly, q: Poly) -> Poly:
    return p * q


def poly_substitute(p: Poly, bindings: Mapping[Var, object]) -> Poly:
    return p.subs(bindings)


def poly_eval(p: Poly, point: Mapping[Var, object]) -> Scalar:
    return p.eval(point)


def coefficient_of(p: Poly, monomial) -> Scalar:
    return p.coefficient(monomial)
