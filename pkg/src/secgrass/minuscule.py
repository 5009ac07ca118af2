"""
Minuscule-cominuscule weight data for Grassmannians (type A) and spinor
varieties (type D).

Type A, ``TypeA(k, n)``: the nilradical is the space of k x (n-k) matrices,
roots are matrix positions (i, j), and a weight is a pair ``(R, C)`` of
equal-size sorted index tuples.  The generalized determinant is the minor on
rows R and columns C.

Type D, ``TypeD(n)``: the nilradical is the space of n x n skew matrices,
roots are pairs i < j, and a weight is an even-size sorted tuple S.  The
generalized determinant is the sub-Pfaffian on S.

Each weight w has a fixed *canonical assignment*: a decomposition into roots
(a fixed perfect matching of its indices).  ``pairing="sorted"`` pairs sorted rows
with sorted columns (type A) or consecutive sorted elements (type D);
``pairing="reversed"`` is an alternative choice used to check that the
identities do not depend on it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial
from typing import Dict, Iterator, List, Sequence, Tuple

from .poly import Poly, Var, poly_sum


class UnsupportedFamily(NotImplementedError):
    pass


class IncompatibleWeights(ValueError):
    pass


def perm_sign(seq: Sequence) -> int:
    """Sign of the permutation that sorts ``seq`` (entries distinct)."""
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
            elif seq[i] == seq[j]:
                raise IncompatibleWeights(f"repeated index {seq[i]}")
    return sign


def multinomial(parts: Sequence[int]) -> int:
    out = factorial(sum(parts))
    for p in parts:
        out //= factorial(p)
    return out


def compositions(d: int, min_part: int = 1) -> Iterator[Tuple[int, ...]]:
    """Ordered compositions of d with every part >= min_part."""
    if d == 0:
        yield ()
        return
    for first in range(min_part, d + 1):
        for rest in compositions(d - first, min_part):
            yield (first,) + rest


class _Family:
    """Shared machinery; subclasses provide the weight combinatorics."""

    pairing: str

    # -- to be provided ---------------------------------------------------
    def weights(self) -> List: ...
    def degree(self, w) -> int: ...
    def roots(self) -> List: ...
    def zero(self): ...
    def union(self, parts): ...
    def splits(self, w, degs: Sequence[int]) -> Iterator[Tuple]: ...
    def canonical_assignment(self, w) -> List: ...
    def assignment_sign(self, assignment) -> int: ...
    def root_decompositions(self, w) -> Iterator[List]: ...
    def _standard_det(self, w, entries) -> Poly: ...
    def root_weight(self, beta): ...

    # -- derived ----------------------------------------------------------
    @property
    def d_max(self) -> int:
        return max(self.degree(w) for w in self.weights())

    def nonzero_weights(self) -> List:
        return [w for w in self.weights() if self.degree(w) > 0]

    def epsilon(self, w) -> int:
        """Sign of the canonical weight vector against the standard basis vector."""
        return self.assignment_sign(self.canonical_assignment(w))

    def compat_m(self, parts: Sequence) -> int:
        """Compatibility constant m(parts); empty (degree-0) parts are ignored."""
        parts = [p for p in parts if self.degree(p) > 0]
        if len(parts) <= 1:
            return 1
        u = self.union(parts)
        concat = [pair for p in parts for pair in self.canonical_assignment(p)]
        return self.assignment_sign(concat) * self.epsilon(u)

    def generic(self, name: str) -> Dict:
        """Generic nilradical element: one variable per root."""
        return {b: Poly.var(Var(name, b)) for b in self.roots()}

    def gen_det(self, w, entries: Dict) -> Poly:
        """Generalized determinant det_w evaluated at the nilradical element ``entries``."""
        if self.degree(w) == 0:
            return Poly.const(1)
        return self._standard_det(w, entries) * self.epsilon(w)

    def det_expansion(self, w, entries: Dict) -> Poly:
        """det_w as the sum over root decompositions of m(beta_1..beta_d) prod a_beta."""
        if self.degree(w) == 0:
            return Poly.const(1)
        terms = []
        for betas in self.root_decompositions(w):
            m = self.compat_m([self.root_weight(b) for b in betas])
            t = Poly.const(m)
            for b in betas:
                t = t * entries[b]
            terms.append(t)
        return poly_sum(terms)

    def decompositions(self, w, min_degree: int = 1) -> Iterator[Tuple]:
        """Ordered decompositions of w into parts of degree >= min_degree."""
        for degs in compositions(self.degree(w), min_degree):
            yield from self.splits(w, degs)

    def orbit_param(self, entries: Dict) -> Dict:
        """All chart coordinates x_w = det_w(entries) for w != lambda."""
        return {w: self.gen_det(w, entries) for w in self.nonzero_weights()}


def _combine(*entry_dicts_and_coefs):
    """Linear combination sum c_i * E_i of nilradical elements."""
    out: Dict = {}
    for coef, ent in entry_dicts_and_coefs:
        for b, v in ent.items():
            out[b] = out.get(b, Poly.const(0)) + v * coef
    return out


def combine(*pairs) -> Dict:
    """``combine((c1, E1), (c2, E2), ...)`` -> sum of c_i E_i, entrywise."""
    return _combine(*pairs)


@dataclass(frozen=True)
class TypeA(_Family):
    """Grassmannian G(k, n) with k <= n - k."""

    k: int
    n: int
    pairing: str = "sorted"

    def __post_init__(self):
        if not (1 <= self.k <= self.n - self.k):
            raise ValueError(f"TypeA needs 1 <= k <= n - k, got k={self.k}, n={self.n}")
        if self.pairing not in ("sorted", "reversed"):
            raise ValueError(f"unknown pairing {self.pairing!r}")

    @property
    def cols(self) -> int:
        return self.n - self.k

    def label(self) -> str:
        return f"A:{self.k},{self.n}"

    def weights(self):
        out = []
        for j in range(self.k + 1):
            for R in itertools.combinations(range(1, self.k + 1), j):
                for C in itertools.combinations(range(1, self.cols + 1), j):
                    out.append((R, C))
        return out

    def degree(self, w) -> int:
        return len(w[0])

    def zero(self):
        return ((), ())

    def roots(self):
        return [(i, j) for i in range(1, self.k + 1) for j in range(1, self.cols + 1)]

    def root_weight(self, beta):
        return ((beta[0],), (beta[1],))

    def union(self, parts):
        R = [r for p in parts for r in p[0]]
        C = [c for p in parts for c in p[1]]
        if len(set(R)) != len(R) or len(set(C)) != len(C):
            raise IncompatibleWeights(f"overlapping parts {parts}")
        return (tuple(sorted(R)), tuple(sorted(C)))

    def splits(self, w, degs):
        R, C = w
        if not degs:
            if not R:
                yield ()
            return
        d0 = degs[0]
        for R1 in itertools.combinations(R, d0):
            Rrest = tuple(r for r in R if r not in R1)
            for C1 in itertools.combinations(C, d0):
                Crest = tuple(c for c in C if c not in C1)
                for rest in self.splits((Rrest, Crest), degs[1:]):
                    yield ((R1, C1),) + rest

    def canonical_assignment(self, w):
        R, C = w
        Cs = C if self.pairing == "sorted" else tuple(reversed(C))
        return list(zip(R, Cs))

    def assignment_sign(self, assignment) -> int:
        rows_ = [r for r, _ in assignment]
        if len(set(rows_)) != len(rows_):
            raise IncompatibleWeights("row used twice")
        ordered = [c for _, c in sorted(assignment)]
        return perm_sign(ordered)

    def root_decompositions(self, w):
        R, C = w
        for perm in itertools.permutations(C):
            yield list(zip(R, perm))

    def _standard_det(self, w, entries):
        return _minor(tuple(w[0]), tuple(w[1]), entries)


def _minor(R, C, entries, _cache=None):
    if _cache is None:
        _cache = {}
    if not R:
        return Poly.const(1)
    key = (R, C)
    if key in _cache:
        return _cache[key]
    r0 = R[0]
    acc = []
    for idx, c in enumerate(C):
        a = entries[(r0, c)]
        if a.is_zero():
            continue
        sub = _minor(R[1:], C[:idx] + C[idx + 1:], entries, _cache)
        acc.append(a * sub * (-1 if idx % 2 else 1))
    out = poly_sum(acc)
    _cache[key] = out
    return out


def _pfaffian(S, entries, _cache=None):
    if _cache is None:
        _cache = {}
    if not S:
        return Poly.const(1)
    if S in _cache:
        return _cache[S]
    s0 = S[0]
    acc = []
    for idx in range(1, len(S)):
        a = entries[(s0, S[idx])]
        if a.is_zero():
            continue
        sub = _pfaffian(S[1:idx] + S[idx + 1:], entries, _cache)
        acc.append(a * sub * (1 if idx % 2 else -1))
    out = poly_sum(acc)
    _cache[S] = out
    return out


def pfaffian(indices: Sequence[int], entries: Dict) -> Poly:
    """Pfaffian of the skew matrix with upper entries ``entries[(i, j)]``, i < j."""
    return _pfaffian(tuple(indices), entries)


@dataclass(frozen=True)
class TypeD(_Family):
    """Spinor variety S_{2n}; weights are even subsets of {1..n}."""

    n: int
    pairing: str = "sorted"

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"TypeD needs n >= 3, got {self.n}")
        if self.pairing not in ("sorted", "reversed"):
            raise ValueError(f"unknown pairing {self.pairing!r}")

    def label(self) -> str:
        return f"D:{self.n}"

    def weights(self):
        return [S for j in range(0, self.n + 1, 2) for S in itertools.combinations(range(1, self.n + 1), j)]

    def degree(self, w) -> int:
        return len(w) // 2

    def zero(self):
        return ()

    def roots(self):
        return list(itertools.combinations(range(1, self.n + 1), 2))

    def root_weight(self, beta):
        return tuple(beta)

    def union(self, parts):
        S = [s for p in parts for s in p]
        if len(set(S)) != len(S):
            raise IncompatibleWeights(f"overlapping parts {parts}")
        return tuple(sorted(S))

    def splits(self, w, degs):
        if not degs:
            if not w:
                yield ()
            return
        for S1 in itertools.combinations(w, 2 * degs[0]):
            rest_w = tuple(s for s in w if s not in S1)
            for rest in self.splits(rest_w, degs[1:]):
                yield (S1,) + rest

    def canonical_assignment(self, w):
        S = list(w)
        if self.pairing == "sorted":
            return [(S[2 * i], S[2 * i + 1]) for i in range(len(S) // 2)]
        m = len(S)
        return [(S[i], S[m - 1 - i]) for i in range(m // 2)]

    def assignment_sign(self, assignment) -> int:
        return perm_sign([s for pair in assignment for s in pair])

    def root_decompositions(self, w):
        yield from _matchings(tuple(w))

    def _standard_det(self, w, entries):
        return _pfaffian(tuple(w), entries)


def _matchings(S):
    if not S:
        yield []
        return
    a = S[0]
    for i in range(1, len(S)):
        rest = S[1:i] + S[i + 1:]
        for m in _matchings(rest):
            yield [(a, S[i])] + m


@dataclass(frozen=True)
class TypeE(_Family):
    """Exceptional cases E6/E7: declared for completeness, never constructible."""

    rank: int

    def __post_init__(self):
        raise UnsupportedFamily(f"E{self.rank} minuscule data is not implemented")


def parse_family(spec: str, pairing: str = "sorted"):
    """Parse ``A:k,n`` or ``D:n``."""
    kind, _, rest = spec.partition(":")
    kind = kind.strip().upper()
    nums = [int(x) for x in rest.split(",") if x.strip()]
    if kind == "A" and len(nums) == 2:
        return TypeA(nums[0], nums[1], pairing)
    if kind == "D" and len(nums) == 1:
        return TypeD(nums[0], pairing)
    if kind in ("E6", "E7", "E"):
        return TypeE(int(kind[1:]) if len(kind) > 1 else (nums[0] if nums else 0))
    raise ValueError(f"cannot parse family {spec!r}; expected A:k,n or D:n")


def weight_count(fam) -> int:
    if isinstance(fam, TypeA):
        return comb(fam.n, fam.k)
    return 2 ** (fam.n - 1)


# -- identity checks ------------------------------------------------------

def verify_detsum(fam, w) -> bool:
    """det_w(A+B) == sum over (g1, g2) of m(g1, g2) det_g1(A) det_g2(B)."""
    A, B = fam.generic("a"), fam.generic("b")
    lhs = fam.gen_det(w, combine((1, A), (1, B)))
    terms = []
    d = fam.degree(w)
    for d1 in range(d + 1):
        for g1, g2 in fam.splits(w, (d1, d - d1)) if 0 < d1 < d else _trivial_splits(fam, w, d1):
            terms.append(fam.gen_det(g1, A) * fam.gen_det(g2, B) * fam.compat_m([g1, g2]))
    return lhs == poly_sum(terms)


def _trivial_splits(fam, w, d1):
    if d1 == 0:
        yield (fam.zero(), w)
    else:
        yield (w, fam.zero())


def verify_laplace(fam, w, parts: Sequence[int]) -> bool:
    """multinomial(parts) det_w == sum over ordered decompositions with those degrees."""
    parts = tuple(parts)
    if any(p < 1 for p in parts) or sum(parts) != fam.degree(w):
        raise ValueError(f"parts {parts} must be positive and sum to {fam.degree(w)}")
    A = fam.generic("a")
    lhs = fam.gen_det(w, A) * multinomial(parts)
    terms = []
    for gs in fam.splits(w, parts):
        t = Poly.const(fam.compat_m(gs))
        for g in gs:
            t = t * fam.gen_det(g, A)
        terms.append(t)
    return lhs == poly_sum(terms)


def verify_identities(fam) -> dict:
    """Run detsum and every Laplace composition for every weight of ``fam``."""
    results = {"detsum": {}, "laplace": {}}
    for w in fam.nonzero_weights():
        results["detsum"][repr(w)] = verify_detsum(fam, w)
        for parts in compositions(fam.degree(w)):
            results["laplace"][f"{w!r}|{parts}"] = verify_laplace(fam, w, parts)
    return results


def random_multcompconst_instance(fam, rng):
    """A random (gammas, deltas) pair for the multiplicative decomposition check.

    Returns ``(gammas, deltas)`` where ``deltas[i]`` decomposes ``gammas[i]``.
    """
    ws = [w for w in fam.nonzero_weights() if fam.degree(w) >= 2]
    if not ws:
        ws = fam.nonzero_weights()
    w = rng.choice(ws)
    d = fam.degree(w)
    comps = list(compositions(d))
    gdegs = rng.choice(comps)
    gammas = list(rng.choice(list(fam.splits(w, gdegs))))
    deltas = []
    for g in gammas:
        sub = list(compositions(fam.degree(g)))
        ddegs = rng.choice(sub)
        deltas.append(list(rng.choice(list(fam.splits(g, ddegs)))))
    return gammas, deltas


def check_multcompconst(fam, gammas, deltas) -> bool:
    flat = [x for ds in deltas for x in ds]
    rhs = fam.compat_m(gammas)
    for ds in deltas:
        rhs *= fam.compat_m(ds)
    return fam.compat_m(flat) == rhs


@lru_cache(maxsize=None)
def _generic_cached(fam, name):
    return fam.generic(name)
