"""
Equations of secant varieties of Grassmannians.

Polynomials on wedge^k C^n are written in Pluecker variables ``Var("p", I)``
with I an increasing k-tuple.  The degree-d piece of the ideal of the secant
variety through s points is computed as the kernel of evaluation at random
points a_1 Q_1 + ... + a_s Q_s of the secant cone (Q_i decomposable).  The
kernel is split by torus weight (the index content of a monomial) since the
ideal is spanned by weight vectors.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, comb, factorial
from typing import Dict, List, Sequence, Tuple

from .linalg import RationalMatrix, RowSpace
from .minuscule import perm_sign
from .plethysm import ColumnTriple, ConstraintError, column_triples, s3_wedge_multiplicity
from .poly import Poly, Var, make_monomial, poly_sum
from .symfunc import SymmetricExpression, plethysm_table, schur_expand, xvar
from .young import (COLUMNS, ROWS, IsotypicTable, Partition,
                    lr_coefficient, tensor_multiplicity)


class NotHomogeneous(ValueError):
    pass


class PreconditionError(ValueError):
    pass


def pvar(I) -> Var:
    return Var("p", tuple(I))


def pluecker_vars(k: int, n: int) -> List[Var]:
    return [pvar(I) for I in itertools.combinations(range(1, n + 1), k)]


def signed_var(indices: Sequence[int]) -> Poly:
    """x_{a_1...a_k}: the Pluecker variable up to the sign of sorting, 0 on repeats."""
    if len(set(indices)) != len(indices):
        return Poly.const(0)
    return Poly.var(pvar(sorted(indices))) * perm_sign(indices)


# -- polarization -------------------------------------------------------------

def polarize(P: Poly):
    """Symmetric multilinear form with polarize(P)(v, ..., v) = P(v).

    Arguments are dicts from variables to values; missing variables count as 0.
    """
    if not P.is_homogeneous():
        raise NotHomogeneous("polarization needs a homogeneous polynomial")
    d = P.degree()
    vars_ = P.variables()

    def form(*vectors):
        if len(vectors) != d:
            raise ValueError(f"expected {d} arguments, got {len(vectors)}")
        cur = P
        for v in vectors:
            cur = poly_sum(cur.diff(x) * v.get(x, 0) for x in vars_ if v.get(x, 0))
        return Fraction(cur.constant_value()) / factorial(d)

    form.degree = d
    return form


def f_alpha(P: Poly, alpha: Sequence[int], points: Sequence[Dict]):
    """Value of the polarization at (Q_1 x alpha_1, ..., Q_s x alpha_s)."""
    args = [Q for Q, a in zip(points, alpha) for _ in range(a)]
    return polarize(P)(*args)


# -- sampling ---------------------------------------------------------------

def simple_vector(k: int, n: int, rng: random.Random, bound: int = 5) -> Dict[Tuple, int]:
    """Pluecker coordinates of a random integer k x n matrix."""
    while True:
        M = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(k)]
        out = {I: _int_det([[M[r][c - 1] for c in I] for r in range(k)])
               for I in itertools.combinations(range(1, n + 1), k)}
        if any(out.values()):
            return out


def _int_det(M) -> int:
    n = len(M)
    if n == 0:
        return 1
    if n == 1:
        return M[0][0]
    total = 0
    for j in range(n):
        if M[0][j]:
            minor = [row[:j] + row[j + 1:] for row in M[1:]]
            total += (-1) ** j * M[0][j] * _int_det(minor)
    return total


def secant_point(k: int, n: int, s: int, rng: random.Random) -> Dict[Tuple, int]:
    pts = [simple_vector(k, n, rng) for _ in range(s)]
    coefs = [rng.choice([c for c in range(-6, 7) if c]) for _ in range(s)]
    return {I: sum(a * Q[I] for a, Q in zip(coefs, pts)) for I in pts[0]}


# -- the degree-d ideal piece -------------------------------------------------

@dataclass
class DegreeDIdealPiece:
    k: int
    n: int
    s: int
    d: int
    basis: List[Poly]
    weight_dims: Dict[Tuple[int, ...], int]
    points_used: int
    monomial_count: int

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def isotypic(self) -> IsotypicTable:
        return isotypic_from_weights(self.weight_dims, self.n, self.d * self.k,
                                     f"I_{self.d}(sigma_{self.s}(G({self.k},{self.n})))")

    def vanishes_on(self, points: List[Dict]) -> bool:
        for pt in points:
            vals = {pvar(I): v for I, v in pt.items()}
            if any(P.eval(vals) != 0 for P in self.basis):
                return False
        return True


def _blocks(k: int, n: int, d: int):
    """Degree-d monomials in Pluecker variables grouped by index content."""
    subsets = list(itertools.combinations(range(1, n + 1), k))
    blocks: Dict[Tuple[int, ...], List[Tuple]] = {}
    for combo in itertools.combinations_with_replacement(range(len(subsets)), d):
        cnt = [0] * n
        for i in combo:
            for j in subsets[i]:
                cnt[j - 1] += 1
        blocks.setdefault(tuple(cnt), []).append(tuple(subsets[i] for i in combo))
    return blocks


def _mono_value(mono, pt) -> int:
    v = 1
    for I in mono:
        v *= pt[I]
        if not v:
            return 0
    return v


def _mono_poly(mono, coef) -> Poly:
    return Poly({make_monomial((pvar(I), 1) for I in mono): coef})


def ideal_degree_d(k: int, n: int, s: int, d: int, seed: int = 0, batch: int | None = None) -> DegreeDIdealPiece:
    """Degree-d part of the ideal of the secant variety spanned by s points of G(k, n).

    Points are added in batches until two consecutive batches leave every
    weight block's rank unchanged; a further confirmation batch must agree.
    """
    if s < 1 or d < 1:
        raise ValueError("s and d must be positive")
    rng = random.Random(seed)
    blocks = _blocks(k, n, d)
    spaces = {w: RowSpace(len(ms)) for w, ms in blocks.items()}
    if batch is None:
        batch = max(len(ms) for ms in blocks.values()) + 2
    used = 0
    quiet = 0
    while True:
        before = sum(sp.rank for sp in spaces.values())
        for _ in range(batch):
            pt = secant_point(k, n, s, rng)
            used += 1
            for w, ms in blocks.items():
                sp = spaces[w]
                if sp.rank < len(ms):
                    sp.add([_mono_value(m, pt) for m in ms])
        after = sum(sp.rank for sp in spaces.values())
        full = all(sp.rank == len(blocks[w]) for w, sp in spaces.items())
        quiet = quiet + 1 if after == before else 0
        # two unchanged batches, then one more as confirmation
        if full or quiet >= 3:
            break
    basis = []
    weight_dims = {}
    for w in sorted(blocks):
        ker = spaces[w].kernel()
        weight_dims[w] = len(ker)
        for vec in ker:
            basis.append(poly_sum(_mono_poly(m, c) for m, c in zip(blocks[w], vec) if c))
    return DegreeDIdealPiece(k, n, s, d, basis, weight_dims, used, sum(len(b) for b in blocks.values()))


def ideal_degree_d_ungraded(k: int, n: int, s: int, d: int, seed: int = 0, extra: int = 10) -> int:
    """Dimension via one dense evaluation matrix over all monomials (small cases only)."""
    rng = random.Random(seed)
    monos = [m for ms in _blocks(k, n, d).values() for m in ms]
    rows_ = []
    for _ in range(len(monos) + extra):
        pt = secant_point(k, n, s, rng)
        rows_.append([_mono_value(m, pt) for m in monos])
    return len(RationalMatrix(rows_, len(monos)).kernel())


def isotypic_from_weights(weight_dims: Dict[Tuple[int, ...], int], n: int, total: int,
                          ambient: str = "") -> IsotypicTable:
    """Isotypic multiplicities of a GL_n representation from its weight-space dimensions."""
    terms = {}
    for w, m in weight_dims.items():
        if m:
            terms[make_monomial((xvar(i + 1), e) for i, e in enumerate(w))] = m
    if not terms:
        return IsotypicTable({}, ambient)
    rows_needed = min(n, total)
    return schur_expand(SymmetricExpression(Poly(terms), n), rows_needed, ambient)


def no_low_degree(k: int, n: int, s: int, d: int, seed: int = 0) -> bool:
    return ideal_degree_d(k, n, s, d, seed).dimension == 0


def sym_power_dimension(k: int, n: int, d: int) -> int:
    return comb(comb(n, k) + d - 1, d)


# -- predicates and reductions ------------------------------------------------

def longarein_predicate(mu: Partition, k: int, s: int, d: int) -> bool:
    """Whether mu has a short ceil(d/s)-th column or more than k*s rows."""
    if mu.weight != d * k:
        raise PreconditionError(f"|mu| = {mu.weight} but d*k = {d * k}")
    cols = mu.column_lengths()
    j = -(-d // s)
    col = cols[j - 1] if j <= len(cols) else 0
    return col < k or len(mu.row_lengths()) > k * s


def reduce_secant(lam: Partition, k: int, n: int, d: int | None = None) -> Tuple[Partition, int, int]:
    """Drop the full first row of a diagram with d columns: (lam', k-1, n-1)."""
    rows_ = lam.row_lengths()
    if d is None:
        d = rows_[0] if rows_ else 0
    if k < 2 or n < 2:
        raise PreconditionError("reduction needs k >= 2")
    if not rows_ or len(lam.column_lengths()) != d:
        raise PreconditionError(f"{lam} does not have exactly {d} columns")
    if lam.weight != d * k:
        raise PreconditionError(f"|lam| = {lam.weight} but d*k = {d * k}")
    return Partition(rows_[1:], ROWS).in_convention(lam.convention), k - 1, n - 1


# -- cubics -----------------------------------------------------------------

@dataclass
class CubicEntry:
    triple: ColumnTriple
    multiplicity: int
    flagged: bool = False
    raw: int = 0


def cubic_multiplicity_entry(t, k: int, n: int) -> CubicEntry:
    if not isinstance(t, ColumnTriple):
        t = ColumnTriple(*t)
    if t.weight != 3 * k:
        raise ConstraintError(f"a+b+c = {t.weight} but 3k = {3 * k}")
    if n < t.a:
        return CubicEntry(t, 0, False, 0)
    a, b, c = t.a - t.c, t.b - t.c, 0
    raw = s3_wedge_multiplicity(ColumnTriple(a, b, c), k - t.c)
    if a == 2 * b:
        raw -= 1
    return CubicEntry(t, max(raw, 0), raw < 0, raw)


def cubic_multiplicity(t, k: int, n: int) -> int:
    """Multiplicity of the (a, b, c)-column component in the cubics through the secant."""
    return cubic_multiplicity_entry(t, k, n).multiplicity


def cubic_ideal_table(k: int, n: int) -> Tuple[IsotypicTable, List[CubicEntry]]:
    entries = [cubic_multiplicity_entry(t, k, n) for t in column_triples(k)]
    table = IsotypicTable({e.triple.partition(): e.multiplicity for e in entries if e.triple.a <= n},
                          f"I_3(sigma(G({k},{n})))")
    return table, entries


def alpha_kc(k: int, c: int) -> Partition:
    return Partition((2 * k - c, k, c), COLUMNS)


def quotient_degree3(k: int, n: int, ideal_dim: int | None = None) -> Dict:
    """Degree-3 part of the coordinate ring of the secant, in two readings.

    ``present`` keeps alpha(k, c) only when it occurs in S^3(wedge^k);
    ``literal`` keeps every alpha(k, c) with multiplicity one.
    """
    s3 = plethysm_table(Partition((3,), ROWS), k, "wedge").in_convention(COLUMNS)
    ideal_table, entries = cubic_ideal_table(k, n)
    if ideal_dim is None:
        ideal_dim = ideal_table.dimension(n)
    total = sym_power_dimension(k, n, 3)
    readings = {
        "present": IsotypicTable({alpha_kc(k, c): min(1, s3.multiplicity(alpha_kc(k, c))) for c in range(k + 1)},
                                 "present"),
        "literal": IsotypicTable({alpha_kc(k, c): 1 for c in range(k + 1)}, "literal"),
    }
    theorem = IsotypicTable(
        {p: m - ideal_table.multiplicity(p) for p, m in s3.entries.items() if len(p.row_lengths()) <= n},
        "theorem")
    dims = {name: t.dimension(n) for name, t in readings.items()}
    return {
        "k": k,
        "n": n,
        "s3_dimension": total,
        "ideal_dimension": ideal_dim,
        "readings": readings,
        "theorem_quotient": theorem,
        "reading_dimensions": dims,
        "identity_holds": {name: dim + ideal_dim == total for name, dim in dims.items()},
        "flagged": [e.triple.as_tuple() for e in entries if e.flagged],
    }


# -- highest weight vectors ---------------------------------------------------

def _perm_parity(p) -> int:
    return perm_sign(p)


def hwv_even(k: int) -> Poly:
    if k < 2 or k % 2:
        raise ValueError("hwv_even needs an even k >= 2")
    acc: Dict = {}
    base = signed_var(range(1, k + 1))
    for sigma in itertools.permutations(range(1, 2 * k + 1)):
        sg = _perm_parity(sigma)
        term = signed_var(sigma[:k]) * signed_var(sigma[k:])
        for m, c in term.items():
            acc[m] = acc.get(m, 0) + sg * c
    return Poly(acc) * base


def hwv_odd(k: int) -> Poly:
    if k < 3 or k % 2 == 0:
        raise ValueError("hwv_odd needs an odd k >= 3")
    acc: Dict = {}
    deltas = [(d, _perm_parity(d)) for d in itertools.permutations(range(1, k + 1))]
    for sigma in itertools.permutations(range(1, 2 * k + 1)):
        sg = _perm_parity(sigma)
        first = signed_var(sigma[:k])
        for delta, sd in deltas:
            second = signed_var(sigma[k:2 * k - 1] + (delta[0],))
            if second.is_zero():
                continue
            third = signed_var((sigma[2 * k - 1],) + delta[1:])
            if third.is_zero():
                continue
            for m, c in (first * second * third).items():
                acc[m] = acc.get(m, 0) + sg * sd * c
    return Poly(acc)


def hwv(k: int) -> Poly:
    return hwv_even(k) if k % 2 == 0 else hwv_odd(k)


def raise_var(v: Var, i: int) -> Poly:
    """e_i on a Pluecker variable: replace index i+1 by i."""
    I = list(v.index)
    if i + 1 not in I or i in I:
        return Poly.const(0)
    return signed_var([i if j == i + 1 else j for j in I])


def apply_raising(P: Poly, i: int) -> Poly:
    return poly_sum(P.diff(v) * raise_var(v, i) for v in P.variables())


def poly_weight(P: Poly, n: int):
    """Common index content of all monomials, or None if they differ."""
    weights = set()
    for m, _ in P.items():
        cnt = [0] * n
        for v, e in m:
            for j in v.index:
                cnt[j - 1] += e
        weights.add(tuple(cnt))
    return weights.pop() if len(weights) == 1 else None


def check_hwv(k: int, P: Poly | None = None) -> Dict:
    P = hwv(k) if P is None else P
    n = 2 * k
    expected = tuple([2] * k + [1] * k)
    w = poly_weight(P, n)
    Q = {pvar(range(1, k + 1)): 1, pvar(range(k + 1, 2 * k + 1)): 1}
    at_q = P.eval({v: Q.get(v, 0) for v in P.variables()})
    killed = all(apply_raising(P, i).is_zero() for i in range(1, n))
    weight_ok = w == expected
    return {
        "k": k,
        "terms": len(P),
        "nonzero": not P.is_zero(),
        "raising_killed": killed,
        "weight": list(w) if w else None,
        "weight_columns": list(Partition(w, ROWS).column_lengths()) if weight_ok else None,
        "weight_ok": weight_ok,
        "value_at_Q": str(at_q),
        "passed": killed and weight_ok and at_q != 0,
    }


# -- the open orbit -----------------------------------------------------------

def in_D(alpha: Sequence[int], k: int) -> bool:
    alpha = list(alpha)
    if len(alpha) != 2 * k or any(a < b for a, b in zip(alpha, alpha[1:])):
        raise PreconditionError("alpha must be a non-increasing sequence of length 2k")
    return len({alpha[i] + alpha[2 * k - 1 - i] for i in range(k)}) == 1


def orbit_ring_multiplicity(alpha: Sequence[int], k: int) -> int:
    if not in_D(alpha, k):
        return 0
    return ceil(Fraction(alpha[k - 1] - alpha[k] + 1, 2))


def orbit_ring_oracle(alpha: Sequence[int], k: int) -> int:
    """Count swap-orbits of pairs (m, n) with c^lambda_{(m^k),(n^k)} != 0, lambda = alpha shifted."""
    alpha = list(alpha)
    in_D(alpha, k)  # shape validation only
    lam = [a - alpha[-1] for a in alpha]
    total = sum(lam)
    if total % k:
        return 0
    s = total // k
    lamp = Partition(tuple(lam), ROWS)
    hits = set()
    for m in range(s + 1):
        nn = s - m
        if lr_coefficient(lamp, Partition((m,) * k, ROWS), Partition((nn,) * k, ROWS)):
            hits.add(frozenset((m, nn)))
    return len(hits)


def unordered_decompositions(d: int, s: int):
    """Non-increasing s-tuples of nonnegative integers summing to d."""
    def rec(left, parts, cap):
        if parts == 0:
            if left == 0:
                yield ()
            return
        for a in range(min(left, cap), -1, -1):
            for rest in rec(left - a, parts - 1, a):
                yield (a,) + rest
    return list(rec(d, s, d))


def crucial_m(mu: Partition, k: int, s: int, d: int, lam: Partition | None = None) -> int:
    """Sum over decompositions of d into s parts of the multiplicity of mu in the tensor product."""
    lam = Partition((1,) * k, ROWS) if lam is None else lam.as_rows()
    mu = mu.as_rows()
    total = 0
    for alpha in unordered_decompositions(d, s):
        factors = [Partition(tuple(a * p for p in lam.parts), ROWS) for a in alpha if a]
        total += tensor_multiplicity(mu, factors, max_rows=max(len(mu), 1))
    return total


def crucial_bound(mu: Partition, k: int, s: int, d: int) -> int:
    """Lower bound for the multiplicity of mu in I_d: its S^d multiplicity minus m."""
    if mu.weight != d * k:
        raise PreconditionError(f"|mu| = {mu.weight} but d*k = {d * k}")
    sd = plethysm_table(Partition((d,), ROWS), k, "wedge").multiplicity(mu)
    return sd - crucial_m(mu, k, s, d)


def random_D_alpha(k: int, rng: random.Random, top: int = 6, shift: bool = True) -> List[int]:
    """Random element of D_k; with shift=False the last entry is 0."""
    c = rng.randint(0, top)
    # first entry c forces the last to 0; the rest sit in [c/2, c] and pair up to c
    upper = [c] + sorted((rng.randint(-(-c // 2), c) for _ in range(k - 1)), reverse=True)
    lam = upper + [c - a for a in reversed(upper)]
    ell = rng.randint(-2, 2) if shift else 0
    return [a + ell for a in lam]
