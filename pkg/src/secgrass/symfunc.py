"""
Characters of plethysms and their Schur expansions.

The character of S^mu(S^k W) is sum_alpha chi^mu(alpha)/z_alpha prod_i h_k(x^{alpha_i}),
with z_alpha the centralizer order.  Multiplicities of Schur polynomials are
read off as coefficients of staircase-shifted monomials after multiplying by
the Vandermonde product.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Dict, Tuple

from .poly import Poly, Var, make_monomial
from .young import ROWS, IsotypicTable, Partition, gl_dimension, partitions, require, transpose


class UnsupportedDegree(ValueError):
    pass


class NotHomogeneous(ValueError):
    pass


def xvar(i: int) -> Var:
    return Var("x", (i,))


@dataclass(frozen=True)
class SymmetricExpression:
    poly: Poly
    nvars: int

    def is_symmetric(self) -> bool:
        for i in range(1, self.nvars):
            swap = {xvar(i): Poly.var(xvar(i + 1)), xvar(i + 1): Poly.var(xvar(i))}
            if self.poly.subs(swap) != self.poly:
                return False
        return True

    def __mul__(self, other):
        if isinstance(other, SymmetricExpression):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return SymmetricExpression(self.poly * other.poly, self.nvars)
        return SymmetricExpression(self.poly * other, self.nvars)

    def __add__(self, other):
        if other.nvars != self.nvars:
            raise ValueError("variable count mismatch")
        return SymmetricExpression(self.poly + other.poly, self.nvars)


def h_power(k: int, a: int, d: int) -> SymmetricExpression:
    """Complete homogeneous h_k evaluated at the a-th powers of x_1..x_d."""
    if k < 0 or a < 1 or d < 1:
        raise ValueError("need k >= 0, a >= 1, d >= 1")
    terms = {}
    for combo in itertools.combinations_with_replacement(range(1, d + 1), k):
        m = make_monomial((xvar(i), a) for i in combo)
        terms[m] = 1
    return SymmetricExpression(Poly(terms), d)


def e_power(k: int, a: int, d: int) -> SymmetricExpression:
    """Elementary symmetric e_k evaluated at the a-th powers of x_1..x_d."""
    if k < 0 or a < 1 or d < 1:
        raise ValueError("need k >= 0, a >= 1, d >= 1")
    terms = {}
    for combo in itertools.combinations(range(1, d + 1), k):
        terms[make_monomial((xvar(i), a) for i in combo)] = 1
    return SymmetricExpression(Poly(terms), d)


def psi_alpha(alpha: Partition, k: int, d: int, inner: str = "sym") -> SymmetricExpression:
    base = h_power if inner == "sym" else e_power
    out = SymmetricExpression(Poly.const(1), d)
    for a in alpha.row_lengths():
        out = out * base(k, a, d)
    return out


# Irreducible characters of S_n for n <= 4; columns follow _CLASSES[n].
_CLASSES = {
    0: [()],
    1: [(1,)],
    2: [(1, 1), (2,)],
    3: [(1, 1, 1), (2, 1), (3,)],
    4: [(1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,)],
}
_CHARACTERS = {
    (): [1],
    (1,): [1],
    (2,): [1, 1],
    (1, 1): [1, -1],
    (3,): [1, 1, 1],
    (2, 1): [2, 0, -1],
    (1, 1, 1): [1, -1, 1],
    (4,): [1, 1, 1, 1, 1],
    (3, 1): [3, 1, -1, 0, -1],
    (2, 2): [2, 0, 2, -1, 0],
    (2, 1, 1): [3, -1, -1, 0, 1],
    (1, 1, 1, 1): [1, -1, 1, 1, -1],
}


def class_size(alpha: Tuple[int, ...]) -> int:
    n = sum(alpha)
    denom = 1
    for part in set(alpha):
        m = alpha.count(part)
        denom *= part ** m * factorial(m)
    return factorial(n) // denom


def sn_character(mu: Tuple[int, ...], alpha: Tuple[int, ...]) -> int:
    n = sum(mu)
    if n > 4:
        raise UnsupportedDegree(f"symmetric group characters hard-coded only for n <= 4, got {n}")
    return _CHARACTERS[tuple(mu)][_CLASSES[n].index(tuple(alpha))]


def plethysm_character(mu: Partition, k: int, inner: str, d: int) -> SymmetricExpression:
    """Character of S^mu(S^k C^d) (inner='sym') or S^mu(wedge^k C^d) (inner='wedge')."""
    require(mu, ROWS)
    if inner not in ("sym", "wedge"):
        raise ValueError(f"inner must be 'sym' or 'wedge', not {inner!r}")
    n = mu.weight
    if n > 4:
        raise UnsupportedDegree(f"outer degree {n} > 4 not supported")
    total = Poly.const(0)
    for alpha in _CLASSES[n]:
        chi = sn_character(mu.parts, alpha)
        if not chi:
            continue
        coef = Fraction(chi * class_size(alpha), factorial(n))
        total = total + psi_alpha(Partition(alpha, ROWS), k, d, inner).poly * coef
    return SymmetricExpression(total, d)


def schur_coefficients(f: SymmetricExpression, max_rows: int) -> Dict[Partition, int]:
    """Signed coefficients of s_lambda in f, for all lambda with <= max_rows rows.

    Uses exactly ``max_rows`` variables (the rest are set to zero).  The
    coefficient of s_lambda is the coefficient of x^(lambda+delta) in
    f * prod_{i<j}(x_i - x_j), expanded as a signed sum over permutations.
    """
    if f.nvars < max_rows:
        raise ValueError("need at least max_rows variables")
    if not f.poly.is_homogeneous():
        raise NotHomogeneous("Schur expansion needs a homogeneous polynomial")
    poly = f.poly
    if f.nvars > max_rows:
        poly = poly.subs({xvar(i): 0 for i in range(max_rows + 1, f.nvars + 1)})
    if poly.is_zero():
        return {}
    deg = poly.degree()
    r = max_rows
    delta = list(range(r - 1, -1, -1))
    perms = []
    for perm in itertools.permutations(range(r)):
        inv = sum(1 for i in range(r) for j in range(i + 1, r) if perm[i] > perm[j])
        perms.append(([delta[p] for p in perm], -1 if inv % 2 else 1))
    table = {}
    for lam in partitions(deg, max_parts=r):
        lp = list(lam) + [0] * (r - len(lam))
        total = 0
        for sd, sgn in perms:
            exps = [lp[i] + delta[i] - sd[i] for i in range(r)]
            if min(exps) < 0:
                continue
            total += sgn * poly.coefficient({xvar(i + 1): e for i, e in enumerate(exps)})
        if total:
            if isinstance(total, Fraction):
                if total.denominator != 1:
                    raise ValueError(f"non-integral Schur coefficient {total} for {lam}")
                total = total.numerator
            table[Partition(lam, ROWS)] = total
    return table


def schur_expand(f: SymmetricExpression, max_rows: int, ambient: str = "") -> IsotypicTable:
    coeffs = schur_coefficients(f, max_rows)
    neg = {p: c for p, c in coeffs.items() if c < 0}
    if neg:
        raise ValueError(f"not a character: negative Schur coefficients {neg}")
    return IsotypicTable(coeffs, ambient)


def _ambient(mu: Partition, k: int, inner: str) -> str:
    op = "S" if inner == "sym" else "wedge"
    return f"S^{mu.parts}({op}^{k})"


def plethysm_table(mu: Partition, k: int, inner: str) -> IsotypicTable:
    """Decomposition of S^mu(S^k) or S^mu(wedge^k), stable in the dimension.

    The wedge case is obtained from a symmetric one through the duality
    S^mu(wedge^k) = S^mu(S^k)^T for k even and S^(mu^T)(S^k)^T for k odd.
    """
    require(mu, ROWS)
    if k < 0:
        raise ValueError("k must be nonnegative")
    n = mu.weight
    if inner == "sym":
        if n == 0:
            return IsotypicTable({Partition((), ROWS): 1}, _ambient(mu, k, inner))
        f = plethysm_character(mu, k, "sym", n)
        return schur_expand(f, n, _ambient(mu, k, inner))
    if inner != "wedge":
        raise ValueError(f"inner must be 'sym' or 'wedge', not {inner!r}")
    outer = mu if k % 2 == 0 else transpose(mu)
    return apply_duality(plethysm_table(outer, k, "sym"), "even" if k % 2 == 0 else "odd",
                         ambient=_ambient(mu, k, "wedge"))


def plethysm_table_direct(mu: Partition, k: int, inner: str, d: int) -> IsotypicTable:
    """Decomposition of S^mu(inner^k C^d) straight from its character in d variables."""
    f = plethysm_character(mu, k, inner, d)
    return schur_expand(f, d, _ambient(mu, k, inner) + f" on C^{d}")


def apply_duality(table: IsotypicTable, k_parity: str, ambient: str | None = None) -> IsotypicTable:
    """Transpose every diagram.

    For even inner degree this turns S^mu(S^k) into S^mu(wedge^k); for odd
    inner degree it turns S^mu(S^k) into S^(mu^T)(wedge^k).  The caller is
    responsible for the outer-functor relabelling in the odd case.
    """
    if k_parity not in ("even", "odd"):
        raise ValueError("k_parity must be 'even' or 'odd'")
    for p in table.entries:
        require(p, ROWS)
    if ambient is None:
        ambient = f"dual[{k_parity}]({table.ambient})"
    return table.transposed(ambient)


def plethysm_dimension(mu: Partition, k: int, inner: str, d: int) -> int:
    """dim S^mu(V) with V = S^k C^d or wedge^k C^d, via the GL dimension of mu."""
    N = comb(d + k - 1, k) if inner == "sym" else comb(d, k)
    if N == 0:
        return 1 if mu.weight == 0 else 0
    return gl_dimension(mu, N)


__all__ = [
    "SymmetricExpression",
    "h_power",
    "e_power",
    "psi_alpha",
    "plethysm_character",
    "schur_coefficients",
    "schur_expand",
    "plethysm_table",
    "plethysm_table_direct",
    "apply_duality",
    "plethysm_dimension",
    "class_size",
    "sn_character",
]
