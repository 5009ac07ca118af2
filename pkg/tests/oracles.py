"""Independent oracles used only by the tests."""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import factorial

from secgrass.minuscule import TypeA, TypeD
from secgrass.poly import Poly


def _sort_sign(seq):
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def _wedge_insert(vec, add, coef, out):
    # add a normalized wedge with coefficient to out, dropping repeats
    if len(set(add)) != len(add):
        return
    key = tuple(sorted(add))
    out[key] = out.get(key, Poly.const(0)) + coef * _sort_sign(add)


def _act(fam, beta, coef, state):
    """Apply coef * X_beta to a vector {basis tuple: Poly}."""
    out = {}
    if isinstance(fam, TypeA):
        r, c = beta
        target = fam.k + c
        for basis, val in state.items():
            if r in basis:
                new = [target if x == r else x for x in basis]
                _wedge_insert(basis, new, val * coef, out)
    else:
        i, j = beta
        for basis, val in state.items():
            _wedge_insert(basis, (i, j) + basis, val * coef, out)
    return {k: v for k, v in out.items() if not v.is_zero()}


def _add(a, b):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, Poly.const(0)) + v
    return {k: v for k, v in out.items() if not v.is_zero()}


def highest_vector(fam):
    if isinstance(fam, TypeA):
        return {tuple(range(1, fam.k + 1)): Poly.const(1)}
    return {(): Poly.const(1)}


def exp_action(fam, entries):
    """exp(N) v_lambda in the wedge model, N = sum entries[beta] X_beta."""
    state = highest_vector(fam)
    total = dict(state)
    dmax = fam.k if isinstance(fam, TypeA) else fam.n // 2
    for j in range(1, dmax + 1):
        nxt = {}
        for beta, a in entries.items():
            nxt = _add(nxt, _act(fam, beta, a, state))
        state = nxt
        total = _add(total, {k: v * Fraction(1, factorial(j)) for k, v in state.items()})
    return total


def canonical_vector(fam, w):
    state = highest_vector(fam)
    for beta in fam.canonical_assignment(w):
        state = _act(fam, beta, Poly.const(1), state)
    (key, val), = state.items()
    return key, val.constant_value()


def det_oracle(fam, w, entries):
    """Coefficient of the canonical weight vector of w in exp(N) v_lambda."""
    if fam.degree(w) == 0:
        return Poly.const(1)
    key, scale = canonical_vector(fam, w)
    return exp_action(fam, entries).get(key, Poly.const(0)) / scale


def ssyt_count(shape, d):
    """Number of semistandard tableaux of the given row shape with entries <= d."""
    cells = [(r, c) for r, L in enumerate(shape) for c in range(L)]
    fill = {}

    def rec(i):
        if i == len(cells):
            return 1
        r, c = cells[i]
        lo = 1
        if c > 0:
            lo = max(lo, fill[(r, c - 1)])
        if r > 0:
            lo = max(lo, fill[(r - 1, c)] + 1)
        total = 0
        for v in range(lo, d + 1):
            fill[(r, c)] = v
            total += rec(i + 1)
        fill.pop((r, c), None)
        return total

    return rec(0)


def brute_pfaffian(S, entries):
    """Sum over all perfect matchings with the crossing-number sign."""
    S = list(S)
    total = Poly.const(0)
    for perm in itertools.permutations(S):
        pairs = [perm[i:i + 2] for i in range(0, len(perm), 2)]
        if any(a > b for a, b in pairs):
            continue
        if any(pairs[i][0] > pairs[i + 1][0] for i in range(len(pairs) - 1)):
            continue
        t = Poly.const(_sort_sign(perm))
        for a, b in pairs:
            t = t * entries[(a, b)]
        total = total + t
    return total
