"""
Young diagrams, GL dimensions and Littlewood-Richardson coefficients.

Every :class:`Partition` carries an explicit convention tag.  ``rows`` means
the parts are row lengths, ``columns`` means they are column lengths.  The
same diagram can be written either way; :meth:`Partition.as_rows` and
:meth:`Partition.as_columns` convert between the two.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Tuple

ROWS = "rows"
COLUMNS = "columns"
_CONVENTIONS = (ROWS, COLUMNS)


class ConventionError(ValueError):
    """Raised when a rows/columns tag does not match what an API expects."""


def conjugate(parts) -> Tuple[int, ...]:
    parts = [p for p in parts if p]
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > i) for i in range(parts[0]))


@dataclass(frozen=True, order=True)
class Partition:
    parts: Tuple[int, ...]
    convention: str

    def __post_init__(self):
        if self.convention not in _CONVENTIONS:
            raise ConventionError(f"unknown convention {self.convention!r}")
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts not weakly decreasing: {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i] if i < len(self.parts) else 0

    def __str__(self):
        return f"{self.convention}{self.parts}"

    def as_rows(self) -> "Partition":
        if self.convention == ROWS:
            return self
        return Partition(conjugate(self.parts), ROWS)

    def as_columns(self) -> "Partition":
        if self.convention == COLUMNS:
            return self
        return Partition(conjugate(self.parts), COLUMNS)

    def in_convention(self, convention: str) -> "Partition":
        return self.as_rows() if convention == ROWS else self.as_columns()

    def row_lengths(self) -> Tuple[int, ...]:
        return self.as_rows().parts

    def column_lengths(self) -> Tuple[int, ...]:
        return self.as_columns().parts


def rows(*parts) -> Partition:
    return Partition(tuple(parts), ROWS)


def columns(*parts) -> Partition:
    return Partition(tuple(parts), COLUMNS)


def require(p: Partition, convention: str):
    if p.convention != convention:
        raise ConventionError(f"expected {convention} convention, got {p}")


def transpose(p: Partition, relabel: bool = False) -> Partition:
    """Conjugate diagram, same tag.

    With ``relabel=True`` the conjugate parts are tagged with the other
    convention instead, which describes the *same* diagram.
    """
    tag = p.convention
    if relabel:
        tag = COLUMNS if tag == ROWS else ROWS
    return Partition(conjugate(p.parts), tag)


def multiply_rows(lam: Partition, l: int) -> Partition:
    require(lam, ROWS)
    if l < 0:
        raise ValueError("row multiplier must be nonnegative")
    return Partition(tuple(p * l for p in lam.parts), ROWS)


def partitions(n: int, max_parts: int | None = None, max_part: int | None = None) -> Iterator[Tuple[int, ...]]:
    """All partitions of n as tuples, in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if max_parts is None:
        max_parts = n
    if n == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, max_parts - 1, first):
            yield (first,) + rest


def gl_dimension(p: Partition, d: int) -> int:
    """Dimension of the GL_d irreducible with highest weight ``p``."""
    if d < 1:
        raise ValueError("rank must be positive")
    lam = list(p.row_lengths())
    if len(lam) > d:
        return 0
    lam += [0] * (d - len(lam))
    num = 1
    den = 1
    for i in range(d):
        for j in range(i + 1, d):
            num *= lam[i] - lam[j] + j - i
            den *= j - i
    return num // den


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Count LR tableaux of shape lam/mu and content nu."""
    for p in (lam, mu, nu):
        require(p, ROWS)
    if lam.weight != mu.weight + nu.weight:
        raise ValueError(f"weight mismatch: |{lam.parts}| != |{mu.parts}| + |{nu.parts}|")
    L, M, N = lam.parts, mu.parts, nu.parts
    if len(M) > len(L) or any(m > l for m, l in zip(M, L)):
        return 0
    nrows = len(L)
    Mp = list(M) + [0] * (nrows - len(M))
    cells = []  # reading order: rows top to bottom, each row right to left
    for r in range(nrows):
        for c in range(L[r] - 1, Mp[r] - 1, -1):
            cells.append((r, c))
    if not cells:
        return 1
    filling: Dict[Tuple[int, int], int] = {}
    counts = [0] * (len(N) + 1)

    def rec(i):
        if i == len(cells):
            return 1
        r, c = cells[i]
        hi = len(N)
        right = filling.get((r, c + 1))
        if right is not None:
            hi = min(hi, right)
        lo = 1
        above = filling.get((r - 1, c))
        if above is not None:
            lo = above + 1
        total = 0
        for v in range(lo, hi + 1):
            if counts[v] >= N[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filling[(r, c)] = v
            total += rec(i + 1)
            del filling[(r, c)]
            counts[v] -= 1
        return total

    return rec(0)


def _horizontal_strips(shape: Tuple[int, ...], size: int, max_rows: int | None):
    """Shapes obtained from ``shape`` by adding a horizontal strip of ``size`` boxes."""
    base = list(shape) + [0]
    if max_rows is not None:
        base = base[:max_rows]
    n = len(base)

    def rec(i, left, cur):
        if i == n:
            if left == 0:
                yield tuple(cur)
            return
        cap = (base[i - 1] - base[i]) if i > 0 else left
        for a in range(min(cap, left), -1, -1):
            cur.append(base[i] + a)
            yield from rec(i + 1, left - a, cur)
            cur.pop()

    for t in rec(0, size, []):
        yield tuple(x for x in t if x)


def lr_product(mu: Partition, nu: Partition, max_rows: int | None = None) -> Dict[Partition, int]:
    """Expand s_mu * s_nu by adding nu's rows as successive horizontal strips.

    Boxes added in step i are labelled i; the lattice condition on the
    reverse reading word is enforced on the completed labelling.
    """
    require(mu, ROWS)
    require(nu, ROWS)
    results: Dict[Tuple[int, ...], int] = {}

    def rec(step, shape, labels):
        if step == len(nu.parts):
            if _is_lattice(labels, len(shape)):
                results[shape] = results.get(shape, 0) + 1
            return
        for new in _horizontal_strips(shape, nu.parts[step], max_rows):
            lab = dict(labels)
            for r, length in enumerate(new):
                old = shape[r] if r < len(shape) else 0
                for c in range(old, length):
                    lab[(r, c)] = step + 1
            rec(step + 1, new, lab)

    rec(0, mu.parts, {})
    return {Partition(k, ROWS): v for k, v in results.items()}


def _is_lattice(labels, nrows):
    counts: Dict[int, int] = {}
    for r in range(nrows):
        row = sorted((c, v) for (rr, c), v in labels.items() if rr == r)
        for _, v in reversed(row):
            counts[v] = counts.get(v, 0) + 1
            if v > 1 and counts[v] > counts.get(v - 1, 0):
                return False
    return True


def tensor_multiplicity(target: Partition, factors: List[Partition], max_rows: int | None = None) -> int:
    """Multiplicity of ``target`` in the tensor product of the given Schur functors."""
    require(target, ROWS)
    if max_rows is None:
        max_rows = len(target)
    current = {Partition((), ROWS): 1}
    for f in factors:
        nxt: Dict[Partition, int] = {}
        for shape, mult in current.items():
            for s, c in lr_product(shape, f, max_rows).items():
                if any(a > b for a, b in zip(s.parts, target.parts + (0,) * len(s.parts))):
                    continue
                nxt[s] = nxt.get(s, 0) + mult * c
        current = nxt
    return current.get(target, 0)


@dataclass
class IsotypicTable:
    """Multiplicities of irreducibles in a decomposed representation."""

    entries: Dict[Partition, int] = field(default_factory=dict)
    ambient: str = ""

    def __post_init__(self):
        clean = {}
        tags = set()
        for p, m in self.entries.items():
            if m < 0:
                raise ValueError(f"negative multiplicity {m} for {p}")
            if m:
                clean[p] = clean.get(p, 0) + int(m)
                tags.add(p.convention)
        if len(tags) > 1:
            raise ConventionError("mixed conventions in one table")
        self.entries = clean

    @property
    def convention(self):
        for p in self.entries:
            return p.convention
        return ROWS

    def multiplicity(self, p: Partition) -> int:
        return self.entries.get(p.in_convention(self.convention), 0)

    def in_convention(self, convention: str) -> "IsotypicTable":
        return IsotypicTable({p.in_convention(convention): m for p, m in self.entries.items()}, self.ambient)

    def transposed(self, ambient: str | None = None) -> "IsotypicTable":
        return IsotypicTable(
            {transpose(p): m for p, m in self.entries.items()},
            self.ambient if ambient is None else ambient,
        )

    def dimension(self, d: int) -> int:
        return sum(m * gl_dimension(p, d) for p, m in self.entries.items())

    def items(self):
        return sorted(self.entries.items(), key=lambda pm: pm[0].parts)

    def same_as(self, other: "IsotypicTable") -> bool:
        return self.in_convention(ROWS).entries == other.in_convention(ROWS).entries

    def to_json_list(self) -> list:
        return [
            {"diagram": list(p.parts), "convention": p.convention, "multiplicity": m}
            for p, m in self.items()
        ]

    def to_json(self) -> str:
        return json.dumps(self.to_json_list(), separators=(",", ":"))

    @classmethod
    def from_json_list(cls, data, ambient: str = "") -> "IsotypicTable":
        return cls({Partition(tuple(e["diagram"]), e["convention"]): e["multiplicity"] for e in data}, ambient)

    def __len__(self):
        return len(self.entries)
