"""Rational-valued 1-, 2- and 3-cochains on a finite abelian group.

All cochains are dense tables indexed by the canonical element order of the
group.  Values are :class:`fractions.Fraction`; every cochain here is
nowhere-zero and normalized (equal to 1 whenever an argument is the
identity), which is checked at construction.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Sequence

from .group_core import AbelianGroup, GroupElement, parse_group

Scalar = Fraction
ONE = Fraction(1)


class CochainError(ValueError):
    """Malformed cochain data (zero entry, bad normalization, wrong shape)."""


def to_scalar(value: Any) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to an exact rational."""
    if isinstance(value, bool):
        raise CochainError(f"not a scalar: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise CochainError(f"cannot parse scalar {value!r}") from None
    if isinstance(value, float):
        if not value.is_integer():
            raise CochainError(f"floats are not exact scalars: {value!r}; use 'p/q'")
        return Fraction(int(value))
    raise CochainError(f"not a scalar: {value!r}")


def scalar_to_json(value: Fraction) -> int | str:
    if value.denominator == 1:
        return value.numerator
    return f"{value.numerator}/{value.denominator}"


class Cochain1:
    """A nowhere-zero function s: G -> k with s(e) = 1."""

    arity = 1

    def __init__(self, group: AbelianGroup, values: Sequence):
        self.group = group
        vals = tuple(to_scalar(v) for v in values)
        if len(vals) != group.order:
            raise CochainError(f"expected {group.order} values, got {len(vals)}")
        if any(v == 0 for v in vals):
            raise CochainError("1-cochain must be nowhere zero")
        if vals[0] != 1:
            raise CochainError(f"1-cochain must be 1 at the identity, got {vals[0]}")
        self.values = vals

    @classmethod
    def from_function(cls, group: AbelianGroup, fn: Callable[[GroupElement], Any]) -> "Cochain1":
        return cls(group, [fn(x) for x in group.elements()])

    def __call__(self, x: GroupElement) -> Fraction:
        return self.values[self.group.index(x)]

    def is_sign(self) -> bool:
        return all(v * v == 1 for v in self.values)

    def __eq__(self, other) -> bool:
        return isinstance(other, Cochain1) and self.group == other.group and self.values == other.values

    def __hash__(self):
        return hash((self.group, self.values))

    def __repr__(self) -> str:
        return f"Cochain1({list(self.group.orders)}, {[scalar_to_json(v) for v in self.values]})"


class Cochain2:
    """A nowhere-zero F: G x G -> k, equal to 1 when either argument is e.

    ``table[i][j]`` is F(x_i, x_j) in canonical order.
    """

    arity = 2

    def __init__(self, group: AbelianGroup, table: Sequence[Sequence]):
        n = group.order
        if len(table) != n or any(len(row) != n for row in table):
            raise CochainError(f"2-cochain on a group of order {n} needs a {n}x{n} table")
        rows = tuple(tuple(to_scalar(v) for v in row) for row in table)
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                if v == 0:
                    raise CochainError(f"zero entry at ({i},{j}); cochain must be invertible")
        if any(v != 1 for v in rows[0]) or any(row[0] != 1 for row in rows):
            raise CochainError("first row and column must be all 1 (F(e,y) = F(x,e) = 1)")
        self.group = group
        self.table = rows

    @classmethod
    def from_function(cls, group: AbelianGroup, fn: Callable[[GroupElement, GroupElement], Any]) -> "Cochain2":
        elems = group.elements()
        return cls(group, [[fn(x, y) for y in elems] for x in elems])

    @classmethod
    def trivial(cls, group: AbelianGroup) -> "Cochain2":
        n = group.order
        return cls(group, [[1] * n for _ in range(n)])

    def __call__(self, x: GroupElement, y: GroupElement) -> Fraction:
        g = self.group
        return self.table[g.index(x)][g.index(y)]

    def transpose(self) -> "Cochain2":
        return Cochain2(self.group, list(zip(*self.table)))

    def is_symmetric(self) -> bool:
        return self.table == tuple(zip(*self.table))

    def is_constant_one(self) -> bool:
        return all(v == 1 for row in self.table for v in row)

    def __eq__(self, other) -> bool:
        return isinstance(other, Cochain2) and self.group == other.group and self.table == other.table

    def __hash__(self):
        return hash((self.group, self.table))

    def __repr__(self) -> str:
        return f"Cochain2(group={list(self.group.orders)})"


class Cochain3:
    """A nowhere-zero normalized phi: G x G x G -> k; ``table[i][j][k]``."""

    arity = 3

    def __init__(self, group: AbelianGroup, table: Sequence[Sequence[Sequence]]):
        n = group.order
        if len(table) != n or any(len(t) != n or any(len(r) != n for r in t) for t in table):
            raise CochainError(f"3-cochain on a group of order {n} needs an {n}x{n}x{n} table")
        cube = tuple(tuple(tuple(to_scalar(v) for v in r) for r in t) for t in table)
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    v = cube[i][j][k]
                    if v == 0:
                        raise CochainError(f"zero entry at ({i},{j},{k})")
                    if (i == 0 or j == 0 or k == 0) and v != 1:
                        raise CochainError(f"3-cochain not normalized at ({i},{j},{k}): {v}")
        self.group = group
        self.table = cube

    def __call__(self, x, y, z) -> Fraction:
        g = self.group
        return self.table[g.index(x)][g.index(y)][g.index(z)]

    def is_constant_one(self) -> bool:
        return all(v == 1 for t in self.table for r in t for v in r)

    def __eq__(self, other) -> bool:
        return isinstance(other, Cochain3) and self.group == other.group and self.table == other.table

    def __hash__(self):
        return hash((self.group, self.table))

    def __repr__(self) -> str:
        return f"Cochain3(group={list(self.group.orders)})"


def coboundary3(F: Cochain2) -> Cochain3:
    """phi(x,y,z) = F(x,y) F(xy,z) / (F(y,z) F(x,yz))."""
    G = F.group
    n = G.order
    m = G.mul_table()
    T = F.table
    cube = [
        [[T[i][j] * T[m[i][j]][k] / (T[j][k] * T[i][m[j][k]]) for k in range(n)] for j in range(n)]
        for i in range(n)
    ]
    return Cochain3(G, cube)


def braiding(F: Cochain2) -> Cochain2:
    """R(x,y) = F(x,y) / F(y,x)."""
    T = F.table
    n = F.group.order
    return Cochain2(F.group, [[T[i][j] / T[j][i] for j in range(n)] for i in range(n)])


def coboundary2(s: Cochain1) -> Cochain2:
    """(x, y) -> s(x) s(y) / s(xy)."""
    G = s.group
    m = G.mul_table()
    v = s.values
    n = G.order
    return Cochain2(G, [[v[i] * v[j] / v[m[i][j]] for j in range(n)] for i in range(n)])


def cocycle3_violation(phi: Cochain3) -> tuple | None:
    """First quadruple breaking the 3-cocycle identity, or None.

    Identity checked: phi(y,z,w) phi(x,yz,w) phi(x,y,z) = phi(x,y,zw) phi(xy,z,w).
    """
    G = phi.group
    n = G.order
    m = G.mul_table()
    P = phi.table
    for x in range(n):
        for y in range(n):
            xy = m[x][y]
            for z in range(n):
                yz = m[y][z]
                pxyz = P[x][y][z]
                for w in range(n):
                    lhs = P[y][z][w] * P[x][yz][w] * pxyz
                    rhs = P[x][y][m[z][w]] * P[xy][z][w]
                    if lhs != rhs:
                        e = G.elements()
                        return (e[x], e[y], e[z], e[w])
    return None


def is_cocycle3(phi: Cochain3) -> bool:
    return cocycle3_violation(phi) is None


def cochain2_from_matrix(group: AbelianGroup, matrix: Sequence[Sequence]) -> Cochain2:
    """Read F from a matrix with ``M[i][j] = F(x_i, x_j)`` in canonical order."""
    return Cochain2(group, matrix)


def cochain_to_json(F: Cochain2, name: str | None = None) -> dict:
    doc: dict = {"group": list(F.group.orders)}
    if name is not None:
        doc["name"] = name
    doc["F"] = [[scalar_to_json(v) for v in row] for row in F.table]
    return doc


def cochain_from_json(doc: dict) -> Cochain2:
    if not isinstance(doc, dict) or "group" not in doc or "F" not in doc:
        raise CochainError('cochain JSON must be an object with "group" and "F" keys')
    group = parse_group(doc["group"])
    if not isinstance(doc["F"], list):
        raise CochainError('"F" must be a list of rows')
    return cochain2_from_matrix(group, doc["F"])


def dump_cochain(F: Cochain2, path: str | Path, name: str | None = None) -> None:
    Path(path).write_text(json.dumps(cochain_to_json(F, name)) + "\n")


def load_cochain(path: str | Path) -> tuple[Cochain2, str | None]:
    """Load a cochain file; returns the cochain and its optional stored name."""
    doc = json.loads(Path(path).read_text())
    return cochain_from_json(doc), doc.get("name") if isinstance(doc, dict) else None
