"""G-graded modules over k_F G.

A module is a graded vector space V = sum_g V_g together with, for every
basis element x of the algebra and every grade g, a matrix
V_g -> V_{xg}.  The representation law checked here is
``(x.y) |> v = phi(x, y, |v|) x |> (y |> v)`` on graded basis vectors.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Mapping, Sequence

from .cochains import scalar_to_json, to_scalar
from .group_core import GroupElement, element_key, parse_element_key
from .quasialgebra import QuasiAlgebra

Matrix = tuple[tuple[Fraction, ...], ...]


def _matrix(rows: Sequence[Sequence], nrows: int, ncols: int) -> Matrix:
    if nrows == 0 or ncols == 0:
        # empty blocks may be written as [] or as rows of []
        if any(len(r) for r in rows) or (rows and len(rows) != nrows):
            raise ValueError(f"expected an empty {nrows}x{ncols} block")
        return tuple(() for _ in range(nrows))
    if len(rows) != nrows or any(len(r) != ncols for r in rows):
        raise ValueError(f"expected a {nrows}x{ncols} block")
    return tuple(tuple(to_scalar(v) for v in r) for r in rows)


def _apply(M: Matrix, v: Sequence) -> list:
    return [sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in M]


class GradedModule:
    """A graded module with an explicit action table.

    ``grades`` maps group elements to dimensions (missing = 0).  ``action``
    maps ``(x, g)`` to a ``dim(xg) x dim(g)`` matrix; blocks between
    zero-dimensional grades may be omitted.
    """

    def __init__(self, algebra: QuasiAlgebra,
                 grades: Mapping[GroupElement, int],
                 action: Mapping[tuple[GroupElement, GroupElement], Sequence[Sequence]]):
        G = algebra.group
        n = G.order
        dims = [0] * n
        for g, d in grades.items():
            if d < 0:
                raise ValueError(f"negative dimension for grade {g}")
            dims[G.index(g)] = int(d)
        self.algebra = algebra
        self.dims = tuple(dims)
        m = algebra._mul
        table = [[None] * n for _ in range(n)]
        given = {(G.index(x), G.index(g)): rows for (x, g), rows in action.items()}
        for x in range(n):
            for g in range(n):
                rows_in, rows_out = dims[g], dims[m[x][g]]
                rows = given.pop((x, g), None)
                if rows is None:
                    if rows_in and rows_out:
                        raise ValueError(f"missing action block for x={G.element(x)}, grade {G.element(g)}")
                    rows = [[] for _ in range(rows_out)]
                table[x][g] = _matrix(rows, rows_out, rows_in)
        if given:
            raise ValueError("action blocks given for unknown index pairs")
        for g in range(n):
            d = dims[g]
            ident = tuple(tuple(Fraction(int(r == c)) for c in range(d)) for r in range(d))
            if d and table[0][g] != ident:
                raise ValueError(f"identity does not act as the identity on grade {G.element(g)}")
        self.action = tuple(tuple(r) for r in table)

    @property
    def dimension(self) -> int:
        return sum(self.dims)

    def grades(self) -> dict[GroupElement, int]:
        el = self.algebra.group.element
        return {el(i): d for i, d in enumerate(self.dims) if d}

    def block(self, x: GroupElement, g: GroupElement) -> Matrix:
        G = self.algebra.group
        return self.action[G.index(x)][G.index(g)]

    def act(self, x: GroupElement, g: GroupElement, v: Sequence) -> list:
        """x |> v for v a coordinate vector in grade g; result lies in grade xg."""
        return _apply(self.block(x, g), [to_scalar(c) for c in v])

    def __repr__(self) -> str:
        return f"GradedModule({self.algebra.name}, dims={list(self.dims)})"


def representation_violation(M: GradedModule):
    """First (x, y, (g, i)) breaking the twisted action law, or None."""
    A = M.algebra
    n = A.dim
    m, F, P = A._mul, A.F.table, A.phi.table
    act, dims = M.action, M.dims
    el = A.group.element
    for g in range(n):
        for i in range(dims[g]):
            for x, y in itertools.product(range(n), repeat=2):
                xy, yg = m[x][y], m[y][g]
                # (x.y) |> v = F(x,y) (xy) |> v
                left = [F[x][y] * row[i] for row in act[xy][g]]
                inner = [row[i] for row in act[y][g]]
                right = [P[x][y][g] * c for c in _apply(act[x][yg], inner)]
                if left != right:
                    return (el(x), el(y), (el(g), i))
    return None


def check_representation(M: GradedModule) -> bool:
    return representation_violation(M) is None


def left_regular(A: QuasiAlgebra) -> GradedModule:
    """V = A graded by G, x |> e_y = F(x, y) e_{xy}."""
    els = A.elements()
    action = {(x, y): [[A.F(x, y)]] for x in els for y in els}
    return GradedModule(A, {x: 1 for x in els}, action)


def zero_module(A: QuasiAlgebra) -> GradedModule:
    return GradedModule(A, {}, {})


def direct_sum(M1: GradedModule, M2: GradedModule) -> GradedModule:
    if M1.algebra is not M2.algebra:
        raise ValueError("direct sum of modules over different algebras")
    A = M1.algebra
    G = A.group
    n = A.dim
    m = A._mul
    grades = {G.element(g): M1.dims[g] + M2.dims[g] for g in range(n)}
    action = {}
    for x in range(n):
        for g in range(n):
            B1, B2 = M1.action[x][g], M2.action[x][g]
            c1, c2 = M1.dims[g], M2.dims[g]
            rows = [list(r) + [0] * c2 for r in B1] + [[0] * c1 + list(r) for r in B2]
            if M1.dims[m[x][g]] + M2.dims[m[x][g]] and c1 + c2:
                action[(G.element(x), G.element(g))] = rows
    return GradedModule(A, grades, action)


def module_to_json(M: GradedModule) -> dict:
    A = M.algebra
    G = A.group
    action: dict = {}
    for x in range(A.dim):
        for g in range(A.dim):
            block = M.action[x][g]
            if M.dims[g] and block:
                action.setdefault(element_key(G.element(x)), {})[element_key(G.element(g))] = [
                    [scalar_to_json(v) for v in row] for row in block
                ]
    return {
        "grades": {element_key(x): d for x, d in M.grades().items()},
        "action": action,
    }


def module_from_json(doc: Mapping, algebra: QuasiAlgebra) -> GradedModule:
    if "grades" not in doc:
        raise ValueError('module JSON needs a "grades" object')
    G = algebra.group
    grades = {G.check(parse_element_key(k)): int(d) for k, d in doc["grades"].items()}
    action = {}
    for xk, blocks in doc.get("action", {}).items():
        x = G.check(parse_element_key(xk))
        for gk, rows in blocks.items():
            action[(x, G.check(parse_element_key(gk)))] = rows
    return GradedModule(algebra, grades, action)
