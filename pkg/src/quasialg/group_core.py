"""Finite abelian groups presented as products of cyclic groups.

Elements are plain tuples of residues.  The enumeration order returned by
:meth:`AbelianGroup.elements` (lexicographic, identity first) is the
canonical index order used by every table in the package.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import prod
from typing import Iterable, Sequence

GroupElement = tuple


@dataclass(frozen=True)
class AbelianGroup:
    """Z_{n1} x ... x Z_{nk}; ``orders=()`` is the trivial group."""

    orders: tuple[int, ...] = ()
    _elements: tuple[GroupElement, ...] = field(init=False, repr=False, compare=False)
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        orders = tuple(int(n) for n in self.orders)
        for n in orders:
            if n < 2:
                raise ValueError(f"cyclic factor orders must be >= 2, got {n}")
        object.__setattr__(self, "orders", orders)
        elems = tuple(itertools.product(*(range(n) for n in orders)))
        object.__setattr__(self, "_elements", elems)
        object.__setattr__(self, "_index", {x: i for i, x in enumerate(elems)})

    @classmethod
    def elementary(cls, n: int) -> "AbelianGroup":
        """(Z_2)^n."""
        return cls((2,) * n)

    @property
    def rank(self) -> int:
        return len(self.orders)

    @property
    def order(self) -> int:
        return prod(self.orders)

    def __len__(self) -> int:
        return self.order

    def __contains__(self, x) -> bool:
        return x in self._index

    def check(self, x: Sequence[int]) -> GroupElement:
        x = tuple(x)
        if len(x) != len(self.orders):
            raise ValueError(f"element {x} has {len(x)} coordinates, group {list(self.orders)} has {len(self.orders)}")
        if x not in self._index:
            raise ValueError(f"element {x} not reduced modulo {list(self.orders)}")
        return x

    def op(self, x: GroupElement, y: GroupElement) -> GroupElement:
        self.check(x)
        self.check(y)
        return tuple((a + b) % n for a, b, n in zip(x, y, self.orders))

    def identity(self) -> GroupElement:
        return (0,) * len(self.orders)

    def inverse(self, x: GroupElement) -> GroupElement:
        self.check(x)
        return tuple(-a % n for a, n in zip(x, self.orders))

    def elements(self) -> tuple[GroupElement, ...]:
        return self._elements

    def index(self, x: GroupElement) -> int:
        try:
            return self._index[tuple(x)]
        except KeyError:
            raise ValueError(f"{x} is not an element of {list(self.orders)}") from None

    def element(self, i: int) -> GroupElement:
        return self._elements[i]

    def is_elementary_2(self) -> bool:
        """True iff the group is (Z_2)^n for some n >= 0."""
        return all(n == 2 for n in self.orders)

    def product(self, other: "AbelianGroup") -> "AbelianGroup":
        return AbelianGroup(self.orders + other.orders)

    def mul_table(self) -> list[list[int]]:
        """Index table: ``t[i][j]`` is the index of x_i x_j."""
        elems, idx, orders = self._elements, self._index, self.orders
        return [
            [idx[tuple((a + b) % n for a, b, n in zip(x, y, orders))] for y in elems]
            for x in elems
        ]

    def __str__(self) -> str:
        if not self.orders:
            return "{e}"
        return " x ".join(f"Z{n}" for n in self.orders)


def parse_group(spec: Iterable[int]) -> AbelianGroup:
    """Build a group from a JSON-style list of factor orders, e.g. ``[2, 2, 2]``."""
    if isinstance(spec, (str, bytes)) or not isinstance(spec, Iterable):
        raise ValueError(f"group spec must be a list of orders, got {spec!r}")
    orders = []
    for n in spec:
        if isinstance(n, bool) or not isinstance(n, int):
            raise ValueError(f"group orders must be integers, got {n!r}")
        orders.append(n)
    return AbelianGroup(tuple(orders))


def element_label(x: GroupElement) -> str:
    """``(1,1,0) -> 'e110'``; the identity of the trivial group is ``'e'``."""
    if all(0 <= a < 10 for a in x):
        return "e" + "".join(str(a) for a in x)
    return "e" + ".".join(str(a) for a in x)


def element_key(x: GroupElement) -> str:
    """String key used for elements in JSON objects: ``(1,0,1) -> '1,0,1'``."""
    return ",".join(str(a) for a in x)


def parse_element_key(key: str) -> GroupElement:
    key = key.strip().strip("()[]")
    if not key:
        return ()
    return tuple(int(part) for part in key.split(","))
