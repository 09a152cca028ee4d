"""Named k_F G constructions.

Sign cochains are generated from polynomial exponents over Z_2:
F(x, y) = (-1)^f(x, y).  Higher Cayley algebras come from iterated doubling
(see :mod:`quasialg.cayley_dickson`).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .cochains import Cochain2, CochainError, cochain2_from_matrix, to_scalar
from .group_core import AbelianGroup, GroupElement
from .quasialgebra import QuasiAlgebra

MAX_CLIFFORD_RANK = 5


def f_complex(x: GroupElement, y: GroupElement) -> int:
    return x[0] * y[0]


def f_quaternion(x: GroupElement, y: GroupElement) -> int:
    return x[0] * y[0] + (x[0] + x[1]) * y[1]


def f_clifford_negative(x: GroupElement, y: GroupElement) -> int:
    n = len(x)
    return sum(x[i] * y[j] for i in range(n) for j in range(i, n))


def f_clifford_positive(x: GroupElement, y: GroupElement) -> int:
    n = len(x)
    return sum(x[i] * y[j] for i in range(n) for j in range(i + 1, n))


def f_octonion(x: GroupElement, y: GroupElement, cubic: bool = True) -> int:
    f = f_clifford_negative(x, y)
    if cubic:
        f += y[0] * x[1] * x[2] + x[0] * y[1] * x[2] + x[0] * x[1] * y[2]
    return f


@dataclass(frozen=True)
class SignExponent:
    """An exponent rule f on (Z_2)^n; ``rule`` names it for display."""

    rank: int
    rule: str
    f: Callable[[GroupElement, GroupElement], int]

    @property
    def group(self) -> AbelianGroup:
        return AbelianGroup.elementary(self.rank)

    def cochain(self) -> Cochain2:
        # Cochain2 rejects an f that is not 0 on (e, y) and (x, e)
        return Cochain2.from_function(self.group, lambda x, y: (-1) ** (self.f(x, y) % 2))

    def algebra(self, name: str | None = None) -> QuasiAlgebra:
        return QuasiAlgebra(self.cochain(), name or self.rule)


def sign_algebra(rank: int, f: Callable, name: str) -> QuasiAlgebra:
    return SignExponent(rank, name, f).algebra()


def trivial_algebra(group: AbelianGroup | None = None) -> QuasiAlgebra:
    """The untwisted group algebra kG (F = 1)."""
    group = group if group is not None else AbelianGroup()
    return QuasiAlgebra(Cochain2.trivial(group), f"trivial{list(group.orders)}")


def complexes() -> QuasiAlgebra:
    return sign_algebra(1, f_complex, "complex")


def quaternions() -> QuasiAlgebra:
    return sign_algebra(2, f_quaternion, "quaternion")


def octonions(cubic: bool = True) -> QuasiAlgebra:
    """Octonions on (Z_2)^3.  ``cubic=False`` drops the cubic terms of f."""
    name = "octonion" if cubic else "octonion-quadratic"
    return sign_algebra(3, lambda x, y: f_octonion(x, y, cubic), name)


def clifford(n: int, signature: str = "negative") -> QuasiAlgebra:
    """Clifford algebra on n generators; generators square to -1 (negative) or +1."""
    if not 1 <= n <= MAX_CLIFFORD_RANK:
        raise ValueError(f"clifford rank must be in 1..{MAX_CLIFFORD_RANK}, got {n}")
    if signature in ("negative", "neg", "-"):
        return sign_algebra(n, f_clifford_negative, f"clifford-neg-{n}")
    if signature in ("positive", "pos", "+"):
        return sign_algebra(n, f_clifford_positive, f"clifford-pos-{n}")
    raise ValueError(f"unknown signature {signature!r}")


def all_distinct_cochain(group: AbelianGroup) -> QuasiAlgebra:
    """F(x, y) = -1 iff x = y != e."""
    e = group.identity()
    F = Cochain2.from_function(group, lambda x, y: -1 if (x == y and x != e) else 1)
    return QuasiAlgebra(F, f"all-distinct{list(group.orders)}")


def hadamard_violation(M: Sequence[Sequence]) -> str | None:
    """Reason M is not a Hadamard matrix, or None."""
    n = len(M)
    if any(len(row) != n for row in M):
        return "matrix is not square"
    rows = []
    for row in M:
        vals = [to_scalar(v) for v in row]
        if any(v not in (1, -1) for v in vals):
            return "entries must be +1 or -1"
        rows.append([int(v) for v in vals])
    for i in range(n):
        for j in range(i + 1, n):
            if sum(a * b for a, b in zip(rows[i], rows[j])) != 0:
                return f"rows {i} and {j} are not orthogonal"
    return None


def is_hadamard(M: Sequence[Sequence]) -> bool:
    return hadamard_violation(M) is None


def is_normalized_hadamard(M: Sequence[Sequence]) -> bool:
    return (
        is_hadamard(M)
        and all(to_scalar(v) == 1 for v in M[0])
        and all(to_scalar(row[0]) == 1 for row in M)
    )


def hadamard_algebra(group: AbelianGroup, M: Sequence[Sequence]) -> QuasiAlgebra:
    reason = hadamard_violation(M)
    if reason:
        raise CochainError(f"not a Hadamard matrix: {reason}")
    if not is_normalized_hadamard(M):
        raise CochainError("Hadamard matrix is not normalized (first row and column must be 1)")
    return QuasiAlgebra(cochain2_from_matrix(group, M), f"hadamard{list(group.orders)}")


def extended_hadamard_algebra(group: AbelianGroup, inner: Sequence[Sequence]) -> QuasiAlgebra:
    """F with first row/column 1 and the given Hadamard matrix as the remaining block."""
    m = len(inner)
    if group.order != m + 1:
        raise CochainError(f"group of order {group.order} needs a {group.order - 1}x{group.order - 1} block")
    reason = hadamard_violation(inner)
    if reason:
        raise CochainError(f"inner block is not Hadamard: {reason}")
    table = [[1] * (m + 1)] + [[1] + list(row) for row in inner]
    return QuasiAlgebra(cochain2_from_matrix(group, table), f"extended-hadamard{list(group.orders)}")


def cayley(n: int) -> QuasiAlgebra:
    """2^n-dimensional Cayley algebra by n natural doublings of k."""
    from .cayley_dickson import iterate_doubling

    A = iterate_doubling(trivial_algebra(), n)
    A.name = f"cayley-{n}"
    return A
