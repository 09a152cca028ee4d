"""Exact-arithmetic twisted group algebras k_F G: octonions, Clifford and Cayley algebras."""

from .cayley_dickson import DoublingData, double, iterate_doubling, phi_bar_closed_form
from .cochains import (
    Cochain1,
    Cochain2,
    Cochain3,
    CochainError,
    braiding,
    coboundary2,
    coboundary3,
    cochain2_from_matrix,
    is_cocycle3,
)
from .group_core import AbelianGroup
from .quasialgebra import AlgebraElement, DiagonalInvolution, QuasiAlgebra
from .representations import GradedModule, check_representation, direct_sum, left_regular
from .standard_algebras import (
    all_distinct_cochain,
    cayley,
    clifford,
    complexes,
    extended_hadamard_algebra,
    hadamard_algebra,
    octonions,
    quaternions,
    trivial_algebra,
)

__all__ = [
    "AbelianGroup", "AlgebraElement", "Cochain1", "Cochain2", "Cochain3", "CochainError",
    "DiagonalInvolution", "DoublingData", "GradedModule", "QuasiAlgebra",
    "all_distinct_cochain", "braiding", "cayley", "check_representation", "clifford",
    "coboundary2", "coboundary3", "cochain2_from_matrix", "complexes", "direct_sum", "double",
    "extended_hadamard_algebra", "hadamard_algebra", "is_cocycle3", "iterate_doubling",
    "left_regular", "octonions", "phi_bar_closed_form", "quaternions", "trivial_algebra",
]
__version__ = "0.1.0"
