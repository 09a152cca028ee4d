import itertools

import pytest

from quasialg import quasialgebra as qa
from quasialg import standard_algebras as std
from quasialg.cayley_dickson import (
    DoublingData,
    as_pair,
    classical_cayley_dickson_product,
    double,
    iterate_doubling,
    phi_bar_closed_form,
    prop9_alternativity_report,
    prop9_associativity_report,
)
from quasialg.cochains import Cochain1, coboundary3
from quasialg.group_core import AbelianGroup


def test_double_trivial_is_complexes():
    base = std.trivial_algebra()
    D, s_bar = double(DoublingData(base, Cochain1(base.group, [1]), -1))
    assert D.F == std.complexes().F
    assert s_bar.values == (1, -1)


def test_double_complexes(C):
    D, _ = double(DoublingData(C, Cochain1(C.group, [1, -1]), -1))
    assert D.dim == 4
    assert qa.is_associative(D) and not qa.is_commutative(D)
    assert qa.is_altercommutative(D) and qa.euclidean_composition_check(D)


def test_double_quaternions(H):
    D, _ = double(DoublingData.natural(H))
    assert qa.is_alternative(D) and not qa.is_associative(D)
    assert qa.composition_check(D, qa.natural_s(D))


def test_doubling_data_validation(H, C):
    with pytest.raises(ValueError):
        DoublingData(H, qa.natural_s(H), 0)
    with pytest.raises(ValueError):
        DoublingData(H, qa.natural_s(C), -1)


@pytest.mark.parametrize("alpha", [-1, 1, "3/2", -2])
def test_s_bar_and_grading(H, alpha):
    s = qa.natural_s(H)
    D, s_bar = double(DoublingData(H, s, alpha))
    assert D.group.orders == H.group.orders + (2,)
    for x in H.elements():
        assert s_bar(x + (0,)) == s(x)
        assert s_bar(x + (1,)) == -1
        for y in H.elements():
            # embedded copy of the base is a subalgebra with the same cochain
            assert D.F(x + (0,), y + (0,)) == H.F(x, y)
    assert s_bar.values[0] == 1


def _natural_doublings():
    out = []
    for A in (std.trivial_algebra(), std.complexes(), std.quaternions(), std.octonions(),
              std.trivial_algebra(AbelianGroup((2, 2))), std.clifford(2), std.clifford(3),
              std.clifford(2, "positive")):
        s = qa.natural_s(A)
        if qa.is_diagonal_involution(A, s):
            for alpha in (-1, 2):
                out.append(DoublingData(A, s, alpha))
    return out


@pytest.mark.parametrize("d", _natural_doublings(), ids=lambda d: f"{d.base.name}-a{d.alpha}")
def test_phi_bar_closed_form_matches_coboundary(d):
    D, _ = double(d)
    assert phi_bar_closed_form(d) == coboundary3(D.F)


def test_phi_bar_all_involutions_of_small_bases():
    for A in (std.trivial_algebra(AbelianGroup((2, 2))), std.clifford(3), std.clifford(2, "positive")):
        for inv in qa.find_diagonal_involutions(A):
            d = DoublingData(A, inv.s, -1)
            assert phi_bar_closed_form(d) == double(d)[0].phi


def test_phi_bar_case_and_normalization(H):
    d = DoublingData.natural(H)
    pb = phi_bar_closed_form(d)
    R = H.R
    for x, y, z in itertools.product(H.elements(), repeat=3):
        xy = H.group.op(x, y)
        assert pb(x + (0,), y + (1,), z + (0,)) == R(y, z) * R(xy, z)
    assert pb((0, 0, 0), (0, 0, 0), (0, 0, 0)) == 1


def test_phi_bar_precondition(cl3):
    with pytest.raises(ValueError):
        phi_bar_closed_form(DoublingData(cl3, Cochain1(cl3.group, [1, -1, 1, 1, 1, 1, 1, 1]), -1))


@pytest.mark.parametrize("base", [std.complexes(), std.quaternions(), std.octonions(),
                                  std.trivial_algebra(AbelianGroup((2, 2)))], ids=lambda A: A.name)
def test_associativity_report(base):
    rep = prop9_associativity_report(DoublingData.natural(base))
    assert rep["agree"]


def test_associativity_report_values():
    assert prop9_associativity_report(DoublingData.natural(std.complexes()))["lhs"] is True
    rep = prop9_associativity_report(DoublingData.natural(std.quaternions()))
    assert rep["lhs"] is False and rep["rhs"] is False


def test_alternativity_report():
    q = prop9_alternativity_report(DoublingData.natural(std.quaternions()))
    assert q["lhs"] is True and q["iii"]["agree"] and q["ii"]["agree"]
    o = prop9_alternativity_report(DoublingData.natural(std.octonions()))
    assert o["lhs"] is False and o["iii"] == {"applicable": True, "lhs": False, "rhs": False, "agree": True}
    c = prop9_alternativity_report(DoublingData(std.complexes(), Cochain1(std.complexes().group, [1, -1]), -1))
    assert c["iii"]["agree"] and c["lhs"] is True
    assert c["ii"]["applicable"] is False  # complexes are commutative and associative: nontrivial centre


def test_iterate_doubling():
    start = std.trivial_algebra()
    assert iterate_doubling(start, 0) is start
    O3 = iterate_doubling(start, 3)
    assert qa.is_alternative(O3) and not qa.is_associative(O3)
    assert qa.is_altercommutative(O3) and qa.euclidean_composition_check(O3)
    S = iterate_doubling(start, 4)
    assert qa.alternativity_violation(S) is not None
    assert qa.euclidean_composition_violation(S) is not None
    assert iterate_doubling(start, 4, rule="chain").F == S.F
    with pytest.raises(ValueError):
        iterate_doubling(start, -1)
    with pytest.raises(ValueError):
        iterate_doubling(start, 1, rule="other")


@pytest.mark.parametrize("base", [std.complexes(), std.quaternions()], ids=lambda A: A.name)
def test_matches_classical_cayley_dickson(base):
    d = DoublingData.natural(base)
    assert qa.is_strong_involution(base, d.s)
    D, _ = double(d)
    for x, y in itertools.product(D.elements(), repeat=2):
        p, q = D.basis(x), D.basis(y)
        assert as_pair(d, p * q) == classical_cayley_dickson_product(base, d.s, d.alpha, as_pair(d, p), as_pair(d, q))
