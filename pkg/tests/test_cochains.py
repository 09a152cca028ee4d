import itertools
import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from quasialg.cochains import (
    Cochain1,
    Cochain2,
    Cochain3,
    CochainError,
    braiding,
    coboundary2,
    coboundary3,
    cochain2_from_matrix,
    cochain_from_json,
    cochain_to_json,
    cocycle3_violation,
    dump_cochain,
    is_cocycle3,
    load_cochain,
    to_scalar,
)
from quasialg.group_core import AbelianGroup
from quasialg import standard_algebras as std


def det3(x, y, z):
    """Determinant of the 3x3 matrix with columns x, y, z (integers)."""
    return (x[0] * (y[1] * z[2] - y[2] * z[1])
            - x[1] * (y[0] * z[2] - y[2] * z[0])
            + x[2] * (y[0] * z[1] - y[1] * z[0]))


def random_cochain(G, rng, rational=False):
    n = G.order
    rows = [[1] * n]
    for _ in range(n - 1):
        row = [1]
        for _ in range(n - 1):
            if rational:
                row.append(Fraction(rng.choice([-1, 1]) * rng.randint(1, 5), rng.randint(1, 5)))
            else:
                row.append(rng.choice([-1, 1]))
        rows.append(row)
    return Cochain2(G, rows)


def test_scalar_parsing():
    assert to_scalar("3/6") == Fraction(1, 2)
    assert to_scalar(-1) == -1
    assert to_scalar(Fraction(2, 4)).denominator == 2
    with pytest.raises(CochainError):
        to_scalar("abc")
    with pytest.raises(CochainError):
        to_scalar(0.5)


def test_coboundary3_trivial():
    G = AbelianGroup((2, 3))
    assert coboundary3(Cochain2.trivial(G)).is_constant_one()


def test_coboundary3_quaternion_trivial():
    assert coboundary3(std.quaternions().F).is_constant_one()


def test_octonion_phi_is_determinant_sign():
    F = std.octonions().F
    phi = coboundary3(F)
    G = F.group
    for x, y, z in itertools.product(G.elements(), repeat=3):
        assert phi(x, y, z) == (-1) ** (det3(x, y, z) % 2)
    assert phi((1, 0, 0), (0, 1, 0), (0, 0, 1)) == -1


def test_braiding_examples():
    G = AbelianGroup((3,))
    F = Cochain2(G, [[1, 1, 1], [1, 2, 5], [1, 5, 7]])
    assert braiding(F).is_constant_one()

    R = braiding(std.octonions().F)
    e = (0, 0, 0)
    for x, y in itertools.product(R.group.elements(), repeat=2):
        assert R(x, y) == (1 if e in (x, y) or x == y else -1)

    R = braiding(std.clifford(3).F)
    for x, y in itertools.product(R.group.elements(), repeat=2):
        expo = sum(x[i] * y[j] for i in range(3) for j in range(3) if i != j)
        assert R(x, y) == (-1) ** expo


def test_coboundary2_examples():
    G = AbelianGroup((2,))
    assert coboundary2(Cochain1(G, [1, 1])).is_constant_one()
    # s = (1, -1) on Z2: s(x)s(y)/s(x+y) over the four pairs, evaluated by hand
    assert coboundary2(Cochain1(G, [1, -1])).table == ((1, 1), (1, 1))

    G = AbelianGroup((2, 2))
    t = coboundary2(Cochain1(G, [1, -1, -1, -1]))
    e = (0, 0)
    for x, y in itertools.product(G.elements(), repeat=2):
        assert t(x, y) == (-1 if (x != e and y != e and x != y) else 1)


def test_is_cocycle3_examples():
    G = AbelianGroup.elementary(3)
    assert is_cocycle3(Cochain3(G, [[[1] * 8] * 8] * 8))
    det_phi = Cochain3(G, [[[(-1) ** (det3(x, y, z) % 2) for z in G.elements()]
                            for y in G.elements()] for x in G.elements()])
    assert is_cocycle3(det_phi)
    # flipping one interior value breaks the identity
    bad = [[list(r) for r in t] for t in det_phi.table]
    bad[1][2][3] = -bad[1][2][3]
    assert cocycle3_violation(Cochain3(G, bad)) is not None


def test_cochain2_from_matrix():
    G = AbelianGroup((2,))
    assert cochain2_from_matrix(G, [[1, 1], [1, -1]]) == std.complexes().F
    assert cochain2_from_matrix(G, [[1, 1], [1, 1]]).is_constant_one()
    with pytest.raises(CochainError):
        cochain2_from_matrix(G, [[1, 1], [1, 0]])
    with pytest.raises(CochainError):
        cochain2_from_matrix(G, [[1, -1], [1, 1]])
    with pytest.raises(CochainError):
        cochain2_from_matrix(G, [[1, 1, 1], [1, 1, 1], [1, 1, 1]])


def test_cochain_normalization_errors():
    G = AbelianGroup((2,))
    with pytest.raises(CochainError):
        Cochain1(G, [2, 1])
    with pytest.raises(CochainError):
        Cochain1(G, [1, 0])
    with pytest.raises(CochainError):
        Cochain3(G, [[[1, 1], [1, 1]], [[1, -1], [1, 1]]])  # phi(x, e, x) != 1
    assert Cochain3(G, [[[1, 1], [1, 1]], [[1, 1], [1, -1]]])((1,), (1,), (1,)) == -1


@pytest.mark.parametrize("orders", [(2,), (3,), (2, 2), (4,), (2, 3), (2, 2, 2), (2, 4), (2, 2, 2, 2)])
def test_random_cochain_coboundary_invariants(orders):
    rng = random.Random(hash(orders) & 0xffff)
    G = AbelianGroup(orders)
    for rational in (False, True):
        F = random_cochain(G, rng, rational)
        phi = coboundary3(F)  # constructor asserts normalization
        assert is_cocycle3(phi)
        R = braiding(F)
        n = G.order
        assert all(R.table[i][j] * R.table[j][i] == 1 for i in range(n) for j in range(n))


@pytest.mark.parametrize("orders", [(2,), (2, 2), (4,), (2, 4), (2, 2, 2)])
def test_coboundary2_twist_leaves_phi_unchanged(orders):
    rng = random.Random(7)
    G = AbelianGroup(orders)
    n = G.order
    for _ in range(3):
        F = random_cochain(G, rng)
        s = Cochain1(G, [1] + [rng.choice([-1, 1]) for _ in range(n - 1)])
        t = coboundary2(s)
        twisted = Cochain2(G, [[F.table[i][j] * t.table[i][j] for j in range(n)] for i in range(n)])
        assert coboundary3(twisted) == coboundary3(F)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.sampled_from([-1, 1, 2, Fraction(1, 3), -3]), min_size=9, max_size=9))
def test_cocycle_property_z4(values):
    G = AbelianGroup((4,))
    rows = [[1] * 4] + [[1] + values[3 * i:3 * i + 3] for i in range(3)]
    assert is_cocycle3(coboundary3(Cochain2(G, rows)))


def test_json_round_trip(tmp_path):
    G = AbelianGroup((3,))
    F = Cochain2(G, [[1, 1, 1], [1, Fraction(-2, 3), 4], [1, 5, "7/2"]])
    doc = cochain_to_json(F, "demo")
    assert doc["F"][1][1] == "-2/3"
    assert cochain_from_json(json.loads(json.dumps(doc))) == F
    path = tmp_path / "f.json"
    dump_cochain(F, path, "demo")
    loaded, name = load_cochain(path)
    assert loaded == F and name == "demo"
    with pytest.raises(CochainError):
        cochain_from_json({"group": [2]})
