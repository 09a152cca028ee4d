import itertools

import pytest
from hypothesis import given, strategies as st

from quasialg.group_core import AbelianGroup, element_key, element_label, parse_element_key, parse_group

SMALL_GROUPS = [(), (2,), (3,), (4,), (2, 2), (2, 3), (2, 4), (2, 2, 2), (4, 4), (2, 2, 2, 2), (3, 5)]


def test_op_examples():
    G = AbelianGroup((2, 2))
    assert G.op((1, 0), (0, 1)) == (1, 1)
    assert AbelianGroup((4,)).op((3,), (2,)) == (1,)
    for x in G.elements():
        assert G.op(G.identity(), x) == x


def test_identity():
    assert AbelianGroup.elementary(3).identity() == (0, 0, 0)
    assert AbelianGroup().identity() == ()
    assert AbelianGroup((2, 4)).identity() == (0, 0)


def test_inverse():
    G = AbelianGroup.elementary(3)
    assert all(G.inverse(x) == x for x in G.elements())
    Z4 = AbelianGroup((4,))
    assert Z4.inverse((1,)) == (3,)
    assert Z4.inverse((0,)) == (0,)


def test_elements_order():
    assert AbelianGroup((2, 2)).elements() == ((0, 0), (0, 1), (1, 0), (1, 1))
    assert AbelianGroup((2,)).elements() == ((0,), (1,))
    assert AbelianGroup().elements() == ((),)


def test_errors():
    G = AbelianGroup((2, 2))
    with pytest.raises(ValueError):
        G.op((1,), (0, 1))
    with pytest.raises(ValueError):
        G.op((2, 0), (0, 1))
    with pytest.raises(ValueError):
        AbelianGroup((1,))
    with pytest.raises(ValueError):
        parse_group("[2]")
    with pytest.raises(ValueError):
        parse_group([2, True])


@pytest.mark.parametrize("orders", SMALL_GROUPS)
def test_group_laws_exhaustive(orders):
    G = AbelianGroup(orders)
    els = G.elements()
    assert len(els) == G.order == len(set(els))
    assert els[0] == G.identity()
    assert list(els) == sorted(els)
    e = G.identity()
    for x, y in itertools.product(els, repeat=2):
        assert G.op(x, y) == G.op(y, x)
    for x in els:
        assert G.op(x, e) == x
        assert G.op(x, G.inverse(x)) == e
    if G.order <= 16:
        for x, y, z in itertools.product(els, repeat=3):
            assert G.op(G.op(x, y), z) == G.op(x, G.op(y, z))


@pytest.mark.parametrize("orders", SMALL_GROUPS)
def test_mul_table_matches_op(orders):
    G = AbelianGroup(orders)
    t = G.mul_table()
    for i, x in enumerate(G.elements()):
        for j, y in enumerate(G.elements()):
            assert G.element(t[i][j]) == G.op(x, y)


@given(st.lists(st.integers(2, 6), max_size=3), st.data())
def test_op_random(orders, data):
    G = AbelianGroup(tuple(orders))
    x = data.draw(st.sampled_from(G.elements()))
    y = data.draw(st.sampled_from(G.elements()))
    assert G.op(x, y) == tuple((a + b) % n for a, b, n in zip(x, y, orders))
    assert G.index(G.op(x, G.inverse(y))) < G.order


def test_labels_and_keys():
    assert element_label((1, 1, 0)) == "e110"
    assert element_key((1, 0, 1)) == "1,0,1"
    assert parse_element_key("1,0,1") == (1, 0, 1)
    assert parse_element_key("") == ()
    assert AbelianGroup((2, 2)).is_elementary_2()
    assert not AbelianGroup((4,)).is_elementary_2()
    assert AbelianGroup().is_elementary_2()
