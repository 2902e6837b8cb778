import pytest
from hypothesis import given, settings, strategies as st

from tiltgrowth.characters import (SIMPLE, TILTING, NotInConeError, frobenius_twist, greedy_decompose,
                                   oracle_b, oracle_l, oracle_sequences, simple_char, tensor_power_char,
                                   tilting_char, weyl_char)
from tiltgrowth.fractal import dim_simple
from tiltgrowth.sequences import b_mahler, l_product
from tiltgrowth.series import SymLaurent


def test_weyl():
    assert weyl_char(0).poly.as_dict() == {0: 1}
    assert weyl_char(1).poly.as_dict() == {1: 1}
    assert weyl_char(3).poly.as_dict() == {3: 1, 1: 1}


def test_frobenius():
    assert frobenius_twist(weyl_char(1), 2).poly.as_dict() == {2: 1}
    assert frobenius_twist(weyl_char(0), 5).poly.as_dict() == {0: 1}
    assert frobenius_twist(tilting_char(2, 2), 3).poly.as_dict() == {6: 1, 0: 2}


def test_tilting_small():
    assert tilting_char(2, 1).poly.as_dict() == {1: 1}
    assert tilting_char(2, 2).poly.as_dict() == {2: 1, 0: 2}
    assert tilting_char(2, 3).poly.as_dict() == {3: 1, 1: 1}
    with pytest.raises(ValueError):
        tilting_char(2, -1)


def test_simple_small():
    assert simple_char(2, 3).poly.as_dict() == {3: 1, 1: 1}
    assert simple_char(3, 4).poly.as_dict() == {4: 1, 2: 1}
    for n in range(5):
        assert simple_char(7, n).poly == weyl_char(n).poly


def test_greedy_examples():
    v3 = tensor_power_char(3)
    assert v3.poly.as_dict() == {3: 1, 1: 3}
    assert greedy_decompose(v3, TILTING, 2).as_dict() == {3: 1, 1: 2}
    v2 = tensor_power_char(2)
    assert greedy_decompose(v2, TILTING, 2).as_dict() == {2: 1}
    assert greedy_decompose(v2, SIMPLE, 2).as_dict() == {2: 1, 0: 2}


def test_not_in_cone():
    with pytest.raises(NotInConeError):
        greedy_decompose(SymLaurent({2: 1}), TILTING, 2)  # u^2 + u^-2 lacks the 2 of ch T_2


def test_oracle_values():
    assert oracle_b(2, 7) == 29
    assert oracle_b(7, 15) == 5085
    assert oracle_b(3, 0) == 1
    assert oracle_l(2, 4) == 11
    assert oracle_l(5, 7) == 42
    assert all(oracle_l(p, 1) == 1 for p in (2, 3, 5))


def test_oracle_cap():
    with pytest.raises(ValueError):
        oracle_b(2, 201)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_oracle_equivalence(p):
    ob, ol = oracle_sequences(p, 60)
    assert ob == list(b_mahler(p, 60).values)
    assert ol == list(l_product(p, 60).values)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([2, 3, 5, 7]), st.integers(min_value=0, max_value=40), st.sampled_from([TILTING, SIMPLE]))
def test_decomposition_exact(p, n, basis):
    c = tensor_power_char(n)
    d = greedy_decompose(c, basis, p)
    assert d.reconstruct() == c.poly
    dims = {TILTING: lambda i: tilting_char(p, i).dim, SIMPLE: lambda i: simple_char(p, i).dim}[basis]
    assert sum(m * dims(i) for i, m in d.mults) == 2**n


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 3, 5, 7]), st.integers(min_value=0, max_value=300))
def test_character_shape(p, i):
    t = tilting_char(p, i)
    assert t.top == i and t.poly[i] == 1
    if i % 2:
        assert t.dim % 2 == 0
    s = simple_char(p, i)
    assert s.top == i and s.poly[i] == 1


@pytest.mark.parametrize("p", [2, 3, 5])
def test_simple_dims_cross_module(p):
    assert all(simple_char(p, n).dim == dim_simple(p, n) for n in range(501))
