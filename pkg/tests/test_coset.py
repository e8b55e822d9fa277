import pytest

from graphpres.coset import EnumerationLimitError, todd_coxeter
from graphpres.words import Presentation


def pres(gens, rels):
    return Presentation.from_strings(gens, rels)


CYCLIC3 = pres(["a"], [[("a", 1)] * 3])
S4 = pres(["a", "b", "c"],
          [[("a", 1)] * 2, [("b", 1)] * 2, [("c", 1)] * 2,
           [("a", 1), ("b", 1)] * 3, [("b", 1), ("c", 1)] * 3,
           [("a", 1), ("c", 1)] * 2])
BINARY_ICOSAHEDRAL = pres(
    ["g", "r"],
    [[("g", 1), ("g", 1), ("r", 1), ("r", 1), ("r", 1)],
     [("g", 1), ("g", 1)] + [("g", -1), ("r", -1)] * 5])
MODULAR_LIKE = pres(["g", "h"], [[("g", 1)] * 2, [("h", 1)] * 3])


def test_cyclic_three():
    assert todd_coxeter(CYCLIC3).n == 3


def test_symmetric_four():
    assert todd_coxeter(S4).n == 24


def test_binary_icosahedral_order():
    assert todd_coxeter(BINARY_ICOSAHEDRAL).n == 120


def test_subgroup_index():
    table = todd_coxeter(S4, subgroup_words=[[(0, 1)], [(1, 1)]])
    assert table.n == 4  # the parabolic generated by the first two swaps


def test_limit_reported():
    with pytest.raises(EnumerationLimitError) as err:
        todd_coxeter(MODULAR_LIKE, limit=2000)
    assert err.value.limit == 2000


def test_table_is_complete_and_relators_close():
    table = todd_coxeter(S4)
    for rel in S4.relators:
        assert table.relator_closes_everywhere(rel)
    for c in range(table.n):
        for g in range(3):
            assert 0 <= table.step(c, g, 1) < table.n
            assert table.step(table.step(c, g, 1), g, -1) == c


def test_determinism():
    t1 = todd_coxeter(BINARY_ICOSAHEDRAL)
    t2 = todd_coxeter(BINARY_ICOSAHEDRAL)
    assert t1.rows == t2.rows


def test_element_arithmetic_regular_table():
    table = todd_coxeter(S4)
    a = table.element_of([(0, 1)])
    b = table.element_of([(1, 1)])
    assert table.element_product(a, a) == 0
    assert table.element_order(table.element_product(a, b)) == 3
    ab = table.element_of([(0, 1), (1, 1)])
    assert table.element_product(a, b) == ab
    assert table.element_product(ab, table.element_inverse(ab)) == 0
    # associativity spot check
    c = table.element_of([(2, 1)])
    lhs = table.element_product(table.element_product(a, b), c)
    rhs = table.element_product(a, table.element_product(b, c))
    assert lhs == rhs


def test_empty_relator_is_tolerated():
    p = pres(["a"], [[], [("a", 1)] * 4])
    assert todd_coxeter(p).n == 4


def test_trivial_group():
    p = pres(["a"], [[("a", 1)]])
    assert todd_coxeter(p).n == 1


def test_free_group_rank_one_over_subgroup():
    p = pres(["a"], [])
    table = todd_coxeter(p, subgroup_words=[[(0, 1)] * 5])
    assert table.n == 5
