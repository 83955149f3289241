from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from mapenum.exact import (
    BinomialPoly,
    CycleCountVector,
    MonomialPoly,
    Pairing,
    TwoRowGround,
    binomial,
    binomial_to_monomial,
    cycle_count,
    double_factorial,
    inv_factorial,
    multinomial,
    poly_eval,
)


def test_double_factorial_values():
    assert double_factorial(1) == 1
    assert double_factorial(5) == 15  # 1*3*5
    assert double_factorial(-1) == 1
    assert double_factorial(0) == 1
    assert double_factorial(7) == 105


def test_double_factorial_rejects_even_and_small():
    with pytest.raises(ValueError):
        double_factorial(4)
    with pytest.raises(ValueError):
        double_factorial(-3)


def test_binomial_values():
    assert binomial(4, 2) == 6
    assert binomial(3, 5) == 0
    assert binomial(3, -1) == 0
    assert binomial(0, 0) == 1
    with pytest.raises(ValueError):
        binomial(-1, 0)


def test_multinomial_values():
    assert multinomial([0, 0, 0]) == 1
    assert multinomial([1, 1, 1]) == 6
    assert multinomial([2, -1, 1]) == 0
    assert multinomial([]) == 1
    assert multinomial([2, 2]) == 6


@given(st.lists(st.integers(min_value=0, max_value=6), min_size=1, max_size=4))
def test_multinomial_telescopes(parts):
    if sum(parts) > 12:
        parts = parts[:2]
    expected = 1
    running = 0
    for p in parts:
        running += p
        expected *= binomial(running, p)
    assert multinomial(parts) == expected


def test_inv_factorial_convention():
    assert inv_factorial(-1) == 0
    assert inv_factorial(0) == 1
    assert inv_factorial(3) == Fraction(1, 6)


def test_cycle_count():
    assert cycle_count([0, 1, 2, 3]) == 4
    assert cycle_count([1, 2, 3, 0]) == 1
    assert cycle_count([1, 0, 3, 2]) == 2
    with pytest.raises(ValueError):
        cycle_count([0, 0, 1])


def test_pairing_validation():
    p = Pairing((1, 0, 3, 2))
    assert p.ground_size == 4
    assert list(p.pairs()) == [(0, 1), (2, 3)]
    assert p[2] == 3
    with pytest.raises(ValueError):
        Pairing((0, 1))  # fixed points
    with pytest.raises(ValueError):
        Pairing((1, 0, 2, 3))
    with pytest.raises(ValueError):
        Pairing((1, 0, 3))  # odd size


def test_two_row_ground():
    g = TwoRowGround(3, 1)
    assert g.size == 4
    assert g.index(1, 1) == 0
    assert g.index(2, 1) == 3
    assert g.row(2) == 1 and g.row(3) == 2
    assert g.gamma() == (1, 2, 0, 3)
    assert g.gamma_inv() == (2, 0, 1, 3)
    assert g.is_mixed(0, 3) and not g.is_mixed(0, 2)
    with pytest.raises(ValueError):
        TwoRowGround(2, 1)  # odd total
    with pytest.raises(ValueError):
        TwoRowGround(0, 2)


def test_gamma_inverse_really_inverts():
    g = TwoRowGround(5, 3)
    gamma, inv = g.gamma(), g.gamma_inv()
    assert [gamma[inv[i]] for i in range(g.size)] == list(range(g.size))


def test_cycle_count_vector():
    v = CycleCountVector(2, (1, 0, 2))
    assert v.a(1) == 1 and v.a(3) == 2 and v.a(5) == 0
    assert v.total() == 3
    assert v.to_poly().coeffs == {1: Fraction(1), 3: Fraction(2)}
    assert CycleCountVector.from_tally(2, {3: 2, 1: 1}) == v
    with pytest.raises(ValueError):
        CycleCountVector(2, (1, 0))
    with pytest.raises(ValueError):
        CycleCountVector(1, (-1, 0))


def test_binomial_to_monomial_examples():
    assert binomial_to_monomial(BinomialPoly({1: 1})).integer_coeffs() == {1: 1}
    assert binomial_to_monomial(BinomialPoly({2: 2})).integer_coeffs() == {2: 1, 1: -1}
    assert binomial_to_monomial(BinomialPoly({1: 1, 2: 2})).integer_coeffs() == {2: 1}


def test_poly_eval_examples():
    assert poly_eval(BinomialPoly({1: 1}), 5) == 5
    assert poly_eval(BinomialPoly({2: 2}), 1) == 0
    assert poly_eval(BinomialPoly({2: 2}), 3) == 6
    assert poly_eval(MonomialPoly({2: 1, 1: -1}), 3) == 6


def test_poly_normalization_drops_zeros():
    assert BinomialPoly({1: 0, 2: 3}).coeffs == {2: 3}
    assert MonomialPoly({0: Fraction(0), 2: 2}).coeffs == {2: Fraction(2)}
    with pytest.raises(ValueError):
        BinomialPoly({0: 1})
    with pytest.raises(ValueError):
        MonomialPoly({-1: 1})


def test_integer_coeffs_rejects_fractions():
    with pytest.raises(ValueError):
        MonomialPoly({1: Fraction(1, 2)}).integer_coeffs()


@settings(max_examples=60)
@given(
    st.dictionaries(
        st.integers(min_value=1, max_value=6),
        st.integers(min_value=-50, max_value=50),
        max_size=5,
    )
)
def test_binomial_to_monomial_roundtrip_by_evaluation(coeffs):
    p = BinomialPoly(coeffs)
    m = binomial_to_monomial(p)
    for x in range(0, 21):
        assert m.eval(x) == p.eval(x)
