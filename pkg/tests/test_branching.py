"""Branching tables and the SU(2) closed form."""
from fractions import Fraction

import pytest

from transverse_index import (
    InfiniteMultiplicity,
    OperatorSetup,
    RankMismatch,
    apply_branching,
    branching_table,
    fixed_point,
    gen_su2_mod_t,
    slope,
    su2_beta,
    su2_index,
    transverse_index,
)

HALF = Fraction(1, 2)


def test_su2_beta_tables():
    assert su2_beta(3).coefficients == {
        (3,): HALF, (-3,): HALF, (5,): -HALF, (-5,): -HALF,
    }
    assert su2_beta(1).coefficients == {
        (1,): HALF, (-1,): HALF, (3,): -HALF, (-3,): -HALF,
    }
    # the two halves collide at b = 0 and add up
    assert su2_beta(0).coefficients == {(0,): 1, (2,): -HALF, (-2,): -HALF}


def test_apply_branching_su2_quotient():
    setup = gen_su2_mod_t("deRham")
    torus = lambda b: transverse_index(setup, b).value
    assert apply_branching(su2_beta(0), torus) == 2
    assert all(apply_branching(su2_beta(n), torus) == 0 for n in range(1, 9))


def test_apply_branching_zero_function():
    assert apply_branching(su2_beta(4), lambda b: 0) == 0


def test_apply_branching_guards_infinite_sectors():
    # even sectors flagged non-finite, as for the zero operator on the quotient
    torus = lambda b: None if b[0] % 2 == 0 else 0
    with pytest.raises(InfiniteMultiplicity):
        apply_branching(su2_beta(2), torus)
    # a table supported only on finite sectors still works
    assert apply_branching(su2_beta(1), torus) == 0


def test_su2_index_on_quotient():
    setup = gen_su2_mod_t("deRham")
    assert su2_index(setup, 0) == 2
    for n in range(1, 9):
        assert su2_index(setup, n) == 0


def test_su2_index_empty_setup():
    empty = OperatorSetup(m=1, tau=slope([1]), points=(), operator_kind="generic")
    assert all(su2_index(empty, n) == 0 for n in range(6))


def test_su2_index_rank_guard():
    setup = OperatorSetup(m=2, tau=slope([1, 2]), points=(), operator_kind="generic")
    with pytest.raises(RankMismatch):
        su2_index(setup, 1)


def synthetic_delta_at_five():
    """Torus indices 1 at b = 5 and 0 elsewhere (not a genuine SU(2) setup)."""
    point = fixed_point(
        "delta5", [(1,)], [((-5,), 1, (-1,)), ((-4,), -1, (-1,))]
    )
    return OperatorSetup(m=1, tau=slope([1]), points=(point,), operator_kind="generic")


def test_synthetic_fixture_gives_half_integers():
    setup = synthetic_delta_at_five()
    table = {b: transverse_index(setup, (b,)).value for b in range(-8, 9)}
    assert table == {b: (1 if b == 5 else 0) for b in range(-8, 9)}
    assert su2_index(setup, 5) == HALF
    assert su2_index(setup, 3) == -HALF


def test_apply_branching_is_linear():
    t1 = su2_beta(2)
    t2 = su2_beta(5)
    alpha = Fraction(3, 7)
    combined = branching_table(
        [(b, alpha * beta) for b, beta in t1.coefficients.items()]
        + list(t2.coefficients.items())
    )
    f = lambda b: b[0] ** 2 - 3 * b[0] + 1
    assert apply_branching(combined, f) == alpha * apply_branching(
        t1, f
    ) + apply_branching(t2, f)


def test_su2_orthogonality_of_restricted_characters():
    # the torus multiplicity table of the restricted (k+1)-dimensional
    # character is 1 on {k, k-2, ..., -k}; pairing picks out k = n
    def restricted_character(k):
        support = set(range(-k, k + 1, 2))
        return lambda b: 1 if b[0] in support else 0

    for n in range(7):
        for k in range(7):
            value = apply_branching(su2_beta(n), restricted_character(k))
            assert value == (1 if k == n else 0)
