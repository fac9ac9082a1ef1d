"""Model spectra against the naive triple-loop oracle."""
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from transverse_index import (
    NegativeCutoff,
    OperatorSetup,
    fixed_point,
    gen_sphere_operator,
    kernel_count,
    point_eigensolutions,
    point_spectrum,
    slope,
    total_spectrum,
)

from oracles import (
    brute_oracle_box_estimate,
    brute_spectrum_entries,
    effective_character,
    frac_dot,
    weight_sum,
)

SPHERE = gen_sphere_operator()
NP, SP = SPHERE.points


def entries_as_ints(table):
    return [(Fraction(lam), mult) for lam, mult in table.entries]


def test_sphere_np_spectrum_matches_frozen_oracle_values():
    table = point_spectrum(NP, (-3,), SPHERE.tau, 20)
    assert entries_as_ints(table) == [(0, 1), (8, 2), (16, 2)]
    table = point_spectrum(NP, (1,), SPHERE.tau, 20)
    assert entries_as_ints(table) == [(8, 2), (16, 2)]


def test_cutoff_below_bottom_gives_empty_table():
    table = point_spectrum(NP, (1,), SPHERE.tau, 7)
    assert table.entries == ()


def test_negative_cutoff_rejected():
    with pytest.raises(NegativeCutoff):
        point_spectrum(NP, (1,), SPHERE.tau, -1)


def test_total_spectrum_unions_points():
    table = total_spectrum(SPHERE, (1,), 8)
    assert entries_as_ints(table) == [(0, 1), (8, 4)]
    table = total_spectrum(SPHERE, (-3,), 10)
    assert entries_as_ints(table) == [(0, 1), (8, 2)]


def test_total_spectrum_empty_setup():
    empty = OperatorSetup(m=1, tau=slope([1]), points=(), operator_kind="generic")
    assert total_spectrum(empty, (0,), 100).entries == ()


def test_zero_eigenvalue_multiplicity_matches_kernel_counts():
    for b in [(-3,), (-1,), (0,), (1,), (5,)]:
        for pt in (NP, SP):
            table = point_spectrum(pt, b, SPHERE.tau, 0)
            kernels = sum(
                kernel_count(pt, j, b, SPHERE.tau) for j in range(len(pt.lines))
            )
            assert table.multiplicity_of(0) == kernels


def test_eigensolution_fields_are_consistent():
    sols = point_eigensolutions(NP, (-3,), SPHERE.tau, 24)
    assert sols, "expected some solutions below the cutoff"
    for sol in sols:
        line = NP.lines[sol.line_index]
        eb = effective_character(NP, (-3,))
        target = tuple(a + c for a, c in zip(line.a, eb))
        assert weight_sum(NP.tangent_weights, sol.m) == target
        assert all(d >= 0 for d in sol.d)
        expected_coeff = tuple(
            abs(mi) + mi + 2 * di + 1 + e
            for mi, di, e in zip(sol.m, sol.d, line.epsilon)
        )
        assert sol.coeff == expected_coeff
        kappas = [frac_dot(k, SPHERE.tau) for k in NP.tangent_weights]
        assert sol.lam == 2 * sum(
            (kap * c for kap, c in zip(kappas, sol.coeff)), Fraction(0)
        )
        assert 0 <= sol.lam <= 24


def test_generic_mode_refines_numeric_mode():
    # two independent planes with equal frequencies: distinct functionals
    # collide numerically at this slope
    pt = fixed_point("iso", [(1, 0), (0, 1)], [((0, 0), 1, (-1, -1))])
    tau = slope([1, 1])
    generic = point_spectrum(pt, (0, 0), tau, 8, mode="generic")
    numeric = point_spectrum(pt, (0, 0), tau, 8, mode="numeric")
    assert entries_as_ints(generic) == [(0, 1), (4, 1), (4, 1), (8, 1), (8, 1), (8, 1)]
    assert entries_as_ints(numeric) == [(0, 1), (4, 2), (8, 3)]
    merged = {}
    for lam, mult in generic.entries:
        merged[lam] = merged.get(lam, 0) + mult
    assert sorted(merged.items()) == list(numeric.entries)


def test_table_total_multiplicity_counts_triples():
    sols = point_eigensolutions(NP, (-3,), SPHERE.tau, 20)
    for mode in ("generic", "numeric"):
        table = point_spectrum(NP, (-3,), SPHERE.tau, 20, mode=mode)
        assert table.total_multiplicity() == len(sols)


@st.composite
def spectrum_problems(draw):
    m = draw(st.integers(1, 2))
    n = draw(st.integers(0, 2))
    entries = st.integers(-2, 2)
    tau = slope(draw(st.lists(st.sampled_from([1, 2]), min_size=m, max_size=m)))
    weights = []
    for _ in range(n):
        k = draw(st.tuples(*[entries] * m).filter(lambda k: frac_dot(k, tau) > 0))
        weights.append(k)
    lines = []
    for _ in range(draw(st.integers(1, 2))):
        a = draw(st.tuples(*[entries] * m))
        eps = draw(st.tuples(*[st.sampled_from([1, -1])] * n))
        lines.append((a, draw(st.sampled_from([1, -1])), eps))
    pt = fixed_point("rnd", weights, lines, group_sign=draw(st.sampled_from([1, -1])))
    b = draw(st.tuples(*[entries] * m))
    cutoff = draw(st.sampled_from([0, 4, 10, 16]))
    return pt, b, tau, cutoff


@given(spectrum_problems())
@settings(max_examples=60, deadline=None)
def test_point_spectrum_matches_triple_loop_oracle(problem):
    pt, b, tau, cutoff = problem
    while brute_oracle_box_estimate(pt, b, tau, cutoff) > 150_000 and cutoff > 0:
        cutoff = cutoff // 2
    for mode in ("generic", "numeric"):
        table = point_spectrum(pt, b, tau, cutoff, mode=mode)
        assert list(table.entries) == brute_spectrum_entries(pt, b, tau, cutoff, mode)
        assert all(lam >= 0 for lam, _ in table.entries)
