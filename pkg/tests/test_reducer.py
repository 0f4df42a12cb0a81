from fractions import Fraction

import pytest

from relthue import (
    BinaryForm,
    QuadraticField,
    RingElement,
    brute_force,
    imag_value_range,
    nonzero_value_branch,
    solve_abs,
    solve_relative,
    zero_value_branch,
)

F1 = BinaryForm((0, -4, 0, 1))
F2 = BinaryForm((0, -2, -1, 1))
F3 = BinaryForm((-1, -3, 0, 1))


def test_imag_value_range_examples():
    assert imag_value_range(QuadraticField(3), F1, 1) == [-1, 0, 1]
    assert imag_value_range(QuadraticField(163), F1, 1) == [0]
    assert imag_value_range(QuadraticField(2), F1, 1) == [0]


def test_imag_value_range_grows_with_K():
    small = imag_value_range(QuadraticField(3), F1, 1)
    large = imag_value_range(QuadraticField(3), F1, 10)
    assert set(small) <= set(large)
    assert large == list(range(-15, 16))  # k^2 * 27 <= 6400


def test_zero_branch_parity_reconstruction():
    # family member (2t, t) with (a, b) = (2, 0): x1 = 1 - t integral only for even t
    field = QuadraticField(3)
    found, families = zero_value_branch(field, F1, 1, 6)
    assert {f.root for f in families} == {-2, 0, 2}
    for quad in found:
        x1, x2, y1, y2 = quad
        # reconstruction parity: a = 2*x1 + x2 and b = 2*y1 + y2 are integers by construction
        assert field.norm(field.evaluate_form(F1, RingElement(x1, x2), RingElement(y1, y2))) <= 1
    assert ((4, 0, 2, 0)) in found  # the (a,b)=(8,4) member over (x2,y2)=(0,0)


def test_nonzero_branch_worked_example():
    # x = w, y = 0: imag value 1 realized by (1, 0), real pair (1, 0), x1 = 0
    field = QuadraticField(3)
    found = nonzero_value_branch(field, F1, 1, 6)
    assert (0, 1, 0, 0) in found
    for quad in found:
        x = RingElement(quad[0], quad[1])
        y = RingElement(quad[2], quad[3])
        assert F1.evaluate(x.u2, y.u2) != 0
        assert field.norm(field.evaluate_form(F1, x, y)) <= 1


def test_branches_disjoint_by_imag_value():
    field = QuadraticField(3)
    zero_found, _ = zero_value_branch(field, F1, 1, 6)
    nonzero_found = nonzero_value_branch(field, F1, 1, 6)
    assert not (set(zero_found) & set(nonzero_found))


@pytest.mark.parametrize("m,K,form", [(3, 1, F1), (1, 1, F2), (2, 10, F3), (7, 10, F2)])
def test_oracle_equivalence_small(m, K, form):
    field = QuadraticField(m)
    result = solve_relative(field, form, K, Fraction(1, 2), 12)
    oracle = brute_force(field, form, K, 3)
    box = {q for q in result.quadruples() if max(abs(c) for c in q) <= 3}
    assert box == oracle.quadruples()
    assert result.cross_check_ok


def test_all_emitted_solutions_verified():
    field = QuadraticField(3)
    result = solve_relative(field, F1, Fraction(3, 2), Fraction(1, 2), 8)
    for sol in result.solutions:
        assert sol.value == field.evaluate_form(F1, sol.x, sol.y)
        assert sol.value_norm <= Fraction(3, 2) ** 2
        assert sol.report.ok


def test_large_m_forces_zero_imag_coords():
    field = QuadraticField(163)
    result = solve_relative(field, F3, 1, Fraction(1, 2), 20)
    assert all(q[1] == 0 and q[3] == 0 for q in result.quadruples())
    embedded = {(q[0], q[2]) for q in result.quadruples()}
    assert embedded == set(solve_abs(F3, 1, 10).pairs())
    assert result.families == ()  # irreducible: no zero families


def test_reducible_reports_families():
    result = solve_relative(QuadraticField(7), F1, 1, Fraction(1, 2), 5)
    assert [f.root for f in result.families] == [-2, 0, 2]
    for fam in result.families:
        assert fam.y_step == RingElement(1, 0)
        assert fam.x_step == RingElement(fam.root, 0)
    assert result.search_height == 5


def test_sort_order_and_uniqueness():
    field = QuadraticField(3)
    result = solve_relative(field, F1, 1, Fraction(1, 2), 6)
    keys = [
        (field.norm(sol.y), sol.y.u1, sol.y.u2, sol.x.u1, sol.x.u2)
        for sol in result.solutions
    ]
    assert keys == sorted(keys)
    quads = [s.quadruple for s in result.solutions]
    assert len(quads) == len(set(quads))


@pytest.mark.parametrize("m", [1, 3])
def test_oracle_equivalence_quartic_with_integer_roots(m):
    form = BinaryForm((0, 6, -5, -2, 1))  # x(x-1)(x+2)(x-3) = x^4-2x^3-5x^2+6x
    field = QuadraticField(m)
    result = solve_relative(field, form, 1, Fraction(1, 2), 8)
    oracle = brute_force(field, form, 1, 2)
    box = {q for q in result.quadruples() if max(abs(c) for c in q) <= 2}
    assert box == oracle.quadruples()
    assert [f.root for f in result.families] == [-2, 0, 1, 3]


def test_oracle_equivalence_quartic_biquadratic():
    # (x^2-2)(x^2-3): reducible over Q but without rational roots, so the
    # zero set over Z^2 is just the origin and no families are reported
    form = BinaryForm((6, 0, -5, 0, 1))
    field = QuadraticField(3)
    result = solve_relative(field, form, 2, Fraction(1, 2), 8)
    oracle = brute_force(field, form, 2, 2)
    box = {q for q in result.quadruples() if max(abs(c) for c in q) <= 2}
    assert box == oracle.quadruples()
    assert result.families == ()


def test_oracle_equivalence_rational_K():
    field = QuadraticField(3)
    K = Fraction(3, 2)
    result = solve_relative(field, F3, K, Fraction(1, 2), 9)
    oracle = brute_force(field, F3, K, 3)
    box = {q for q in result.quadruples() if max(abs(c) for c in q) <= 3}
    assert box == oracle.quadruples()
    for sol in result.solutions:
        assert sol.value_norm <= K**2


def test_rejects_small_K():
    with pytest.raises(ValueError):
        solve_relative(QuadraticField(3), F1, Fraction(1, 2))


def test_s1_reconstruction_degenerates():
    # for s = 1 the real pair is (x1, y1) itself: solutions embed absolute pairs directly
    field = QuadraticField(2)
    result = solve_relative(field, F1, 1, Fraction(1, 2), 8)
    abs_pairs = set(solve_abs(F1, 1, 8).pairs())
    for q in result.quadruples():
        if q[1] == 0 and q[3] == 0:
            assert (q[0], q[2]) in abs_pairs
