from math import gcd

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from tanglekit.errors import PreconditionError
from tanglekit.surgery_solver import (
    Move,
    Status,
    divisor_bounds,
    nonrational_certificate,
    psi_move_solve,
    rational_move_family,
    residues,
    solve_generalized_M,
    solve_nonband_family,
)
from tanglekit.surgery_solver.families import GENERALIZED_RATIONAL, GENERALIZED_SUM, NONBAND_RATIONAL
from tanglekit.surgery_solver.verify import verify_instance
from tanglekit.tangle_core import (
    ZERO,
    LinkSpec,
    TangleFraction,
    closure_of_rational,
    rational_value,
    sum_closure,
)
from tanglekit.tangle_core.expr import Sum

from .conftest import XER_PRODUCTS


def test_residues():
    assert residues(11, 2) == [2, 6]
    assert residues(11, 2, both_chiralities=True) == [2, 5, 6, 9]
    assert residues(15, 4, both_chiralities=True) == [4, 11]
    assert residues(1, 0) == [0]


def test_divisor_bounds():
    assert divisor_bounds(6, 11) == (5, 17)
    assert divisor_bounds(10, 35) == (25, 45)


@pytest.mark.parametrize("k, label, zv", XER_PRODUCTS)
def test_xer_products_have_no_nonrational_solutions(k, label, zv):
    assert nonrational_certificate(TangleFraction(2 * k, 1), zv) == []


@pytest.mark.parametrize(
    "k, zv, u, u0",
    [
        (3, TangleFraction(15, 4), "-1/3", "-6/5"),
        (4, TangleFraction(23, 4), "-1/5", "-8/7"),
        (5, TangleFraction(31, 4), "-1/7", "-10/9"),
    ],
)
def test_psi_move_solutions(k, zv, u, u0):
    report = psi_move_solve(k, zv)
    assert report.status is Status.SOLVED
    [family] = report.families
    assert family.instances[0].display() == u
    assert family.parameters["U0"] == u0
    assert family.parameters["epsilon"] == -1


@pytest.mark.parametrize(
    "k, zv",
    [(3, TangleFraction(11, 2)), (4, TangleFraction(15, 2)), (5, TangleFraction(19, 2)), (5, TangleFraction(35, 6))],
)
def test_psi_move_without_solution(k, zv):
    report = psi_move_solve(k, zv)
    assert report.status is Status.NO_SOLUTION
    assert report.reason == "no solution"


def test_psi_move_needs_a_knot():
    with pytest.raises(PreconditionError):
        psi_move_solve(3, TangleFraction(6, 1))


def test_nonband_family_from_torus_six(seven_four):
    family = solve_nonband_family(3, TangleFraction(15, 4), (0, 0))
    assert family.case == NONBAND_RATIONAL
    first, second = family.instances
    assert first.move == Move(ZERO, TangleFraction(-9, 4))
    assert rational_value(first.u) == TangleFraction(6, 1)
    assert first.product is None
    assert family.product.link == seven_four
    assert second.move.r == TangleFraction(-51, 11)
    assert second.product == LinkSpec(seven_four.mirror())
    assert family.notes == ()


def test_nonband_family_needs_a_knot():
    with pytest.raises(PreconditionError):
        solve_nonband_family(3, TangleFraction(8, 3))


@pytest.mark.parametrize(
    "ab, zv",
    [
        (TangleFraction(6, 1), TangleFraction(15, 4)),
        (TangleFraction(7, 2), TangleFraction(15, 4)),
        (TangleFraction(7, 2), TangleFraction(11, 3)),
        (TangleFraction(5, 2), TangleFraction(13, 5)),
        (TangleFraction(8, 3), TangleFraction(21, 8)),
    ],
)
def test_rational_families_solve_both_sides(ab, zv):
    families = rational_move_family(ab, zv, (-2, 2), both_chiralities=True)
    assert families
    substrate = closure_of_rational(ab)
    for family in families:
        assert family.substrate.link == substrate
        for instance in family:
            u = rational_value(instance.u)
            r = family.move_of(instance).r
            assert closure_of_rational(u) == substrate
            assert sum_closure(u, r) == family.product_of(instance).link


def test_substrate_with_two_presentations():
    families = rational_move_family(TangleFraction(7, 2), TangleFraction(15, 4), (0, 0))
    assert [f.parameters["form"] for f in families] == [1, 2]
    assert families[0].parameters["x"] == 4


def test_rational_family_rejects_split_substrates():
    with pytest.raises(PreconditionError):
        rational_move_family(ZERO, TangleFraction(15, 4))


def test_generalized_M_rational_case():
    families = solve_generalized_M(TangleFraction(6, 1), TangleFraction(-9, 4), TangleFraction(15, 4))
    [family] = families
    assert family.case == GENERALIZED_RATIONAL
    assert [i.display() for i in family] == ["6/1"]


def test_generalized_M_wrong_target_has_no_family():
    assert solve_generalized_M(TangleFraction(6, 1), TangleFraction(-9, 4), TangleFraction(11, 2)) == []


def test_generalized_M_needs_large_t():
    with pytest.raises(PreconditionError):
        solve_generalized_M(TangleFraction(6, 1), TangleFraction(1, 4), TangleFraction(15, 4))


def _sum_families(ab, tw, zv):
    return [f for f in solve_generalized_M(ab, tw, zv) if f.case == GENERALIZED_SUM]


@pytest.mark.parametrize(
    "ab, tw, zv, pq",
    [
        (TangleFraction(5, 2), TangleFraction(2, 1), TangleFraction(19, 14), (3, 2)),
        (TangleFraction(5, 2), TangleFraction(2, 3), TangleFraction(19, 14), (3, 2)),
        (TangleFraction(7, 2), TangleFraction(3, 1), TangleFraction(11, 7), (2, 1)),
        (TangleFraction(7, 2), TangleFraction(3, 4), TangleFraction(11, 7), (2, 1)),
        (TangleFraction(7, 2), TangleFraction(2, 1), TangleFraction(37, 14), (3, 1)),
    ],
)
def test_generalized_M_sums_pass_the_oracle(ab, tw, zv, pq):
    families = _sum_families(ab, tw, zv)
    assert pq in {(f.parameters["p"], f.parameters["q"]) for f in families}
    for family in families:
        for instance in family:
            check = verify_instance(
                instance.u, family.move_of(instance), family.substrate, family.product_of(instance), cap=0
            )
            assert check.verified, (family.parameters, instance.display(), check)


@pytest.mark.parametrize(
    "ab, tw, zv",
    [
        (TangleFraction(5, 2), TangleFraction(2, 1), TangleFraction(19, 14)),
        (TangleFraction(7, 2), TangleFraction(3, 4), TangleFraction(11, 7)),
        (TangleFraction(7, 2), TangleFraction(2, 1), TangleFraction(37, 14)),
    ],
)
def test_sum_candidates_divide_z_minus_or_plus_a(ab, tw, zv):
    families = _sum_families(ab, tw, zv)
    assert families
    bounds = divisor_bounds(ab.num, zv.num)
    for family in families:
        t, p, r = (family.parameters[k] for k in ("t", "p", "r"))
        assert any(bound % t == 0 and bound % p == 0 and bound % r == 0 for bound in bounds)


def test_certificate_candidates_divide_z_minus_or_plus_a():
    candidates = nonrational_certificate(TangleFraction(5, 2), TangleFraction(19, 14))
    assert candidates
    bounds = divisor_bounds(5, 19)
    for c in candidates:
        assert c.non_rational
        assert any(bound % c.t == 0 and bound % c.p == 0 and bound % c.r == 0 for bound in bounds)


@st.composite
def sum_systems(draw):
    a = draw(st.integers(3, 13))
    b = draw(st.integers(1, a - 1))
    t = draw(st.integers(2, 4))
    p = draw(st.integers(2, 5))
    q = draw(st.integers(-4, 4))
    assume(gcd(a, b) == 1 and gcd(p, q) == 1)
    r = p * b - q * a
    assume(abs(r) > 1)
    z, v = t * p * r + a, t * q * r + b
    assume(z != 0 and v != 0 and gcd(z, v) == 1)
    return TangleFraction(a, b), t, p, q, TangleFraction(z, v)


@given(sum_systems())
def test_sum_solutions_close_to_both_links(system):
    ab, t, p, q, zv = system
    families = [
        f
        for f in _sum_families(ab, TangleFraction(t, 1), zv)
        if f.parameters["epsilon"] == 1 and f.parameters["h"] == 0
    ]
    assert (p, q) in {(f.parameters["p"], f.parameters["q"]) for f in families}
    for family in families:
        for instance in family:
            assert isinstance(instance.u, Sum)
            left, right = (term.fraction for term in instance.u.terms)
            assert sum_closure(left, right) == closure_of_rational(ab)
            # the integer tangle t/1 slides into either summand
            shifted = TangleFraction(right.num + t * right.den, right.den)
            assert sum_closure(left, shifted) == closure_of_rational(zv)
