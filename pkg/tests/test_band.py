import pytest

from tanglekit.diagram_oracle import OrientedTorusLink2
from tanglekit.errors import PreconditionError, UnsupportedError
from tanglekit.surgery_solver import (
    Status,
    band_solve,
    solve_2k_to_2k1,
    solve_trefoil_hopf,
    trefoil_hopf_family,
    verify_families,
    xer_pairs,
)
from tanglekit.surgery_solver.band import admitted
from tanglekit.surgery_solver.families import BAND_K_N, BAND_K_SUM_MINUS
from tanglekit.tangle_core import TangleFraction, format_expr, rational_value


def test_seven_four_onto_torus_link():
    report = band_solve(2, 2, -1, OrientedTorusLink2(3, -3))
    assert report.status is Status.SOLVED
    [family] = report.families
    assert family.case == BAND_K_SUM_MINUS
    assert [format_expr(i.u) for i in family] == ["(-1/3 + -1/3) o (-1,2,0)"]
    assert family.notes == ("m = n: both ordered sums coincide",)


def test_two_cases_can_apply_together():
    report = band_solve(1, 3, -1, OrientedTorusLink2(3, -3))
    cases = [f.case for f in report.families]
    assert cases == [BAND_K_N, BAND_K_SUM_MINUS]
    assert rational_value(report.families[0].instances[0].u) == TangleFraction(11, 17)
    assert len(report.families[1].instances) == 2


def test_positive_linking_is_obstructed_for_large_k():
    report = band_solve(2, 2, -1, OrientedTorusLink2(3, 3))
    assert report.status is Status.OBSTRUCTED
    assert report.reason.startswith("obstructed: signature")


def test_positive_linking_for_small_k_is_open():
    report = band_solve(1, 1, -1, OrientedTorusLink2(2, 2))
    assert report.status is Status.UNKNOWN
    assert report.families == []


def test_hopf_orientations_are_treated_alike():
    report = band_solve(1, 1, -1, OrientedTorusLink2(1, 1))
    assert report.status is Status.SOLVED
    assert "Hopf link: both orientations are treated alike" in report.notes


def test_no_case_applies():
    report = band_solve(1, 1, -1, OrientedTorusLink2(5, -5))
    assert report.status is Status.NO_SOLUTION


@pytest.mark.parametrize("m, n", [(0, 2), (3, 0)])
def test_torus_knot_substrates_are_unsupported(m, n):
    with pytest.raises(UnsupportedError) as e:
        band_solve(m, n, -1, OrientedTorusLink2(2, -2))
    assert e.value.reason == "mn=0"


def test_xer_pairs():
    assert xer_pairs(3) == [(1, 3), (2, 2), (3, 1), (-1, -3), (-2, -2), (-3, -1)]
    with pytest.raises(PreconditionError):
        xer_pairs(0)


def test_xer_rejects_the_mirror_class():
    families = solve_2k_to_2k1(3)
    assert [admitted(f) for f in families] == [True] * 3 + [False] * 3
    assert families[3].notes == ("substrate mismatch: (m,n)=(-1,-3) needs N(-6)",)
    assert families[0].instances[0].display() == "-6/5"
    assert families[1].instances[0].display() == "(-1/3 + -1/3)"


def test_xer_with_other_band_twist():
    family = solve_2k_to_2k1(3, w=1)[0]
    assert format_expr(family.instances[0].u) == "(-1/1 + -1/5) o (-2,0)"
    assert family.closed_form.endswith(" o (-w-1,0)")


@pytest.mark.parametrize(
    "w, u",
    [(-1, TangleFraction(3, 1)), (0, TangleFraction(-3, 2)), (1, TangleFraction(-3, 5)), (-2, TangleFraction(3, 4))],
)
def test_trefoil_to_hopf(w, u):
    assert solve_trefoil_hopf(w) == u


def test_trefoil_to_hopf_verifies():
    checks = verify_families([trefoil_hopf_family(w) for w in (-2, -1, 1, 2)], cap=0)
    assert all(c.verified for c in checks), [c.status for c in checks]


def test_xer_solutions_verify():
    admitted_families = [f for f in solve_2k_to_2k1(3) if admitted(f)]
    checks = verify_families(admitted_families, cap=0)
    assert len(checks) == 3
    assert all(c.verified for c in checks), [c.status for c in checks]
    assert {c.lk for c in checks} == {-3}


def _band_systems(pairs):
    for m, n in pairs:
        for k in sorted({m, n, m + n + 1, m + n - 1}):
            if k != 0:
                yield m, n, k


def _check_band_system(m, n, k, w=-1):
    report = band_solve(m, n, w, OrientedTorusLink2(k, -k))
    assert report.status is Status.SOLVED
    checks = verify_families(report.families, cap=0)
    assert checks
    assert all(c.verified for c in checks), [(c.u, c.status) for c in checks]


@pytest.mark.parametrize("m, n, k", list(_band_systems([(1, 1), (1, 2), (2, 1), (-1, -1)])))
def test_band_solutions_verify(m, n, k):
    _check_band_system(m, n, k)


@pytest.mark.slow
@pytest.mark.parametrize("w", [-2, -1, 0, 1, 2])
@pytest.mark.parametrize(
    "m, n, k",
    list(_band_systems([(m, n) for m in range(-3, 4) for n in range(-3, 4) if m * n > 0])),
)
def test_band_solutions_verify_full_grid(m, n, k, w):
    _check_band_system(m, n, k, w)
