import pytest
from hypothesis import given, strategies as st

from chromod.analysis import (
    FORMS, are_synchronized, has_internal_zeros, is_log_concave, is_palindromic, is_positive,
    is_unimodal, lollipop_coefficient, normalize_for_shape, path_coefficient, scan, shape_report,
)
from chromod.dyck import GuardError, area, enumerate_hess, lollipop_hess, partitions, path_hess
from chromod.engine import csf_e_coeffs
from chromod.qpoly import QPoly, QRat, q_factorial, q_int

COUNTER_S = QPoly([1, 3, 10, 10, 3, 1])


def test_palindromic():
    assert is_palindromic(q_int(3), 2)
    assert is_palindromic(QPoly([0, 1, 1, 1]), 4)
    assert not is_palindromic(QPoly([1, 2]), 1)
    assert is_palindromic(QPoly(), 3)
    for lam, c in csf_e_coeffs((2, 3, 3)).items():
        assert is_palindromic(c, area((2, 3, 3)))


def test_unimodal_and_log_concave():
    p = QPoly([1, 3, 2])
    assert is_unimodal(p) and is_log_concave(p)
    assert is_unimodal(COUNTER_S) and not is_log_concave(COUNTER_S)
    assert has_internal_zeros(QPoly([1, 0, 1])) and not is_log_concave(QPoly([1, 0, 1]))
    assert not is_unimodal(QPoly([2, 1, 2]))
    assert is_positive(QPoly([0, 2])) and not is_positive(QPoly([1, -1]))


@given(st.lists(st.integers(0, 30), max_size=7))
def test_log_concave_implies_unimodal(c):
    if is_log_concave(c):
        assert is_unimodal(c)


def test_synchronized():
    assert are_synchronized(q_int(4) * q_int(3), q_int(5) * q_int(2))
    p = q_int(3) * q_int(3)
    assert are_synchronized(p, p)
    for n in range(1, 9):
        for m in range(2, 9):
            assert are_synchronized(q_int(n) * q_int(m), q_int(n + 1) * q_int(m - 1))
    with pytest.raises(ValueError):
        are_synchronized(QPoly([1, 0, 1]), QPoly([1]))


def test_path_formula_simple_cases():
    assert path_coefficient((2, 1)) == QPoly([0, 1])
    for n in range(1, 7):
        assert path_coefficient((n,)) == q_int(n)
    with pytest.raises(ValueError):
        path_coefficient((2, 2), form="other")


def test_path_composition_form_matches_engine():
    for n in range(1, 9):
        coeffs = csf_e_coeffs(path_hess(n))
        for lam in partitions(n):
            assert path_coefficient(lam, "compositions") == coeffs.get(lam, QPoly()), lam


def test_path_forms_differ_on_repeated_parts():
    assert path_coefficient((2, 2), "displayed") == QPoly([0, 2, 2])
    assert path_coefficient((2, 2), "compositions") == QPoly([0, 1, 1])
    assert set(FORMS) == {"displayed", "compositions"}


def test_lollipop_composition_form_matches_engine():
    for total in range(2, 10):
        for n in range(0, total):
            m = total - n
            if m <= n:
                continue
            coeffs = csf_e_coeffs(lollipop_hess(n, m))
            for lam in partitions(total):
                assert lollipop_coefficient(n, m, lam, "compositions") == coeffs.get(lam, QPoly()), (n, m, lam)


def test_lollipop_special_values():
    assert lollipop_coefficient(2, 3, (5,)) == q_int(5) * q_factorial(2)
    assert lollipop_coefficient(2, 3, (2, 2, 1)) == QPoly()
    with pytest.raises(ValueError):
        lollipop_coefficient(3, 3, (6,))
    with pytest.raises(ValueError):
        lollipop_coefficient(2, 3, (4,))


def test_normalize_for_shape():
    assert normalize_for_shape(QRat(QPoly([-1, -2]), 120)) == QPoly([1, 2])
    assert normalize_for_shape(QRat(1, QPoly([1, 1]))) is None


def test_schur_counterexample_report():
    rep = shape_report((3, 4, 4, 4, 5, 6, 7, 8, 9), "s", "log-concave")
    fails = [lam for lam, prop in rep.failures]
    assert (6, 1, 1, 1) in fails
    assert fails == [(6, 1, 1, 1), (5, 2, 1, 1), (4, 3, 1, 1), (4, 2, 2, 1), (3, 3, 2, 1)]
    data = rep.to_json()
    assert data["pass"] is False and data["center2"] == area((3, 4, 4, 4, 5, 6, 7, 8, 9))


def test_power_sum_counterexample_report():
    rep = shape_report((3, 4, 5, 5, 5), "p", "log-concave")
    assert rep.failures == [((1, 1, 1, 1, 1), "log-concave")]


def test_report_unknown_check():
    with pytest.raises(ValueError):
        shape_report((2, 3, 3), "e", "concave")


def test_scan_small_and_parallel_order():
    serial = [r.to_json() for r in scan(6, "e", "all")]
    assert len(serial) == 132 and all(r["pass"] for r in serial)
    parallel = [r.to_json() for r in scan(6, "e", "all", jobs=2, chunk=16)]
    assert parallel == serial


def test_scan_guard_and_filter():
    with pytest.raises(GuardError):
        next(scan(13))
    reps = list(scan(5, "p", "log-concave", hess=[(3, 4, 5, 5, 5)]))
    assert len(reps) == 1 and not reps[0].ok
    with pytest.raises(ValueError):
        list(scan(5, hess=[(2, 3, 3)]))
