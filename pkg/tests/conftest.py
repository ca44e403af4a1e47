import pytest

from chromod.qpoly import QPoly, QRat, q_int

# acceptance results collected by the criterion marker, printed at session end
_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    num, title = mark.args
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        status = "PASS" if rep.outcome == "passed" else "FAIL"
        detail = ""
        if rep.outcome != "passed" and call.excinfo is not None:
            detail = str(call.excinfo.value).splitlines()[0][:160]
        _CRITERIA[num] = (title, status, detail)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        title, status, detail = _CRITERIA[num]
        line = f"CRITERION {num:2d} {status}  {title}"
        tr.write_line(line + (f"  [{detail}]" if detail else ""))
    passed = sum(1 for v in _CRITERIA.values() if v[1] == "PASS")
    tr.write_line(f"{passed}/{len(_CRITERIA)} criteria pass")


def P(*coeffs):
    return QPoly(coeffs)


@pytest.fixture
def poly():
    return P
