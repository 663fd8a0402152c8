from collections import OrderedDict

import pytest
from hypothesis import settings

from nspec.corpus import generate_corpus
from nspec.polyparse import load_input

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

T444 = "x^4+y^4+z^4+x*y*z"
F_BASE = "y^12+z^13+x^4*y^2+x^2*y^4+x^6*z^3+x^3*z^6+y^3*z+y*z^3"


def f_family(j: int) -> str:
    return f"x^{j}+{F_BASE}"


@pytest.fixture(scope="session")
def corpus():
    return generate_corpus(1, 200)


@pytest.fixture(scope="session")
def t444():
    return load_input(T444)


# One PASS/FAIL line per acceptance criterion, printed after the run.

_criteria: "OrderedDict[int, dict]" = OrderedDict()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by a test")


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            num, title = m.args
            _criteria.setdefault(num, {"title": title, "ok": True, "seen": 0})
            item.user_properties.append(("criterion", num))


def pytest_runtest_logreport(report):
    num = dict(report.user_properties).get("criterion")
    if num is None:
        return
    entry = _criteria.get(num)
    if entry is None:
        return
    if report.when == "call" or report.outcome != "passed":
        entry["seen"] += report.when == "call"
        if report.outcome != "passed":
            entry["ok"] = False


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        e = _criteria[num]
        if not e["seen"] and e["ok"]:
            status = "NOT RUN"
        else:
            status = "PASS" if e["ok"] else "FAIL"
        terminalreporter.write_line(f"{status} criterion {num}: {e['title']}")
