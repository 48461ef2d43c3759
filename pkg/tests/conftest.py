import pytest
from hypothesis import HealthCheck, settings

from galoispoints.curves import ballico_hefez, cuspidal, fermat, random_smooth

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def fermat3():
    return fermat(3, 1)


@pytest.fixture(scope="session")
def bh3():
    return ballico_hefez(3, 1)


@pytest.fixture(scope="session")
def fermat4():
    return fermat(2, 2)


@pytest.fixture(scope="session")
def cusp5():
    return cuspidal(5, d=4, seed=1)


@pytest.fixture(scope="session")
def quartic7():
    return random_smooth(7, d=4, seed=5)



def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion number and summary")
    config._criteria = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call" and not (rep.when == "setup" and rep.failed):
        return
    n, text = mark.args
    ok = rep.passed
    note = getattr(item, "criterion_note", "")
    item.config._criteria.setdefault(n, []).append((ok, text, note))


def pytest_terminal_summary(terminalreporter, config):
    crit = getattr(config, "_criteria", {})
    if not crit:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(crit):
        for ok, text, note in crit[n]:
            line = "criterion %d: %s  %s" % (n, "PASS" if ok else "FAIL", text)
            if note:
                line += "  [%s]" % note
            terminalreporter.write_line(line)
