import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): an acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker and report.when == "call":
        report.user_properties.append(("criterion", marker.args))


def pytest_terminal_summary(terminalreporter):
    rows = []
    for key in ("passed", "failed"):
        for report in terminalreporter.stats.get(key, []):
            for name, value in report.user_properties:
                if name == "criterion":
                    rows.append((*value, report.passed))
    if not rows:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number, title, ok in sorted(rows):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} {number:>2}  {title}")
