import pytest


@pytest.fixture
def criterion_report(request):
    """Emit one 'criterion NN <label>: PASS/FAIL' line per acceptance
    test, visible even under output capture, then assert."""
    reporter = request.config.pluginmanager.getplugin("terminalreporter")

    def report(num: int, label: str, failures: list) -> None:
        verdict = "FAIL" if failures else "PASS"
        line = "criterion %02d %s: %s" % (num, label, verdict)
        if reporter is not None:
            reporter.ensure_newline()
            reporter.write_line(line)
        else:
            print(line)
        assert not failures, "criterion %02d (%s): %s" % (num, label, failures[:3])

    return report
