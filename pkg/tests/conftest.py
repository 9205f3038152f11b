import contextlib

import pytest

_RESULTS = []


@pytest.fixture
def criterion():
    """Context manager recording one acceptance line; failures are recorded then re-raised."""

    @contextlib.contextmanager
    def record(number, title):
        notes = []
        try:
            yield notes
        except BaseException:
            _RESULTS.append((number, "FAIL", title, notes))
            raise
        _RESULTS.append((number, "PASS", title, notes))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, verdict, title, notes in sorted(_RESULTS, key=lambda r: r[0]):
        extra = f" [{'; '.join(notes)}]" if notes else ""
        terminalreporter.write_line(f"{verdict} criterion {number:2d}: {title}{extra}")
