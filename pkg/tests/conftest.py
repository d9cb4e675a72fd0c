import pytest


@pytest.fixture
def report_line(capsys):
    """Print a line straight to the terminal, bypassing capture."""

    def emit(text):
        with capsys.disabled():
            print(text)

    return emit
