from importlib.resources import files

import pytest

from mixoa.additive import null_space_array, read_check_matrix
from mixoa.alphabet import ArrayMultiset, MixedAlphabet

DATA = files("mixoa") / "data"

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def example_matrix():
    return read_check_matrix(DATA / "example1.hmat")


@pytest.fixture(scope="session")
def example_oa(example_matrix):
    return null_space_array(example_matrix)


@pytest.fixture
def even_weight():
    alphabet = MixedAlphabet((2, 2, 2))
    return ArrayMultiset.from_rows(alphabet, [w for w in
                                              [(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)]])


@pytest.fixture
def acceptance_record():
    def record(number: int, ok: bool, detail: str):
        ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
