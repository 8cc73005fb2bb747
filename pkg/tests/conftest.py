from functools import lru_cache
from pathlib import Path

import pytest

from toricsec import PointConfiguration, secondary_polytope
from toricsec.documents import read_config

CORPUS = Path(__file__).resolve().parent.parent / "corpus"

SEGMENT2 = ((0,), (1,), (2,))
SQUARE = ((0, 0), (1, 0), (0, 1), (1, 1))
TWISTED_CUBIC = ((0,), (1,), (2,), (3,))


def corpus_documents():
    return [read_config(p) for p in sorted(CORPUS.glob("*.txt"))]


@lru_cache(maxsize=None)
def config_of(points) -> PointConfiguration:
    return PointConfiguration(points)


@lru_cache(maxsize=None)
def secondary_of(points):
    return secondary_polytope(config_of(points))


@pytest.fixture(params=[d.name for d in corpus_documents()])
def corpus_doc(request):
    return next(d for d in corpus_documents() if d.name == request.param)


# Filled in by the acceptance module; printed after the run.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
