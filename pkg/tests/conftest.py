import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from braidminors import _kernels
from braidminors.braidword import Band, BandWord, PositiveWord, generator

GOLDEN = Path(__file__).parent / "golden"
FIG1 = "B7: b(4,7) b(3,5) b(2,4) b(1,3) b(2,6) b(5,7) b(1,6)"

BACKENDS = [_kernels.python_backend]
if _kernels.compiled_backend is not None:
    BACKENDS.append(_kernels.compiled_backend)


@pytest.fixture(scope="module", params=BACKENDS, ids=lambda b: b.__name__.rsplit(".", 1)[-1])
def backend(request):
    return request.param


@pytest.fixture
def golden():
    return GOLDEN


def random_positive(rng: random.Random, n: int, length: int) -> PositiveWord:
    return PositiveWord(n, tuple(generator(rng.randint(1, n - 1)) for _ in range(length)))


def random_bandword(rng: random.Random, n: int, length: int) -> BandWord:
    letters = []
    for _ in range(length):
        i = rng.randint(1, n - 1)
        j = rng.randint(i + 1, n)
        letters.append(Band(i, j))
    return BandWord(n, tuple(letters))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
