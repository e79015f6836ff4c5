import random

import pytest

from deltakit.errors import InvalidGenerators
from deltakit.presentation import is_symmetric
from deltakit.semigroup import validate_generators

ACCEPTANCE_RESULTS = {}


def random_nonsymmetric_triples(count, max_n3, seed):
    """Deterministic sample of valid nonsymmetric triples with n3 <= max_n3."""
    rng = random.Random(seed)
    out = []
    seen = set()
    while len(out) < count:
        raw = rng.sample(range(2, max_n3 + 1), 3)
        try:
            g = validate_generators(*raw)
        except InvalidGenerators:
            continue
        if is_symmetric(g) or g in seen:
            continue
        seen.add(g)
        out.append(g)
    return out


@pytest.fixture(scope="session")
def small_triples():
    return random_nonsymmetric_triples(40, 60, seed=7)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        ok, desc = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {key}: {desc}")
