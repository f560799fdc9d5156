import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oracles import all_perms  # noqa: E402

from barredperms import BARRED_24135, brute_force_avoiders  # noqa: E402


@pytest.fixture(scope="session")
def perms_upto7():
    """All permutations of 1..n for n = 0..7, keyed by n."""
    return {n: all_perms(n) for n in range(8)}


@pytest.fixture(scope="session")
def avoiders_upto8():
    """Brute-force ~2413~5-avoiders for n = 0..8, keyed by n."""
    return {n: brute_force_avoiders(BARRED_24135, n, jobs=2) for n in range(9)}
