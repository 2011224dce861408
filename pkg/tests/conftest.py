import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from grs.sequences import Sequence, rudin_shapiro_seed, validate_seed


@pytest.fixture(scope="session")
def rs_seed():
    return rudin_shapiro_seed()


@pytest.fixture(scope="session")
def seed_pm2():
    return validate_seed(Sequence.binary("++"), Sequence.binary("+-"), 2)


@pytest.fixture(scope="session")
def seed_pm4():
    return validate_seed(Sequence.binary("+++-"), Sequence.binary("++-+"), 4)


@pytest.fixture(scope="session")
def corpus(rs_seed, seed_pm2, seed_pm4):
    """The three binary seeds the whole suite exercises."""
    return [rs_seed, seed_pm2, seed_pm4]
