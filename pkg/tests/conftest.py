import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from frlex.pipeline import Resources  # noqa: E402
from frlex.tagset import default_inventory  # noqa: E402


@pytest.fixture(scope="session")
def inv():
    return default_inventory()


@pytest.fixture(scope="session")
def res():
    """Packaged defaults: inventory, rules, fixture lexicon, endings."""
    return Resources()


@pytest.fixture(scope="session")
def lexicon(res):
    return res.lexicon
