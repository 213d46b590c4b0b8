"""
Shared fixtures: cache and log directories point at a scratch location, and
expensive spaces are built once per session.
"""
import os
import tempfile

# must run before src.config is imported
_SCRATCH = tempfile.mkdtemp(prefix="modforms-tests-")
os.environ.setdefault("MODFORMS_CACHE_DIR", os.path.join(_SCRATCH, "spaces"))
os.environ.setdefault("MODFORMS_LOG_DIR", os.path.join(_SCRATCH, "logs"))

import pytest  # noqa: E402

from src.exactseries import Grid, QExpansion  # noqa: E402
from src.generators import basis_S_chi  # noqa: E402
from src.heckeforms import newspace_level2, newspace_level4  # noqa: E402


# q - 12q^3 + 54q^5 - 88q^7 - 99q^9 + 540q^11 - 418q^13
GOLDEN_WEIGHT6 = {1: 1, 3: -12, 5: 54, 7: -88, 9: -99, 11: 540, 13: -418}


@pytest.fixture(scope="session")
def golden_weight6():
    """The k = 6 level-4 newform through q^13 on the integer grid"""
    return QExpansion(Grid.INTEGER, 28, {2 * n: c for n, c in GOLDEN_WEIGHT6.items()})


@pytest.fixture(scope="session")
def newspace6():
    return newspace_level4(6)


@pytest.fixture(scope="session")
def newform6(newspace6):
    return newspace6.basis[0]


@pytest.fixture(scope="session")
def chi_space6():
    return basis_S_chi(6)


@pytest.fixture(scope="session")
def level2_newspace8():
    return newspace_level2(8)


@pytest.fixture
def cache_dir(tmp_path):
    """Empty per-test cache directory"""
    path = tmp_path / "spaces"
    path.mkdir()
    return path
