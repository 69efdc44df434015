import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from dynreg.gallery import gallery


@pytest.fixture(scope="session")
def gal():
    return gallery()
