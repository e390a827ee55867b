import os
import sys
from collections.abc import Iterator
from pathlib import Path

import pytest
from _pytest.monkeypatch import MonkeyPatch
from hypothesis import Phase, Verbosity, settings

# Add the project root to the Python path
project_root = os.path.abspath(os.path.join(os.path.dirname(__file__), ".."))
if project_root not in sys.path:
    sys.path.insert(0, project_root)

# Add src directory to Python path (like main.py does) - CRITICAL for coverage
src_path = os.path.abspath(os.path.join(os.path.dirname(__file__), "..", "src"))
if src_path not in sys.path:
    sys.path.insert(0, src_path)

from core import config  # noqa: E402
from core.nilpotent import LiePresentation  # noqa: E402
from core.presentation_file import read_presentation  # noqa: E402

FIXTURES = Path(project_root) / "fixtures"

# Exact arithmetic is slow on large draws; keep examples few and drop the deadline
settings.register_profile(
    "fast",
    max_examples=10,
    deadline=None,
    phases=[Phase.explicit, Phase.generate],
    verbosity=Verbosity.normal,
    suppress_health_check=[],
)
settings.load_profile("fast")


@pytest.fixture(autouse=True)
def isolated_config(monkeypatch: MonkeyPatch) -> Iterator[None]:
    """Every test starts from the packaged configuration with no environment override."""
    monkeypatch.delenv(config.MAX_CLASS_ENV, raising=False)
    config.reset_config()
    yield
    config.reset_config()


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def heisenberg() -> LiePresentation:
    return read_presentation(FIXTURES / "heisenberg.lie")


@pytest.fixture(scope="session")
def abelian() -> LiePresentation:
    return read_presentation(FIXTURES / "abelian.lie")


@pytest.fixture(scope="session")
def free2() -> LiePresentation:
    return read_presentation(FIXTURES / "free2.lie")


@pytest.fixture(scope="session")
def genus2() -> LiePresentation:
    return read_presentation(FIXTURES / "genus2.lie")


@pytest.fixture(scope="session")
def n5() -> LiePresentation:
    return read_presentation(FIXTURES / "n5.lie")


@pytest.fixture(scope="session")
def free4_quintic() -> LiePresentation:
    return read_presentation(FIXTURES / "free4_quintic.lie")
