import unittest.mock
from unittest.mock import patch

import pytest
import toml

from core import config
from core.config import AppConfig

MOCK_CONFIG: AppConfig = {
    "limits": {
        "max_class": 6,
        "bch_max_class": 5,
        "cohomology_max_dimension": 12,
        "cohomology_component_limit": 100,
        "weight_search_limit": 1000,
        "massey_class": 3,
    },
    "obstruction": {"nilpotency_depth": 2, "full_battery": False, "group_sample_size": 4},
    "report": {"caveat": "necessary conditions only"},
}


def test_get_config_success() -> None:
    """get_config loads the packaged resource."""
    with patch("importlib.resources.files") as mock_files:
        mock_file_handle = unittest.mock.mock_open(read_data=toml.dumps(MOCK_CONFIG))
        mock_files.return_value.joinpath.return_value.open = mock_file_handle
        cfg = config.get_config()
        assert cfg["limits"]["max_class"] == 6
        assert cfg["obstruction"]["group_sample_size"] == 4


def test_packaged_defaults() -> None:
    cfg = config.get_config()
    assert cfg["limits"]["max_class"] == 10
    assert cfg["limits"]["bch_max_class"] == 8
    assert cfg["limits"]["cohomology_max_dimension"] == 20
    assert cfg["limits"]["massey_class"] == 3
    assert cfg["obstruction"]["nilpotency_depth"] == 2
    assert cfg["obstruction"]["full_battery"] is False
    assert "necessary conditions" in cfg["report"]["caveat"]


def test_get_config_caching() -> None:
    """The configuration is cached after the first call."""
    with patch("core.config._load_config", return_value=MOCK_CONFIG) as mock_load:
        cfg1 = config.get_config()
        cfg2 = config.get_config()
        assert cfg1 is cfg2
        mock_load.assert_called_once()


def test_environment_overrides_max_class(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv(config.MAX_CLASS_ENV, "4")
    assert config.get_config()["limits"]["max_class"] == 4


@pytest.mark.parametrize("raw", ["zero", "0", "-3"])
def test_environment_override_must_be_positive(monkeypatch: pytest.MonkeyPatch, raw: str) -> None:
    monkeypatch.setenv(config.MAX_CLASS_ENV, raw)
    with pytest.raises(ValueError, match=config.MAX_CLASS_ENV):
        config.get_config()


def test_load_config_file_not_found() -> None:
    """FileNotFoundError is raised if the config file is missing."""
    with patch("importlib.resources.files") as mock_files:
        mock_files.return_value.joinpath.return_value.open.side_effect = FileNotFoundError
        with pytest.raises(FileNotFoundError, match="Configuration file not found"):
            config._load_config()


def test_load_config_decode_error() -> None:
    """ValueError is raised on a TOML decoding error."""
    with patch("importlib.resources.files") as mock_files:
        mock_file_handle = unittest.mock.mock_open(read_data="invalid toml")
        mock_files.return_value.joinpath.return_value.open = mock_file_handle
        with patch("toml.load", side_effect=toml.TomlDecodeError("Test error", "doc", 0)):
            with pytest.raises(ValueError, match="Error decoding"):
                config._load_config()
