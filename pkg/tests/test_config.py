import logging

import pytest
from pydantic import ValidationError

from src.config import DEFAULT_CONFIG, configure_logging, load_settings, parse_sizes


@pytest.mark.parametrize("text, expected", [("6..48", (6, 48)), (" 10..10 ", (10, 10)), ("7", (7, 7))])
def test_parse_sizes(text, expected):
    assert parse_sizes(text) == expected


@pytest.mark.parametrize("text", ["0..4", "9..3", "a..b", ""])
def test_parse_sizes_rejects(text):
    with pytest.raises(ValueError):
        parse_sizes(text)


def test_defaults(clean_env):
    settings = load_settings()
    assert settings.node_budget == DEFAULT_CONFIG["node_budget"]
    assert settings.time_budget is None
    assert settings.workers == 1
    assert settings.strict is False
    assert settings.sizes == (6, 48)
    assert settings.log_level == "WARNING"


def test_config_dict_overrides_defaults(clean_env):
    settings = load_settings({"suite_count": 12, "sizes": "8..20", "strict": True})
    assert settings.suite_count == 12
    assert settings.sizes == (8, 20)
    assert settings.strict is True


def test_environment_overrides_config(clean_env):
    clean_env.setenv("PACKING_NODE_BUDGET", "5000")
    clean_env.setenv("PACKING_TIME_BUDGET", "2.5")
    clean_env.setenv("PACKING_STRICT", "yes")
    clean_env.setenv("PACKING_SIZES", "10..12")
    clean_env.setenv("PACKING_LOG_LEVEL", "debug")
    settings = load_settings({"node_budget": 7})
    assert settings.node_budget == 5000
    assert settings.time_budget == 2.5
    assert settings.strict is True
    assert settings.sizes == (10, 12)
    assert settings.log_level == "DEBUG"


def test_invalid_environment(clean_env):
    clean_env.setenv("PACKING_WORKERS", "0")
    with pytest.raises(ValidationError):
        load_settings()


def test_configure_logging_once():
    root = logging.getLogger("src")
    before = list(root.handlers)
    try:
        configure_logging("info")
        configure_logging("debug")
        assert root.level == logging.DEBUG
        assert len(root.handlers) == max(1, len(before))
    finally:
        root.handlers = before
        root.setLevel(logging.NOTSET)
