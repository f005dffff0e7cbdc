import logging
from fractions import Fraction

import pytest
from pydantic import ValidationError

from app.config import Settings, get_settings
from app.schemas import LambdaSpec, OutputFormat, RunConfig
from app.utils import configure_logging, floor_divmod, format_fraction, format_vector, parse_fraction


def test_settings_from_environment(monkeypatch):
    monkeypatch.setenv("LOGW_MAX_BASIS", "10")
    monkeypatch.setenv("logw_log_level", "DEBUG")
    settings = Settings()
    assert settings.max_basis == 10
    assert settings.log_level == "DEBUG"


def test_settings_are_cached():
    assert get_settings() is get_settings()


def test_configure_logging():
    configure_logging("debug")
    assert logging.getLogger().level == logging.DEBUG
    configure_logging()
    assert logging.getLogger().level == logging.WARNING


@pytest.mark.parametrize(
    "text, expected",
    [("3", Fraction(3)), ("-7/2", Fraction(-7, 2)), (" 0.25 ", Fraction(1, 4))],
)
def test_parse_fraction(text, expected):
    assert parse_fraction(text) == expected


@pytest.mark.parametrize("text", ["", "1/0", "abc"])
def test_parse_fraction_rejects(text):
    with pytest.raises(ValueError):
        parse_fraction(text)


def test_formatting():
    assert format_fraction(Fraction(-4, 6)) == "-2/3"
    assert format_fraction(5) == "5"
    assert format_vector((1, Fraction(1, 2))) == "(1,1/2)"


def test_floor_divmod():
    assert floor_divmod((-3, 3), 2) == ((-2, 1), (1, 1))


@pytest.mark.parametrize(
    "text, hat, s",
    [
        ("0", 0, None),
        ("hat=1,s=0,1", 1, [0, 1]),
        ("hat=1", 1, None),
        ("s=0,1", 0, [0, 1]),
        (" s=2 ", 0, [2]),
    ],
)
def test_lambda_spec_parse(text, hat, s):
    spec = LambdaSpec.parse(text)
    assert spec.hat == hat
    assert spec.s == s


@pytest.mark.parametrize("text", ["foo", "hat=x", "s=-1", "hat=-1", "s=a,b", ""])
def test_lambda_spec_parse_rejects(text):
    with pytest.raises(ValueError):
        LambdaSpec.parse(text)


def test_run_config_validation():
    config = RunConfig(type="A2", p=3, format="csv")
    assert config.format == OutputFormat.CSV
    assert config.lam == LambdaSpec()
    with pytest.raises(ValidationError):
        RunConfig(type="A2", p=1)
    with pytest.raises(ValidationError):
        RunConfig(type="A2", max_basis=0)


def test_schema_examples():
    """Test that field examples land in the JSON schema as lists"""
    spec = LambdaSpec.model_json_schema()
    assert spec["properties"]["hat"]["examples"] == [0]
    assert spec["example"] == {"hat": 1, "s": [0, 1]}
    assert RunConfig.model_json_schema()["properties"]["type"]["examples"] == ["A2"]
    with pytest.raises(ValidationError):
        LambdaSpec(s=[0, -1])
