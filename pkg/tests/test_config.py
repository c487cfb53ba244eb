"""Configuration and model validation tests."""

from pathlib import Path

import pytest

import config
from exceptions import InvalidParameterError
from models import DiniSpec, Family, GBesselParams, RadiusQuery, SeriesConfig


def test_series_config_defaults(monkeypatch):
    monkeypatch.delenv("GBESSEL_TOL", raising=False)
    monkeypatch.delenv("GBESSEL_MAX_TERMS", raising=False)
    cfg = config.series_config()
    assert cfg == SeriesConfig(max_terms=config.SERIES_MAX_TERMS, rel_tol=config.SERIES_REL_TOL)


def test_series_config_reads_environment_at_call_time(monkeypatch):
    monkeypatch.setenv("GBESSEL_TOL", "1e-12")
    monkeypatch.setenv("GBESSEL_MAX_TERMS", "64")
    cfg = config.series_config()
    assert cfg.rel_tol == 1e-12
    assert cfg.max_terms == 64


def test_explicit_values_take_precedence(monkeypatch):
    monkeypatch.setenv("GBESSEL_TOL", "1e-12")
    monkeypatch.setenv("GBESSEL_MAX_TERMS", "64")
    cfg = config.series_config(tol=1e-14, max_terms=300)
    assert (cfg.rel_tol, cfg.max_terms) == (1e-14, 300)


def test_blank_environment_values_are_ignored(monkeypatch):
    monkeypatch.setenv("GBESSEL_TOL", "  ")
    monkeypatch.delenv("GBESSEL_MAX_TERMS", raising=False)
    assert config.series_config().rel_tol == config.SERIES_REL_TOL


@pytest.mark.parametrize(
    "name, raw",
    [
        ("GBESSEL_TOL", "tiny"),
        ("GBESSEL_TOL", "0"),
        ("GBESSEL_TOL", "1.5"),
        ("GBESSEL_MAX_TERMS", "many"),
        ("GBESSEL_MAX_TERMS", "4"),
    ],
)
def test_malformed_environment_values(monkeypatch, name, raw):
    monkeypatch.setenv(name, raw)
    with pytest.raises(config.ConfigurationError, match=name):
        config.series_config()


def test_table_workers_from_environment(monkeypatch):
    monkeypatch.delenv("GBESSEL_TABLE_WORKERS", raising=False)
    assert config.table_workers() == config.TABLE_WORKERS
    monkeypatch.setenv("GBESSEL_TABLE_WORKERS", "2")
    assert config.table_workers() == 2


@pytest.mark.parametrize("raw", ["abc", "0", "-3", "2.5"])
def test_malformed_table_workers(monkeypatch, raw):
    monkeypatch.setenv("GBESSEL_TABLE_WORKERS", raw)
    with pytest.raises(config.ConfigurationError, match="GBESSEL_TABLE_WORKERS"):
        config.table_workers()


def test_defaults_need_no_env_file(monkeypatch):
    for name in ("GBESSEL_TOL", "GBESSEL_MAX_TERMS", "GBESSEL_TABLE_WORKERS"):
        monkeypatch.delenv(name, raising=False)
    assert config.series_config().max_terms == config.SERIES_MAX_TERMS
    assert config.table_workers() == config.TABLE_WORKERS
    setup = (Path(__file__).resolve().parent.parent / "scripts" / "setup_local.sh").read_text(encoding="utf-8")
    assert "cp .env.example" not in setup


def test_series_config_validation():
    with pytest.raises(InvalidParameterError):
        SeriesConfig(max_terms=4)
    with pytest.raises(InvalidParameterError):
        SeriesConfig(rel_tol=0.0)
    refined = SeriesConfig(max_terms=100, rel_tol=1e-14).refined()
    assert (refined.max_terms, refined.rel_tol) == (200, 5e-15)


def test_parameter_models_validate():
    with pytest.raises(InvalidParameterError):
        GBesselParams(a=0, b=1, p=0.5, c=1)
    with pytest.raises(InvalidParameterError):
        RadiusQuery(a=1, nu=0.7, beta=1.0, family="f")
    with pytest.raises(InvalidParameterError):
        RadiusQuery(a=2, nu=-0.6, beta=0.0, family="g")
    with pytest.raises(InvalidParameterError):
        Family.parse("k")
    assert RadiusQuery(a=1, nu=0.7, beta=0.0, family="G").family is Family.G
    assert DiniSpec(nu=0.7, alpha=0.3).gamma_coef == 1.0


def test_special_case_parameters():
    assert GBesselParams.bessel_j(0.7) == GBesselParams(a=1, b=1, p=0.7, c=1)
    assert GBesselParams.bessel_i(0.7) == GBesselParams(a=1, b=1, p=0.7, c=-1)
    normalized = GBesselParams.normalized(3, 0.8)
    assert (normalized.b, normalized.p, normalized.c) == (5.0, pytest.approx(0.4), 1.0)
    assert normalized.s == pytest.approx(3.4)
