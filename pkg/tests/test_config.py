"""
Testes para o carregamento da configuração TOML e para Settings.
"""

from pathlib import Path

import pytest

from app.core.config import Settings, dump_config, load_config, parse_config
from app.core.errors import ConfigurationError
from app.models.common import SensingScheme
from app.models.energy import EnergyParams
from app.models.simulation import CALIBRATE, SimConfig


class TestLoadConfig:
    """Testes de load_config / parse_config."""

    def test_empty_file_gives_defaults(self, tmp_path: Path) -> None:
        path = tmp_path / "empty.toml"
        path.write_text("", encoding="utf-8")

        config = load_config(path)

        assert config == SimConfig()
        assert (config.geometry.rows, config.geometry.cols) == (1024, 1024)
        assert config.geometry.word_width == 32
        assert config.sensing.scheme is SensingScheme.CURRENT
        assert config.energy == CALIBRATE

    def test_none_gives_defaults(self) -> None:
        assert load_config(None) == SimConfig()

    def test_sections_are_parsed(self) -> None:
        config = parse_config(
            """
            parallelism = 0.5

            [geometry]
            rows = 256
            cols = 256
            word_width = 8

            [sensing]
            scheme = "scheme1"
            """
        )

        assert config.parallelism == 0.5
        assert config.geometry.rows == 256
        assert config.sensing.scheme is SensingScheme.SCHEME1

    def test_gread_asymmetry_violation_names_field(self) -> None:
        with pytest.raises(ConfigurationError) as exc_info:
            parse_config("[bias]\nv_gread1 = 1.2\nv_gread2 = 1.0\n")

        assert "v_gread2 > v_gread1" in exc_info.value.message
        assert exc_info.value.setting == "bias"
        assert exc_info.value.code == "CONFIGURATION_ERROR"

    def test_equal_gread_voltages_rejected(self) -> None:
        """Tensões iguais (ativação simétrica) nunca chegam ao simulador."""
        with pytest.raises(ConfigurationError) as exc_info:
            parse_config("[bias]\nv_gread1 = 1.0\nv_gread2 = 1.0\n")

        assert exc_info.value.setting == "bias"
        assert exc_info.value.code == "CONFIGURATION_ERROR"

    def test_unknown_key_rejected(self) -> None:
        with pytest.raises(ConfigurationError) as exc_info:
            parse_config("[device]\nvt_mid = 0.6\n")
        assert exc_info.value.setting == "device.vt_mid"

    def test_unknown_section_rejected(self) -> None:
        with pytest.raises(ConfigurationError):
            parse_config("[plotting]\ndpi = 300\n")

    def test_syntax_error_reports_line(self) -> None:
        with pytest.raises(ConfigurationError) as exc_info:
            parse_config("[device]\nvt_lrs = \n")
        assert "line 2" in exc_info.value.message

    def test_missing_file(self, tmp_path: Path) -> None:
        with pytest.raises(ConfigurationError, match="Não foi possível ler"):
            load_config(tmp_path / "missing.toml")

    def test_operand_rows_must_fit(self) -> None:
        with pytest.raises(ConfigurationError, match="linhas de operandos"):
            parse_config("[operands]\nrow_a = 0\nrow_b = 2048\n")

    def test_delta_must_fit_v_read(self) -> None:
        with pytest.raises(ConfigurationError, match="6·delta"):
            parse_config("[sensing]\ndelta = 0.2\n")

    def test_explicit_energy_table(self, energy_params: EnergyParams) -> None:
        config = SimConfig(energy=energy_params)
        parsed = parse_config(dump_config(config))
        assert isinstance(parsed.energy, EnergyParams)
        assert parsed.energy == energy_params

    def test_invalid_energy_string_rejected(self) -> None:
        with pytest.raises(ConfigurationError):
            parse_config('energy = "fit"\n')


class TestDumpConfig:
    """Testes de dump_config."""

    def test_round_trip_defaults(self) -> None:
        config = SimConfig()
        assert parse_config(dump_config(config)) == config

    def test_round_trip_normalizes(self) -> None:
        """dump(load(x)) = normalize(x): defaults explícitos e ordem fixa."""
        config = parse_config('[sensing]\nscheme = "scheme2"\n')
        text = dump_config(config)

        assert parse_config(text) == config
        assert dump_config(parse_config(text)) == text
        assert 'scheme = "scheme2"' in text
        assert "[bias]" in text


class TestSettings:
    """Testes de Settings."""

    def test_defaults(self) -> None:
        settings = Settings(_env_file=None)  # type: ignore[call-arg]
        assert settings.APP_NAME == "ADRA CiM Simulator"
        assert settings.CONFIG_PATH is None
        assert settings.LOG_LEVEL == "WARNING"

    def test_environment_override(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("CONFIG_PATH", "configs/scheme1.toml")
        monkeypatch.setenv("LOG_LEVEL", "DEBUG")

        settings = Settings(_env_file=None)  # type: ignore[call-arg]

        assert settings.CONFIG_PATH == Path("configs/scheme1.toml")
        assert settings.LOG_LEVEL == "DEBUG"


class TestShippedConfigs:
    """Os arquivos em configs/ carregam sem erro."""

    CONFIG_DIR = Path(__file__).resolve().parent.parent / "configs"

    def test_default_matches_builtin(self) -> None:
        assert load_config(self.CONFIG_DIR / "default.toml") == SimConfig()

    @pytest.mark.parametrize(
        ("name", "scheme"),
        [("scheme1.toml", SensingScheme.SCHEME1), ("scheme2.toml", SensingScheme.SCHEME2)],
    )
    def test_voltage_configs(self, name: str, scheme: SensingScheme) -> None:
        assert load_config(self.CONFIG_DIR / name).sensing.scheme is scheme
