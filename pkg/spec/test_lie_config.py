"""Test file for lie_config.py"""

import pytest  # pylint: disable=import-error

from lie_endo_toolbox import DEFAULT_SEED, DEFAULT_WORKERS
from lie_endo_toolbox.lie_config import LieConfig


def write_conf(tmp_path, body):
    """Write an INI file with a [lie_endo_toolbox] section"""
    path = tmp_path / "lie.conf"
    path.write_text("[lie_endo_toolbox]\n" + body, encoding="utf-8")
    return str(path)


class TestLieConfig:
    """Tests for class LieConfig"""

    @staticmethod
    def test_defaults(monkeypatch, tmp_path):
        """Without any source the built-in defaults apply"""
        monkeypatch.chdir(tmp_path)
        for name in ("LIE_SEED", "LIE_WORKERS", "LIE_LOG_LEVEL", "LIE_MAX_CASIMIR"):
            monkeypatch.delenv(name, raising=False)
        config = LieConfig()
        assert config.seed == DEFAULT_SEED
        assert config.workers == DEFAULT_WORKERS
        assert config.log_level == "INFO"
        assert config.max_casimir is None

    @staticmethod
    def test_resolution_order(monkeypatch, tmp_path):
        """Explicit values beat the environment, which beats the file"""
        conf_file = write_conf(tmp_path, "seed = 5\nworkers = 2\nlog_level = debug\n")
        monkeypatch.delenv("LIE_LOG_LEVEL", raising=False)
        monkeypatch.delenv("LIE_WORKERS", raising=False)
        monkeypatch.setenv("LIE_SEED", "9")

        config = LieConfig(conf_file=conf_file)
        assert config.seed == 9
        assert config.workers == 2
        assert config.log_level == "DEBUG"

        config = LieConfig(conf_file=conf_file, seed=1)
        assert config.as_dict()['seed'] == 1

    @staticmethod
    def test_default_conf_file(monkeypatch, tmp_path):
        """lie.conf in the working directory is read when present"""
        write_conf(tmp_path, "max_casimir = 2\n")
        monkeypatch.chdir(tmp_path)
        monkeypatch.delenv("LIE_MAX_CASIMIR", raising=False)
        assert LieConfig().max_casimir == 2

    @staticmethod
    def test_invalid_values(monkeypatch, tmp_path):
        """Unreadable files and malformed values are errors"""
        with pytest.raises(FileNotFoundError):
            LieConfig(conf_file=str(tmp_path / "missing.conf"))
        monkeypatch.setenv("LIE_WORKERS", "many")
        with pytest.raises(ValueError):
            LieConfig(conf_file=write_conf(tmp_path, ""))

    @staticmethod
    def test_unknown_setting():
        """Unknown attributes raise AttributeError"""
        with pytest.raises(AttributeError):
            LieConfig().unknown  # pylint: disable=expression-not-assigned
