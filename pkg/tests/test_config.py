"""Tests for configuration loading."""

from etheta.utils.config import load_config


class TestLoadConfig:
    """Test defaults, YAML merge and environment overrides."""

    def test_defaults(self, tmp_path, monkeypatch) -> None:
        monkeypatch.chdir(tmp_path)
        monkeypatch.delenv("ETHETA_CONFIG", raising=False)
        monkeypatch.delenv("ETHETA_WORKERS", raising=False)
        config = load_config()
        assert config["verify"]["max_points"] == 4
        assert config["verify"]["workers"] is None
        assert config["limits"]["point_limit"] == 16
        assert config["output"]["format"] is None

    def test_yaml_merge(self, config_file, monkeypatch) -> None:
        monkeypatch.delenv("ETHETA_WORKERS", raising=False)
        config = load_config(str(config_file))
        assert config["verify"]["max_points"] == 2
        assert config["verify"]["chunk_size"] == 8
        assert config["verify"]["max_map_points"] == 3
        assert config["output"]["format"] == "json-lines"

    def test_config_from_environment(self, config_file, tmp_path, monkeypatch) -> None:
        monkeypatch.chdir(tmp_path)
        monkeypatch.setenv("ETHETA_CONFIG", str(config_file))
        monkeypatch.delenv("ETHETA_WORKERS", raising=False)
        assert load_config()["verify"]["workers"] == 1

    def test_default_location(self, config_file, tmp_path, monkeypatch) -> None:
        monkeypatch.chdir(tmp_path)
        monkeypatch.delenv("ETHETA_CONFIG", raising=False)
        assert load_config()["verify"]["max_points"] == 2

    def test_workers_override(self, config_file, monkeypatch) -> None:
        monkeypatch.setenv("ETHETA_WORKERS", "6")
        assert load_config(str(config_file))["verify"]["workers"] == 6

    def test_missing_file_falls_back_to_defaults(self, tmp_path, monkeypatch) -> None:
        monkeypatch.delenv("ETHETA_WORKERS", raising=False)
        config = load_config(str(tmp_path / "absent.yml"))
        assert config["verify"]["chunk_size"] == 64
