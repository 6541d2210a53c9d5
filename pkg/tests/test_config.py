"""Tests for the chainr configuration system."""

import json
from unittest import mock

import yaml

from chainr.config import DEFAULTS, ChainrConfig, find_chainr_directory, get_config, reset_config


class TestChainrConfig:
    """Test ChainrConfig class functionality."""

    def setup_method(self):
        """Reset global config before each test."""
        reset_config()

    def test_defaults_without_directory(self, tmp_path):
        """Without a .chainr directory the built-in defaults apply."""
        config = ChainrConfig(tmp_path)

        assert not config.has_chainr_directory()
        assert config.get_chainr_directory() is None
        assert config.get_project_root() is None
        assert config.get_config_value("sampling.bound") == 7
        assert config.get_config_value("builders.normalization") == 1
        assert config.get_config_value("output.indent") == 2

    def test_directory_discovery(self, tmp_path):
        """Test .chainr directory discovery walking up from a subdirectory."""
        chainr_dir = tmp_path / ".chainr"
        chainr_dir.mkdir()
        deep_dir = tmp_path / "runs" / "sl11"
        deep_dir.mkdir(parents=True)

        config = ChainrConfig(deep_dir)

        assert config.has_chainr_directory()
        assert config.get_chainr_directory() == chainr_dir
        assert config.get_project_root() == tmp_path

    def test_yaml_overrides_merge_with_defaults(self, tmp_path):
        chainr_dir = tmp_path / ".chainr"
        chainr_dir.mkdir()
        with open(chainr_dir / "config.yaml", "w") as f:
            yaml.dump({"sampling": {"seed": 11}, "verify": {"preview_terms": 3}}, f)

        config = ChainrConfig(tmp_path)

        assert config.get_config_value("sampling.seed") == 11
        assert config.get_config_value("sampling.bound") == 7
        assert config.get_config_value("verify.preview_terms") == 3
        assert config.get_config_value("nonexistent.key", "default") == "default"

    def test_json_config(self, tmp_path):
        chainr_dir = tmp_path / ".chainr"
        chainr_dir.mkdir()
        (chainr_dir / "config.json").write_text(json.dumps({"output": {"indent": 4}}))

        config = ChainrConfig(tmp_path)

        assert config.config_file == chainr_dir / "config.json"
        assert config.get_config_value("output.indent") == 4

    def test_config_file_priority(self, tmp_path):
        """config.yaml wins over config.json."""
        chainr_dir = tmp_path / ".chainr"
        chainr_dir.mkdir()
        (chainr_dir / "config.yaml").write_text("builders:\n  normalization: 2\n")
        (chainr_dir / "config.json").write_text('{"builders": {"normalization": 1}}')

        config = ChainrConfig(tmp_path)

        assert config.get_config_value("builders.normalization") == 2

    def test_malformed_file_falls_back_to_defaults(self, tmp_path):
        chainr_dir = tmp_path / ".chainr"
        chainr_dir.mkdir()
        (chainr_dir / "config.yaml").write_text("- just\n- a list\n")

        config = ChainrConfig(tmp_path)

        assert config.config_data == DEFAULTS

    def test_defaults_not_shared(self, tmp_path):
        config = ChainrConfig(tmp_path)
        config.config_data["sampling"]["bound"] = 99

        assert DEFAULTS["sampling"]["bound"] == 7
        assert ChainrConfig(tmp_path).get_config_value("sampling.bound") == 7


class TestGlobalConfig:
    """Test global configuration functions."""

    def setup_method(self):
        """Reset global config before each test."""
        reset_config()

    def teardown_method(self):
        reset_config()

    def test_get_config_singleton(self, tmp_path):
        (tmp_path / ".chainr").mkdir()

        with mock.patch("pathlib.Path.cwd", return_value=tmp_path):
            config1 = get_config()
            config2 = get_config()

            assert config1 is config2
            assert config1.has_chainr_directory()

    def test_reset_config(self, tmp_path):
        (tmp_path / ".chainr").mkdir()

        with mock.patch("pathlib.Path.cwd", return_value=tmp_path):
            config1 = get_config()
            reset_config()
            config2 = get_config()

            assert config2 is not config1
            assert config2.has_chainr_directory()

    def test_find_chainr_directory(self, tmp_path):
        chainr_dir = tmp_path / ".chainr"
        chainr_dir.mkdir()
        deep_dir = tmp_path / "a" / "b" / "c"
        deep_dir.mkdir(parents=True)

        assert find_chainr_directory(deep_dir) == chainr_dir
