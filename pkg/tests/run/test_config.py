import pytest

from outerdom.config import builtin_config_dir, get_config_path, load_config


@pytest.mark.parametrize("name", ["tightness", "verify", "planar_gap", "random"])
def test_builtin_configs(name):
    path = get_config_path(name)
    assert path == (builtin_config_dir / f"{name}.yaml").resolve()
    assert load_config(name)["name"] == name


def test_direct_path(tmp_path):
    path = tmp_path / "mine.yaml"
    path.write_text("name: verify\nn_max: 4\n")
    assert load_config(path) == {"name": "verify", "n_max": 4}


def test_env_config_dir(tmp_path, monkeypatch):
    (tmp_path / "sweep.yaml").write_text("name: tightness\nn_list: [10]\n")
    monkeypatch.setenv("OUTERDOM_CONFIG_DIR", str(tmp_path))
    assert load_config("sweep")["n_list"] == [10]


def test_empty_file_is_empty_config(tmp_path):
    path = tmp_path / "empty.yaml"
    path.write_text("")
    assert load_config(path) == {}


def test_missing_config():
    with pytest.raises(FileNotFoundError, match="Searched locations"):
        get_config_path("does-not-exist")
