import json
import os

import pytest

from spindle import cache


@pytest.fixture
def cache_env(tmp_path, monkeypatch):
    monkeypatch.setenv("SPINDLE_CACHE_DIR", str(tmp_path))
    return tmp_path


def test_disabled_without_env(monkeypatch):
    monkeypatch.delenv("SPINDLE_CACHE_DIR", raising=False)
    key = cache.cache_key("dynkin", "A", 2, (1, 1))
    cache.store(key, {"x": 1})
    assert cache.load(key) is None


def test_round_trip(cache_env):
    key = cache.cache_key("dynkin", "G", 2, (1, 0))
    assert cache.load(key) is None
    cache.store(key, {"coefficients": ["1", "2"], "variable": "q"})
    assert cache.load(key) == {"coefficients": ["1", "2"], "variable": "q"}


def test_key_depends_on_inputs():
    base = cache.cache_key("dynkin", "A", 2, (1, 1))
    assert cache.cache_key("dynkin", "A", 2, (1, 2)) != base
    assert cache.cache_key("dynkin", "A", 3, (1, 1)) != base
    assert cache.cache_key("dynkin", "B", 2, (1, 1)) != base
    assert cache.cache_key("character", "A", 2, (1, 1)) != base
    assert cache.cache_key("dynkin", "A", 2, (1, 1), extra="weyl") != base
    assert cache.cache_key("dynkin", "A", 2, (1, 1)) == base


def test_key_depends_on_schema_version(monkeypatch):
    before = cache.cache_key("dynkin", "A", 2, (1, 1))
    monkeypatch.setattr(cache, "SCHEMA_VERSION", 2)
    assert cache.cache_key("dynkin", "A", 2, (1, 1)) != before


def test_double_store_idempotent(cache_env):
    key = cache.cache_key("dynkin", "A", 1, (2,))
    cache.store(key, [1, 2, 3])
    cache.store(key, [1, 2, 3])
    assert cache.load(key) == [1, 2, 3]
    # no leftover temp files
    assert all(not f.endswith(".tmp") for f in os.listdir(cache_env))


def test_corrupt_entry_recovers(cache_env, capsys):
    key = cache.cache_key("dynkin", "A", 1, (3,))
    cache.store(key, {"v": 1})
    path = os.path.join(str(cache_env), key + ".json")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("{ not json")
    assert cache.load(key) is None
    assert "corrupt cache entry" in capsys.readouterr().err
    assert not os.path.exists(path)
    # the cached() wrapper recomputes and repopulates
    value = cache.cached("dynkin", "A", 1, (3,), lambda: {"v": 1})
    assert value == {"v": 1}
    with open(path, encoding="utf-8") as fh:
        assert json.load(fh) == {"v": 1}


def test_cached_skips_compute_on_hit(cache_env):
    calls = []

    def compute():
        calls.append(1)
        return {"v": 7}

    assert cache.cached("op", "A", 2, (1, 0), compute) == {"v": 7}
    assert cache.cached("op", "A", 2, (1, 0), compute) == {"v": 7}
    assert len(calls) == 1
