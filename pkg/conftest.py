"""
Repository root marker for pytest, so ``common`` and ``hecke`` import
without installation.
"""
import pytest

from common.info import Info


@pytest.fixture(autouse=True)
def hecke_env(monkeypatch):
    for name in ("ENV", "HECKE_WEYL_CAP", "HECKE_SEARCH_CAP", "HECKE_HECKE_PRIMES",
                 "HECKE_DATA_DIR", "HECKE_JOBS"):
        monkeypatch.delenv(name, raising=False)
    Info._name = None
    yield
