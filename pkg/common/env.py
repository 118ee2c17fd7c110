"""
Environment variables
"""
import os


def get_env():
    return os.environ.get("ENV", "development")


def is_prod():
    return get_env() == "production"


def weyl_cap() -> int:
    return int(os.environ.get("HECKE_WEYL_CAP", "1152"))


def search_cap() -> int:
    return int(os.environ.get("HECKE_SEARCH_CAP", "200000"))


def default_jobs() -> int:
    return int(os.environ.get("HECKE_JOBS", "1"))


def hecke_primes() -> list[int]:
    raw = os.environ.get("HECKE_HECKE_PRIMES", "2,3,5")
    return [int(p) for p in raw.split(",") if p.strip()]


def data_dir():
    return os.environ.get("HECKE_DATA_DIR")
