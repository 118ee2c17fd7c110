"""
Application information
"""
from common.env import get_env, default_jobs, data_dir, hecke_primes


class Info:
    """
    Application information singleton class
    """

    _name = None

    def __init__(self, name=None):
        if not self._name and not name:
            raise ValueError("Info.name is not set")
        if self._name and name and name != self._name:
            raise ValueError("Info.name is already set")
        if name:
            Info._name = name

        self._name = Info._name

    def name(self):
        return self._name

    def env(self):
        return get_env()

    def jobs(self):
        return default_jobs()

    def data_dir(self):
        return data_dir()

    def hecke_primes(self):
        return hecke_primes()
