"""
Built-in root data and datum files.

``builtin:NAME`` is looked up in HECKE_DATA_DIR first and then in the
catalog shipped next to this module; anything else is read as a path.
"""
import functools
import logging
from os import listdir, path
from typing import Optional

from common.env import data_dir
from hecke.exceptions import UnknownDatum
from hecke.rootdatum.datum import RootDatum, validate_datum
from hecke.serialize import RootDatumModel, load_file, load_model

logger = logging.getLogger("hecke.rootdatum.catalog")

BUILTIN_PREFIX = "builtin:"
SHIPPED_DIR = path.join(path.dirname(__file__), "data")

ALIASES = {
    "A1": "SL2",
    "A1xA1": "SL2xSL2",
    "A2": "SL3",
    "B2": "Sp4",
    "A3": "GL4",
}


def _search_dirs() -> list[str]:
    dirs = []
    extra = data_dir()
    if extra:
        dirs.append(extra)
    dirs.append(SHIPPED_DIR)
    return dirs


def list_builtin() -> list[str]:
    names = set()
    for directory in _search_dirs():
        if not path.isdir(directory):
            continue
        for filename in listdir(directory):
            if filename.endswith(".json"):
                names.add(filename.removesuffix(".json"))
    return sorted(names)


def _builtin_path(name: str) -> Optional[str]:
    name = ALIASES.get(name, name)
    for directory in _search_dirs():
        candidate = path.join(directory, f"{name}.json")
        if path.isfile(candidate):
            return candidate
    return None


def datum_from_model(model: RootDatumModel) -> RootDatum:
    return validate_datum(
        model.rank,
        model.simple_roots,
        model.simple_coroots,
        model.name,
    )


@functools.lru_cache(maxsize=64)
def _load_builtin(filename: str) -> RootDatum:
    return datum_from_model(load_file(RootDatumModel, filename))


def load_datum(source: str) -> RootDatum:
    """
    Resolve ``builtin:NAME`` or a JSON file into a validated datum.
    """
    if source.startswith(BUILTIN_PREFIX):
        name = source[len(BUILTIN_PREFIX):]
        filename = _builtin_path(name)
        if filename is None:
            raise UnknownDatum(
                f"unknown built-in datum {name!r}, "
                f"known: {', '.join(list_builtin() + sorted(ALIASES))}"
            )
        logger.debug("Loading built-in datum %s from %s", name, filename)
        return _load_builtin(filename)

    if not path.isfile(source):
        raise UnknownDatum(f"no datum file {source!r}")
    logger.debug("Loading datum from %s", source)
    return datum_from_model(load_file(RootDatumModel, source))


def parse_datum(raw: dict) -> RootDatum:
    return datum_from_model(load_model(RootDatumModel, raw))


def shipped_data() -> list[RootDatum]:
    return [load_datum(f"{BUILTIN_PREFIX}{name}") for name in list_builtin()]
