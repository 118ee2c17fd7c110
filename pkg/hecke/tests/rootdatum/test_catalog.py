import json

import pytest

from hecke.exceptions import NonCartan, SchemaError, UnknownDatum
from hecke.rootdatum import list_builtin, load_datum, parse_datum, shipped_data


def test_list_builtin():
    names = list_builtin()
    for name in ("G2", "GL2", "GL2xGL2", "GL3", "PGL2", "SL2", "SL3", "Sp4"):
        assert name in names


def test_aliases_resolve():
    assert load_datum("builtin:A2").name == "SL3"
    assert load_datum("builtin:B2").name == "Sp4"


def test_unknown_builtin():
    with pytest.raises(UnknownDatum):
        load_datum("builtin:E9")


def test_missing_file():
    with pytest.raises(UnknownDatum):
        load_datum("/nonexistent/datum.json")


def test_load_from_file(tmp_path):
    filename = tmp_path / "mine.json"
    filename.write_text(
        json.dumps({
            "schema": 1,
            "name": "mine",
            "rank": 1,
            "simple_roots": [[2]],
            "simple_coroots": [[1]],
        })
    )
    rd = load_datum(str(filename))
    assert rd.name == "mine"
    assert rd.cartan_matrix == ((2,),)


def test_data_dir_extends_catalog(tmp_path, monkeypatch):
    (tmp_path / "Extra.json").write_text(
        json.dumps({
            "schema": 1,
            "name": "Extra",
            "rank": 1,
            "simple_roots": [[1]],
            "simple_coroots": [[2]],
        })
    )
    monkeypatch.setenv("HECKE_DATA_DIR", str(tmp_path))
    assert "Extra" in list_builtin()
    assert load_datum("builtin:Extra").simple_coroots == ((2,),)


def test_bad_json(tmp_path):
    filename = tmp_path / "broken.json"
    filename.write_text("{not json")
    with pytest.raises(SchemaError):
        load_datum(str(filename))


def test_parse_datum_validates():
    with pytest.raises(NonCartan):
        parse_datum({"rank": 1, "simple_roots": [[1]], "simple_coroots": [[1]]})
    with pytest.raises(SchemaError):
        parse_datum({"rank": 1, "simple_roots": [[2]]})


def test_shipped_data_all_valid():
    data = shipped_data()
    assert len(data) >= 10
    assert all(rd.rank >= rd.semisimple_rank for rd in data)
