from os import path

import pytest

from hecke import commands
from hecke.exceptions import HeckeException, IdentityFailed
from hecke.rootdatum import load_datum
from hecke.serialize import SupersingularDataModel, load_file

DATA = path.join(path.dirname(__file__), "data")


@pytest.mark.asyncio
async def test_run_tasks_in_order():
    tasks = [(pow, (2, 3)), (pow, (3, 2)), (pow, (5, 0))]
    assert await commands.run_tasks(tasks) == [8, 9, 1]


@pytest.mark.asyncio
async def test_run_tasks_in_process_pool():
    tasks = [(pow, (2, n)) for n in range(6)]
    assert await commands.run_tasks(tasks, jobs=3) == [1, 2, 4, 8, 16, 32]


@pytest.mark.asyncio
async def test_lemmas_verify():
    report = await commands.lemmas_verify(load_datum("builtin:SL3"), 3)
    assert report.passed
    assert [lemma.lemma for lemma in report.lemmas] == [
        "dominance-square",
        "orthogonal-cone",
        "coset-bruhat",
    ]


@pytest.mark.asyncio
async def test_lemmas_verify_same_result_with_workers():
    rd = load_datum("builtin:Sp4")
    serial = await commands.lemmas_verify(rd, 3, jobs=1)
    parallel = await commands.lemmas_verify(rd, 3, jobs=2)
    assert serial == parallel


@pytest.mark.asyncio
async def test_lemmas_verify_rejects_bound():
    with pytest.raises(HeckeException):
        await commands.lemmas_verify(load_datum("builtin:GL2"), 0)


@pytest.mark.asyncio
async def test_selftest_subset(mocker):
    mocker.patch.object(
        commands,
        "SELFTEST_CHECKS",
        (commands.check_classification, commands.check_quotient_data),
    )
    report = await commands.selftest()
    assert report.passed
    assert [item.name for item in report.items] == [
        "classification-enumeration",
        "quotient-datum",
    ]


def test_rootdata_check_gl2():
    report = commands.rootdata_check(load_datum("builtin:GL2"), "builtin:GL2")
    assert report.passed
    assert report.datum == "builtin:GL2"
    assert report.cartan_type == ["A1"]
    assert report.weyl_group_order == 2
    assert report.fundamental_weights == {"0": [1, 0]}
    assert len(report.orthogonal_partitions) == 2


def test_rootdata_check_pgl2():
    report = commands.rootdata_check(load_datum("builtin:PGL2"))
    assert report.datum == "PGL2"
    assert report.derived_simply_connected is False
    assert report.fundamental_weights == {}


def test_classify_enumerate_fixture():
    report = commands.classify_enumerate(load_file(SupersingularDataModel, commands.GL3_FIXTURE))
    assert report.passed
    assert report.expected == 11
    assert len(report.parameters) == 11
    assert report.collisions == []


def test_classify_enumerate_needs_datum():
    model = load_file(SupersingularDataModel, path.join(DATA, "no_datum.json"))
    with pytest.raises(HeckeException):
        commands.classify_enumerate(model)
    report = commands.classify_enumerate(model, "builtin:GL2")
    assert report.expected == 0
    assert report.passed


def test_ps_analyze():
    rd = load_datum("builtin:GL3")
    report = commands.ps_analyze(rd, commands.load_character("trivial", rd, 3))
    assert report.C == 2
    assert report.length == 4
    assert not report.irreducible

    gl2 = load_datum("builtin:GL2")
    nu = commands.load_character(path.join(DATA, "gl2_unit_character.json"), gl2, 5)
    report = commands.ps_analyze(gl2, nu)
    assert report.q == 3
    assert report.irreducible


def test_principal_series_characters():
    characters = commands.principal_series_characters(load_datum("builtin:GL2"), 5)
    assert len(characters) == 16


def test_verify_cw():
    report = commands.verify_cw(3, 1)
    assert report.passed
    assert report.m == 1
    assert report.c == 1


def test_verify_cw_reports_failure(mocker):
    mocker.patch(
        "hecke.commands.verify_changing_weight_identity",
        side_effect=IdentityFailed({
            "p": 3,
            "m": 0,
            "terms": [{"lambda": [2, 0], "coeff": 1}],
        }),
    )
    report = commands.verify_cw(3, 0)
    assert not report.passed
    assert report.c is None
    assert report.terms[0].weight == [2, 0]


def test_hecke_relation():
    report = commands.hecke_relation(3)
    assert report.passed
    assert report.relation and report.multiplicative


@pytest.mark.parametrize(
    "check",
    [
        commands.check_changing_weight,
        commands.check_satake_leading_terms,
        commands.check_hecke_relation,
        commands.check_cone_lemmas,
        commands.check_coset_bruhat,
        commands.check_parameter_round_trip,
        commands.check_tensor_law,
        commands.check_irreducibility,
        commands.check_principal_series,
        commands.check_classification,
        commands.check_quotient_data,
    ],
)
def test_selftest_checks_pass(check, monkeypatch):
    monkeypatch.setenv("HECKE_HECKE_PRIMES", "2,3")
    item = check()
    assert item.passed, item.detail
    assert item.detail == ""


def test_item_keeps_first_failures():
    item = commands._item("demo", [f"case {i}" for i in range(8)])
    assert not item.passed
    assert item.detail == "; ".join(f"case {i}" for i in range(5))
