"""
The command line verbs.

Every verb returns a report document; hecke.__main__ only parses options,
writes the report and turns ``passed`` into an exit status. Independent
pieces of work run through ``run_tasks`` so that ``--jobs`` changes
nothing but the wall clock.
"""
import asyncio
import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from os import path
from typing import Any, Callable, Optional, Sequence

from common.env import hecke_primes
from hecke.classification import (
    enumerate_parameters,
    principal_series_analyze,
    supersingular_data_from_model,
)
from hecke.exceptions import HeckeException, IdentityFailed, NoIntegralLift
from hecke.gl2 import (
    FiniteRep,
    build_kernel,
    hecke_relation_check,
    satake_transform,
    verify_changing_weight_identity,
)
from hecke.gl2.padic import dominant_below
from hecke.rootdatum import (
    RootDatum,
    cartan_type,
    fundamental_weight,
    is_derived_simply_connected,
    load_datum,
    orthogonal_partitions,
    probe_cocharacter,
    quotient_datum_isomorphic,
    shipped_data,
    subsets,
    verify_cone_lemmas,
    weyl_group_order,
)
from hecke.rootdatum.verifiers import DOMINANCE_SQUARE, ORTHOGONAL_CONE
from hecke.satake import (
    all_parameters,
    brute_force_laurent_factor_search,
    coroot_binomial,
    dominant_box,
    parameterize_from_oracle,
    tau_coroot_minus_one_irreducible,
    tensor,
)
from hecke.scalars import (
    SmoothCharacter,
    TorusCharacterDatum,
    character_from_model,
    field_for,
    get_field,
    prime_power,
    trivial_character,
)
from hecke.serialize import (
    ChangingWeightReport,
    CharacterModel,
    EnumerationReport,
    HeckeRelationReport,
    LemmaReport,
    LemmaSuiteReport,
    PartitionReport,
    PrincipalSeriesReport,
    RootDataCheckReport,
    SatakeTermModel,
    SelftestItem,
    SelftestReport,
    SupersingularDataModel,
    load_file,
)
from hecke.weyl import WeylGroup, verify_coset_bruhat_lemma
from hecke.weyl.cosets import COSET_BRUHAT

logger = logging.getLogger("hecke.commands")

GL3_FIXTURE = path.join(
    path.dirname(__file__), "classification", "data", "gl3_supersingular.json"
)

Task = tuple[Callable[..., Any], tuple]


async def run_tasks(tasks: Sequence[Task], jobs: int = 1) -> list:
    """
    Run independent tasks, in a process pool when jobs > 1. Results come
    back in task order.
    """
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(*args) for fn, args in tasks]
    loop = asyncio.get_running_loop()
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [loop.run_in_executor(pool, fn, *args) for fn, args in tasks]
        return list(await asyncio.gather(*futures))


# rootdata-check


def rootdata_check(rd: RootDatum, name: Optional[str] = None) -> RootDataCheckReport:
    fundamental = {}
    for a in rd.indices:
        try:
            fundamental[str(a)] = list(fundamental_weight(rd, a))
        except NoIntegralLift:
            logger.debug("%s has no integral fundamental weight for %d", rd.name, a)

    partitions = [
        PartitionReport(
            pi1=sorted(pi1),
            pi2=sorted(pi2),
            quotient_isomorphic=quotient_datum_isomorphic(rd, pi1, pi2),
        )
        for pi1, pi2 in orthogonal_partitions(rd)
    ]
    return RootDataCheckReport(
        datum=name or rd.name,
        valid=True,
        cartan_matrix=[list(row) for row in rd.cartan_matrix],
        cartan_type=cartan_type(rd),
        weyl_group_order=weyl_group_order(rd),
        derived_simply_connected=is_derived_simply_connected(rd),
        fundamental_weights=fundamental,
        probe_cocharacters={str(a): list(probe_cocharacter(rd, a)) for a in rd.indices},
        orthogonal_partitions=partitions,
        passed=all(p.quotient_isomorphic for p in partitions),
    )


# lemmas-verify


def coset_bruhat_report(rd: RootDatum) -> LemmaReport:
    """
    The coset Bruhat lemma for every subset theta of the simple roots,
    folded into one report.
    """
    group = WeylGroup(rd)
    cases, failures = 0, []
    for theta in subsets(rd.all_simple):
        report = verify_coset_bruhat_lemma(group, theta)
        cases += report.cases
        failures += report.counterexamples
    return LemmaReport(
        lemma=COSET_BRUHAT,
        datum=rd.name,
        cases=cases,
        counterexamples=failures,
        passed=not failures,
    )


def lemma_tasks(rd: RootDatum, bound: int) -> list[Task]:
    return [
        (verify_cone_lemmas, (rd, DOMINANCE_SQUARE, bound)),
        (verify_cone_lemmas, (rd, ORTHOGONAL_CONE, bound)),
        (coset_bruhat_report, (rd,)),
    ]


async def lemmas_verify(rd: RootDatum, bound: int, jobs: int = 1) -> LemmaSuiteReport:
    if bound < 1:
        raise HeckeException(f"bound must be positive, got {bound}")
    lemmas = await run_tasks(lemma_tasks(rd, bound), jobs)
    return LemmaSuiteReport(
        datum=rd.name,
        bound=bound,
        lemmas=lemmas,
        passed=all(report.passed for report in lemmas),
    )


# classify-enumerate


def classify_enumerate(model: SupersingularDataModel,
                       datum: Optional[str] = None) -> EnumerationReport:
    source = datum or model.datum
    if source is None:
        raise HeckeException("no datum given on the command line or in the input")
    rd = load_datum(source)
    data = supersingular_data_from_model(rd, model)
    enumeration = enumerate_parameters(rd, data)
    injective = enumeration.injective
    return EnumerationReport(
        datum=rd.name,
        expected=enumeration.expected,
        parameters=[desc.to_model() for _, desc in enumeration.entries],
        collisions=[list(pair) for pair in enumeration.collisions],
        injective=injective,
        passed=injective and len(enumeration.entries) == enumeration.expected,
    )


# ps-analyze


def load_character(char: str, rd: RootDatum, q: int) -> TorusCharacterDatum:
    if char == "trivial":
        return trivial_character(q, rd.rank)
    return character_from_model(load_file(CharacterModel, char), rd.rank)


def ps_analyze(rd: RootDatum, nu: TorusCharacterDatum) -> PrincipalSeriesReport:
    analysis = principal_series_analyze(rd, nu)
    return PrincipalSeriesReport(
        datum=rd.name,
        q=nu.q,
        C=analysis.C,
        length=analysis.length,
        irreducible=analysis.irreducible,
        factors=[desc.to_model() for desc in analysis.factors],
    )


# hecke-verify-cw


def verify_cw(p: int, m: int) -> ChangingWeightReport:
    try:
        return verify_changing_weight_identity(p, m).to_model()
    except IdentityFailed as exc:
        return ChangingWeightReport(
            p=p,
            m=m,
            terms=[SatakeTermModel.parse_obj(t) for t in exc.transform["terms"]],
            passed=False,
        )


def hecke_relation(p: int) -> HeckeRelationReport:
    result = hecke_relation_check(p)
    return HeckeRelationReport(
        p=p,
        relation=result.relation,
        multiplicative=result.multiplicative,
        passed=result.passed,
    )


# selftest


def _item(name: str, failures: list[str]) -> SelftestItem:
    for failure in failures:
        logger.warning("%s: %s", name, failure)
    return SelftestItem(name=name, passed=not failures, detail="; ".join(failures[:5]))


def _small_data() -> list[RootDatum]:
    return [rd for rd in shipped_data() if rd.rank <= 2]


def _field_of(q: int):
    return get_field(*prime_power(q))


def check_changing_weight() -> SelftestItem:
    failures = []
    for p, m in itertools.product(hecke_primes(), (0, 1)):
        report = verify_cw(p, m)
        if not report.passed:
            failures.append(f"p={p} m={m}: {[t.dict(by_alias=True) for t in report.terms]}")
    return _item("changing-weight-identity", failures)


def check_satake_leading_terms() -> SelftestItem:
    failures = []
    for p in hecke_primes():
        trivial = FiniteRep(0, 0, p)
        for lam in ((1, 0), (1, 1), (2, 0)):
            transform = satake_transform(build_kernel(trivial, trivial, lam))
            below = set(dominant_below(lam))
            if not transform.coefficient(lam).is_one():
                failures.append(f"p={p}: coefficient of tau_{list(lam)} is not 1")
            if not set(transform.support()) <= below:
                failures.append(f"p={p}: S(T_{list(lam)}) has support {transform.support()}")
    return _item("satake-leading-term", failures)


def check_hecke_relation() -> SelftestItem:
    failures = [
        f"p={report.p}: relation {report.relation}, multiplicative {report.multiplicative}"
        for report in (hecke_relation(p) for p in hecke_primes())
        if not report.passed
    ]
    return _item("hecke-relation", failures)


def check_cone_lemmas() -> SelftestItem:
    failures = []
    for rd in shipped_data():
        for kind in (DOMINANCE_SQUARE, ORTHOGONAL_CONE):
            report = verify_cone_lemmas(rd, kind, 6)
            if not report.passed:
                failures.append(f"{kind} on {rd.name}: {report.counterexamples[:3]}")
    return _item("cone-lemmas", failures)


def check_coset_bruhat() -> SelftestItem:
    failures = []
    for rd in shipped_data():
        report = coset_bruhat_report(rd)
        if not report.passed:
            failures.append(f"{rd.name}: {report.counterexamples[:3]}")
    return _item("coset-bruhat", failures)


def check_parameter_round_trip() -> SelftestItem:
    failures = []
    for rd in _small_data():
        for q in (2, 3, 4, 5):
            for chi in all_parameters(rd, _field_of(q)):
                back = parameterize_from_oracle(chi.evaluate, rd)
                if back != chi:
                    failures.append(f"{chi} came back as {back}")
    return _item("parameter-round-trip", failures)


def check_tensor_law() -> SelftestItem:
    """
    tensor(chi1, chi2) evaluates to the pointwise product. Its Levi has
    simple roots pi_M1 | pi_M2 and its lattice is X_(M1,*,0) & X_(M2,*,0).
    """
    failures = []
    for rd in _small_data():
        box = list(dominant_box(rd, 4))
        for q in (2, 3, 4, 5):
            family = list(all_parameters(rd, _field_of(q)))
            for chi1, chi2 in itertools.product(family, repeat=2):
                product = tensor(chi1, chi2)
                if product.levi != chi1.levi | chi2.levi:
                    failures.append(
                        f"{chi1} x {chi2} has levi {sorted(product.levi)}, "
                        f"expected the union {sorted(chi1.levi | chi2.levi)}"
                    )
                    continue
                for lam in box:
                    if product.evaluate(lam) != chi1.evaluate(lam) * chi2.evaluate(lam):
                        failures.append(f"{chi1} x {chi2} at {list(lam)}")
                        break
    return _item("tensor-law", failures)


def check_irreducibility() -> SelftestItem:
    failures = []
    expected = {"SL2": True, "GL2": True, "PGL2": False}
    for name, irreducible in expected.items():
        rd = load_datum(f"builtin:{name}")
        if tau_coroot_minus_one_irreducible(rd, 0) != irreducible:
            failures.append(f"{name}: criterion says {not irreducible}")
    for rd in _small_data():
        for a in rd.indices:
            criterion = tau_coroot_minus_one_irreducible(rd, a)
            found = brute_force_laurent_factor_search(coroot_binomial(rd, a, 3), 2, 3)
            if criterion != (found is None):
                failures.append(f"{rd.name} alpha={a}: criterion {criterion}, search {found}")
    return _item("irreducibility-criterion", failures)


def principal_series_characters(rd: RootDatum, q: int) -> list[TorusCharacterDatum]:
    """
    Characters trivial at the uniformizer with every combination of unit
    exponents.
    """
    field = field_for(q)
    out = []
    for exponents in itertools.product(range(q - 1), repeat=rd.rank):
        out.append(TorusCharacterDatum.standard(
            [SmoothCharacter(e, field.one, q) for e in exponents]
        ))
    return out


def check_principal_series() -> SelftestItem:
    failures = []
    for name, q in itertools.product(("GL2", "GL3"), (3, 5)):
        rd = load_datum(f"builtin:{name}")
        for nu in principal_series_characters(rd, q):
            analysis = principal_series_analyze(rd, nu)
            C = sum(
                1 for c in rd.simple_coroots if nu.compose_with_cocharacter(c).is_trivial()
            )
            fingerprints = {desc.fingerprint() for desc in analysis.factors}
            if (analysis.C != C or analysis.length != 2**C
                    or len(analysis.factors) != 2**C or len(fingerprints) != 2**C):
                failures.append(f"{name} q={q} {nu}: C={analysis.C}, {len(analysis.factors)} factors")
    return _item("principal-series-length", failures)


def check_classification() -> SelftestItem:
    report = classify_enumerate(load_file(SupersingularDataModel, GL3_FIXTURE))
    failures = []
    if len(report.parameters) != report.expected:
        failures.append(f"{len(report.parameters)} parameters, expected {report.expected}")
    if not report.injective:
        failures.append(f"collisions {report.collisions}")
    return _item("classification-enumeration", failures)


def check_quotient_data() -> SelftestItem:
    failures = []
    for rd in shipped_data():
        if len(cartan_type(rd)) < 2:
            continue
        for pi1, pi2 in orthogonal_partitions(rd):
            if not quotient_datum_isomorphic(rd, pi1, pi2):
                failures.append(f"{rd.name}: pi1={sorted(pi1)} pi2={sorted(pi2)}")
    return _item("quotient-datum", failures)


SELFTEST_CHECKS = (
    check_changing_weight,
    check_satake_leading_terms,
    check_hecke_relation,
    check_cone_lemmas,
    check_coset_bruhat,
    check_parameter_round_trip,
    check_tensor_law,
    check_irreducibility,
    check_principal_series,
    check_classification,
    check_quotient_data,
)


async def selftest(jobs: int = 1) -> SelftestReport:
    items = await run_tasks([(check, ()) for check in SELFTEST_CHECKS], jobs)
    return SelftestReport(items=items, passed=all(item.passed for item in items))
