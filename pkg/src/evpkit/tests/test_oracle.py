import json
import random
import time
from dataclasses import replace
from typing import Callable

import pytest
from pytest_mock import MockerFixture

from evpkit.core.config import settings
from evpkit.core.exceptions import TooLarge
from evpkit.numeric import LinearSystem, RationalVector, lp_feasible
from evpkit.oracle import audit, fm_feasible, fm_relation, scan_maximal
from evpkit.principle import ChainStep, EkelandCertificate, ekeland_point, relation_r
from evpkit.space import Instance, build_instance, require_valid
from evpkit.tests.helpers import generators


def flagship() -> Instance:
    return require_valid(json.loads(generators.FLAGSHIP.read_text(encoding="utf-8")))


def test_fm_examples() -> None:
    result = fm_feasible(LinearSystem.from_lists([[1]], [1], [True]))
    assert result.feasible
    assert result.witness == (1,)

    assert not fm_feasible(LinearSystem.from_lists([[1]], [-1], [True]))

    segment = LinearSystem.from_lists([[1, 0, 1, 0], [0, 1, 0, 1], [1, 1, 0, 0]], [1, 1, 1], [True] * 4)
    result = fm_feasible(segment)
    assert result.feasible
    assert segment.satisfied_by(result.witness)


def test_fm_handles_pure_inequalities_and_free_variables() -> None:
    # x - y = 0 with x >= 0 and y free; x + y = -2 forces x = y = -1, which is infeasible
    assert not fm_feasible(LinearSystem.from_lists([[1, -1], [1, 1]], [0, -2], [True, False]))
    result = fm_feasible(LinearSystem.from_lists([[1, -1]], [3], [False, True]))
    assert result.feasible


def test_fm_agrees_with_simplex() -> None:
    rng = random.Random(1234)
    feasible = 0
    for _ in range(1000):
        system = generators.create_system(rng, max_rows=8)
        fm = fm_feasible(system)
        assert fm.feasible == lp_feasible(system).feasible
        if fm.feasible:
            assert system.satisfied_by(fm.witness)
            feasible += 1
    assert 0 < feasible < 1000


def test_fm_keeps_looser_rows_with_fewer_origins() -> None:
    # a tighter parallel row with more originals must not replace a looser one
    system = LinearSystem.from_lists(
        [[-1, -3, -1, -1, -1], [-3, 3, 2, -2, -2], [1, -2, -2, 0, -1]],
        [2, -3, -1],
        [True] * 5,
    )
    assert not lp_feasible(system)
    assert not fm_feasible(system)


def test_fm_agrees_with_simplex_on_inequality_heavy_systems() -> None:
    # few equalities over many sign-constrained variables leave most of the work to elimination
    rng = random.Random(99)
    verdicts = set()
    for _ in range(3000):
        system = generators.create_system(rng, max_variables=6, max_rows=3)
        fm = fm_feasible(system)
        assert fm.feasible == lp_feasible(system).feasible
        if fm.feasible:
            assert system.satisfied_by(fm.witness)
        verdicts.add(fm.feasible)
    assert verdicts == {True, False}


def test_fm_budget() -> None:
    system = LinearSystem.from_lists([[1, 1, 1]], [1], [True] * 3)
    with pytest.raises(TooLarge):
        fm_feasible(system, budget=1)
    assert fm_feasible(system, budget=3).feasible


def test_fm_budget_comes_from_settings(mocker: MockerFixture) -> None:
    mocker.patch.object(settings, "FM_BUDGET", 1)
    with pytest.raises(TooLarge):
        fm_feasible(LinearSystem.from_lists([[1, 1, 1]], [1], [True] * 3))


def test_fm_relation_agrees_with_relation_r() -> None:
    for seed in range(8):
        inst = generators.create_instance(500 + seed, max_points=6)
        for u in range(inst.size):
            for v in range(inst.size):
                assert bool(fm_relation(inst, u, v)) == (relation_r(inst, u, v) is not None)


def test_scan_examples() -> None:
    assert scan_maximal(build_instance(["only"], [[0]], [[1]], [[1]], [[1]])) == {0}
    scalar = build_instance(["a", "b"], [[0, 1], [1, 0]], [[5], [3]], [[1]], [[1]])
    assert scan_maximal(scalar, 1) == {1}
    assert scan_maximal(flagship()) == {2}


def test_scan_contains_every_ekeland_point() -> None:
    for seed in range(10):
        inst = generators.create_instance(600 + seed, max_points=8)
        maximal = scan_maximal(inst)
        assert maximal
        assert {ekeland_point(inst, x).x_bar for x in range(inst.size)} <= maximal


def test_scan_does_not_depend_on_workers() -> None:
    inst = generators.create_instance(7, n=6)
    assert scan_maximal(inst, workers=2) == scan_maximal(inst, workers=1)


def test_audit_passes_genuine_certificates() -> None:
    inst = flagship()
    report = audit(inst, ekeland_point(inst, 0))
    assert report.overall
    assert {check.name for check in report.checks} == {
        "structure",
        "scalarizer",
        "chain_witnesses",
        "scalar_trace",
        "inclusion",
        "maximality",
    }

    for seed in range(8):
        inst = generators.create_instance(700 + seed, max_points=7)
        for x in range(inst.size):
            assert audit(inst, ekeland_point(inst, x)).overall


def test_ekeland_certificates_confirmed_by_elimination() -> None:
    certificates = 0
    for seed in range(200):
        inst = generators.create_instance(2000 + seed, max_points=20, max_dim=4)
        x_bars = set()
        for x in range(inst.size):
            cert = ekeland_point(inst, x)
            assert cert.inclusion_witness.problems(inst, x, cert.x_bar, cert.scale) == []
            points = cert.points
            for i, step in enumerate(cert.chain):
                assert step.witness.problems(inst, points[i], step.point, cert.scale) == []
                drop = cert.scalar_trace[i] - cert.scalar_trace[i + 1]
                assert drop >= cert.scale * inst.distance(points[i], step.point) > 0
            x_bars.add(cert.x_bar)
            certificates += 1
        for x_bar in x_bars:
            assert not any(fm_relation(inst, x_bar, z) for z in range(inst.size) if z != x_bar)
    assert certificates >= 200


def test_hundred_points_solve_and_verify() -> None:
    inst = generators.create_instance(4242, n=100, m=3)
    started = time.perf_counter()
    report = audit(inst, ekeland_point(inst, 0))
    elapsed = time.perf_counter() - started
    assert report.overall
    assert elapsed < 30


def perturb_witness(inst: Instance, cert: EkelandCertificate) -> EkelandCertificate:
    first = cert.chain[0]
    bumped = replace(first.witness, k=first.witness.k + RationalVector.unit(inst.dim, 0))
    return replace(cert, chain=(ChainStep(first.point, bumped),) + cert.chain[1:])


def truncate_chain(inst: Instance, cert: EkelandCertificate) -> EkelandCertificate:
    return replace(cert, chain=cert.chain[:-1])


def swap_x_bar(inst: Instance, cert: EkelandCertificate) -> EkelandCertificate:
    """Stop the chain one step early and claim its last interior point as x_bar."""
    chain = cert.chain[:-1]
    return replace(cert, chain=chain, x_bar=cert.points[-2], scalar_trace=cert.scalar_trace[:-1])


def test_audit_flags_a_perturbed_witness() -> None:
    inst = flagship()
    report = audit(inst, perturb_witness(inst, ekeland_point(inst, 0)))
    assert not report.overall
    assert "chain_witnesses" in report.failed()
    assert "substitution residual" in next(c.detail for c in report.checks if c.name == "chain_witnesses")


def test_audit_flags_a_swapped_x_bar() -> None:
    inst = flagship()
    report = audit(inst, swap_x_bar(inst, ekeland_point(inst, 0)))
    assert not report.overall
    assert "maximality" in report.failed()


@pytest.mark.parametrize("mutation", [perturb_witness, truncate_chain, swap_x_bar])
def test_audit_flags_every_mutation(mutation: Callable[[Instance, EkelandCertificate], EkelandCertificate]) -> None:
    # 34 per mutation, so over 100 mutated certificates in all
    mutated = 0
    for seed in range(300):
        if mutated >= 34:
            break
        inst = generators.create_instance(800 + seed, max_points=8)
        for x in range(inst.size):
            cert = ekeland_point(inst, x)
            if not cert.chain:
                continue
            assert not audit(inst, mutation(inst, cert)).overall
            mutated += 1
    assert mutated >= 34
