#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved

"""
Golden checks: every worked example the package promises to reproduce,
compared against the JSON fixtures bundled in wignerff/model_zoo/golden.
Each check is registered in GOLDEN_CHECK_REGISTRY as ``check(quick) -> str``;
it returns a short detail line, or raises GoldenMismatchError.
"""

import collections
import json
import logging
import time
from collections import OrderedDict
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence

import numpy as np
from fvcore.common.file_io import PathManager
from fvcore.common.registry import Registry
from wignerff.classify import (
    conjugate_net,
    covariance_residual,
    discriminant_D,
    gamma,
    gamma_grid_rows,
    gamma_slice,
    generator_actions,
    similarity_orbits,
    special_gamma,
    special_net_odd_prime,
    tensor_product_nets_n4,
    unitary_for_linear,
    w_variant_census,
)
from wignerff.field import field_of_order, field_tables, format_element, make_field
from wignerff.geometry import LinearMap, PhasePoint, sl2_group, striations
from wignerff.model_zoo import get_golden_file
from wignerff.nets import (
    RayChoice,
    build_net,
    enumerate_choices,
    mub_family,
    nets_equal,
    reference_pair,
    representative,
    verify_mub,
)
from wignerff.operators import BasisPair, WeylOperators
from wignerff.utils.errors import ConjugationError, GoldenMismatchError, NonUnitDeterminant
from wignerff.utils.misc import NUMERIC_TOL, format_table
from wignerff.wigner import (
    inverse_wigner,
    line_probabilities,
    named_state,
    phase_point_operators,
    random_density_matrices,
    tomographic_reconstruct,
    wigner_transform,
)

logger = logging.getLogger(__name__)

GOLDEN_CHECK_REGISTRY = Registry("GOLDEN_CHECK")

SKIPPED = "skipped"


def load_golden(name: str) -> Dict[str, Any]:
    with PathManager.open(get_golden_file(name), "r") as f:
        return json.load(f)


def _expect(ok: bool, message: str):
    if not ok:
        raise GoldenMismatchError(message)


def _expect_close(observed, expected, what: str, tol: float = NUMERIC_TOL):
    err = float(np.max(np.abs(np.asarray(observed) - np.asarray(expected))))
    _expect(err < tol, f"{what} differs from the golden value by {err:.3g}")


def _parse_complex(s: str) -> complex:
    return complex(s.replace("i", "j"))


@GOLDEN_CHECK_REGISTRY.register()
def field_tables_f4(quick: bool) -> str:
    golden = load_golden("field_tables_f4.json")
    spec = make_field(golden["field"]["r"], golden["field"]["n"])
    add, mul = field_tables(spec)
    _expect([format_element(x) for x in spec.elements()] == golden["elements"], "element order")
    _expect(add == golden["add"], "addition table")
    _expect(mul == golden["mul"], "multiplication table")
    return "addition and multiplication tables of F_4"


@GOLDEN_CHECK_REGISTRY.register()
def striation_bases_f4(quick: bool) -> str:
    golden = load_golden("mub_f4.json")
    pair = reference_pair()
    family = mub_family(pair.spec, pair)
    for S, basis, direction, rows in zip(
        striations(pair.spec), family.bases, golden["directions"], golden["bases"]
    ):
        _expect(str(S.direction) == direction, f"striation {S.index} has direction {S.direction}")
        for t, (v, row) in enumerate(zip(basis.vectors, rows)):
            g = golden["scale"] * np.array([_parse_complex(x) for x in row])
            overlap = abs(np.vdot(g, v))
            _expect(abs(overlap - 1) < NUMERIC_TOL, f"label {t} of striation {direction}")
    return "5 labelled bases of the reference pair"


@GOLDEN_CHECK_REGISTRY.register()
def mub_property(quick: bool) -> str:
    orders = (2, 3, 4, 5) if quick else (2, 3, 4, 5, 7, 8, 9)
    for N in orders:
        spec = field_of_order(N)
        report = verify_mub(mub_family(spec, BasisPair.default(spec)))
        _expect(report.ok(NUMERIC_TOL), f"F_{N} bases are not mutually unbiased: {report}")
    return f"N = {', '.join(map(str, orders))}"


@GOLDEN_CHECK_REGISTRY.register()
def wigner_tables_n4(quick: bool) -> str:
    golden = load_golden("wigner_n4.json")
    pair = reference_pair()
    net = build_net(pair, RayChoice.parse(pair.spec, golden["choice"]))
    for name, expected in golden["states"].items():
        rho = named_state(name, 4)
        _expect_close(wigner_transform(rho, net).values, expected["values"], name)
        P = line_probabilities(rho, net)
        if "vertical_marginals" in expected:
            _expect_close(P[0], expected["vertical_marginals"], f"{name} vertical marginals")
        if "horizontal_marginals" in expected:
            _expect_close(P[1], expected["horizontal_marginals"], f"{name} horizontal marginals")
    return ", ".join(golden["states"])


@GOLDEN_CHECK_REGISTRY.register()
def phase_point_algebra(quick: bool) -> str:
    for N in (2, 3, 4, 5):
        spec = field_of_order(N)
        elems = spec.elements()
        choice = RayChoice(tuple(elems[(i * i + 1) % N] for i in range(N + 1)))
        try:
            phase_point_operators(build_net(BasisPair.default(spec), choice)).check_invariants()
        except AssertionError as e:
            raise GoldenMismatchError(f"F_{N}: {e}")
    return "Hermitian, unit trace, orthogonal, line sums for N = 2..5"


def _origin_cells(net) -> List[List[str]]:
    """Gamma_{00 gamma} as formatted cells, rows from the largest p down."""
    origin = PhasePoint.origin(net.spec)
    return [row[1:] for row in gamma_grid_rows(gamma_slice(net, origin, origin), net.spec)]


def _corner(choice: RayChoice, family) -> int:
    """16 Gamma_000 of the net of a choice over the reference pair."""
    net = build_net(family.pair, choice, family)
    origin = PhasePoint.origin(net.spec)
    return int(round(16 * gamma_slice(net, origin, origin)[0, 0].real))


@GOLDEN_CHECK_REGISTRY.register()
def gamma_values(quick: bool) -> str:
    golden = load_golden("gamma.json")
    f2 = make_field(2)
    rows = _origin_cells(build_net(BasisPair.default(f2), RayChoice.zero(f2)))
    _expect(rows == golden["qubit_origin_slice"]["rows"], f"qubit slice {rows}")

    f3 = make_field(3)
    flat = {v for row in _origin_cells(special_net_odd_prime(f3)) for v in row}
    _expect(flat == {golden["qutrit_special_origin_slice"]}, f"qutrit special slice {flat}")

    pair = BasisPair.default(f3)
    report = similarity_orbits(f3, pair, burnside=False)
    generic = [o for o in report.orbits if len(o) > 1][0][0]
    cells = _origin_cells(build_net(pair, generic))
    corner = cells[-1][0]
    _expect(corner == golden["qutrit_generic"]["corner"], f"qutrit generic corner {corner}")
    zeros = sum(row.count("0") for row in cells)
    _expect(zeros == golden["qutrit_generic"]["zeros"], f"qutrit generic has {zeros} zeros")

    pair = reference_pair()
    family = mub_family(pair.spec, pair)
    counts = collections.Counter(
        _corner(c, family) for c in enumerate_choices(pair.spec, representatives=True)
    )
    expected = {int(k): v for k, v in golden["four_corner_counts"].items()}
    _expect(dict(counts) == expected, f"16 Gamma_000 over F_4 classes: {dict(counts)}")
    return "N = 2, 3 slices and the N = 4 corner census"


@GOLDEN_CHECK_REGISTRY.register()
def class_counts(quick: bool) -> str:
    golden = load_golden("classes.json")
    for N, sizes in golden["orbit_sizes"].items():
        spec = field_of_order(int(N))
        pair = reference_pair() if spec.N == 4 else BasisPair.default(spec)
        report = similarity_orbits(spec, pair)
        _expect(report.orbit_sizes == sizes, f"F_{N} orbit sizes {report.orbit_sizes}")
    return "N = 3, 4 orbit sizes with Burnside agreement"


@GOLDEN_CHECK_REGISTRY.register()
def burnside_n5(quick: bool) -> str:
    if quick:
        return SKIPPED
    golden = load_golden("classes.json")
    spec = make_field(5)
    report = similarity_orbits(spec, BasisPair.default(spec))
    _expect(report.orbit_count == golden["orbit_count"]["5"], f"{report.orbit_count} orbits")
    _expect(report.burnside_count == report.orbit_count, "Burnside count")
    return f"{report.orbit_count} orbits over F_5"


@GOLDEN_CHECK_REGISTRY.register()
def discriminant(quick: bool) -> str:
    golden = load_golden("classes.json")
    spec = make_field(2, 2)
    levels = collections.Counter(
        format_element(discriminant_D(c)) for c in enumerate_choices(spec, representatives=True)
    )
    _expect(dict(levels) == golden["discriminant_level_sets"], f"level sets {dict(levels)}")
    pair = reference_pair()
    family = mub_family(spec, pair)
    report = similarity_orbits(spec, pair, burnside=False, family=family)
    for orbit, D in zip(report.orbits, report.discriminants):
        _expect(all(discriminant_D(c) == D for c in orbit), f"D not constant on the orbit of {orbit[0]}")
        corner = _corner(orbit[0], family)
        _expect(
            corner == golden["discriminant_corner"][format_element(D)],
            f"orbit with D = {D} has 16 Gamma_000 = {corner}",
        )
    return "D is a complete similarity invariant over F_4"


@GOLDEN_CHECK_REGISTRY.register()
def unitary_covariance(quick: bool) -> str:
    orders = (2, 3, 4) if quick else (2, 3, 4, 5)
    for N in orders:
        spec = field_of_order(N)
        pair = BasisPair.default(spec)
        ops = WeylOperators(pair)
        for L in sl2_group(spec):
            try:
                U = unitary_for_linear(L, pair, ops=ops)
            except ConjugationError as e:
                raise GoldenMismatchError(str(e))
            residual = covariance_residual(U, L, ops)
            _expect(residual < NUMERIC_TOL, f"U_L for {L!r} misses by {residual:.3g}")
    spec = make_field(3)
    probe = LinearMap.diagonal(spec.from_prime(2), spec.from_prime(2))
    try:
        unitary_for_linear(probe, BasisPair.default(spec))
    except NonUnitDeterminant:
        pass
    else:
        raise GoldenMismatchError("a determinant 4 map was accepted")
    return f"every unit-determinant map for N = {', '.join(map(str, orders))}"


@GOLDEN_CHECK_REGISTRY.register()
def special_net(quick: bool) -> str:
    orders = (3, 5) if quick else (3, 5, 7)
    for N in orders:
        spec = make_field(N)
        net = special_net_odd_prime(spec)
        factor = spec.from_prime(2) / net.pair.w
        _expect_close(gamma(net).values, special_gamma(spec, factor), f"F_{N} special Gamma")
        for action in generator_actions(net.family):
            moved = action.apply(net.choice)
            _expect(moved == net.choice, f"F_{N} special net moved by {action.linear!r}")
    return f"closed-form Gamma for N = {', '.join(map(str, orders))}"


@GOLDEN_CHECK_REGISTRY.register()
def tensor_product_nets(quick: bool) -> str:
    golden = load_golden("tensor_n4.json")
    nets = tensor_product_nets_n4()
    reps = sorted(representative(n.choice).to_strings() for n in nets)
    _expect(reps == sorted(golden["representatives"]), f"representatives {reps}")
    for net in nets:
        _expect(format_element(discriminant_D(net.choice)) == golden["discriminant"], "D")
        try:
            net.check_invariants()
        except AssertionError as e:
            raise GoldenMismatchError(f"tensor-product net: {e}")
    _expect(nets_equal(conjugate_net(nets[0]), nets[1]), "tensor-product nets are not conjugate")
    return " and ".join(str(tuple(r)) for r in reps)


@GOLDEN_CHECK_REGISTRY.register()
def tomography_round_trip(quick: bool) -> str:
    count = 20 if quick else 100
    for N in (2, 3, 4):
        spec = field_of_order(N)
        elems = spec.elements()
        choice = RayChoice(tuple(elems[i % N] for i in range(N + 1)))
        net = build_net(BasisPair.default(spec), choice)
        for rho in random_density_matrices(N, count, seed=N):
            W = wigner_transform(rho, net)
            W_tomo = tomographic_reconstruct(line_probabilities(rho, net), net)
            _expect_close(W_tomo.values, W.values, f"F_{N} reconstruction")
            _expect_close(inverse_wigner(W_tomo, net), rho, f"F_{N} density matrix")
    return f"{count} random states for N = 2, 3, 4"


@GOLDEN_CHECK_REGISTRY.register()
def w_census(quick: bool) -> str:
    golden = load_golden("classes.json")
    for N, total in golden["census_totals"].items():
        report = w_variant_census(field_of_order(int(N)))
        _expect(report.total == total, f"F_{N} census total {report.total}")
    return "totals " + ", ".join(map(str, golden["census_totals"].values()))


@dataclass
class GoldenResult:
    name: str
    status: str
    detail: str
    seconds: float

    @property
    def passed(self) -> bool:
        return self.status != "FAIL"


class GoldenEvaluator(object):
    """
    Runs the registered golden checks, in registration order unless ``only``
    names a subset.
    """

    def __init__(self, quick: bool = False, only: Optional[Sequence[str]] = None):
        self.quick = quick
        self.names = list(only) if only else [name for name, _ in GOLDEN_CHECK_REGISTRY]
        self.results: List[GoldenResult] = []

    def reset(self):
        self.results = []

    def evaluate(self) -> "OrderedDict[str, GoldenResult]":
        self.reset()
        for name in self.names:
            check = GOLDEN_CHECK_REGISTRY.get(name)
            logger.info(f"Running golden check {name} ...")
            start = time.perf_counter()
            try:
                detail = check(self.quick)
                status = "skip" if detail == SKIPPED else "ok"
            except GoldenMismatchError as e:
                logger.error(f"Golden check {name} failed: {e}")
                detail, status = str(e), "FAIL"
            self.results.append(GoldenResult(name, status, detail, time.perf_counter() - start))
        return OrderedDict((r.name, r) for r in self.results)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def summary(self) -> str:
        rows = [[r.name, r.status, f"{r.seconds:.2f}", r.detail] for r in self.results]
        return format_table(rows, ["check", "status", "seconds", "detail"])

    def to_dict(self) -> Dict[str, Any]:
        return {
            "quick": self.quick,
            "passed": self.passed,
            "checks": [
                {"name": r.name, "status": r.status, "detail": r.detail}
                for r in self.results
            ],
        }
