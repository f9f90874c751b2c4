import numpy as np
import pytest

from entcap.canonical import CanonicalParams, bell_coefficients
from entcap.capacity import (
    RegionTag,
    capacity_c2,
    capacity_concurrence,
    capacity_entropy_no_ancilla,
    capacity_linear_entropy,
    delta_c2_bell,
    interconversion_bounds,
    n_copy_capacity,
    region_of,
)
from entcap.errors import (
    DimensionMismatchError,
    NotCanonicalError,
    NotNormalizedError,
    ZeroCapacityError,
)
from entcap.measures import MeasureKind, concurrence, entropy_of_entanglement
from entcap.qcore import (
    BELL_BASIS,
    CNOT,
    DCNOT,
    IDENTITY4,
    PureState,
    build_canonical_unitary,
    make_rng,
)
from entcap.optimize import OptimizerConfig, numeric_capacity

QUARTER_PI = np.pi / 4

REGION_1_POINT = (0.2, 0.1, 0.05)
REGION_2_POINT = (QUARTER_PI, QUARTER_PI, np.pi / 16)
SATURATING_POINT = (7 * np.pi / 32, 7 * np.pi / 32, 0.0)

FAST_CFG = OptimizerConfig(restarts=8, master_seed=3)


def test_region_classification():
    assert region_of(CanonicalParams((QUARTER_PI, 0, 0))) is RegionTag.ONE_EBIT
    assert region_of(CanonicalParams(SATURATING_POINT)) is RegionTag.ONE_EBIT
    assert region_of(CanonicalParams(REGION_1_POINT)) is RegionTag.REGION_1
    assert region_of(CanonicalParams(REGION_2_POINT)) is RegionTag.REGION_2
    assert region_of(CanonicalParams((0, 0, 0))) is RegionTag.REGION_1


def test_region_accepts_plain_triples():
    assert region_of(REGION_1_POINT) is RegionTag.REGION_1
    with pytest.raises(NotCanonicalError):
        region_of((0.9, 0.1, 0.0))
    with pytest.raises(NotCanonicalError):
        region_of((0.2, 0.3, 0.1))


def test_c2_branch_values():
    assert capacity_c2(REGION_1_POINT, FAST_CFG).value == pytest.approx(
        np.sin(0.6), abs=1e-14
    )
    assert capacity_c2(REGION_2_POINT, FAST_CFG).value == pytest.approx(
        np.sin(2 * (QUARTER_PI + np.pi / 16)), abs=1e-14
    )
    one = capacity_c2(SATURATING_POINT, FAST_CFG)
    assert one.value == 1.0
    assert one.region is RegionTag.ONE_EBIT


def test_c2_optimal_states_achieve_the_value():
    rng = make_rng(19)
    for _ in range(10):
        a1 = rng.uniform(0.05, QUARTER_PI)
        a2 = rng.uniform(0, min(a1, QUARTER_PI - a1) * 0.95)
        a3 = rng.uniform(0, a2)
        p = CanonicalParams((a1, a2, a3))
        res = capacity_c2(p, FAST_CFG)
        u = build_canonical_unitary(p)
        c0 = concurrence(res.optimal_state) ** 2
        cf = concurrence(PureState(u @ res.optimal_state.amplitudes)) ** 2
        assert cf - c0 == pytest.approx(res.value, abs=1e-12)
        assert c0 == pytest.approx(res.initial_entanglement, abs=1e-12)


def test_c2_region2_state_achieves_the_value():
    p = CanonicalParams(REGION_2_POINT)
    res = capacity_c2(p, FAST_CFG)
    u = build_canonical_unitary(p)
    c0 = concurrence(res.optimal_state) ** 2
    cf = concurrence(PureState(u @ res.optimal_state.amplitudes)) ** 2
    assert cf - c0 == pytest.approx(res.value, abs=1e-12)


def test_concurrence_branch_values_and_extrapolation():
    r1 = capacity_concurrence(REGION_1_POINT, FAST_CFG)
    assert r1.value == pytest.approx(np.sin(0.6), abs=1e-14)
    assert not r1.extrapolated
    r2 = capacity_concurrence(REGION_2_POINT, FAST_CFG)
    assert r2.value == pytest.approx(np.sin(2 * (QUARTER_PI + np.pi / 16)), abs=1e-14)
    assert r2.extrapolated
    assert r2.initial_entanglement == 0.0
    sat = capacity_concurrence(SATURATING_POINT, FAST_CFG)
    assert sat.value == 1.0
    assert concurrence(sat.optimal_state) < 1e-3  # product start


def test_linear_entropy_branches():
    r1 = capacity_linear_entropy(REGION_1_POINT)
    assert r1.value == pytest.approx(np.sin(0.6) / 2, abs=1e-14)
    assert r1.rescaled_value == pytest.approx(np.sin(0.6), abs=1e-14)
    r2 = capacity_linear_entropy(REGION_2_POINT)
    assert r2.value == pytest.approx(
        np.sin(2 * (QUARTER_PI + np.pi / 16)) / 2, abs=1e-9
    )
    sat = capacity_linear_entropy(SATURATING_POINT, cfg=FAST_CFG)
    assert sat.value == 0.5
    assert sat.rescaled_value == 1.0


def test_entropy_no_ancilla_branches():
    assert capacity_entropy_no_ancilla((0.0, 0.0, 0.0)).value == pytest.approx(
        0.0, abs=1e-12
    )
    sat = capacity_entropy_no_ancilla((QUARTER_PI, 0.0, 0.0), cfg=FAST_CFG)
    assert sat.value == 1.0
    assert sat.region is RegionTag.ONE_EBIT
    # boundary point saturates from both sides
    edge = capacity_entropy_no_ancilla((np.pi / 8, np.pi / 8, 0.0), cfg=FAST_CFG)
    assert edge.value == 1.0


def test_entropy_no_ancilla_matches_unrestricted_search():
    p = CanonicalParams(REGION_1_POINT)
    restricted = capacity_entropy_no_ancilla(p)
    free = numeric_capacity(
        build_canonical_unitary(p), MeasureKind.ENTROPY_OF_ENTANGLEMENT
    )
    assert restricted.value == pytest.approx(free.value, abs=1e-6)
    # the reported state really produces the reported gain
    u = build_canonical_unitary(p)
    psi = restricted.optimal_state
    gain = entropy_of_entanglement(
        PureState(u @ psi.amplitudes)
    ) - entropy_of_entanglement(psi)
    assert gain == pytest.approx(restricted.value, abs=1e-6)


def test_delta_c2_matches_direct_evolution():
    rng = make_rng(250)
    for _ in range(100):
        a1 = rng.uniform(0, QUARTER_PI)
        a2 = rng.uniform(0, a1)
        a3 = rng.uniform(-a2, a2)
        p = CanonicalParams((a1, a2, a3))
        b = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        b /= np.linalg.norm(b)
        psi = PureState(BELL_BASIS @ b)
        u = build_canonical_unitary(p)
        direct = (
            concurrence(PureState(u @ psi.amplitudes)) ** 2 - concurrence(psi) ** 2
        )
        assert delta_c2_bell(b, p) == pytest.approx(direct, abs=1e-12)


def test_delta_c2_input_guards():
    p = CanonicalParams(REGION_1_POINT)
    with pytest.raises(DimensionMismatchError):
        delta_c2_bell(np.ones(3) / np.sqrt(3), p)
    with pytest.raises(NotNormalizedError):
        delta_c2_bell(np.ones(4), p)


def test_delta_c2_upper_bounded_by_branch_value():
    rng = make_rng(77)
    p = CanonicalParams(REGION_1_POINT)
    best = capacity_c2(p, FAST_CFG).value
    for _ in range(200):
        b = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        b /= np.linalg.norm(b)
        assert delta_c2_bell(b, p) <= best + 1e-12


def test_interconversion_bounds_known_gates():
    b = interconversion_bounds(DCNOT, CNOT)
    assert b.ebit_lower_bound_u1 == pytest.approx(2.0, abs=1e-6)
    assert b.rate_upper_bound_u1_to_u2 == pytest.approx(2.0, abs=1e-6)
    back = interconversion_bounds(CNOT, DCNOT)
    assert back.rate_upper_bound_u1_to_u2 == pytest.approx(0.5, abs=1e-6)
    with pytest.raises(ZeroCapacityError):
        interconversion_bounds(CNOT, IDENTITY4)


def test_n_copy_capacity_scales_linearly():
    assert n_copy_capacity(CNOT, 3) == pytest.approx(3.0, abs=1e-6)
    assert n_copy_capacity(IDENTITY4, 2) == pytest.approx(0.0, abs=1e-9)
    with pytest.raises(ValueError):
        n_copy_capacity(CNOT, 0)
    with pytest.raises(ValueError):
        n_copy_capacity(CNOT, -2)
