"""Closed-form entangling capacities organized by interaction-coefficient region.

How much entanglement one application of a two-qubit gate can create depends
only on its canonical coefficients (a1, a2, a3).  Three regimes partition the
ordered simplex:

- ``ONE_EBIT``: a1+a2 >= pi/4 and a2+a3 <= pi/4.  Some product input is mapped
  to a maximally entangled output, so every measure saturates at one e-bit.
- ``REGION_1``: a1+a2 < pi/4.  The best gain is sin(2(a1+a2)), reached from a
  slightly entangled superposition of |01> and |10>.
- ``REGION_2``: a2+a3 > pi/4.  The best gain is sin(2(a2+a3)), reached from an
  entangled mix of the first and last magic-basis vectors.

Saturation is tested first; under the canonical ordering the other two
conditions are mutually exclusive, so the tags partition parameter space.
Operations report values in each measure's native units and return the
optimizing input state whenever one is known in closed form; saturating
product inputs are found with a short deterministic product-start search.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.optimize import minimize

from .canonical import CanonicalParams
from .errors import (
    ConvergenceError,
    DimensionMismatchError,
    NotCanonicalError,
    NotNormalizedError,
    ZeroCapacityError,
)
from .measures import MeasureKind
from .optimize import (
    OptimizerConfig,
    entanglement_batch,
    numeric_capacity,
    product_start_capacity,
)
from .qcore import BELL_BASIS, PureState, _require_unitary, build_canonical_unitary

QUARTER_PI = np.pi / 4

# Magic-basis column pairs spanning the optimal two-dimensional search space.
_PAIR_REGION_1 = (2, 3)
_PAIR_REGION_2 = (0, 3)

# Coarse scan resolution preceding local refinement of pair mixtures.
_GRID_POINTS = 64


class RegionTag(Enum):
    """Which regime of canonical parameter space a gate falls in."""

    ONE_EBIT = "OneEbit"
    REGION_1 = "Region1"
    REGION_2 = "Region2"


@dataclass(frozen=True)
class AnalyticCapacity:
    """Capacity value with its region, optimizing input, and starting cost.

    ``initial_entanglement`` is reported in the same units as ``value``.
    ``extrapolated`` marks values produced by extending a formula beyond the
    regime where it is proven; ``rescaled_value`` carries the alternative
    normalization for the linear-entropy measure (twice the printed value).
    """

    value: float
    region: RegionTag
    optimal_state: PureState | None
    initial_entanglement: float
    extrapolated: bool = False
    rescaled_value: float | None = None


def _require_canonical(p) -> CanonicalParams:
    if not isinstance(p, CanonicalParams):
        p = CanonicalParams(tuple(p))
    if not p.is_canonical():
        raise NotCanonicalError(
            f"coefficients {p.alpha} violate pi/4 >= a1 >= a2 >= |a3| >= 0"
        )
    return p


def region_of(p) -> RegionTag:
    """Classify canonical coefficients; saturation wins over the other tags."""
    p = _require_canonical(p)
    a1, a2, a3 = p.alpha
    if a1 + a2 >= QUARTER_PI and a2 + a3 <= QUARTER_PI:
        return RegionTag.ONE_EBIT
    if a1 + a2 < QUARTER_PI:
        return RegionTag.REGION_1
    return RegionTag.REGION_2


def _product_witness(p: CanonicalParams, kind: MeasureKind, cfg) -> PureState:
    # A saturating product input exists but has no closed form; a short
    # deterministic product-start search recovers one.
    if cfg is None:
        cfg = OptimizerConfig(restarts=8)
    result = product_start_capacity(build_canonical_unitary(p), kind, cfg=cfg)
    return result.optimal_state


def _region_1_state(a1: float, a2: float) -> PureState:
    # The mixing angle must advance the |01>,|10> pair against the phase the
    # gate applies, so it carries the opposite sign to the gate's half-sum.
    xi = np.pi / 8 - (a1 + a2) / 2
    return PureState(np.array([0.0, np.sin(xi), -1j * np.cos(xi), 0.0]))


def _region_2_state(a2: float, a3: float) -> PureState:
    phase = np.exp(1j * (QUARTER_PI + a2 + a3))
    return PureState((BELL_BASIS[:, 0] + phase * BELL_BASIS[:, 3]) / np.sqrt(2.0))


def capacity_c2(p, cfg: OptimizerConfig | None = None) -> AnalyticCapacity:
    """Largest single-use increase of squared concurrence, no ancillas."""
    p = _require_canonical(p)
    region = region_of(p)
    a1, a2, a3 = p.alpha
    if region is RegionTag.ONE_EBIT:
        witness = _product_witness(p, MeasureKind.CONCURRENCE_SQUARED, cfg)
        return AnalyticCapacity(1.0, region, witness, 0.0)
    if region is RegionTag.REGION_1:
        value = float(np.sin(2 * (a1 + a2)))
        state = _region_1_state(a1, a2)
    else:
        value = float(np.sin(2 * (a2 + a3)))
        state = _region_2_state(a2, a3)
    return AnalyticCapacity(value, region, state, (1.0 - value) / 2.0)


def capacity_concurrence(p, cfg: OptimizerConfig | None = None) -> AnalyticCapacity:
    """Largest single-use increase of concurrence; optimal inputs are product.

    Outside the saturating region the value equals the largest eigenphase-gap
    sine.  That formula is proven where a1+a2 < pi/4 and extended verbatim to
    the a2+a3 > pi/4 regime, where results carry ``extrapolated=True`` and are
    backed by numerical checks only.
    """
    p = _require_canonical(p)
    region = region_of(p)
    a1, a2, a3 = p.alpha
    if region is RegionTag.ONE_EBIT:
        value = 1.0
    elif region is RegionTag.REGION_1:
        value = float(np.sin(2 * (a1 + a2)))
    else:
        value = float(np.sin(2 * (a2 + a3)))
    witness = _product_witness(p, MeasureKind.CONCURRENCE, cfg)
    return AnalyticCapacity(
        value,
        region,
        witness,
        0.0,
        extrapolated=region is RegionTag.REGION_2,
    )


def _pair_states(pair: tuple[int, int], thetas, phis) -> np.ndarray:
    coeffs = np.stack(
        [np.cos(thetas), np.sin(thetas) * np.exp(1j * np.asarray(phis))], axis=-1
    )
    return coeffs @ BELL_BASIS[:, pair].T


def _maximize_pair(
    p: CanonicalParams, pair: tuple[int, int], kind: MeasureKind, tol: float
) -> tuple[float, PureState, float]:
    """Best gain over mixtures of two magic-basis vectors.

    The mixture cos(t)*B_j + sin(t)*e^{i f}*B_k is scanned on a coarse
    (t, f) grid and the best cell is polished with a derivative-free local
    search.  Returns (gain, optimal input, its initial entanglement).
    """
    u = build_canonical_unitary(p)

    def gain(points: np.ndarray) -> np.ndarray:
        states = _pair_states(pair, points[..., 0], points[..., 1])
        flat = states.reshape(-1, 4)
        values = entanglement_batch(flat @ u.T, kind) - entanglement_batch(flat, kind)
        return values.reshape(states.shape[:-1])

    thetas = np.linspace(0.0, np.pi / 2, _GRID_POINTS)
    phis = np.linspace(0.0, 2 * np.pi, _GRID_POINTS, endpoint=False)
    grid = np.stack(np.meshgrid(thetas, phis, indexing="ij"), axis=-1)
    values = gain(grid)
    best = np.unravel_index(int(np.argmax(values)), values.shape)
    x0 = grid[best]

    result = minimize(
        lambda x: -gain(np.asarray(x)),
        x0,
        method="Nelder-Mead",
        options={"xatol": 1e-8, "fatol": tol, "maxiter": 2000},
    )
    if not result.success:
        raise ConvergenceError(f"pair refinement stopped early: {result.message}")
    theta, phi = (result.x if -result.fun >= values[best] else x0)
    state = PureState(_pair_states(pair, theta, phi))
    initial = float(entanglement_batch(state.amplitudes[None, :], kind)[0])
    return float(max(-result.fun, values[best])), state, initial


def capacity_linear_entropy(
    p, tol: float = 1e-9, cfg: OptimizerConfig | None = None
) -> AnalyticCapacity:
    """Largest single-use increase of linear entropy, no ancillas.

    ``value`` uses the printed definition 1 - Tr(rho_A^2), which tops out at
    1/2 on two qubits; ``rescaled_value`` is twice that, normalized to reach
    1 on maximally entangled states.  For pure two-qubit states the measure
    equals half the squared concurrence, so the saturating and small-sum
    branches inherit those closed forms; the large-sum branch is computed
    numerically over the same two-vector mixture family as the entropy case.
    """
    p = _require_canonical(p)
    region = region_of(p)
    a1, a2, a3 = p.alpha
    if region is RegionTag.ONE_EBIT:
        value = 0.5
        state = _product_witness(p, MeasureKind.LINEAR_ENTROPY, cfg)
        initial = 0.0
    elif region is RegionTag.REGION_1:
        c2 = float(np.sin(2 * (a1 + a2)))
        value = c2 / 2.0
        state = _region_1_state(a1, a2)
        initial = (1.0 - c2) / 4.0
    else:
        value, state, initial = _maximize_pair(
            p, _PAIR_REGION_2, MeasureKind.LINEAR_ENTROPY, tol
        )
    return AnalyticCapacity(
        value, region, state, initial, rescaled_value=2.0 * value
    )


def capacity_entropy_no_ancilla(
    p, tol: float = 1e-9, cfg: OptimizerConfig | None = None
) -> AnalyticCapacity:
    """Largest single-use increase of entropy of entanglement, no ancillas.

    Saturating gates yield exactly one e-bit from a product input.  Otherwise
    the optimum lives in a two-vector magic-basis mixture — vectors 3 and 4
    when a1+a2 < pi/4, vectors 1 and 4 when a2+a3 > pi/4 — and the stationary
    condition is transcendental, so the mixture is optimized numerically to
    ``tol`` on the objective.
    """
    p = _require_canonical(p)
    region = region_of(p)
    if region is RegionTag.ONE_EBIT:
        witness = _product_witness(p, MeasureKind.ENTROPY_OF_ENTANGLEMENT, cfg)
        return AnalyticCapacity(1.0, region, witness, 0.0)
    pair = _PAIR_REGION_1 if region is RegionTag.REGION_1 else _PAIR_REGION_2
    value, state, initial = _maximize_pair(
        p, pair, MeasureKind.ENTROPY_OF_ENTANGLEMENT, tol
    )
    return AnalyticCapacity(value, region, state, initial)


def delta_c2_bell(b, p) -> float:
    """Squared-concurrence gain of the interaction factor on magic-basis
    coefficients ``b``: |sum_j e^{2i l_j} b_j^2|^2 - |sum_j b_j^2|^2."""
    p = _require_canonical(p)
    b = np.asarray(b, dtype=complex)
    if b.shape != (4,):
        raise DimensionMismatchError(f"expected 4 coefficients, got shape {b.shape}")
    norm_sq = float(np.sum(np.abs(b) ** 2))
    if abs(norm_sq - 1.0) > 1e-9:
        raise NotNormalizedError(f"coefficient norm^2 is {norm_sq:.12g}, expected 1")
    squares = b * b
    phases = np.exp(2j * np.asarray(p.lambdas))
    return float(abs(np.sum(phases * squares)) ** 2 - abs(np.sum(squares)) ** 2)


@dataclass(frozen=True)
class InterconversionBounds:
    """Entanglement-based bounds on simulating one gate with another."""

    ebit_lower_bound_u1: float
    rate_upper_bound_u1_to_u2: float


def interconversion_bounds(
    u1,
    u2,
    cfg: OptimizerConfig | None = None,
    zero_tol: float = 1e-6,
) -> InterconversionBounds:
    """Bounds from single-use capacities with one ancilla per side.

    Creating u1 from e-bits needs at least its capacity; simulating u1 with
    copies of u2 cannot beat the capacity ratio.  A denominator capacity at
    or below ``zero_tol`` means u2 is locally trivial and no finite rate
    exists.
    """
    _require_unitary(np.asarray(u1, dtype=complex))
    _require_unitary(np.asarray(u2, dtype=complex))
    kind = MeasureKind.ENTROPY_OF_ENTANGLEMENT
    cap1 = numeric_capacity(u1, kind, anc_a=1, anc_b=1, cfg=cfg).value
    cap2 = numeric_capacity(u2, kind, anc_a=1, anc_b=1, cfg=cfg).value
    if cap2 <= zero_tol:
        raise ZeroCapacityError(
            f"target capacity {cap2:.3e} is at the zero tolerance; "
            "the denominator gate is locally trivial"
        )
    return InterconversionBounds(cap1, cap1 / cap2)


def n_copy_capacity(u, n: int, cfg: OptimizerConfig | None = None) -> float:
    """Capacity of ``n`` uses: n times the single-use ancilla-assisted value.

    Each use may act on a freshly prepared optimal input held alongside the
    previously generated entanglement, so uses decouple and totals add.
    """
    if int(n) != n or n < 1:
        raise ValueError(f"copy count must be a positive integer, got {n!r}")
    kind = MeasureKind.ENTROPY_OF_ENTANGLEMENT
    return int(n) * numeric_capacity(u, kind, anc_a=1, anc_b=1, cfg=cfg).value
