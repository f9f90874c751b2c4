"""Multi-start numerical maximization of entanglement gain.

States live on a register laid out as (Alice ancillas, Alice shared qubit,
Bob shared qubit, Bob ancillas), so the nonlocal gate always acts on the
middle pair and the A|B cut splits the basis index in half.  Real parameter
vectors map to states through ``parameterize_state`` (interleaved real and
imaginary parts, then normalization); the search is projected gradient
ascent on the unit sphere of parameters with a backtracking line search.

Determinism: restart i draws its start from a counter-based generator
seeded with master_seed + i, and results reduce by (value, then lowest
seed), so a run is reproducible regardless of how restarts or sweep rows
are scheduled.
"""
from __future__ import annotations

import enum
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DimensionMismatchError, UnsupportedMeasureError
from .measures import MeasureKind
from .qcore import (
    ENTROPY_EIGENVALUE_FLOOR,
    PAULI_YY,
    PureState,
    _require_unitary,
    build_canonical_unitary,
    default_partition,
    make_rng,
)

_GRAD_STEP = 1e-6
_STEP_CAP = 0.2
_ARMIJO_SLOPE = 1e-4
_CONVERGED_GRAD_NORM = 1e-6
_STALL_WINDOW = 20
_LADDER = 0.5 ** np.arange(8)
_HESSIAN_STEP = 1e-4
# Sharp-apex optima contract the gradient by roughly half per polish round
# from ~1e-3 entry norms, so the cap must cover ~20 halvings with margin;
# smooth optima exit in a handful of rounds regardless.
_POLISH_ROUNDS = 48
# The polish ladder reaches far smaller steps than the ascent ladder:
# entropy-like measures form sharp apexes at product states whose scale the
# sampled Hessian cannot represent, so locating them needs sub-1e-6 moves.
_POLISH_LADDER = 0.5 ** np.arange(24)
# Finite-difference Hessians above this size are both slow and too noisy to
# help, so larger problems fall back to plain ascent.
_POLISH_MAX_PARAMS = 64

QUARTER_PI = np.pi / 4


@dataclass(frozen=True)
class OptimizerConfig:
    """Knobs for the multi-start ascent.

    ``gradient_mode`` is "finite-difference" (central differences, default)
    or "analytic-where-available", which uses closed-form gradients for the
    measures that have one and falls back to differences otherwise.
    """

    restarts: int = 32
    max_iterations: int = 5000
    objective_tolerance: float = 1e-8
    step_tolerance: float = 1e-10
    master_seed: int = 0
    gradient_mode: str = "finite-difference"

    def __post_init__(self) -> None:
        if self.restarts < 1:
            raise ValueError("need at least one restart")
        if self.max_iterations < 1:
            raise ValueError("need at least one iteration")
        if self.objective_tolerance <= 0 or self.step_tolerance <= 0:
            raise ValueError("tolerances must be positive")
        if self.gradient_mode not in ("finite-difference", "analytic-where-available"):
            raise ValueError(f"unknown gradient mode {self.gradient_mode!r}")


class FamilyKind(enum.Enum):
    """One-parameter interaction families used in the sweeps."""

    CNOT = "cnot"
    DCNOT = "dcnot"
    SWAP = "swap"


@dataclass(frozen=True)
class GateFamily:
    """A family member: kind plus the interaction strength alpha."""

    kind: FamilyKind
    alpha: float

    def canonical_alpha(self) -> tuple[float, float, float]:
        a = float(self.alpha)
        if self.kind is FamilyKind.CNOT:
            return (a, 0.0, 0.0)
        if self.kind is FamilyKind.DCNOT:
            return (a, a, 0.0)
        return (a, a, a)


@dataclass(frozen=True)
class CapacityResult:
    """Outcome of one multi-start optimization."""

    value: float
    optimal_state: PureState
    initial_entanglement: float
    final_entanglement: float
    converged_restarts: int
    best_restart_seed: int


@dataclass(frozen=True)
class SweepRow:
    """One grid point of a family sweep; error rows carry NaN values."""

    alpha: float
    capacity: float
    initial_entanglement: float
    final_entanglement: float
    converged_restarts: int
    error: str | None = None


def parameterize_state(
    raw: np.ndarray, partition: tuple[str, ...] | None = None
) -> PureState:
    """Map 2d real parameters to a normalized d-dimensional state.

    raw[2k] and raw[2k+1] are the real and imaginary parts of amplitude k.
    The map is scale invariant, so gradients of any measure through it are
    tangent to the unit sphere of parameters.
    """
    raw = np.asarray(raw, dtype=float)
    if raw.ndim != 1 or raw.size < 2 or raw.size % 2:
        raise DimensionMismatchError(f"parameter vector of shape {raw.shape} invalid")
    v = raw[0::2] + 1j * raw[1::2]
    norm = np.linalg.norm(v)
    if norm == 0.0:
        raise ValueError("zero parameter vector has no direction")
    n = int(round(math.log2(v.size)))
    if 2**n != v.size:
        raise DimensionMismatchError(f"{v.size} amplitudes is not a qubit register")
    return PureState(v / norm, partition or default_partition(n))


def ancilla_partition(anc_a: int, anc_b: int) -> tuple[str, ...]:
    """Ownership labels for the (Alice ancillas, shared pair, Bob ancillas) layout."""
    return ("A",) * (anc_a + 1) + ("B",) * (anc_b + 1)


def _entropy_rows(rho: np.ndarray) -> np.ndarray:
    w = np.linalg.eigvalsh(rho)
    safe = np.where(w > ENTROPY_EIGENVALUE_FLOOR, w, 1.0)
    return -(np.where(w > ENTROPY_EIGENVALUE_FLOOR, w * np.log2(safe), 0.0)).sum(axis=-1)


def entanglement_batch(
    states: np.ndarray, kind: MeasureKind, dim_a: int = 2, dim_b: int = 2
) -> np.ndarray:
    """Measure a batch of states given as rows, cut between dim_a and dim_b."""
    states = np.atleast_2d(states)
    if kind in (MeasureKind.CONCURRENCE, MeasureKind.CONCURRENCE_SQUARED):
        if dim_a != 2 or dim_b != 2:
            raise UnsupportedMeasureError("concurrence needs a plain two-qubit register")
        vals = np.abs(np.einsum("mi,ij,mj->m", states, PAULI_YY, states))
        return vals if kind is MeasureKind.CONCURRENCE else vals**2
    t = states.reshape(-1, dim_a, dim_b)
    if dim_a <= dim_b:
        rho = np.einsum("mab,mcb->mac", t, t.conj())
    else:
        rho = np.einsum("mab,mac->mbc", t, t.conj())
    if kind is MeasureKind.LINEAR_ENTROPY:
        return 1.0 - np.einsum("mab,mab->m", rho, rho.conj()).real
    if kind is MeasureKind.ENTROPY_OF_ENTANGLEMENT:
        return _entropy_rows(rho)
    raise UnsupportedMeasureError(f"unknown measure kind {kind!r}")


class _CutObjective:
    """Batched entanglement gain for unrestricted initial states."""

    def __init__(self, u: np.ndarray, measure: MeasureKind, anc_a: int, anc_b: int):
        if not (0 <= anc_a <= 2 and 0 <= anc_b <= 2):
            raise ValueError("supported ancilla counts are 0, 1 and 2 per side")
        if measure in (MeasureKind.CONCURRENCE, MeasureKind.CONCURRENCE_SQUARED):
            if anc_a or anc_b:
                raise UnsupportedMeasureError(
                    "concurrence variants are undefined with ancillas; "
                    "use entropy or linear entropy"
                )
        u = np.asarray(u, dtype=complex)
        if u.shape != (4, 4):
            raise DimensionMismatchError(f"expected a 4x4 gate, got shape {u.shape}")
        _require_unitary(u)
        self.u = u
        self.measure = measure
        self.dim_pre = 2**anc_a
        self.dim_post = 2**anc_b
        self.dim_a = 2 ** (anc_a + 1)
        self.dim_b = 2 ** (anc_b + 1)
        self.dim = self.dim_a * self.dim_b
        self.partition = ancilla_partition(anc_a, anc_b)
        self.n_raw = 2 * self.dim

    def states(self, raw: np.ndarray) -> np.ndarray:
        v = raw[:, 0::2] + 1j * raw[:, 1::2]
        return v / np.linalg.norm(v, axis=1, keepdims=True)

    def evolve(self, states: np.ndarray) -> np.ndarray:
        m = states.shape[0]
        t = states.reshape(m, self.dim_pre, 4, self.dim_post)
        return np.einsum("pq,mxqy->mxpy", self.u, t).reshape(m, self.dim)

    def entanglement(self, states: np.ndarray) -> np.ndarray:
        return entanglement_batch(states, self.measure, self.dim_a, self.dim_b)

    def initial_entanglement(self, states: np.ndarray) -> np.ndarray:
        return self.entanglement(states)

    def values(self, raw: np.ndarray) -> np.ndarray:
        s = self.states(np.atleast_2d(raw))
        return self.entanglement(self.evolve(s)) - self.entanglement(s)

    def gradient(self, raw: np.ndarray) -> np.ndarray | None:
        if self.measure is not MeasureKind.CONCURRENCE_SQUARED:
            return None
        # d/draw of (|v^T Mf v|^2 - |v^T M v|^2) / |v|^4 with Mf = U^T M U.
        v = raw[0::2] + 1j * raw[1::2]
        n2 = float(raw @ raw)
        mf = self.u.T @ PAULI_YY @ self.u
        grad = np.zeros_like(raw)
        amount = 0.0
        for mat, sign in ((mf, 1.0), (PAULI_YY, -1.0)):
            w = mat @ v
            z = v @ w
            amount += sign * abs(z) ** 2
            zc_w = np.conj(z) * w
            grad[0::2] += sign * 4.0 * zc_w.real
            grad[1::2] += sign * -4.0 * zc_w.imag
        return grad / n2**2 - (4.0 * amount / n2**3) * raw


class _ProductObjective(_CutObjective):
    """Entanglement created from a product state across the A|B cut.

    Parameters hold both factors back to back, each normalized on its own,
    so the initial entanglement is exactly zero by construction.
    """

    def __init__(self, u, measure, anc_a, anc_b):
        super().__init__(u, measure, anc_a, anc_b)
        self.n_raw = 2 * (self.dim_a + self.dim_b)

    def states(self, raw: np.ndarray) -> np.ndarray:
        split = 2 * self.dim_a
        va = raw[:, :split][:, 0::2] + 1j * raw[:, :split][:, 1::2]
        vb = raw[:, split:][:, 0::2] + 1j * raw[:, split:][:, 1::2]
        va = va / np.linalg.norm(va, axis=1, keepdims=True)
        vb = vb / np.linalg.norm(vb, axis=1, keepdims=True)
        m = raw.shape[0]
        return np.einsum("ma,mb->mab", va, vb).reshape(m, self.dim)

    def initial_entanglement(self, states: np.ndarray) -> np.ndarray:
        return np.zeros(states.shape[0])

    def values(self, raw: np.ndarray) -> np.ndarray:
        s = self.states(np.atleast_2d(raw))
        return self.entanglement(self.evolve(s))

    def gradient(self, raw: np.ndarray) -> np.ndarray | None:
        return None


def _tangent(vec: np.ndarray, raw: np.ndarray) -> np.ndarray:
    return vec - (vec @ raw) * raw


def _fd_gradient(objective, raw: np.ndarray, step: float = _GRAD_STEP) -> np.ndarray:
    n = raw.size
    shifts = step * np.eye(n)
    vals = objective.values(np.vstack([raw + shifts, raw - shifts]))
    return (vals[:n] - vals[n:]) / (2 * step)


def _best_rung(objective, raw, value, direction, slope):
    """Best Armijo-acceptable value along the deep polish ladder, or None."""
    trials = raw[None, :] + _POLISH_LADDER[:, None] * direction[None, :]
    trials /= np.linalg.norm(trials, axis=1, keepdims=True)
    trial_vals = objective.values(trials)
    accepted = trial_vals >= value + _ARMIJO_SLOPE * _POLISH_LADDER * slope
    if not accepted.any():
        return None
    k = int(np.argmax(np.where(accepted, trial_vals, -np.inf)))
    return trials[k], float(trial_vals[k])


def _pattern_rung(objective, raw, value, directions):
    """Derivative-free fallback: deep-ladder probes along several signed
    directions at once, keeping any improvement certified above roundoff.

    Sharp apexes defeat the finite-difference gradient (its sign carries no
    information once the optimum is closer than the difference step), so the
    probes must not trust it beyond supplying candidate axes.
    """
    stacked = np.vstack(
        [raw[None, :] + _POLISH_LADDER[:, None] * d[None, :] for d in directions]
    )
    stacked /= np.linalg.norm(stacked, axis=1, keepdims=True)
    trial_vals = objective.values(stacked)
    k = int(np.argmax(trial_vals))
    if trial_vals[k] < value + 1e-14:
        return None
    return stacked[k], float(trial_vals[k])


def _newton_polish(objective, raw, value, gradient_fn):
    """Second-order cleanup once first-order progress stalls.

    Saturating optima sit on nearly flat ridges where gradient steps crawl;
    damped Newton steps restricted to the negative-curvature subspace contract
    the gradient below the convergence threshold.  When the quadratic model
    misjudges the scale (sharp apexes), plain gradient rungs take over.
    """
    n = raw.size
    hshifts = _HESSIAN_STEP * np.eye(n)
    for _ in range(_POLISH_ROUNDS):
        grad = _tangent(gradient_fn(raw), raw)
        grad_norm = float(np.linalg.norm(grad))
        if grad_norm < _CONVERGED_GRAD_NORM:
            break
        hess = np.empty((n, n))
        for j in range(n):
            gp = gradient_fn(raw + hshifts[j])
            gm = gradient_fn(raw - hshifts[j])
            hess[:, j] = (gp - gm) / (2 * _HESSIAN_STEP)
        hess = 0.5 * (hess + hess.T)
        eigenvalues, eigenvectors = np.linalg.eigh(hess)
        scale = max(float(np.max(np.abs(eigenvalues))), 1e-300)
        keep = eigenvalues < -1e-12 * scale
        moved = None
        if keep.any():
            coeff = (eigenvectors[:, keep].T @ grad) / -eigenvalues[keep]
            direction = _tangent(eigenvectors[:, keep] @ coeff, raw)
            norm = float(np.linalg.norm(direction))
            if norm > 1.0:
                direction = direction / norm
            slope = float(grad @ direction)
            if slope > 0.0:
                moved = _best_rung(objective, raw, value, direction, slope)
        if moved is None:
            moved = _best_rung(objective, raw, value, grad, grad_norm**2)
        if moved is None:
            axes = [grad, -grad]
            for j in np.argsort(eigenvalues)[: min(3, n)]:
                axes.extend([eigenvectors[:, j], -eigenvectors[:, j]])
            moved = _pattern_rung(objective, raw, value, axes)
        if moved is None:
            break
        raw, value = moved
    return raw, value


def _ascend(objective, raw0: np.ndarray, cfg: OptimizerConfig):
    """Projected gradient ascent with curvature-matched steps and a Newton
    cleanup at stalls; returns (raw, value, converged)."""
    raw = raw0 / np.linalg.norm(raw0)
    value = float(objective.values(raw[None, :])[0])
    n = raw.size
    use_analytic = (
        cfg.gradient_mode == "analytic-where-available"
        and objective.gradient(raw) is not None
    )
    if use_analytic:
        gradient_fn = objective.gradient
    else:
        def gradient_fn(point):
            return _fd_gradient(objective, point)

    def finish(current_raw, current_value, grad_norm):
        if grad_norm >= _CONVERGED_GRAD_NORM and n <= _POLISH_MAX_PARAMS:
            current_raw, current_value = _newton_polish(
                objective, current_raw, current_value, gradient_fn
            )
            grad_norm = float(
                np.linalg.norm(_tangent(gradient_fn(current_raw), current_raw))
            )
        return current_raw, current_value, grad_norm < _CONVERGED_GRAD_NORM

    step = 0.1
    prev_raw = prev_grad = None
    history: list[float] = [value]
    grad_norm = np.inf
    for _ in range(cfg.max_iterations):
        grad = _tangent(gradient_fn(raw), raw)
        grad_norm = float(np.linalg.norm(grad))
        if grad_norm < 1e-13:
            return raw, value, True
        if prev_raw is not None:
            # Secant (Barzilai-Borwein) step: match the curvature seen along
            # the last move so ill-conditioned ridges do not force a crawl.
            dx = raw - prev_raw
            curvature = -(dx @ (grad - prev_grad))
            if curvature > 0:
                bb = float((dx @ dx) / curvature)
                if np.isfinite(bb) and bb > 0:
                    step = min(bb, _STEP_CAP)
        prev_raw, prev_grad = raw, grad
        ladder = step * _LADDER
        trials = raw[None, :] + ladder[:, None] * grad[None, :]
        trials /= np.linalg.norm(trials, axis=1, keepdims=True)
        trial_vals = objective.values(trials)
        # The slope term uses grad_norm**2: the trial displacement is
        # ladder * grad, whose directional derivative is the squared norm.
        accepted = trial_vals >= value + _ARMIJO_SLOPE * ladder * grad_norm**2
        moved = False
        if accepted.any():
            # Best objective among the acceptable rungs, not the longest
            # step: the longest barely-improving step stops contracting near
            # an optimum.
            k = int(np.argmax(np.where(accepted, trial_vals, -np.inf)))
            raw, value, moved = trials[k], float(trial_vals[k]), True
        else:
            s = ladder[-1] * 0.5
            while s > cfg.step_tolerance:
                trial = raw + s * grad
                trial /= np.linalg.norm(trial)
                tv = float(objective.values(trial[None, :])[0])
                if tv >= value + _ARMIJO_SLOPE * s * grad_norm**2:
                    raw, value, moved = trial, tv, True
                    break
                s *= 0.5
        if not moved:
            return finish(raw, value, grad_norm)
        history.append(value)
        if len(history) > _STALL_WINDOW:
            window_gain = value - history[-1 - _STALL_WINDOW]
            if window_gain < cfg.objective_tolerance:
                if grad_norm < _CONVERGED_GRAD_NORM or n <= _POLISH_MAX_PARAMS:
                    return finish(raw, value, grad_norm)
                # Too many parameters for a Hessian solve: keep crawling
                # while measurable progress remains, with a hard floor.
                if window_gain < max(1e-13, 1e-5 * cfg.objective_tolerance):
                    return raw, value, False
    return finish(raw, value, grad_norm)


def _default_config(anc_a: int, anc_b: int) -> OptimizerConfig:
    return OptimizerConfig(restarts=64 if anc_a + anc_b >= 4 else 32)


def _multistart(objective, cfg: OptimizerConfig) -> CapacityResult:
    best_key = None
    best_raw = None
    converged_count = 0
    for i in range(cfg.restarts):
        seed = cfg.master_seed + i
        raw0 = make_rng(seed).standard_normal(objective.n_raw)
        raw, value, converged = _ascend(objective, raw0, cfg)
        converged_count += int(converged)
        key = (-value, seed)
        if best_key is None or key < best_key:
            best_key, best_raw = key, raw
    if converged_count == 0:
        raise ConvergenceError(
            f"no restart reached gradient norm below {_CONVERGED_GRAD_NORM}"
        )
    state_row = objective.states(best_raw[None, :])
    e0 = float(objective.initial_entanglement(state_row)[0])
    ef = float(objective.entanglement(objective.evolve(state_row))[0])
    return CapacityResult(
        value=ef - e0,
        optimal_state=PureState(state_row[0], objective.partition),
        initial_entanglement=e0,
        final_entanglement=ef,
        converged_restarts=converged_count,
        best_restart_seed=best_key[1],
    )


def numeric_capacity(
    u: np.ndarray,
    measure: MeasureKind,
    anc_a: int = 0,
    anc_b: int = 0,
    cfg: OptimizerConfig | None = None,
) -> CapacityResult:
    """Maximize E(U psi) - E(psi) over all initial states of the register."""
    cfg = cfg or _default_config(anc_a, anc_b)
    return _multistart(_CutObjective(u, measure, anc_a, anc_b), cfg)


def product_start_capacity(
    u: np.ndarray,
    measure: MeasureKind,
    anc_a: int = 0,
    anc_b: int = 0,
    cfg: OptimizerConfig | None = None,
) -> CapacityResult:
    """Maximize E(U psi) over initial states that are product across A|B."""
    cfg = cfg or _default_config(anc_a, anc_b)
    return _multistart(_ProductObjective(u, measure, anc_a, anc_b), cfg)


def minimize_initial_entanglement(
    u: np.ndarray,
    measure: MeasureKind,
    anc_a: int = 0,
    anc_b: int = 0,
    cfg: OptimizerConfig | None = None,
    value_slack: float = 1e-6,
    penalty: float = 1e4,
) -> CapacityResult:
    """Among near-capacity states, find one with the least starting entanglement.

    Runs the usual capacity search first, then descends a penalized objective
    -E0 - penalty * hinge(target - gain)^2 from the incumbent, where target is
    the found capacity minus value_slack.
    """
    cfg = cfg or _default_config(anc_a, anc_b)
    base = numeric_capacity(u, measure, anc_a, anc_b, cfg)
    target = base.value - value_slack
    objective = _CutObjective(u, measure, anc_a, anc_b)

    class _Penalized:
        n_raw = objective.n_raw

        def values(self, raw: np.ndarray) -> np.ndarray:
            s = objective.states(np.atleast_2d(raw))
            e0 = objective.entanglement(s)
            gain = objective.entanglement(objective.evolve(s)) - e0
            return -e0 - penalty * np.maximum(0.0, target - gain) ** 2

        def gradient(self, raw: np.ndarray):
            return None

    amps = base.optimal_state.amplitudes
    raw0 = np.empty(objective.n_raw)
    raw0[0::2], raw0[1::2] = amps.real, amps.imag
    raw, _, _ = _ascend(_Penalized(), raw0, cfg)
    state_row = objective.states(raw[None, :])
    e0 = float(objective.entanglement(state_row)[0])
    ef = float(objective.entanglement(objective.evolve(state_row))[0])
    if ef - e0 < target - value_slack:
        return base
    return CapacityResult(
        value=ef - e0,
        optimal_state=PureState(state_row[0], objective.partition),
        initial_entanglement=e0,
        final_entanglement=ef,
        converged_restarts=base.converged_restarts,
        best_restart_seed=base.best_restart_seed,
    )


def family_unitary(family: GateFamily) -> np.ndarray:
    """Interaction unitary of a family member; alpha must lie in [0, pi/4].

    Endpoints rounded at the tenth decimal are routinely passed on command
    lines, so the check allows 1e-9 of slack and the value is clamped back
    into range.
    """
    if not -1e-9 <= family.alpha <= QUARTER_PI + 1e-9:
        raise ValueError(f"family alpha {family.alpha} outside [0, pi/4]")
    clamped = GateFamily(family.kind, min(max(family.alpha, 0.0), QUARTER_PI))
    return build_canonical_unitary(clamped.canonical_alpha())


def _sweep_row(task) -> SweepRow:
    kind, alpha, measure, anc_a, anc_b, cfg, product_start = task
    # A family kind pairs with a scalar alpha; kind None pairs with a full
    # canonical triple, reported under its leading angle.
    label = float(alpha if kind is not None else alpha[0])
    try:
        if kind is not None:
            u = family_unitary(GateFamily(kind, alpha))
        else:
            u = build_canonical_unitary(alpha)
        run = product_start_capacity if product_start else numeric_capacity
        result = run(u, measure, anc_a, anc_b, cfg)
        return SweepRow(
            alpha=label,
            capacity=result.value,
            initial_entanglement=result.initial_entanglement,
            final_entanglement=result.final_entanglement,
            converged_restarts=result.converged_restarts,
        )
    except Exception as exc:  # recorded per row instead of aborting the sweep
        return SweepRow(label, math.nan, math.nan, math.nan, 0, str(exc))


def _run_sweep(tasks, workers: int) -> list[SweepRow]:
    if workers <= 1:
        return [_sweep_row(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_sweep_row, tasks))


def family_sweep(
    kind: FamilyKind,
    alphas,
    measure: MeasureKind,
    anc_a: int = 0,
    anc_b: int = 0,
    cfg: OptimizerConfig | None = None,
    product_start: bool = False,
    workers: int = 1,
) -> list[SweepRow]:
    """Capacity at each alpha of a family grid.

    Rows are independent; with workers > 1 they are computed in a process
    pool.  Results are identical for any worker count because every row
    re-derives its randomness from the same config.
    """
    cfg = cfg or _default_config(anc_a, anc_b)
    tasks = [
        (kind, float(a), measure, anc_a, anc_b, cfg, product_start) for a in alphas
    ]
    return _run_sweep(tasks, workers)


def custom_sweep(
    triples,
    measure: MeasureKind,
    anc_a: int = 0,
    anc_b: int = 0,
    cfg: OptimizerConfig | None = None,
    product_start: bool = False,
    workers: int = 1,
) -> list[SweepRow]:
    """Capacity at each of a list of canonical triples; rows as family_sweep.

    The scalar alpha column of each row reports the triple's leading angle.
    """
    cfg = cfg or _default_config(anc_a, anc_b)
    tasks = [
        (None, tuple(float(a) for a in t), measure, anc_a, anc_b, cfg, product_start)
        for t in triples
    ]
    return _run_sweep(tasks, workers)
