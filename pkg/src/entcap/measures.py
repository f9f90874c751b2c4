"""Bipartite entanglement measures on pure states.

All measures are evaluated across the A|B cut recorded in the state's
partition labels.  The linear entropy is reported as defined,
R = 1 - Tr(rho_A^2); for two-qubit cuts that tops out at 1/2, so a rescaled
variant 2R with range [0, 1] is exposed alongside it.
"""
from __future__ import annotations

import enum
import math

import numpy as np

from .errors import DimensionMismatchError, UnsupportedMeasureError, WrongPartitionError
from .qcore import (
    PAULI_YY,
    PureState,
    default_partition,
    partial_trace,
    von_neumann_entropy_bits,
)


class MeasureKind(enum.Enum):
    """Entanglement measures the optimizer and capacity formulas accept."""

    CONCURRENCE = "concurrence"
    CONCURRENCE_SQUARED = "c2"
    ENTROPY_OF_ENTANGLEMENT = "entropy"
    LINEAR_ENTROPY = "linear"


def _as_state(psi) -> PureState:
    if isinstance(psi, PureState):
        return psi
    amps = np.asarray(psi, dtype=complex)
    n = int(round(math.log2(amps.size))) if amps.ndim == 1 else -1
    if n < 1 or 2**n != amps.size:
        raise DimensionMismatchError(
            f"amplitude vector of shape {amps.shape} is not a qubit register"
        )
    return PureState(amps, default_partition(n))


def _two_qubit_amplitudes(psi) -> np.ndarray:
    if isinstance(psi, PureState):
        if psi.n_qubits != 2:
            raise DimensionMismatchError("concurrence is defined for exactly two qubits")
        if sorted(psi.partition) != ["A", "B"]:
            raise WrongPartitionError("concurrence needs one qubit per party")
        return psi.amplitudes
    amps = np.asarray(psi, dtype=complex)
    if amps.shape != (4,):
        raise DimensionMismatchError(f"expected 4 amplitudes, got shape {amps.shape}")
    return amps


def concurrence(psi) -> float:
    """|<psi| sigma_y x sigma_y |psi*>| for a two-qubit pure state."""
    amps = _two_qubit_amplitudes(psi)
    return float(abs(amps @ PAULI_YY @ amps))


def entropy_of_entanglement(psi, keep: str = "A") -> float:
    """Von Neumann entropy of one party's reduced state, in ebits."""
    return von_neumann_entropy_bits(partial_trace(_as_state(psi), keep))


def linear_entropy(psi, keep: str = "A") -> float:
    """R = 1 - Tr(rho_A^2), the purity deficit of the reduced state."""
    rho = partial_trace(_as_state(psi), keep)
    return float(1.0 - np.einsum("ab,ab->", rho, rho.conj()).real)


def linear_entropy_rescaled(psi, keep: str = "A") -> float:
    """2R, normalized to reach 1 on a maximally entangled two-qubit state."""
    return 2.0 * linear_entropy(psi, keep)


def evaluate(kind: MeasureKind, psi, keep: str = "A") -> float:
    """Dispatch a measure by kind.

    Concurrence variants are only defined on a plain two-qubit register;
    asking for them on a larger (ancilla-extended) state raises
    UnsupportedMeasureError.
    """
    state = _as_state(psi)
    if kind in (MeasureKind.CONCURRENCE, MeasureKind.CONCURRENCE_SQUARED):
        if state.n_qubits != 2:
            raise UnsupportedMeasureError(
                f"{kind.value} is undefined on {state.n_qubits} qubits; "
                "use entropy or linear entropy for ancilla-extended registers"
            )
        c = concurrence(state)
        return c if kind is MeasureKind.CONCURRENCE else c * c
    if kind is MeasureKind.ENTROPY_OF_ENTANGLEMENT:
        return entropy_of_entanglement(state, keep)
    if kind is MeasureKind.LINEAR_ENTROPY:
        return linear_entropy(state, keep)
    raise UnsupportedMeasureError(f"unknown measure kind {kind!r}")


def binary_entropy(p: float) -> float:
    """H(p) = -p log2 p - (1-p) log2 (1-p), with H(0) = H(1) = 0."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability {p} outside [0, 1]")
    total = 0.0
    if p > 0.0:
        total -= p * math.log2(p)
    if p < 1.0:
        total -= (1.0 - p) * math.log2(1.0 - p)
    return total


def entropy_from_concurrence(c: float) -> float:
    """Entropy of entanglement of a two-qubit pure state with concurrence c."""
    if not 0.0 <= c <= 1.0 + 1e-12:
        raise ValueError(f"concurrence {c} outside [0, 1]")
    c = min(c, 1.0)
    return binary_entropy((1.0 + math.sqrt(1.0 - c * c)) / 2.0)
