"""Dense complex linear algebra and qubit-register primitives.

Conventions shared by the whole package:

* qubit 0 is the most significant bit of a basis index, so an n-qubit
  amplitude vector reshapes to ``(2,) * n`` with axis k addressing qubit k;
* density matrices only ever go through Hermitian eigendecompositions;
* randomness comes from explicitly seeded counter-based bit generators,
  never from the global numpy RNG.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatchError,
    NotNormalizedError,
    NotUnitaryError,
    WrongPartitionError,
)

ENTROPY_EIGENVALUE_FLOOR = 1e-12
UNITARY_ATOL = 1e-10
NORM_ATOL = 1e-10

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI_YY = np.kron(PAULI_Y, PAULI_Y)

IDENTITY2 = np.eye(2, dtype=complex)
IDENTITY4 = np.eye(4, dtype=complex)

# Control on qubit 0 (the most significant bit).
CNOT = np.array(
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
)
SWAP = np.array(
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex
)
# CNOT with control 0 followed by CNOT with control 1.
DCNOT = np.array(
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [0, 1, 0, 0]], dtype=complex
)

# Simultaneous eigenbasis of the three symmetric two-qubit Pauli products,
# one maximally entangled vector per column.  The phases are fixed so that
# the concurrence of any two-qubit state equals |sum of squared coefficients|
# in this basis.
BELL_BASIS = np.array(
    [
        [-1j, 1, 0, 0],
        [0, 0, -1j, 1],
        [0, 0, -1j, -1],
        [1j, 1, 0, 0],
    ],
    dtype=complex,
) / np.sqrt(2)

# Row j maps interaction coefficients (a1, a2, a3) to the eigenphase of
# column j of BELL_BASIS.  Rows sum to zero columnwise, so the phases always
# sum to zero.
_LAMBDA_COEFFS = np.array(
    [[-1, 1, 1], [1, -1, 1], [1, 1, -1], [-1, -1, -1]], dtype=float
)


def make_rng(seed: int | np.random.Generator) -> np.random.Generator:
    """Return a counter-based generator for the given seed.

    Passing an existing Generator returns it unchanged so helpers can share
    a stream.
    """
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.Generator(np.random.Philox(seed))


def is_unitary(u: np.ndarray, atol: float = UNITARY_ATOL) -> bool:
    u = np.asarray(u)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        return False
    return bool(
        np.abs(u.conj().T @ u - np.eye(u.shape[0])).max() <= atol
    )


def _require_unitary(u: np.ndarray, atol: float = UNITARY_ATOL) -> np.ndarray:
    u = np.asarray(u, dtype=complex)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise DimensionMismatchError(f"expected a square matrix, got shape {u.shape}")
    residual = np.abs(u.conj().T @ u - np.eye(u.shape[0])).max()
    if residual > atol:
        raise NotUnitaryError(
            f"matrix is not unitary: max deviation {residual:.3e} exceeds {atol:.1e}"
        )
    return u


def tensor_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product with the left factor on the high-order qubits."""
    return np.kron(np.asarray(a), np.asarray(b))


def default_partition(n_qubits: int) -> tuple[str, ...]:
    """First half of the register to Alice, the rest to Bob."""
    n_a = (n_qubits + 1) // 2
    return ("A",) * n_a + ("B",) * (n_qubits - n_a)


@dataclass(frozen=True)
class PureState:
    """Unit-norm amplitude vector plus a per-qubit ownership label.

    ``partition[k]`` is ``"A"`` or ``"B"`` and says which party holds
    qubit k; omitting it assigns the first half of the register to A and the
    rest to B.  Amplitudes are stored read-only; build a new state instead of
    mutating one.
    """

    amplitudes: np.ndarray
    partition: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        amps = np.array(self.amplitudes, dtype=complex)
        if self.partition is None:
            n = int(amps.size).bit_length() - 1
            labels = default_partition(n)
        else:
            labels = tuple(self.partition)
        if any(label not in ("A", "B") for label in labels):
            raise WrongPartitionError(f"labels must be 'A' or 'B', got {labels!r}")
        if amps.ndim != 1 or amps.size != 2 ** len(labels):
            raise DimensionMismatchError(
                f"{len(labels)} qubit labels need 2**{len(labels)} amplitudes, "
                f"got shape {amps.shape}"
            )
        if abs(np.linalg.norm(amps) - 1.0) > NORM_ATOL:
            raise NotNormalizedError("amplitudes must have unit norm")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)
        object.__setattr__(self, "partition", labels)

    @property
    def n_qubits(self) -> int:
        return len(self.partition)

    @property
    def dim(self) -> int:
        return self.amplitudes.size

    def qubits(self, label: str) -> tuple[int, ...]:
        """Indices of the qubits owned by one party."""
        return tuple(i for i, owner in enumerate(self.partition) if owner == label)


def apply_to_qubit_pair(
    u: np.ndarray, psi: PureState, qa: int, qb: int
) -> PureState:
    """Apply a 4x4 unitary to qubits (qa, qb), qa on Alice's side, qb on Bob's.

    qa addresses the first tensor factor of u and qb the second.
    """
    u = np.asarray(u, dtype=complex)
    if u.shape != (4, 4):
        raise DimensionMismatchError(f"expected a 4x4 matrix, got shape {u.shape}")
    _require_unitary(u)
    n = psi.n_qubits
    if not (0 <= qa < n and 0 <= qb < n) or qa == qb:
        raise IndexError(f"qubit pair ({qa}, {qb}) invalid for {n} qubits")
    if psi.partition[qa] != "A":
        raise WrongPartitionError(f"qubit {qa} is not held by A")
    if psi.partition[qb] != "B":
        raise WrongPartitionError(f"qubit {qb} is not held by B")
    t = psi.amplitudes.reshape((2,) * n)
    t = np.moveaxis(t, (qa, qb), (0, 1)).reshape(4, -1)
    t = (u @ t).reshape((2, 2) + (2,) * (n - 2))
    t = np.moveaxis(t, (0, 1), (qa, qb)).reshape(-1)
    return PureState(t, psi.partition)


def partial_trace(psi: PureState, keep: str = "A") -> np.ndarray:
    """Reduced density matrix of one party's qubits."""
    if keep not in ("A", "B"):
        raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")
    kept = [i for i, owner in enumerate(psi.partition) if owner == keep]
    dropped = [i for i, owner in enumerate(psi.partition) if owner != keep]
    if not kept or not dropped:
        raise WrongPartitionError(
            "partial trace needs at least one qubit on each side of the cut"
        )
    t = psi.amplitudes.reshape((2,) * psi.n_qubits)
    t = t.transpose(kept + dropped).reshape(2 ** len(kept), -1)
    return t @ t.conj().T


def von_neumann_entropy_bits(rho: np.ndarray) -> float:
    """Entropy -sum(p log2 p) of a density matrix, in bits.

    Eigenvalues at or below the floor are treated as exact zeros so that
    numerically rank-deficient states come out with entropy exactly 0.
    """
    w = np.linalg.eigvalsh(np.asarray(rho, dtype=complex))
    w = w[w > ENTROPY_EIGENVALUE_FLOOR]
    if w.size == 0:
        return 0.0
    return float(-(w * np.log2(w)).sum())


def lambdas_from_alpha(alpha: np.ndarray) -> np.ndarray:
    """Eigenphases of the interaction unitary for coefficients (a1, a2, a3)."""
    return _LAMBDA_COEFFS @ np.asarray(alpha, dtype=float)


def build_canonical_unitary(params) -> np.ndarray:
    """Interaction unitary exp(i sum_j a_j sigma_j x sigma_j).

    Accepts either a CanonicalParams-like object with an ``alpha`` attribute
    or a plain length-3 sequence.  Any real coefficients are allowed; the
    result is diagonal in BELL_BASIS with eigenphases lambdas_from_alpha.
    """
    alpha = np.asarray(getattr(params, "alpha", params), dtype=float)
    if alpha.shape != (3,):
        raise DimensionMismatchError(
            f"expected three interaction coefficients, got shape {alpha.shape}"
        )
    phases = np.exp(1j * lambdas_from_alpha(alpha))
    return (BELL_BASIS * phases) @ BELL_BASIS.conj().T


def haar_random_state(
    n_qubits: int,
    seed: int | np.random.Generator,
    partition: tuple[str, ...] | None = None,
) -> PureState:
    """Haar-uniform pure state, deterministic for a given seed."""
    if n_qubits < 1:
        raise ValueError("need at least one qubit")
    rng = make_rng(seed)
    v = rng.standard_normal(2**n_qubits) + 1j * rng.standard_normal(2**n_qubits)
    v /= np.linalg.norm(v)
    if partition is None:
        partition = default_partition(n_qubits)
    return PureState(v, partition)


def _haar_unitary(rng: np.random.Generator, dim: int) -> np.ndarray:
    # QR of a complex Ginibre matrix; fixing the R-diagonal phases makes the
    # distribution exactly Haar.
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(z / np.sqrt(2))
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def haar_random_unitary(dim: int, seed: int | np.random.Generator) -> np.ndarray:
    """Haar-uniform unitary matrix, deterministic for a given seed."""
    return _haar_unitary(make_rng(seed), dim)


def haar_random_local_unitary(
    seed: int | np.random.Generator,
) -> tuple[np.ndarray, np.ndarray]:
    """Independent Haar 2x2 unitaries (one per party) from a single seed."""
    rng = make_rng(seed)
    return _haar_unitary(rng, 2), _haar_unitary(rng, 2)
