import numpy as np
import pytest

from entcap.errors import (
    DimensionMismatchError,
    NotNormalizedError,
    NotUnitaryError,
    WrongPartitionError,
)
from entcap.qcore import (
    BELL_BASIS,
    CNOT,
    DCNOT,
    IDENTITY4,
    SWAP,
    PureState,
    apply_to_qubit_pair,
    build_canonical_unitary,
    default_partition,
    haar_random_local_unitary,
    haar_random_state,
    haar_random_unitary,
    is_unitary,
    lambdas_from_alpha,
    make_rng,
    partial_trace,
    tensor_product,
    von_neumann_entropy_bits,
)

BELL_PHI_PLUS = np.array([1, 0, 0, 1], dtype=complex) / np.sqrt(2)


def test_pure_state_default_partition():
    psi = PureState(np.array([1, 0, 0, 0], dtype=complex))
    assert psi.partition == ("A", "B")
    assert psi.n_qubits == 2
    assert psi.dim == 4
    chi = PureState(np.ones(8, dtype=complex) / np.sqrt(8))
    assert chi.partition == default_partition(3)
    assert chi.qubits("A") + chi.qubits("B") == (0, 1, 2)


def test_pure_state_validation():
    with pytest.raises(NotNormalizedError):
        PureState(np.array([1.0, 1.0, 0, 0]))
    with pytest.raises(DimensionMismatchError):
        PureState(np.array([1.0, 0, 0]))
    with pytest.raises(WrongPartitionError):
        PureState(np.array([1.0, 0, 0, 0]), ("A", "C"))
    with pytest.raises(DimensionMismatchError):
        PureState(np.array([1.0, 0, 0, 0]), ("A", "A", "B"))


def test_pure_state_amplitudes_read_only():
    psi = PureState(np.array([1, 0, 0, 0], dtype=complex))
    with pytest.raises(ValueError):
        psi.amplitudes[0] = 0.0


def test_known_gates_are_unitary():
    for u in (CNOT, SWAP, DCNOT, IDENTITY4, BELL_BASIS):
        assert is_unitary(u)
    assert not is_unitary(np.ones((4, 4)))
    assert np.allclose(SWAP @ SWAP, np.eye(4))
    assert np.allclose(DCNOT, CNOT @ SWAP)


def test_tensor_product_matches_kron():
    rng = make_rng(3)
    a = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    b = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    assert np.allclose(tensor_product(a, b), np.kron(a, b))


def test_partial_trace_bell_state():
    psi = PureState(BELL_PHI_PLUS)
    for side in ("A", "B"):
        rho = partial_trace(psi, side)
        assert np.allclose(rho, np.eye(2) / 2, atol=1e-12)


def test_partial_trace_product_state_is_pure():
    rng = make_rng(11)
    for _ in range(20):
        a = rng.standard_normal(2) + 1j * rng.standard_normal(2)
        b = rng.standard_normal(2) + 1j * rng.standard_normal(2)
        a /= np.linalg.norm(a)
        b /= np.linalg.norm(b)
        psi = PureState(np.kron(a, b))
        rho = partial_trace(psi, "A")
        assert abs(np.trace(rho @ rho).real - 1.0) < 1e-12
        assert np.allclose(rho, np.outer(a, a.conj()), atol=1e-12)


def test_partial_trace_multiqubit_cut():
    # ancilla-extended Bell pair: entropy across the cut is still one bit
    psi4 = PureState(
        np.kron(np.array([1, 0], dtype=complex), np.kron(BELL_PHI_PLUS, [1, 0])),
        ("A", "A", "B", "B"),
    )
    rho = partial_trace(psi4, "A")
    assert rho.shape == (4, 4)
    assert abs(von_neumann_entropy_bits(rho) - 1.0) < 1e-12


def test_entropy_known_values():
    assert von_neumann_entropy_bits(np.eye(2) / 2) == pytest.approx(1.0, abs=1e-12)
    assert von_neumann_entropy_bits(np.diag([1.0, 0.0])) == pytest.approx(0.0, abs=1e-12)
    # binary entropy of 1/4
    assert von_neumann_entropy_bits(np.diag([0.25, 0.75])) == pytest.approx(
        0.8112781244591328, abs=1e-12
    )


def test_lambdas_from_alpha_cnot_class():
    lams = lambdas_from_alpha(np.array([np.pi / 4, 0.0, 0.0]))
    assert np.allclose(lams, [-np.pi / 4, np.pi / 4, np.pi / 4, -np.pi / 4])
    # traceless interaction: the four eigenphases always cancel
    assert abs(np.sum(lambdas_from_alpha(np.array([0.3, 0.2, 0.1])))) < 1e-12


def test_canonical_unitary_bell_eigenbasis():
    rng = make_rng(21)
    for _ in range(25):
        a1 = rng.uniform(0, np.pi / 4)
        a2 = rng.uniform(0, a1)
        a3 = rng.uniform(-a2, a2)
        alpha = np.array([a1, a2, a3])
        u = build_canonical_unitary(alpha)
        assert is_unitary(u)
        phases = np.exp(1j * lambdas_from_alpha(alpha))
        assert np.allclose(u @ BELL_BASIS, BELL_BASIS * phases[None, :], atol=1e-12)


def test_apply_to_qubit_pair_matches_dense_kron():
    rng = make_rng(33)
    for _ in range(10):
        u = haar_random_unitary(4, rng)
        psi = haar_random_state(4, rng, ("A", "A", "B", "B"))
        # gate on qubits 1 and 2 of (a, A, B, b), most significant qubit first
        out = apply_to_qubit_pair(u, psi, 1, 2)
        dense = np.kron(np.kron(np.eye(2), u), np.eye(2))
        assert np.allclose(out.amplitudes, dense @ psi.amplitudes, atol=1e-12)
        assert out.partition == psi.partition


def test_apply_to_qubit_pair_two_qubits_plain():
    psi = PureState(np.array([0, 0, 1, 0], dtype=complex))
    out = apply_to_qubit_pair(CNOT, psi, 0, 1)
    assert np.allclose(out.amplitudes, [0, 0, 0, 1])


def test_apply_to_qubit_pair_rejects_wrong_side():
    psi = PureState(np.array([1, 0, 0, 0], dtype=complex))
    with pytest.raises(WrongPartitionError):
        apply_to_qubit_pair(CNOT, psi, 1, 0)
    with pytest.raises(DimensionMismatchError):
        apply_to_qubit_pair(np.eye(2), psi, 0, 1)


def test_haar_state_seeded_and_normalized():
    psi = haar_random_state(3, 5)
    chi = haar_random_state(3, 5)
    assert np.array_equal(psi.amplitudes, chi.amplitudes)
    assert abs(np.linalg.norm(psi.amplitudes) - 1.0) < 1e-12
    other = haar_random_state(3, 6)
    assert not np.allclose(psi.amplitudes, other.amplitudes)


def test_haar_unitary_seeded():
    u = haar_random_unitary(8, 9)
    v = haar_random_unitary(8, 9)
    assert np.array_equal(u, v)
    assert is_unitary(u)


def test_haar_local_unitary_is_product():
    va, vb = haar_random_local_unitary(2)
    u = np.kron(va, vb)
    assert is_unitary(u)
    assert va.shape == vb.shape == (2, 2)


def test_make_rng_accepts_generator():
    rng = make_rng(4)
    assert make_rng(rng) is rng
    a = make_rng(4).random(3)
    b = make_rng(4).random(3)
    assert np.array_equal(a, b)


def test_build_canonical_unitary_accepts_params_object():
    from entcap.canonical import CanonicalParams

    alpha = (0.4, 0.3, 0.1)
    assert np.allclose(
        build_canonical_unitary(alpha),
        build_canonical_unitary(CanonicalParams(alpha)),
    )
