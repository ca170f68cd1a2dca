"""Tests for the Hermitian linear algebra kernel."""
import numpy as np
import pytest

import qprobe.error as qerror
import qprobe.kernel as kernel


def test_as_complex_matrix_read_only():
    mat = kernel.asComplexMatrix([[1, 2], [3, 4]])
    assert mat.dtype == complex
    with pytest.raises(ValueError):
        mat[0, 0] = 5


def test_as_complex_matrix_rejects_bad_shapes():
    with pytest.raises(qerror.DimMismatch):
        kernel.asComplexMatrix(np.zeros((2, 3)))
    with pytest.raises(qerror.ParseError):
        kernel.asComplexMatrix([[1, np.nan], [np.nan, 1]])


def test_check_hermitian_rejects_and_symmetrizes():
    with pytest.raises(qerror.NotHermitian):
        kernel.checkHermitian([[0, 1], [0, 0]])
    mat = kernel.checkHermitian([[1, 1 + 1e-12], [1, 2]])
    np.testing.assert_array_equal(mat, mat.conj().T)


def test_eig_hermitian_reconstructs(rng):
    for iDim in (1, 2, 5, 8):
        matH = kernel.randomHermitian(iDim, rng)
        eig = kernel.eigHermitian(matH)
        assert np.all(np.diff(eig.eigenvalues) >= 0)
        np.testing.assert_allclose(eig.reconstruct(), matH, atol=1e-12)
        np.testing.assert_allclose(eig.basis.conj().T @ eig.basis, np.eye(iDim), atol=1e-12)


def test_matrix_log_inverts_exp(rng):
    matH = kernel.randomHermitian(4, rng)
    matExp = kernel.matrixFunction(matH, "exp")
    np.testing.assert_allclose(kernel.matrixFunction(matExp, "log"), matH, atol=1e-10)


def test_matrix_log_of_singular_matrix():
    matP = np.diag([0.5, 0.5, 0.0]).astype(complex)
    with pytest.raises(qerror.SingularLog):
        kernel.matrixFunction(matP, "log")
    matLog, matInf = kernel.matrixFunction(matP, "log", bWithSentinel=True)
    np.testing.assert_allclose(matLog, np.diag([np.log(0.5), np.log(0.5), 0.0]), atol=1e-14)
    np.testing.assert_allclose(matInf, np.diag([0.0, 0.0, 1.0]), atol=1e-14)


def test_matrix_log_rejects_negative_spectrum():
    with pytest.raises(qerror.NegativeSpectrum):
        kernel.matrixFunction(np.diag([1.0, -0.5]), "log")


def test_norms_and_commutator():
    assert kernel.spectralNorm(np.diag([1.0, -3.0])) == pytest.approx(3.0)
    assert kernel.frobeniusNorm(np.diag([3.0, 4.0])) == pytest.approx(5.0)
    matX = np.array([[0, 1], [1, 0]], dtype=complex)
    matZ = np.diag([1.0, -1.0]).astype(complex)
    np.testing.assert_allclose(kernel.commutator(matZ, matX), [[0, 2], [-2, 0]])
    with pytest.raises(qerror.DimMismatch):
        kernel.commutator(np.eye(2), np.eye(3))


def test_partial_trace_of_product(rng):
    matA = kernel.randomHermitian(2, rng)
    matB = kernel.randomHermitian(3, rng)
    matAB = kernel.kron(matA, matB)
    np.testing.assert_allclose(kernel.partialTrace(matAB, (2, 3), "v"), np.trace(matB) * matA, atol=1e-12)
    np.testing.assert_allclose(kernel.partialTrace(matAB, (2, 3), "h"), np.trace(matA) * matB, atol=1e-12)
    with pytest.raises(qerror.DimMismatch):
        kernel.partialTrace(matAB, (3, 3))


def test_random_unitary_is_unitary(rng):
    for iDim in (1, 2, 4):
        matU = kernel.randomUnitary(iDim, rng)
        np.testing.assert_allclose(matU.conj().T @ matU, np.eye(iDim), atol=1e-12)


def test_matrix_function_identities():
    matX = np.array([[0, 1], [1, 0]], dtype=complex)
    np.testing.assert_allclose(kernel.matrixFunction(np.zeros((3, 3)), "exp"), np.eye(3), atol=1e-15)
    np.testing.assert_allclose(kernel.matrixFunction(np.eye(3), "log"), np.zeros((3, 3)), atol=1e-15)
    np.testing.assert_allclose(kernel.matrixFunction(matX, "exp"), np.cosh(1) * np.eye(2) + np.sinh(1) * matX,
                               atol=1e-14)


def test_pauli_commutator_and_bell_marginal():
    matX = np.array([[0, 1], [1, 0]], dtype=complex)
    matY = np.array([[0, -1j], [1j, 0]])
    matZ = np.diag([1.0, -1.0]).astype(complex)
    np.testing.assert_allclose(kernel.commutator(matX, matZ), -2j * matY, atol=0)
    vecBell = np.array([1, 0, 0, 1]) / np.sqrt(2)
    np.testing.assert_allclose(kernel.partialTrace(np.outer(vecBell, vecBell), (2, 2), "v"), np.eye(2) / 2,
                               atol=1e-15)
    np.testing.assert_allclose(np.linalg.eigvalsh(kernel.kron(matZ, matZ)), [-1, -1, 1, 1])


def test_eig_hermitian_sweep(rng):
    for _ in range(100):
        iDim = int(rng.integers(1, 17))
        matH = kernel.randomHermitian(iDim, rng)
        eig = kernel.eigHermitian(matH)
        np.testing.assert_allclose(eig.reconstruct(), matH, atol=1e-10)
        np.testing.assert_allclose(eig.basis.conj().T @ eig.basis, np.eye(iDim), atol=1e-10)


def test_spectral_norm_is_a_norm(rng):
    for _ in range(100):
        iDim = int(rng.integers(1, 9))
        matA = kernel.randomHermitian(iDim, rng)
        matB = kernel.randomHermitian(iDim, rng)
        cScale = complex(rng.standard_normal(), rng.standard_normal())
        assert kernel.spectralNorm(matA + matB) <= kernel.spectralNorm(matA) + kernel.spectralNorm(matB) + 1e-10
        assert kernel.spectralNorm(cScale * matA) == pytest.approx(abs(cScale) * kernel.spectralNorm(matA), abs=1e-10)


def test_commutator_norm_bound(rng):
    for _ in range(100):
        iDim = int(rng.integers(1, 9))
        matA = kernel.randomHermitian(iDim, rng)
        matB = kernel.randomHermitian(iDim, rng)
        fBound = 2 * kernel.spectralNorm(matA) * kernel.spectralNorm(matB)
        assert kernel.spectralNorm(kernel.commutator(matA, matB)) <= fBound + 1e-10


def test_partial_trace_preserves_trace(rng):
    for (iDimV, iDimH) in ((1, 3), (2, 2), (3, 4), (4, 2)):
        matM = kernel.randomHermitian(iDimV * iDimH, rng)
        fTrace = np.trace(matM)
        assert np.trace(kernel.partialTrace(matM, (iDimV, iDimH), "v")) == pytest.approx(fTrace, abs=1e-12)
        assert np.trace(kernel.partialTrace(matM, (iDimV, iDimH), "h")) == pytest.approx(fTrace, abs=1e-12)
