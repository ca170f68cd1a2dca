# -*- coding: UTF-8 -*-
"""
module qstate.py
-----------------------------------------------------------------------------

 Qprobe : a toolkit to locate and verify quantum advantage in Boltzmann
          machine learning
 Copyright (C) 2026 by the Qprobe Authors

This file is part of Qprobe.

 Qprobe is free software; you can redistribute it and/or
 modify it under the terms of the GNU General Public License as published
 by the Free Software Foundation; either version 2 of the License, or (at
 your option) any later version.

 Qprobe is distributed in the hope that it will be
 useful, but WITHOUT ANY WARRANTY; without even the implied warranty of
 MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU
 General Public License for more details.

 You should have received a copy of the GNU General Public License along
 with the qprobe package; if not, write to the Free Software
 Foundation, Inc., 59 Temple Place, Suite 330, Boston, MA 02111-1307 USA

-----------------------------------------------------------------------------
"""


file_major = "0"
file_minor = "1"
file_micro = "0"


"""
Quantum generalization of the Boltzmann machine: density matrices,
observables, relative entropy, the commutator score, Bloch and Schmidt forms,
and the transverse field Hamiltonian.

Qubit 0 is the most significant tensor factor in every many-qubit operator.
"""

from dataclasses import dataclass
from functools import reduce

import numpy as np

import qprobe.config as config
import qprobe.error as qerror
import qprobe.kernel as kernel


PAULI_I = np.eye(2, dtype=complex)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
for matPauli in (PAULI_I, PAULI_X, PAULI_Y, PAULI_Z):
    matPauli.flags.writeable = False


###############################################################################
# Qprobe Density Matrix and Observable Classes
###############################################################################
class Observable():
    def __init__(self, matM):
        self.mat = kernel.checkHermitian(matM)

    @property
    def iDim(self):
        return self.mat.shape[0]

    def __repr__(self):
        return "%s(dim=%d)" % (type(self).__name__, self.iDim)


class DensityMatrix():
    """
    Hermitian, unit trace, positive semi-definite matrix.

    InvalidDensity names the first violated invariant: "hermitian", "trace"
    or "psd".
    """
    def __init__(self, matM):
        matM = kernel.asComplexMatrix(matM)
        if not kernel.isHermitian(matM):
            raise qerror.InvalidDensity("hermitian")
        matM = kernel.checkHermitian(matM)
        fTrace = float(np.trace(matM).real)
        if (abs(fTrace - 1.0) > config.TOL_DENSITY):
            raise qerror.InvalidDensity("trace", "Density matrix trace is %.17g, not 1 (trace)" % fTrace)
        fMin = float(np.linalg.eigvalsh(matM)[0])
        if (fMin < -config.TOL_DENSITY):
            raise qerror.InvalidDensity("psd", "Density matrix has eigenvalue %.3e (psd)" % fMin)
        self.mat = matM

    @property
    def iDim(self):
        return self.mat.shape[0]

    def __repr__(self):
        return "%s(dim=%d)" % (type(self).__name__, self.iDim)


@dataclass(frozen=True)
class BlochVector:
    r: tuple

    def __post_init__(self):
        vecR = np.asarray(self.r, dtype=float)
        if (vecR.shape != (3, )):
            raise qerror.DimMismatch("Bloch vector needs 3 components")
        if (np.linalg.norm(vecR) > 1 + config.TOL_BLOCH):
            raise qerror.ValidationError("Bloch vector length %.17g exceeds 1" % np.linalg.norm(vecR))
        object.__setattr__(self, "r", tuple(float(f) for f in vecR))


@dataclass(frozen=True)
class SchmidtDecomposition:
    coefficients: np.ndarray  # ...descending, min(d_v, d_h) entries
    left_basis: np.ndarray    # ...columns, one per retained term
    right_basis: np.ndarray   # ...columns, one per retained term
    rank: int

    def reconstruct(self):
        vecPsi = 0
        for i in range(self.rank):
            vecPsi = vecPsi + self.coefficients[i] * np.kron(self.left_basis[:, i], self.right_basis[:, i])
        return np.asarray(vecPsi, dtype=complex)


def _mat(obj):
    if isinstance(obj, (DensityMatrix, Observable)):
        return obj.mat
    return np.asarray(obj, dtype=complex)


def _checkDims(matA, matB, strWhat):
    if (matA.shape != matB.shape):
        raise qerror.DimMismatch(strWhat + " of dims %d and %d" % (matA.shape[0], matB.shape[0]))


###############################################################################
# Operations
###############################################################################
def densityFromHamiltonian(H, fBeta):
    # exp(-beta H) / Tr exp(-beta H), shifted by the smallest eigenvalue...
    matH = _mat(H)
    if (matH.shape[0] > config.MAX_DENSE_DIM):
        raise qerror.TooLarge("Thermal state limited to dim %d" % config.MAX_DENSE_DIM)
    if not (fBeta > 0):
        raise qerror.ValidationError("Beta must be positive")
    eigH = kernel.eigHermitian(matH)
    vecWeights = np.exp(-fBeta * (eigH.eigenvalues - eigH.eigenvalues[0]))
    vecWeights /= np.sum(vecWeights)
    return DensityMatrix((eigH.basis * vecWeights) @ eigH.basis.conj().T)


def expectation(rho, O):
    matRho, matO = _mat(rho), _mat(O)
    _checkDims(matRho, matO, "Expectation")
    cValue = np.trace(matRho @ matO)
    if (abs(cValue.imag) >= config.TOL_IMAGINARY):
        raise qerror.ProcessError("Tr[rho O] has imaginary part %.3e" % cValue.imag)
    return float(cValue.real)


def quantumRelativeEntropy(rho, sigma):
    """
    S(rho||sigma) = Tr[rho (ln rho - ln sigma)] in nats.

    Zero eigenvalues of rho contribute nothing; the result is +inf when rho
    puts weight above TOL_SUPPORT on the null space of sigma.
    """
    matRho, matSigma = _mat(rho), _mat(sigma)
    _checkDims(matRho, matSigma, "Relative entropy")
    matLogRho, matInfRho = kernel.matrixFunction(matRho, "log", bWithSentinel=True)
    matLogSigma, matInfSigma = kernel.matrixFunction(matSigma, "log", bWithSentinel=True)
    if (np.trace(matRho @ matInfSigma).real > config.TOL_SUPPORT):
        return np.inf
    fValue = float(np.trace(matRho @ (matLogRho - matLogSigma)).real)
    return max(fValue, 0.0)


def commutatorAdvantage(rho, O):
    matRho, matO = _mat(rho), _mat(O)
    _checkDims(matRho, matO, "Commutator")
    return kernel.spectralNorm(kernel.commutator(matRho, matO))


def purity(rho):
    matRho = _mat(rho)
    return float(np.real(np.trace(matRho @ matRho)))


def blochToDensity(bloch):
    if not isinstance(bloch, BlochVector):
        bloch = BlochVector(tuple(bloch))
    fX, fY, fZ = bloch.r
    return DensityMatrix(0.5 * (PAULI_I + fX * PAULI_X + fY * PAULI_Y + fZ * PAULI_Z))


def densityToBloch(rho):
    matRho = _mat(rho)
    if (matRho.shape != (2, 2)):
        raise qerror.DimMismatch("Bloch vector needs a dim 2 state, got dim %d" % matRho.shape[0])
    return BlochVector(tuple(float(np.trace(matRho @ matP).real) for matP in (PAULI_X, PAULI_Y, PAULI_Z)))


def pureDensity(vecPsi):
    vecPsi = np.asarray(vecPsi, dtype=complex).ravel()
    fNorm = float(np.linalg.norm(vecPsi))
    if (abs(fNorm - 1.0) > config.TOL_NORMALIZED):
        raise qerror.NotNormalized("State vector norm is %.17g" % fNorm)
    return DensityMatrix(np.outer(vecPsi, vecPsi.conj()))


def _siteOperator(matOp, iSite, iQubits):
    return reduce(np.kron, [matOp if (i == iSite) else PAULI_I for i in range(iQubits)])


def transverseFieldHamiltonian(matWeights, vecField):
    """
    H = - sum_{i<j} w_ij Z_i Z_j - sum_i b_i X_i on n qubits.
    """
    vecField = np.asarray(vecField, dtype=float).ravel()
    iQubits = vecField.size
    matWeights = np.asarray(matWeights, dtype=float)
    if (iQubits > config.MAX_TF_QUBITS):
        raise qerror.TooLarge("Transverse field model limited to %d qubits" % config.MAX_TF_QUBITS)
    if (iQubits < 1 or matWeights.shape != (iQubits, iQubits)):
        raise qerror.DimMismatch("Weights shape %s does not match %d qubits" % (str(matWeights.shape), iQubits))
    if (np.max(np.abs(matWeights - matWeights.T)) > config.TOL_HERMITIAN or np.any(np.diag(matWeights) != 0)):
        raise qerror.ValidationError("Weights must be symmetric with a zero diagonal")

    # Z_i Z_j is diagonal; build it from the +/-1 spin table...
    matSpins = 1 - 2 * ((np.arange(2**iQubits)[:, None] >> np.arange(iQubits - 1, -1, -1)) & 1)
    vecI, vecJ = np.triu_indices(iQubits, 1)
    vecDiag = -np.sum(matWeights[vecI, vecJ] * matSpins[:, vecI] * matSpins[:, vecJ], axis=1)
    matH = np.diag(vecDiag.astype(complex))
    for i in range(iQubits):
        if (vecField[i] != 0):
            matH = matH - vecField[i] * _siteOperator(PAULI_X, i, iQubits)
    return Observable(matH)


def schmidtDecompose(vecPsi, tupleDims):
    """
    Schmidt form of a bipartite pure state through the reduced density
    matrix Tr_h |psi><psi|.

    Coefficients are the norms of the projections of psi on the reduced
    eigenvectors, so components absent from psi come out as numerical zeros
    rather than square roots of round-off.
    """
    vecPsi = np.asarray(vecPsi, dtype=complex).ravel()
    iDimV, iDimH = int(tupleDims[0]), int(tupleDims[1])
    if (vecPsi.size != iDimV * iDimH):
        raise qerror.DimMismatch("State of length %d does not factor as %d x %d" % (vecPsi.size, iDimV, iDimH))
    fNorm = float(np.linalg.norm(vecPsi))
    if (abs(fNorm - 1.0) > config.TOL_NORMALIZED):
        raise qerror.NotNormalized("State vector norm is %.17g" % fNorm)

    matRhoV = kernel.partialTrace(np.outer(vecPsi, vecPsi.conj()), (iDimV, iDimH), "v")
    eigV = kernel.eigHermitian(matRhoV)
    matLeft = eigV.basis[:, ::-1]
    matPsi = vecPsi.reshape(iDimV, iDimH)
    matProj = matLeft.conj().T @ matPsi  # ...row i is (<i| x I) psi
    vecCoeffs = np.linalg.norm(matProj, axis=1)
    vecOrder = np.argsort(-vecCoeffs, kind="stable")
    vecCoeffs = vecCoeffs[vecOrder]
    matLeft = matLeft[:, vecOrder]
    matProj = matProj[vecOrder]

    iRank = int(np.sum(vecCoeffs > config.TOL_SCHMIDT))
    iRank = min(iRank, iDimV, iDimH)
    matRight = (matProj[:iRank] / vecCoeffs[:iRank, None]).T
    return SchmidtDecomposition(vecCoeffs[:min(iDimV, iDimH)], matLeft[:, :iRank], matRight, iRank)


###############################################################################
# Quantum Boltzmann Machine
###############################################################################
def quantumVisibleState(machine, vecTransverse):
    """
    Reduced visible state of a quantum Boltzmann machine: the thermal state
    of the transverse field Hamiltonian with the machine's z-z couplings and
    the given transverse field, traced over the hidden qubits.

    Visible qubits come first in the returned operator, in layer order.
    """
    iQubits = machine.iSpins
    listOrder = machine.listVisible + machine.listHidden
    matW = np.asarray(machine.matWeights)[np.ix_(listOrder, listOrder)]
    vecField = np.asarray(vecTransverse, dtype=float).ravel()
    if (vecField.size != iQubits):
        raise qerror.DimMismatch("Transverse field needs %d entries" % iQubits)
    obsH = transverseFieldHamiltonian(matW, vecField[listOrder])
    # ...the classical biases act along z
    matSpins = 1 - 2 * ((np.arange(2**iQubits)[:, None] >> np.arange(iQubits - 1, -1, -1)) & 1)
    vecBias = np.asarray(machine.vecBiases)[listOrder]
    matH = obsH.mat - np.diag((matSpins @ vecBias).astype(complex))
    rho = densityFromHamiltonian(matH, machine.fBeta)
    iDimV = 2**len(machine.listVisible)
    return DensityMatrix(kernel.partialTrace(rho.mat, (iDimV, 2**iQubits // iDimV), "v"))


###############################################################################
# Random States
###############################################################################
def randomDensity(iDim, rng, iRank = None):
    # Ginibre ensemble: G G^H / Tr(G G^H) ...
    if (iRank is None):
        iRank = iDim
    matG = rng.standard_normal((iDim, iRank)) + 1j * rng.standard_normal((iDim, iRank))
    matRho = matG @ matG.conj().T
    return DensityMatrix(matRho / np.trace(matRho).real)


def randomPureState(iDim, rng):
    vecPsi = rng.standard_normal(iDim) + 1j * rng.standard_normal(iDim)
    return vecPsi / np.linalg.norm(vecPsi)
