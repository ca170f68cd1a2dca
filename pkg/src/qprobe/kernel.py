# -*- coding: UTF-8 -*-
"""
module kernel.py
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
Dense complex Hermitian linear algebra used by every other module.

Matrices are plain numpy complex128 arrays.  asComplexMatrix() checks the
ComplexMatrix invariants (square, finite) and returns a read-only copy so
values can be shared freely.
"""

from dataclasses import dataclass

import numpy as np
import scipy.linalg
from scipy.stats import unitary_group

import qprobe.config as config
import qprobe.error as qerror


def asComplexMatrix(matM):
    matOut = np.array(matM, dtype=complex)
    if (matOut.ndim == 0):
        matOut = matOut.reshape(1, 1)
    if (matOut.ndim != 2 or matOut.shape[0] != matOut.shape[1] or matOut.shape[0] < 1):
        raise qerror.DimMismatch("Matrix must be square with dim >= 1, got shape " + str(matOut.shape))
    if not np.all(np.isfinite(matOut)):
        raise qerror.ParseError("Matrix has non-finite entries")
    matOut.flags.writeable = False
    return matOut


def hermitianDeviation(matM):
    return float(np.max(np.abs(matM - matM.conj().T)))


def isHermitian(matM, fTol = config.TOL_HERMITIAN):
    return hermitianDeviation(np.asarray(matM)) <= fTol


def checkHermitian(matM):
    # Validate and symmetrize so downstream math sees exactly Hermitian data...
    matM = asComplexMatrix(matM)
    fDev = hermitianDeviation(matM)
    if (fDev > config.TOL_HERMITIAN):
        raise qerror.NotHermitian("Matrix is not Hermitian (max |M - M^H| = %.3e)" % fDev)
    matSym = (matM + matM.conj().T) / 2
    matSym.flags.writeable = False
    return matSym


@dataclass(frozen=True)
class EigenDecomposition:
    eigenvalues: np.ndarray  # ...ascending
    basis: np.ndarray        # ...columns are orthonormal eigenvectors

    def reconstruct(self):
        return (self.basis * self.eigenvalues) @ self.basis.conj().T


def eigHermitian(matM):
    """
    Eigendecomposition of a Hermitian matrix with ascending eigenvalues.

    Raises NotHermitian when max |M - M^H| exceeds the Hermitian tolerance.
    Within a degenerate cluster the eigenvector choice is whatever LAPACK
    returns; it is deterministic for identical input.
    """
    matSym = checkHermitian(matM)
    vecVals, matVecs = scipy.linalg.eigh(matSym)
    vecVals.flags.writeable = False
    matVecs.flags.writeable = False
    return EigenDecomposition(vecVals, matVecs)


def matrixFunction(matM, strFunc, bWithSentinel = False):
    """
    Apply "exp" or "log" to a Hermitian matrix through its eigenbasis.

    For "log", eigenvalues below TOL_DEGENERATE * max eigenvalue are exact
    zeros whose logarithm is the -inf sentinel.  The finite part (zeros
    mapped to 0) is returned; with bWithSentinel the projector onto the -inf
    eigenspace is returned as well, (matLog, matInfProjector).  Without it a
    singular input raises SingularLog.
    """
    eigM = eigHermitian(matM)
    vecVals = eigM.eigenvalues
    matU = eigM.basis

    if (strFunc == "exp"):
        return (matU * np.exp(vecVals)) @ matU.conj().T

    if (strFunc != "log"):
        raise qerror.ProcessError("Unknown matrix function: " + str(strFunc))

    fMax = float(np.max(vecVals))
    fCut = config.TOL_DEGENERATE * max(fMax, 0.0)
    if (np.min(vecVals) < -config.TOL_DEGENERATE):
        raise qerror.NegativeSpectrum("Logarithm of a matrix with eigenvalue %.3e" % np.min(vecVals))
    vecZero = vecVals <= fCut
    vecLog = np.zeros_like(vecVals)
    vecLog[~vecZero] = np.log(vecVals[~vecZero])
    matLog = (matU * vecLog) @ matU.conj().T
    matInf = matU[:, vecZero] @ matU[:, vecZero].conj().T

    if bWithSentinel:
        return (matLog, matInf)
    if np.any(vecZero):
        raise qerror.SingularLog("Logarithm of a singular matrix (%d zero eigenvalues)" % int(np.sum(vecZero)))
    return matLog


def spectralNorm(matM):
    # Schatten-infinity norm: the largest singular value...
    matM = np.asarray(matM)
    if (matM.size == 0):
        return 0.0
    return float(np.linalg.norm(matM, 2))


def frobeniusNorm(matM):
    return float(np.linalg.norm(np.asarray(matM), "fro"))


def commutator(matA, matB):
    matA = np.asarray(matA)
    matB = np.asarray(matB)
    if (matA.shape != matB.shape):
        raise qerror.DimMismatch("Commutator of shapes " + str(matA.shape) + " and " + str(matB.shape))
    return matA @ matB - matB @ matA


def partialTrace(matM, tupleDims, strKeep = "v"):
    """
    Trace out one factor of a bipartite operator on C^d_v (x) C^d_h.

    strKeep is "v" (trace out the second factor) or "h" (trace out the first).
    """
    matM = np.asarray(matM)
    iDimV, iDimH = int(tupleDims[0]), int(tupleDims[1])
    if (iDimV < 1 or iDimH < 1 or matM.ndim != 2 or matM.shape != (iDimV * iDimH, iDimV * iDimH)):
        raise qerror.DimMismatch("Partial trace dims (%d, %d) do not factor shape %s" %
                                 (iDimV, iDimH, str(matM.shape)))
    tensM = matM.reshape(iDimV, iDimH, iDimV, iDimH)
    if (strKeep == "v"):
        return np.einsum("ijkj->ik", tensM)
    if (strKeep == "h"):
        return np.einsum("ijil->jl", tensM)
    raise qerror.ProcessError("Unknown subsystem to keep: " + str(strKeep))


def kron(matA, matB):
    return np.kron(np.asarray(matA, dtype=complex), np.asarray(matB, dtype=complex))


def randomHermitian(iDim, rng):
    matG = rng.standard_normal((iDim, iDim)) + 1j * rng.standard_normal((iDim, iDim))
    return (matG + matG.conj().T) / 2


def randomUnitary(iDim, rng):
    if (iDim == 1):
        return np.exp(2j * np.pi * rng.random()) * np.eye(1, dtype=complex)
    return unitary_group.rvs(iDim, random_state=rng)
