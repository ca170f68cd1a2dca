# -*- coding: UTF-8 -*-
"""
module probe.py
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
Optimal probe states for an observable.

Only traceless parts matter in [rho, O].  In the eigenbasis of O the
traceless eigenvalues split into positive a_i and negative -b_j with
sum a_i = t = sum b_j.  The two-component generator T = diag(..t..-t..)
sits on the largest a_i and the largest b_j, and the pure state
(|i*> + e^{i phi} |j*>)/sqrt(2), transverse to T, maximizes ||[rho, O]||_inf
at (a_i* + b_j*)/2.  A Nelder-Mead oracle over pure states checks this
without using any of the above.
"""

from dataclasses import dataclass
from concurrent.futures import ProcessPoolExecutor

import numpy as np
from scipy.optimize import minimize

import qprobe.config as config
import qprobe.error as qerror
import qprobe.kernel as kernel
import qprobe.qstate as qstate
import qprobe.utils as utils


###############################################################################
# Types
###############################################################################
@dataclass(frozen=True)
class CartanSplit:
    trace_part: float      # ...coefficient of the identity, Tr[O]/n
    pos: tuple             # ...(position, a_i > 0)
    neg: tuple             # ...(position, b_j > 0)
    zeros: tuple           # ...positions
    t: float
    eigenbasis: np.ndarray # ...columns; identity when O is diagonal

    @property
    def iDim(self):
        return self.eigenbasis.shape[0]

    def traceless(self):
        # Traceless eigenvalues in position order...
        vecDiag = np.zeros(self.iDim)
        for (iPos, fA) in self.pos:
            vecDiag[iPos] = fA
        for (iPos, fB) in self.neg:
            vecDiag[iPos] = -fB
        return vecDiag


@dataclass(frozen=True)
class GeneratorT:
    i_star: int
    j_star: int
    T: np.ndarray          # ...diagonal of T


@dataclass(frozen=True)
class ProbeConstruction:
    split: CartanSplit
    i_star: int
    j_star: int
    T: np.ndarray
    n_T: float             # ...transverse azimuth phi in [0, 2 pi)
    c: float
    psi_eigen: np.ndarray  # ...probe vector in the eigenbasis of O
    rho_star: qstate.DensityMatrix
    achieved_norm: float


@dataclass(frozen=True)
class SensitivityBound:
    qfi: float
    cramer_rao: float


@dataclass(frozen=True)
class GapReport:
    visible_norm: float
    pure_max: float
    gap: float
    schmidt_rank: int


@dataclass(frozen=True)
class ObservableConstruction:
    observable: qstate.Observable
    i_max: int             # ...eigenbasis positions of the largest and
    i_min: int             #    smallest eigenvalues of rho
    achieved_norm: float


def _observable(O):
    if isinstance(O, qstate.Observable):
        return O
    return qstate.Observable(O)


###############################################################################
# Construction
###############################################################################
def cartanSplit(O):
    obsO = _observable(O)
    matO = obsO.mat
    iDim = matO.shape[0]
    if (iDim < 2):
        raise qerror.DimMismatch("Cartan split needs dim >= 2")

    matOff = matO - np.diag(np.diag(matO))
    if (np.max(np.abs(matOff)) <= config.TOL_HERMITIAN):
        vecVals = np.diag(matO).real.copy()
        matBasis = np.eye(iDim, dtype=complex)
    else:
        eigO = kernel.eigHermitian(matO)
        vecVals = np.array(eigO.eigenvalues)
        matBasis = np.array(eigO.basis)
    matBasis.flags.writeable = False

    fTrace = float(np.mean(vecVals))
    vecTraceless = vecVals - fTrace
    fCut = config.TOL_DEGENERATE * kernel.spectralNorm(matO)
    listPos = [(i, float(f)) for i, f in enumerate(vecTraceless) if (f > fCut)]
    listNeg = [(i, float(-f)) for i, f in enumerate(vecTraceless) if (f < -fCut)]
    listZeros = [i for i, f in enumerate(vecTraceless) if (abs(f) <= fCut)]
    if not listPos or not listNeg:
        raise qerror.ZeroTraceless("Observable is proportional to the identity: " + config.STR_NO_ADVANTAGE)

    fSumA = sum(f for (i, f) in listPos)
    fSumB = sum(f for (i, f) in listNeg)
    if (abs(fSumA - fSumB) > config.TOL_HERMITIAN * max(1.0, fSumA)):
        utils.printWarning("Cartan split imbalance %.3e" % (fSumA - fSumB))
    return CartanSplit(fTrace, tuple(listPos), tuple(listNeg), tuple(listZeros),
                       (fSumA + fSumB) / 2, matBasis)


def constructT(split):
    # Largest a_i and largest b_j, lowest position on ties...
    iStar, fBestA = split.pos[0]
    for (iPos, fA) in split.pos[1:]:
        if (fA > fBestA):
            iStar, fBestA = iPos, fA
    jStar, fBestB = split.neg[0]
    for (iPos, fB) in split.neg[1:]:
        if (fB > fBestB):
            jStar, fBestB = iPos, fB
    vecT = np.zeros(split.iDim)
    vecT[iStar] = split.t
    vecT[jStar] = -split.t
    vecT.flags.writeable = False
    return GeneratorT(iStar, jStar, vecT)


def optimalProbe(O, fPhi = 0.0):
    """
    Closed-form probe state maximizing ||[rho, O]||_inf.

    The state is pure and lives on {i*, j*} of O's eigenbasis:
    (|i*> + e^{i phi} |j*>) / sqrt(2), rotated back to the input basis.
    """
    obsO = _observable(O)
    split = cartanSplit(obsO)
    gen = constructT(split)
    fPhi = float(fPhi) % (2 * np.pi)

    vecPsi = np.zeros(split.iDim, dtype=complex)
    vecPsi[gen.i_star] = 1 / np.sqrt(2)
    vecPsi[gen.j_star] = np.exp(1j * fPhi) / np.sqrt(2)
    vecPsi.flags.writeable = False
    vecInput = split.eigenbasis @ vecPsi
    rhoStar = qstate.DensityMatrix(np.outer(vecInput, vecInput.conj()))
    fNorm = qstate.commutatorAdvantage(rhoStar, obsO)
    utils.printInfo("Optimal probe on positions (%d, %d), norm %.17g" % (gen.i_star, gen.j_star, fNorm))
    return ProbeConstruction(split, gen.i_star, gen.j_star, gen.T, fPhi, 0.5, vecPsi, rhoStar, fNorm)


def cartanResidual(split, gen):
    # Traceless diagonal of O minus its projection on T...
    vecO = split.traceless()
    fCoeff = float(np.dot(gen.T, vecO) / np.dot(gen.T, gen.T))
    return vecO - fCoeff * gen.T


###############################################################################
# Oracles
###############################################################################
def _commutatorNorm(matRho, matO):
    # i[rho, O] is Hermitian for Hermitian arguments, so its largest |eigenvalue| is the norm...
    matC = matRho @ matO
    return float(np.max(np.abs(np.linalg.eigvalsh(1j * (matC - matC.conj().T)))))


def _pureObjective(vecX, matO, iDim):
    vecPsi = vecX[:iDim] + 1j * vecX[iDim:]
    fNorm = np.linalg.norm(vecPsi)
    if (fNorm == 0):
        return 0.0
    vecPsi = vecPsi / fNorm
    return -_commutatorNorm(np.outer(vecPsi, vecPsi.conj()), matO)


def _mixedObjective(vecX, matO, iDim):
    iHalf = iDim * iDim
    matA = (vecX[:iHalf] + 1j * vecX[iHalf:]).reshape(iDim, iDim)
    matRho = matA @ matA.conj().T
    fTrace = np.trace(matRho).real
    if (fTrace == 0):
        return 0.0
    return -_commutatorNorm(matRho / fTrace, matO)


def _nelderMead(funcObjective, vecStart, matO, iDim, iMaxIter):
    result = minimize(funcObjective, vecStart, args=(matO, iDim), method="Nelder-Mead",
                      options={"maxiter": iMaxIter, "xatol": config.NM_TOLERANCE,
                               "fatol": config.NM_TOLERANCE, "adaptive": True})
    return result.x


def _oracleRestart(tupleArgs):
    # One seeded restart; module level so a process pool can run it...
    (matO, seedSeq, bMixed, iMaxIter) = tupleArgs
    iDim = matO.shape[0]
    rng = np.random.default_rng(seedSeq)
    if bMixed:
        vecX = _nelderMead(_mixedObjective, rng.standard_normal(2 * iDim * iDim), matO, iDim, iMaxIter)
        iHalf = iDim * iDim
        matA = (vecX[:iHalf] + 1j * vecX[iHalf:]).reshape(iDim, iDim)
        matRho = matA @ matA.conj().T
        matRho = matRho / np.trace(matRho).real
    else:
        vecX = _nelderMead(_pureObjective, rng.standard_normal(2 * iDim), matO, iDim, iMaxIter)
        vecPsi = vecX[:iDim] + 1j * vecX[iDim:]
        vecPsi = vecPsi / np.linalg.norm(vecPsi)
        matRho = np.outer(vecPsi, vecPsi.conj())
    return kernel.spectralNorm(kernel.commutator(matRho, matO)), matRho


def _runOracle(O, iRestarts, iSeed, iWorkers, bMixed, iMaxIter):
    matO = np.array(_observable(O).mat)
    if (iRestarts < 1):
        raise qerror.ValidationError("Oracle needs at least one restart")
    listTasks = [(matO, seedSeq, bMixed, iMaxIter)
                 for seedSeq in np.random.SeedSequence(iSeed).spawn(iRestarts)]
    if (iWorkers > 1):
        with ProcessPoolExecutor(max_workers=iWorkers) as executor:
            listResults = list(executor.map(_oracleRestart, listTasks))
    else:
        listResults = [_oracleRestart(tupleTask) for tupleTask in listTasks]

    # Max with the lowest restart index on ties, so pools and loops agree...
    iBest = 0
    for iRestart in range(1, len(listResults)):
        if (listResults[iRestart][0] > listResults[iBest][0]):
            iBest = iRestart
    fBest, matBest = listResults[iBest]
    utils.printInfo("Oracle best norm %.17g at restart %d of %d" % (fBest, iBest, iRestarts), 2)
    return qstate.DensityMatrix(matBest), fBest


def oracleMaxPure(O, iRestarts = config.DEFAULT_RESTARTS, iSeed = 0, iWorkers = 1,
                  iMaxIter = config.NM_MAX_ITERATIONS):
    """
    Brute-force maximum of ||[rho, O]||_inf over pure states.

    Nelder-Mead over the 2*dim real coordinates of an unnormalized vector
    (normalized at every evaluation), from iRestarts random starts.  Restart
    seeds are spawned from iSeed by index.  Returns (best state, best norm).
    """
    if (_observable(O).iDim > config.MAX_ORACLE_DIM):
        raise qerror.TooLarge("Oracle search limited to dim %d" % config.MAX_ORACLE_DIM)
    return _runOracle(O, iRestarts, iSeed, iWorkers, False, iMaxIter)


def oracleMaxMixed(O, iRestarts = config.DEFAULT_MIXED_RESTARTS, iSeed = 0, iWorkers = 1,
                   iMaxIter = config.NM_MAX_ITERATIONS):
    # Same search over rho = A A^H / Tr(A A^H) with a full complex A...
    if (_observable(O).iDim > config.MAX_ORACLE_DIM):
        raise qerror.TooLarge("Oracle search limited to dim %d" % config.MAX_ORACLE_DIM)
    return _runOracle(O, iRestarts, iSeed, iWorkers, True, iMaxIter)


###############################################################################
# Sensitivity
###############################################################################
def qfiUnitaryEncoding(rho, O):
    """
    Symmetric logarithmic derivative QFI of theta -> e^{-i theta O} rho e^{i theta O}:
        F = sum_{k,l: l_k + l_l > 0} 2 (l_k - l_l)^2 / (l_k + l_l) |<k|O|l>|^2
    in the eigenbasis of rho.  The Cramer-Rao bound is 1/F, +inf when F
    vanishes.
    """
    matRho = qstate._mat(rho)
    matO = _observable(O).mat
    if (matRho.shape != matO.shape):
        raise qerror.DimMismatch("QFI of dims %d and %d" % (matRho.shape[0], matO.shape[0]))
    eigRho = kernel.eigHermitian(matRho)
    vecLam = eigRho.eigenvalues
    matOk = eigRho.basis.conj().T @ matO @ eigRho.basis
    matSum = vecLam[:, None] + vecLam[None, :]
    matDiff = vecLam[:, None] - vecLam[None, :]
    matKeep = matSum > config.TOL_DEGENERATE
    matTerms = np.zeros_like(matSum)
    matTerms[matKeep] = 2 * matDiff[matKeep]**2 / matSum[matKeep] * np.abs(matOk[matKeep])**2
    fQFI = max(float(np.sum(matTerms)), 0.0)
    fBound = np.inf if (fQFI < config.TOL_FISHER) else 1.0 / fQFI
    return SensitivityBound(fQFI, fBound)


def mixedVsPureGap(vecPsi, tupleDims, O):
    obsO = _observable(O)
    iDimV = int(tupleDims[0])
    if (obsO.iDim != iDimV):
        raise qerror.DimMismatch("Observable dim %d does not match visible dim %d" % (obsO.iDim, iDimV))
    schmidt = qstate.schmidtDecompose(vecPsi, tupleDims)
    vecPsi = np.asarray(vecPsi, dtype=complex).ravel()
    matRhoV = kernel.partialTrace(np.outer(vecPsi, vecPsi.conj()), tupleDims, "v")
    fVisible = qstate.commutatorAdvantage(qstate.DensityMatrix(matRhoV), obsO)
    fPure = optimalProbe(obsO).achieved_norm
    return GapReport(fVisible, fPure, fPure - fVisible, schmidt.rank)


def optimalObservable(rho, fPhi = 0.0):
    """
    Observable with ||O||_inf = 1 most sensitive to a given state: the
    transverse operator e^{-i phi}|i><j| + h.c. on the eigenvectors of the
    largest and smallest eigenvalues of rho.  Achieves lambda_max - lambda_min.
    """
    matRho = qstate._mat(rho)
    eigRho = kernel.eigHermitian(matRho)
    vecLam = eigRho.eigenvalues
    iMin = 0
    iMax = len(vecLam) - 1
    if (len(vecLam) < 2 or vecLam[iMax] - vecLam[iMin] <= config.TOL_ZERO_NORM):
        raise qerror.ZeroTraceless("State is maximally mixed: " + config.STR_NO_ADVANTAGE)
    matE = np.zeros((len(vecLam), len(vecLam)), dtype=complex)
    matE[iMax, iMin] = np.exp(-1j * fPhi)
    matE[iMin, iMax] = np.exp(1j * fPhi)
    obsO = qstate.Observable(eigRho.basis @ matE @ eigRho.basis.conj().T)
    return ObservableConstruction(obsO, iMax, iMin, qstate.commutatorAdvantage(matRho, obsO))
