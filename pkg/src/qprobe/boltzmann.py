# -*- coding: UTF-8 -*-
"""
module boltzmann.py
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
Classical Boltzmann machines on Ising spins.

Spins take values in {-1, +1}.  A configuration of n spins is labelled by
the integer x whose bit at position n-1-i holds spin i (bit 0 for +1, bit 1
for -1), so x = 0 is the all-up configuration and spin 0 is the most
significant bit.  Every distribution in this module is indexed that way.

The Hamiltonian sums each unordered pair once:
    H(s) = - sum_{i<j} w_ij s_i s_j - sum_i b_i s_i
"""

from dataclasses import dataclass

import numpy as np
from scipy.special import logsumexp, rel_entr

import qprobe.config as config
import qprobe.error as qerror
import qprobe.utils as utils


CHUNK_STATES = 2**14


###############################################################################
# Probability Distribution Class
###############################################################################
class ProbabilityDistribution():
    def __init__(self, vecProbs):
        vecProbs = np.array(vecProbs, dtype=float).ravel()
        if (vecProbs.size < 1):
            raise qerror.DimMismatch("Distribution needs at least one state")
        if not np.all(np.isfinite(vecProbs)):
            raise qerror.ValidationError("Distribution has non-finite entries")
        if np.any(vecProbs < 0):
            raise qerror.ValidationError("Distribution has negative entries")
        fSum = float(np.sum(vecProbs))
        if (abs(fSum - 1.0) > config.TOL_PROBABILITY):
            raise qerror.ValidationError("Distribution sums to %.17g, not 1" % fSum)
        vecProbs.flags.writeable = False
        self.probs = vecProbs

    @property
    def iStates(self):
        return self.probs.size

    def __len__(self):
        return self.probs.size

    def __repr__(self):
        return "%s(%s)" % (type(self).__name__, self.probs.tolist())

    @classmethod
    def normalized(cls, vecWeights):
        # Build from nonnegative weights...
        vecWeights = np.array(vecWeights, dtype=float).ravel()
        fTotal = float(np.sum(vecWeights))
        if (fTotal <= 0 or not np.isfinite(fTotal)):
            raise qerror.ValidationError("Weights cannot be normalized (total %s)" % fTotal)
        return cls(vecWeights / fTotal)


###############################################################################
# Boltzmann Machine Class
###############################################################################
class BoltzmannMachine():
    """
    Immutable Ising network: weights, biases, inverse temperature and layers.

    listLayers partitions the spin indices; the first layer is visible, the
    rest are hidden.  With two or more layers, interactions are allowed only
    between adjacent layers (restricted / deep machines).  A single visible
    layer is fully connected.
    """
    def __init__(self, matWeights, vecBiases, fBeta = 1.0, listLayers = None):
        vecBiases = np.array(vecBiases, dtype=float).ravel()
        iSpins = vecBiases.size
        if (iSpins < 1):
            raise qerror.DimMismatch("Machine needs at least one spin")
        matWeights = np.array(matWeights, dtype=float)
        if (matWeights.shape != (iSpins, iSpins)):
            raise qerror.DimMismatch("Weights shape %s does not match %d spins" % (str(matWeights.shape), iSpins))
        if not (np.all(np.isfinite(matWeights)) and np.all(np.isfinite(vecBiases))):
            raise qerror.ValidationError("Machine parameters must be finite")
        if (np.max(np.abs(matWeights - matWeights.T)) > config.TOL_HERMITIAN):
            raise qerror.ValidationError("Weights must be symmetric")
        if np.any(np.diag(matWeights) != 0):
            raise qerror.ValidationError("Weights must have a zero diagonal")
        fBeta = float(fBeta)
        if not (fBeta > 0 and np.isfinite(fBeta)):
            raise qerror.ValidationError("Beta must be positive, got %s" % fBeta)

        if (listLayers is None):
            listLayers = [list(range(iSpins))]
        listLayers = [[int(i) for i in listLayer] for listLayer in listLayers]
        listAll = sorted(i for listLayer in listLayers for i in listLayer)
        if (listAll != list(range(iSpins)) or any(len(listLayer) == 0 for listLayer in listLayers)):
            raise qerror.ValidationError("Layers must partition spins 0.." + str(iSpins - 1) + " into nonempty layers")

        matMask = np.ones((iSpins, iSpins), dtype=bool)
        if (len(listLayers) >= 2):
            vecLayerOf = np.empty(iSpins, dtype=int)
            for iLayer, listLayer in enumerate(listLayers):
                vecLayerOf[listLayer] = iLayer
            matMask = np.abs(vecLayerOf[:, None] - vecLayerOf[None, :]) == 1
        np.fill_diagonal(matMask, False)
        if np.any((matWeights != 0) & ~matMask):
            raise qerror.ValidationError("Weights connect spins outside adjacent layers")

        matWeights = (matWeights + matWeights.T) / 2
        for arr in (matWeights, vecBiases, matMask):
            arr.flags.writeable = False
        self.iSpins = iSpins
        self.matWeights = matWeights
        self.vecBiases = vecBiases
        self.fBeta = fBeta
        self.listLayers = listLayers
        self.matMask = matMask


    @property
    def listVisible(self):
        return list(self.listLayers[0])

    @property
    def listHidden(self):
        return [i for listLayer in self.listLayers[1:] for i in listLayer]

    def withParameters(self, matWeights, vecBiases):
        return BoltzmannMachine(matWeights, vecBiases, self.fBeta, self.listLayers)

    def withBeta(self, fBeta):
        return BoltzmannMachine(self.matWeights, self.vecBiases, fBeta, self.listLayers)

    def __repr__(self):
        return "%s(n=%d, beta=%s, layers=%s)" % (type(self).__name__, self.iSpins, self.fBeta, self.listLayers)


###############################################################################
# Configurations
###############################################################################
def checkSpins(vecSpins, iSpins = None):
    vecSpins = np.asarray(vecSpins)
    if (vecSpins.ndim != 1 or (iSpins is not None and vecSpins.size != iSpins)):
        raise qerror.DimMismatch("Spin configuration of shape %s, expected %s spins" % (str(vecSpins.shape), str(iSpins)))
    if not np.all((vecSpins == 1) | (vecSpins == -1)):
        raise qerror.ValidationError("Spins must be -1 or +1")
    return vecSpins.astype(float)


def allConfigurations(iSpins, iStart = 0, iStop = None):
    # Rows are configurations x = iStart..iStop-1 ...
    if (iStop is None):
        iStop = 2**iSpins
    vecX = np.arange(iStart, iStop, dtype=np.int64)
    matBits = (vecX[:, None] >> np.arange(iSpins - 1, -1, -1, dtype=np.int64)) & 1
    return (1 - 2 * matBits).astype(float)


def iterConfigurations(iSpins):
    iTotal = 2**iSpins
    for iStart in range(0, iTotal, CHUNK_STATES):
        yield allConfigurations(iSpins, iStart, min(iTotal, iStart + CHUNK_STATES))


def configurationIndex(matSpins):
    # Inverse of allConfigurations for rows of spins...
    matSpins = np.atleast_2d(np.asarray(matSpins))
    iSpins = matSpins.shape[1]
    matBits = (matSpins < 0).astype(np.int64)
    return matBits @ (np.int64(1) << np.arange(iSpins - 1, -1, -1, dtype=np.int64))


def energies(matWeights, vecBiases, matSpins):
    return -0.5 * np.einsum("si,ij,sj->s", matSpins, matWeights, matSpins) - matSpins @ vecBiases


def suffStatistics(matSpins):
    # Pair products s_i s_j (i<j, row-major) then the single spins...
    iSpins = matSpins.shape[1]
    vecI, vecJ = np.triu_indices(iSpins, 1)
    return np.hstack([matSpins[:, vecI] * matSpins[:, vecJ], matSpins])


###############################################################################
# Operations
###############################################################################
def isingEnergy(machine, vecSpins):
    vecSpins = checkSpins(vecSpins, machine.iSpins)
    return float(energies(machine.matWeights, machine.vecBiases, vecSpins[None, :])[0])


def boltzmannDistribution(machine):
    if (machine.iSpins > config.MAX_ENUM_SPINS):
        raise qerror.TooLarge("Exact enumeration is limited to %d spins, machine has %d" %
                              (config.MAX_ENUM_SPINS, machine.iSpins))
    vecLogits = np.concatenate([-machine.fBeta * energies(machine.matWeights, machine.vecBiases, matS)
                                for matS in iterConfigurations(machine.iSpins)])
    vecProbs = np.exp(vecLogits - logsumexp(vecLogits))
    return ProbabilityDistribution(vecProbs / np.sum(vecProbs))


def klDivergence(p, q):
    """
    D_KL(p||q) = sum_x p(x) ln(p(x)/q(x)) in nats.

    Terms with p(x) = 0 contribute 0; +inf when p(x) > 0 where q(x) = 0.
    """
    vecP = _probs(p)
    vecQ = _probs(q)
    if (vecP.shape != vecQ.shape):
        raise qerror.DimMismatch("KL divergence of %d and %d states" % (vecP.size, vecQ.size))
    fKL = float(np.sum(rel_entr(vecP, vecQ)))
    return max(fKL, 0.0)


def totalVariation(p, q):
    vecP = _probs(p)
    vecQ = _probs(q)
    if (vecP.shape != vecQ.shape):
        raise qerror.DimMismatch("Total variation of %d and %d states" % (vecP.size, vecQ.size))
    return 0.5 * float(np.sum(np.abs(vecP - vecQ)))


def marginalizeHidden(joint, machine):
    listHidden = machine.listHidden
    if not listHidden:
        raise qerror.NoHiddenLayer("Machine declares no hidden spins")
    vecJoint = _probs(joint)
    if (vecJoint.size != 2**machine.iSpins):
        raise qerror.DimMismatch("Joint distribution has %d states, machine needs %d" %
                                 (vecJoint.size, 2**machine.iSpins))
    tensJoint = vecJoint.reshape((2, ) * machine.iSpins)
    tensVisible = tensJoint.sum(axis=tuple(listHidden))
    # ...remaining axes are the visible spins in increasing index order
    listSorted = sorted(machine.listVisible)
    tensVisible = np.transpose(tensVisible, [listSorted.index(i) for i in machine.listVisible])
    return ProbabilityDistribution.normalized(tensVisible.ravel())


def visibleDistribution(machine):
    distJoint = boltzmannDistribution(machine)
    if not machine.listHidden:
        return distJoint
    return marginalizeHidden(distJoint, machine)


def empiricalDistribution(matSamples):
    # Count configurations; columns follow the sample's spin order...
    matSamples = np.atleast_2d(np.asarray(matSamples))
    if (matSamples.shape[0] < 1):
        raise qerror.ValidationError("No samples to count")
    vecCounts = np.bincount(configurationIndex(matSamples), minlength=2**matSamples.shape[1])
    return ProbabilityDistribution.normalized(vecCounts)


###############################################################################
# Exact Training
###############################################################################
class _ExactObjective():
    # D_KL(q || p_visible) and its gradient by exact enumeration...
    def __init__(self, machine, vecTarget):
        self.machine = machine
        self.vecTarget = vecTarget
        self.matSpins = allConfigurations(machine.iSpins)
        listVisible = machine.listVisible
        self.vecVisibleIndex = configurationIndex(self.matSpins[:, listVisible])
        self.iVisibleStates = 2**len(listVisible)

    def evaluate(self, matWeights, vecBiases):
        vecLogits = -self.machine.fBeta * energies(matWeights, vecBiases, self.matSpins)
        vecJoint = np.exp(vecLogits - logsumexp(vecLogits))
        vecVisible = np.bincount(self.vecVisibleIndex, weights=vecJoint, minlength=self.iVisibleStates)
        fKL = max(float(np.sum(rel_entr(self.vecTarget, vecVisible))), 0.0)
        return fKL, vecJoint, vecVisible

    def gradient(self, vecJoint, vecVisible):
        # Data weights q(v) p(h|v) per joint configuration...
        vecMarg = vecVisible[self.vecVisibleIndex]
        vecData = np.where(vecMarg > 0, self.vecTarget[self.vecVisibleIndex] * vecJoint / np.where(vecMarg > 0, vecMarg, 1.0), 0.0)
        vecDiff = vecJoint - vecData
        fBeta = self.machine.fBeta
        matGradW = fBeta * (self.matSpins.T * vecDiff) @ self.matSpins
        matGradW = np.where(self.machine.matMask, matGradW, 0.0)
        vecGradB = fBeta * (self.matSpins.T @ vecDiff)
        return matGradW, vecGradB


def trainExact(machine, target, fLearningRate = config.DEFAULT_LEARNING_RATE,
               iEpochs = config.DEFAULT_EPOCHS, iSeed = 0, fJitter = 0.0, fTargetKL = 0.0):
    """
    Fit the machine's visible marginal to a target distribution by gradient
    descent on D_KL(q || p_visible) with exact enumeration.

    Gradient: beta * (E_model[stat] - E_data[stat]), E_data under q(v) p(h|v).
    On a KL increase the step is retried with half the rate, and the rate
    stays halved; the returned KL trace is therefore non-increasing.  Only
    weights allowed by the layer mask move.  fJitter > 0 adds seeded
    Gaussian noise to the allowed parameters first, which breaks the
    visible/hidden symmetry of an all-zero start.

    Returns (trained machine, KL trace).  The trace starts with the initial
    KL and gets one entry per completed epoch.
    """
    if (machine.iSpins > config.MAX_TRAIN_SPINS):
        raise qerror.TooLarge("Exact training is limited to %d spins, machine has %d" %
                              (config.MAX_TRAIN_SPINS, machine.iSpins))
    vecTarget = _probs(target)
    iVisibleStates = 2**len(machine.listVisible)
    if (vecTarget.size != iVisibleStates):
        raise qerror.DimMismatch("Target has %d states, visible layer needs %d" % (vecTarget.size, iVisibleStates))
    if not (fLearningRate > 0):
        raise qerror.ValidationError("Learning rate must be positive")

    matW = np.array(machine.matWeights)
    vecB = np.array(machine.vecBiases)
    if (fJitter > 0):
        rng = np.random.default_rng(iSeed)
        matNoise = np.triu(rng.normal(0.0, fJitter, (machine.iSpins, machine.iSpins)), 1)
        matW = matW + np.where(machine.matMask, matNoise + matNoise.T, 0.0)
        vecB = vecB + rng.normal(0.0, fJitter, machine.iSpins)

    objective = _ExactObjective(machine, vecTarget)
    fKL, vecJoint, vecVisible = objective.evaluate(matW, vecB)
    listTrace = [fKL]
    fRate = float(fLearningRate)

    for iEpoch in range(iEpochs):
        if (fTargetKL is not None and fKL <= fTargetKL):
            utils.printInfo("Training reached KL %.3e at epoch %d" % (fKL, iEpoch))
            break
        matGradW, vecGradB = objective.gradient(vecJoint, vecVisible)
        if not (np.all(np.isfinite(matGradW)) and np.all(np.isfinite(vecGradB))):
            raise qerror.NonFiniteGradient("Non-finite gradient at epoch %d" % iEpoch)

        bStep = False
        while (fRate >= config.MIN_LEARNING_RATE):
            matWNew = matW - fRate * matGradW
            vecBNew = vecB - fRate * vecGradB
            fKLNew, vecJointNew, vecVisibleNew = objective.evaluate(matWNew, vecBNew)
            if (fKLNew <= fKL):
                bStep = True
                break
            fRate /= 2
            utils.printInfo("Epoch %d: KL increased, learning rate halved to %.3e" % (iEpoch, fRate), 2)
        if not bStep:
            utils.printInfo("Training stopped at epoch %d: learning rate below %.1e" % (iEpoch, config.MIN_LEARNING_RATE))
            break

        matW, vecB = matWNew, vecBNew
        fKL, vecJoint, vecVisible = fKLNew, vecJointNew, vecVisibleNew
        listTrace.append(fKL)
        if (iEpoch % 500 == 0):
            utils.printInfo("Epoch %d: KL %.6e" % (iEpoch, fKL), 2)

    # Exact symmetry and zero diagonal for the constructor...
    matW = np.where(machine.matMask, (matW + matW.T) / 2, 0.0)
    return machine.withParameters(matW, vecB), listTrace


###############################################################################
# Simulated Annealing
###############################################################################
def checkSchedule(listSchedule):
    if not listSchedule:
        raise qerror.EmptySchedule("Annealing schedule is empty")
    listChecked = []
    fPrevious = 0.0
    for (fBeta, iSweeps) in listSchedule:
        fBeta = float(fBeta)
        if not (fBeta > 0 and np.isfinite(fBeta)):
            raise qerror.ScheduleError("Schedule beta must be positive, got %s" % fBeta)
        if (fBeta < fPrevious):
            raise qerror.ScheduleError("Schedule beta must be non-decreasing (%s after %s)" % (fBeta, fPrevious))
        if (int(iSweeps) != iSweeps or iSweeps < 0):
            raise qerror.ScheduleError("Schedule sweeps must be a nonnegative integer, got %s" % iSweeps)
        listChecked.append((fBeta, int(iSweeps)))
        fPrevious = fBeta
    return listChecked


def simulatedAnneal(machine, listSchedule, iSamples = config.DEFAULT_SAMPLES, iSeed = 0):
    """
    Metropolis annealing through a schedule of (beta, sweeps) stages.

    Each sample is the final configuration of an independent chain started
    from a random configuration; chains advance together as numpy rows.  A
    sweep proposes a flip of every spin in index order.  The schedule beta
    replaces the machine's own beta.  Returns an (iSamples, n) int8 array.
    """
    listSchedule = checkSchedule(listSchedule)
    if (iSamples < 1):
        raise qerror.ValidationError("Number of samples must be positive")
    rng = np.random.default_rng(iSeed)
    matW = np.asarray(machine.matWeights)
    vecB = np.asarray(machine.vecBiases)
    matS = (1 - 2 * rng.integers(0, 2, size=(iSamples, machine.iSpins))).astype(float)

    for (fBeta, iSweeps) in listSchedule:
        utils.printInfo("Annealing stage beta=%s for %d sweeps" % (fBeta, iSweeps), 2)
        for iSweep in range(iSweeps):
            for i in range(machine.iSpins):
                vecDelta = 2.0 * matS[:, i] * (matS @ matW[:, i] + vecB[i])
                vecAccept = rng.random(iSamples) < np.exp(np.minimum(0.0, -fBeta * vecDelta))
                matS[vecAccept, i] *= -1.0
    return matS.astype(np.int8)


###############################################################################
# Fisher Metric
###############################################################################
def fisherMetric(machine):
    """
    Fisher information of the full Boltzmann distribution in the parameters
    (w_ij for i<j, then b_i): beta^2 Cov[stats] under the model.
    """
    if (machine.iSpins > config.MAX_TRAIN_SPINS):
        raise qerror.TooLarge("Fisher metric is limited to %d spins, machine has %d" %
                              (config.MAX_TRAIN_SPINS, machine.iSpins))
    vecProbs = boltzmannDistribution(machine).probs
    iParams = machine.iSpins * (machine.iSpins - 1) // 2 + machine.iSpins
    vecMean = np.zeros(iParams)
    matSecond = np.zeros((iParams, iParams))
    iStart = 0
    for matS in iterConfigurations(machine.iSpins):
        matPhi = suffStatistics(matS)
        vecP = vecProbs[iStart:iStart + matS.shape[0]]
        vecMean += matPhi.T @ vecP
        matSecond += (matPhi.T * vecP) @ matPhi
        iStart += matS.shape[0]
    matCov = matSecond - np.outer(vecMean, vecMean)
    return machine.fBeta**2 * (matCov + matCov.T) / 2


@dataclass(frozen=True)
class CramerRao:
    eigenvalues: np.ndarray  # ...ascending
    directions: np.ndarray   # ...columns
    bounds: np.ndarray       # ...variance bound per direction


def cramerRaoBounds(matFisher, iRepetitions = 1):
    # Eigendirections of a Fisher metric and their variance bounds 1/(N lambda)...
    vecVals, matVecs = np.linalg.eigh((np.asarray(matFisher) + np.asarray(matFisher).T) / 2)
    vecBounds = np.full(vecVals.shape, np.inf)
    vecPositive = vecVals > config.TOL_FISHER
    vecBounds[vecPositive] = 1.0 / (iRepetitions * vecVals[vecPositive])
    return CramerRao(vecVals, matVecs, vecBounds)


###############################################################################
# Helpers
###############################################################################
def randomMachine(listLayers, fBeta, rng, fScale = 1.0):
    iSpins = sum(len(listLayer) for listLayer in listLayers)
    machine = BoltzmannMachine(np.zeros((iSpins, iSpins)), np.zeros(iSpins), fBeta, listLayers)
    matW = np.triu(rng.normal(0.0, fScale, (iSpins, iSpins)), 1)
    matW = np.where(machine.matMask, matW + matW.T, 0.0)
    return machine.withParameters(matW, rng.normal(0.0, fScale, iSpins))


def _probs(dist):
    if isinstance(dist, ProbabilityDistribution):
        return dist.probs
    return np.asarray(dist, dtype=float).ravel()
