# -*- coding: UTF-8 -*-
"""
module prep.py
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
Preparation circuits for optimal probe states.

An n-level eigenframe is embedded in m = max(1, ceil(log2 n)) qubits.
Qubit q is bit q of the basis index, so qubit 0 is the least significant
bit.  The two probe levels i*, j* are relabelled to the adjacent pair
(2k, 2k+1) with k = i* // 2, after which |2k> is reached with X gates on
the set bits of 2k, a two-level Y rotation by pi/2 splits it evenly, and a
phase on 2k+1 sets the azimuth.  The gate count stays within 2m + 2.
"""

from dataclasses import dataclass

import numpy as np

import qprobe.config as config
import qprobe.error as qerror
import qprobe.qstate as qstate
import qprobe.utils as utils


###############################################################################
# Gates
###############################################################################
@dataclass(frozen=True)
class FlipX:
    qubit: int

    kind = "FlipX"

    @property
    def targets(self):
        return [self.qubit]

    @property
    def angle(self):
        return None


@dataclass(frozen=True)
class TwoLevelRY:
    level_a: int
    level_b: int
    angle: float

    kind = "TwoLevelRY"

    @property
    def targets(self):
        return [self.level_a, self.level_b]


@dataclass(frozen=True)
class Phase:
    level: int
    angle: float

    kind = "Phase"

    @property
    def targets(self):
        return [self.level]


DICT_GATES = {"FlipX": FlipX, "TwoLevelRY": TwoLevelRY, "Phase": Phase}


def makeGate(strKind, listTargets, fAngle = None):
    # Rebuild a gate from its tagged record form...
    if strKind not in DICT_GATES:
        raise qerror.ParseError("Unknown gate kind: " + str(strKind))
    listTargets = [int(i) for i in listTargets]
    if (strKind == "FlipX" and len(listTargets) == 1):
        return FlipX(listTargets[0])
    if (strKind == "TwoLevelRY" and len(listTargets) == 2 and fAngle is not None):
        return TwoLevelRY(listTargets[0], listTargets[1], float(fAngle))
    if (strKind == "Phase" and len(listTargets) == 1 and fAngle is not None):
        return Phase(listTargets[0], float(fAngle))
    raise qerror.ParseError("Malformed %s gate: targets %s, angle %s" % (strKind, listTargets, fAngle))


@dataclass(frozen=True)
class GateSequence:
    """
    Circuit on m qubits.  permutation[i] is the circuit level holding
    eigenframe level i; it covers all 2^m levels.
    """
    m: int
    gates: tuple
    permutation: tuple

    def __post_init__(self):
        if (self.m < 1):
            raise qerror.ValidationError("Circuit needs at least one qubit")
        if (sorted(self.permutation) != list(range(2**self.m))):
            raise qerror.ValidationError("Circuit permutation must cover levels 0.." + str(2**self.m - 1))


def qubitCount(iDim):
    return max(1, (int(iDim) - 1).bit_length())


###############################################################################
# Construction
###############################################################################
def _levelPermutation(iLevels, iStar, jStar, iBase):
    # Swaps so that i* -> iBase and j* -> iBase + 1 ...
    listPerm = list(range(iLevels))
    for (iFrom, iTo) in ((iStar, iBase), (jStar, iBase + 1)):
        iHolder = listPerm.index(iTo)
        listPerm[iFrom], listPerm[iHolder] = listPerm[iHolder], listPerm[iFrom]
    return tuple(listPerm)


def prepCircuit(construction, fPhi = None):
    """
    Circuit preparing the probe state of a construction in O's eigenframe.

    fPhi defaults to the construction's own azimuth.
    """
    if (fPhi is None):
        fPhi = construction.n_T
    iDim = construction.split.iDim
    iQubits = qubitCount(iDim)
    iPair = construction.i_star // 2
    iBase = 2 * iPair
    tuplePerm = _levelPermutation(2**iQubits, construction.i_star, construction.j_star, iBase)

    listGates = [FlipX(iBit + 1) for iBit in range(iQubits) if (iPair >> iBit) & 1]
    listGates.append(TwoLevelRY(iBase, iBase + 1, np.pi / 2))
    if (float(fPhi) != 0.0):
        listGates.append(Phase(iBase + 1, float(fPhi)))
    utils.printInfo("Preparation circuit: %d qubits, %d gates" % (iQubits, len(listGates)))
    return GateSequence(iQubits, tuple(listGates), tuplePerm)


###############################################################################
# Simulation
###############################################################################
def _checkLevel(iLevel, iLevels):
    if not (0 <= iLevel < iLevels):
        raise qerror.IndexOutOfRange("Level %d outside 0..%d" % (iLevel, iLevels - 1))


def simulateGates(seq):
    iLevels = 2**seq.m
    vecState = np.zeros(iLevels, dtype=complex)
    vecState[0] = 1.0
    vecIndex = np.arange(iLevels)

    for gate in seq.gates:
        if isinstance(gate, FlipX):
            if not (0 <= gate.qubit < seq.m):
                raise qerror.IndexOutOfRange("Qubit %d outside 0..%d" % (gate.qubit, seq.m - 1))
            vecState = vecState[vecIndex ^ (1 << gate.qubit)]
        elif isinstance(gate, TwoLevelRY):
            _checkLevel(gate.level_a, iLevels)
            _checkLevel(gate.level_b, iLevels)
            if (gate.level_a == gate.level_b):
                raise qerror.ValidationError("Two-level rotation needs distinct levels")
            fCos, fSin = np.cos(gate.angle / 2), np.sin(gate.angle / 2)
            cA, cB = vecState[gate.level_a], vecState[gate.level_b]
            vecState[gate.level_a] = fCos * cA - fSin * cB
            vecState[gate.level_b] = fSin * cA + fCos * cB
        elif isinstance(gate, Phase):
            _checkLevel(gate.level, iLevels)
            vecState[gate.level] *= np.exp(1j * gate.angle)
        else:
            raise qerror.ProcessError("Unknown gate: " + repr(gate))
    return vecState


def preparedState(seq, iDim):
    # Simulated state in eigenframe order; PaddingLeak if levels >= iDim carry weight...
    vecCircuit = simulateGates(seq)
    vecFrame = vecCircuit[np.asarray(seq.permutation)]
    fLeak = float(np.max(np.abs(vecFrame[iDim:]), initial=0.0))
    if (fLeak > config.TOL_PADDING):
        raise qerror.PaddingLeak("Padded levels carry amplitude %.3e" % fLeak)
    return vecFrame[:iDim]


def _targetDensity(target):
    # ProbeConstruction -> its eigenframe vector; vectors -> |psi><psi| ...
    if hasattr(target, "psi_eigen"):
        target = target.psi_eigen
    if isinstance(target, qstate.DensityMatrix):
        return target.mat
    arrTarget = np.asarray(target, dtype=complex)
    if (arrTarget.ndim == 1):
        return np.outer(arrTarget, arrTarget.conj())
    return qstate.DensityMatrix(arrTarget).mat


def verifyPrep(seq, target):
    """
    Max entrywise deviation between |psi><psi| of the simulated circuit,
    taken back to eigenframe order with padding levels dropped, and the
    target density matrix.  The target may also be a ProbeConstruction or a
    state vector; the comparison is blind to global phase either way.
    """
    matTarget = _targetDensity(target)
    iDim = matTarget.shape[0]
    if (iDim > 2**seq.m):
        raise qerror.DimMismatch("Target of dim %d does not fit %d qubits" % (iDim, seq.m))
    vecPrepared = preparedState(seq, iDim)
    matPrepared = np.outer(vecPrepared, vecPrepared.conj())
    return float(np.max(np.abs(matPrepared - matTarget)))
