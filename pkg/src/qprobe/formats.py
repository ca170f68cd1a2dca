# -*- coding: UTF-8 -*-
"""
module formats.py
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
Readers and writers for the Qprobe document formats.

  matrix        {"dim": n, "diagonal": [...]} or {"dim": n, "re": [[...]], "im": [[...]]}
  machine       {"n_spins", "beta", "layers", "weights": [[i, j, w], ...], "biases"}
  distribution  {"probs": [...]}
  state vector  {"dims": [d_v, d_h], "re": [...], "im": [...]}
  circuit       {"m", "permutation", "gates": [{"kind", "targets", "angle"}, ...]}
  samples       one configuration per line of '+' and '-' characters

Numbers may be written as "+inf", "-inf", or "nan" (see utils.formatFloat).
"""

import json

import numpy as np

import qprobe.error as qerror
import qprobe.utils as utils
import qprobe.boltzmann as boltzmann
import qprobe.prep as prep


def loadDocument(strFileName):
    try:
        with open(strFileName, "r") as fileIn:
            return json.load(fileIn)
    except OSError as e:
        raise qerror.InputError("Cannot open file " + strFileName + ": " + str(e.strerror))
    except json.JSONDecodeError as e:
        raise qerror.ParseError("%s: line %d: %s" % (strFileName, e.lineno, e.msg))


def dumpDocument(dictDoc, fileOut):
    # Sorted keys and shortest round-trip floats keep output reproducible...
    json.dump(utils.toDocument(dictDoc), fileOut, sort_keys=True, indent=2, allow_nan=False)
    fileOut.write("\n")


def saveDocument(dictDoc, strFileName):
    try:
        with open(strFileName, "w") as fileOut:
            dumpDocument(dictDoc, fileOut)
    except OSError as e:
        raise qerror.OutputError("Cannot write file " + strFileName + ": " + str(e.strerror))


def _field(dictDoc, strKey, strWhat):
    if not isinstance(dictDoc, dict) or strKey not in dictDoc:
        raise qerror.ParseError("%s document lacks \"%s\"" % (strWhat, strKey))
    return dictDoc[strKey]


def _numbers(listValues, strWhat):
    try:
        return np.array([[utils.parseFloat(f) for f in row] if isinstance(row, list) else utils.parseFloat(row)
                         for row in listValues], dtype=float)
    except (TypeError, ValueError) as e:
        raise qerror.ParseError("%s: bad number (%s)" % (strWhat, e))


###############################################################################
# Matrices
###############################################################################
def parseMatrix(dictDoc):
    iDim = int(_field(dictDoc, "dim", "Matrix"))
    if "diagonal" in dictDoc:
        vecDiag = _numbers(_field(dictDoc, "diagonal", "Matrix"), "Matrix diagonal")
        if (vecDiag.shape != (iDim, )):
            raise qerror.ParseError("Matrix diagonal has %d entries, dim is %d" % (vecDiag.size, iDim))
        return np.diag(vecDiag.astype(complex))
    matRe = _numbers(_field(dictDoc, "re", "Matrix"), "Matrix re")
    matIm = _numbers(dictDoc["im"], "Matrix im") if "im" in dictDoc else np.zeros_like(matRe)
    if (matRe.shape != (iDim, iDim) or matIm.shape != (iDim, iDim)):
        raise qerror.ParseError("Matrix entries do not form a %d x %d array" % (iDim, iDim))
    return matRe + 1j * matIm


def readMatrix(strFileName):
    return parseMatrix(loadDocument(strFileName))


def matrixDocument(matM):
    matM = np.asarray(matM, dtype=complex)
    return {"dim": matM.shape[0], "re": matM.real, "im": matM.imag}


###############################################################################
# Machines, Distributions, and Samples
###############################################################################
def parseMachine(dictDoc):
    iSpins = int(_field(dictDoc, "n_spins", "Machine"))
    if (iSpins < 1):
        raise qerror.ParseError("Machine needs n_spins >= 1")
    matWeights = np.zeros((iSpins, iSpins))
    for listTriple in _field(dictDoc, "weights", "Machine"):
        if not isinstance(listTriple, list) or len(listTriple) != 3:
            raise qerror.ParseError("Machine weights must be [i, j, w] triples")
        i, j = int(listTriple[0]), int(listTriple[1])
        if not (0 <= i < iSpins and 0 <= j < iSpins) or i == j:
            raise qerror.ParseError("Machine weight [%d, %d] is not a pair of distinct spins" % (i, j))
        fW = utils.parseFloat(listTriple[2])
        matWeights[i, j] = fW
        matWeights[j, i] = fW
    vecBiases = _numbers(_field(dictDoc, "biases", "Machine"), "Machine biases")
    if (vecBiases.shape != (iSpins, )):
        raise qerror.ParseError("Machine has %d biases for %d spins" % (vecBiases.size, iSpins))
    return boltzmann.BoltzmannMachine(matWeights, vecBiases, utils.parseFloat(dictDoc.get("beta", 1.0)),
                                      dictDoc.get("layers"))


def readMachine(strFileName):
    return parseMachine(loadDocument(strFileName))


def machineDocument(machine):
    vecI, vecJ = np.triu_indices(machine.iSpins, 1)
    listTriples = [[int(i), int(j), float(machine.matWeights[i, j])]
                   for i, j in zip(vecI, vecJ) if machine.matWeights[i, j] != 0]
    return {"n_spins": machine.iSpins, "beta": machine.fBeta, "layers": machine.listLayers,
            "weights": listTriples, "biases": machine.vecBiases}


def readDistribution(strFileName):
    dictDoc = loadDocument(strFileName)
    try:
        return boltzmann.ProbabilityDistribution(_numbers(_field(dictDoc, "probs", "Distribution"), "Distribution"))
    except qerror.ValidationError as e:
        raise qerror.ParseError(strFileName + ": " + str(e.args[0]))


def readSamples(strFileName):
    # '+' is spin +1, '-' is spin -1; blank lines are skipped...
    listRows = []
    iSpins = None
    try:
        with open(strFileName, "r") as fileIn:
            for iLine, strLine in enumerate(fileIn, 1):
                strLine = "".join(strLine.split())
                if not strLine:
                    continue
                if (strLine.strip("+-") != ""):
                    raise qerror.ParseError("%s: line %d: spins must be '+' or '-'" % (strFileName, iLine))
                if (iSpins is None):
                    iSpins = len(strLine)
                elif (len(strLine) != iSpins):
                    raise qerror.ParseError("%s: line %d: expected %d spins, found %d" %
                                            (strFileName, iLine, iSpins, len(strLine)))
                listRows.append([1 if (c == "+") else -1 for c in strLine])
    except OSError as e:
        raise qerror.InputError("Cannot open file " + strFileName + ": " + str(e.strerror))
    if not listRows:
        raise qerror.ParseError(strFileName + ": no samples")
    return np.array(listRows, dtype=np.int8)


def sampleLines(matSamples):
    return ["".join("+" if (s > 0) else "-" for s in vecRow) for vecRow in np.asarray(matSamples)]


def writeSamples(matSamples, strFileName):
    try:
        with open(strFileName, "w") as fileOut:
            for strLine in sampleLines(matSamples):
                fileOut.write(strLine + "\n")
    except OSError as e:
        raise qerror.OutputError("Cannot write file " + strFileName + ": " + str(e.strerror))


###############################################################################
# State Vectors and Circuits
###############################################################################
def readStateVector(strFileName):
    dictDoc = loadDocument(strFileName)
    listDims = _field(dictDoc, "dims", "State")
    if not isinstance(listDims, list) or len(listDims) != 2:
        raise qerror.ParseError("State dims must be [d_v, d_h]")
    vecRe = _numbers(_field(dictDoc, "re", "State"), "State re")
    vecIm = _numbers(dictDoc["im"], "State im") if "im" in dictDoc else np.zeros_like(vecRe)
    if (vecRe.ndim != 1 or vecRe.shape != vecIm.shape):
        raise qerror.ParseError("State re and im must be equal-length lists")
    return vecRe + 1j * vecIm, (int(listDims[0]), int(listDims[1]))


def circuitDocument(seq):
    listGates = []
    for gate in seq.gates:
        dictGate = {"kind": gate.kind, "targets": gate.targets}
        if (gate.angle is not None):
            dictGate["angle"] = gate.angle
        listGates.append(dictGate)
    return {"m": seq.m, "permutation": list(seq.permutation), "gates": listGates}


def parseCircuit(dictDoc):
    listGates = []
    for dictGate in _field(dictDoc, "gates", "Circuit"):
        strKind = _field(dictGate, "kind", "Gate")
        fAngle = dictGate.get("angle")
        listGates.append(prep.makeGate(strKind, _field(dictGate, "targets", "Gate"),
                                       None if fAngle is None else utils.parseFloat(fAngle)))
    return prep.GateSequence(int(_field(dictDoc, "m", "Circuit")), tuple(listGates),
                             tuple(int(i) for i in _field(dictDoc, "permutation", "Circuit")))
