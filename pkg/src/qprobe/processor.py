# -*- coding: UTF-8 -*-
"""
module processor.py
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


import numpy as np

import qprobe.config as config
import qprobe.error as qerror
import qprobe.utils as utils
import qprobe.kernel as kernel
import qprobe.boltzmann as boltzmann
import qprobe.qstate as qstate
import qprobe.probe as probe
import qprobe.prep as prep
import qprobe.formats as formats
import qprobe.report as report


def parseSchedule(strSchedule):
    # "beta:sweeps,beta:sweeps,..." ...
    listSchedule = []
    for strStage in strSchedule.split(","):
        strStage = strStage.strip()
        if not strStage:
            continue
        listParts = strStage.split(":")
        if (len(listParts) != 2):
            raise qerror.ScheduleError("Schedule stage \"%s\" is not beta:sweeps" % strStage)
        try:
            listSchedule.append((float(listParts[0]), int(listParts[1])))
        except ValueError:
            raise qerror.ScheduleError("Schedule stage \"%s\" is not beta:sweeps" % strStage)
    return boltzmann.checkSchedule(listSchedule)


###############################################################################
# Qprobe Processor Class
###############################################################################
class Processor():
    def __init__(self, pargs):
        # Initialize a new Processor instance...
        self.pargs = pargs
        self.iSeed = pargs.seed
        self.dictCommands = {
            "probe":   self.cmdProbe,
            "train":   self.cmdTrain,
            "entropy": self.cmdEntropy,
            "anneal":  self.cmdAnneal,
            "prep":    self.cmdPrep,
            "gap":     self.cmdGap,
            "sense":   self.cmdSense,
        }

    def run(self):
        if self.pargs.command not in self.dictCommands:
            raise qerror.ProcessError("Unknown command: " + str(self.pargs.command))
        qReport = report.Report(self.pargs.command, self.iSeed)
        self.dictCommands[self.pargs.command](qReport)
        qReport.write(self.pargs.out)
        self.printSummary(qReport)
        return qReport

    def printSummary(self, qReport):
        # Only when the report went to a file, stdout is the report otherwise...
        if (self.pargs.out in (None, "-") or config.VERBOSE < 0):
            return
        print(config.STR_SEP)
        print(" Command: %s" % qReport.strCommand)
        for strRole, dictInput in sorted(qReport.dictInputs.items()):
            print(" %s: %s" % (strRole.capitalize(), dictInput["path"]))
            print("  MD5: %s" % dictInput["md5"])
        print(" Report: %s" % self.pargs.out)
        print(config.STR_SEP)

    def _readObservable(self, qReport, strFileName):
        qReport.addInput("observable", strFileName)
        return qstate.Observable(formats.readMatrix(strFileName))

    def _readDensity(self, qReport, strRole, strFileName):
        qReport.addInput(strRole, strFileName)
        return qstate.DensityMatrix(formats.readMatrix(strFileName))


    #--------------------------------------------------------------------------
    # Commands
    #--------------------------------------------------------------------------

    def cmdProbe(self, qReport):
        obsO = self._readObservable(qReport, self.pargs.observable)
        try:
            construction = probe.optimalProbe(obsO, self.pargs.phi)
        except qerror.ZeroTraceless as e:
            utils.printInfo(str(e.args[0]))
            qReport.set("outcome", config.STR_NO_ADVANTAGE)
            return

        split = construction.split
        fAchieved = construction.achieved_norm
        qReport.update({
            "outcome": "advantage",
            "observable": {"dim": obsO.iDim, "trace_part": split.trace_part},
            "split": {"pos": [list(tupleA) for tupleA in split.pos],
                      "neg": [list(tupleB) for tupleB in split.neg],
                      "zeros": list(split.zeros), "t": split.t},
            "i_star": construction.i_star,
            "j_star": construction.j_star,
            "T": construction.T,
            "phi": construction.n_T,
            "rho_star": construction.rho_star.mat,
            "achieved_norm": fAchieved,
            "frobenius_norm": kernel.frobeniusNorm(kernel.commutator(construction.rho_star.mat, obsO.mat)),
            "residual_max": float(np.max(np.abs(probe.cartanResidual(split, construction)))),
        })

        if (obsO.iDim <= config.MAX_ORACLE_DIM):
            iRestarts = self.pargs.oracle_restarts
            rhoPure, fPure = probe.oracleMaxPure(obsO, iRestarts, self.iSeed, self.pargs.workers)
            iMixed = min(iRestarts, config.DEFAULT_MIXED_RESTARTS)
            rhoMixed, fMixed = probe.oracleMaxMixed(obsO, iMixed, self.iSeed, self.pargs.workers)
            if (fPure > fAchieved + 1e-6):
                utils.printWarning("Oracle norm %.17g exceeds the construction %.17g" % (fPure, fAchieved))
            bFinding = fMixed > fAchieved + 1e-6
            if bFinding:
                utils.printWarning("Mixed state norm %.17g exceeds the pure optimum %.17g" % (fMixed, fAchieved))
            qReport.set("oracle", {"norm": fPure, "restarts": iRestarts, "shortfall": fAchieved - fPure})
            qReport.set("mixed_oracle", {"norm": fMixed, "restarts": iMixed, "exceeds_pure": bFinding})
        else:
            utils.printWarning("Oracle skipped above dim %d" % config.MAX_ORACLE_DIM)
            qReport.set("oracle", None)
            qReport.set("mixed_oracle", None)

        sense = probe.qfiUnitaryEncoding(construction.rho_star, obsO)
        qReport.set("qfi", sense.qfi)
        qReport.set("cramer_rao", sense.cramer_rao)

        seq = prep.prepCircuit(construction)
        qReport.set("circuit", formats.circuitDocument(seq))
        qReport.set("prep_deviation", prep.verifyPrep(seq, construction))

    def cmdTrain(self, qReport):
        qReport.addInput("machine", self.pargs.machine)
        machine = formats.readMachine(self.pargs.machine)
        iRepetitions = 1
        if (self.pargs.data is not None):
            qReport.addInput("data", self.pargs.data)
            matSamples = formats.readSamples(self.pargs.data)
            if (matSamples.shape[1] != len(machine.listVisible)):
                raise qerror.DimMismatch("Samples have %d spins, visible layer has %d" %
                                         (matSamples.shape[1], len(machine.listVisible)))
            target = boltzmann.empiricalDistribution(matSamples)
            iRepetitions = matSamples.shape[0]
        else:
            qReport.addInput("distribution", self.pargs.dist)
            target = formats.readDistribution(self.pargs.dist)

        trained, listTrace = boltzmann.trainExact(machine, target, self.pargs.lr, self.pargs.epochs,
                                                  self.iSeed, self.pargs.jitter)
        matFisher = boltzmann.fisherMetric(trained)
        bounds = boltzmann.cramerRaoBounds(matFisher, iRepetitions)
        qReport.update({
            "kl_trace": listTrace,
            "final_kl": listTrace[-1],
            "epochs_run": len(listTrace) - 1,
            "machine": formats.machineDocument(trained),
            "visible_probs": boltzmann.visibleDistribution(trained).probs,
            "target_probs": target.probs,
            "fisher": matFisher,
            "cramer_rao": {"repetitions": iRepetitions, "eigenvalues": bounds.eigenvalues,
                           "bounds": bounds.bounds},
        })

    def cmdEntropy(self, qReport):
        rho = self._readDensity(qReport, "rho", self.pargs.rho)
        sigma = self._readDensity(qReport, "sigma", self.pargs.sigma)
        fEntropy = qstate.quantumRelativeEntropy(rho, sigma)
        fCommutator = kernel.spectralNorm(kernel.commutator(rho.mat, sigma.mat))
        bCommute = fCommutator <= config.TOL_COMMUTE
        qReport.update({"relative_entropy": fEntropy, "commutator_norm": fCommutator, "commuting": bCommute})
        if bCommute:
            # A generic combination shares the common eigenbasis...
            eigMix = kernel.eigHermitian(rho.mat + np.sqrt(2) * sigma.mat)
            vecP = np.clip(np.real(np.diag(eigMix.basis.conj().T @ rho.mat @ eigMix.basis)), 0.0, None)
            vecQ = np.clip(np.real(np.diag(eigMix.basis.conj().T @ sigma.mat @ eigMix.basis)), 0.0, None)
            qReport.set("classical_kl", boltzmann.klDivergence(vecP, vecQ))

    def cmdAnneal(self, qReport):
        qReport.addInput("machine", self.pargs.machine)
        machine = formats.readMachine(self.pargs.machine)
        listSchedule = parseSchedule(self.pargs.schedule)
        matSamples = boltzmann.simulatedAnneal(machine, listSchedule, self.pargs.samples, self.iSeed)
        if (self.pargs.samples_out is not None):
            formats.writeSamples(matSamples, self.pargs.samples_out)
            qReport.set("samples_out", self.pargs.samples_out)
        else:
            # ...no sample file, so the report carries the samples
            qReport.set("samples", formats.sampleLines(matSamples))

        fFinalBeta = listSchedule[-1][0]
        qReport.update({
            "n_samples": int(matSamples.shape[0]),
            "schedule": [list(tupleStage) for tupleStage in listSchedule],
            "final_beta": fFinalBeta,
            "magnetization": np.mean(matSamples, axis=0),
        })
        if (machine.iSpins <= config.MAX_TV_SPINS):
            distExact = boltzmann.boltzmannDistribution(machine.withBeta(fFinalBeta))
            distSampled = boltzmann.empiricalDistribution(matSamples)
            qReport.set("empirical_probs", distSampled.probs)
            qReport.set("tv", boltzmann.totalVariation(distSampled, distExact))
        else:
            qReport.set("tv", None)

    def cmdPrep(self, qReport):
        obsO = self._readObservable(qReport, self.pargs.observable)
        try:
            construction = probe.optimalProbe(obsO, self.pargs.phi)
        except qerror.ZeroTraceless as e:
            utils.printInfo(str(e.args[0]))
            qReport.set("outcome", config.STR_NO_ADVANTAGE)
            return
        seq = prep.prepCircuit(construction)
        qReport.update({
            "outcome": "advantage",
            "i_star": construction.i_star,
            "j_star": construction.j_star,
            "circuit": formats.circuitDocument(seq),
            "gate_count": len(seq.gates),
            "deviation": prep.verifyPrep(seq, construction),
        })

    def cmdGap(self, qReport):
        qReport.addInput("state", self.pargs.state)
        vecPsi, tupleDims = formats.readStateVector(self.pargs.state)
        obsO = self._readObservable(qReport, self.pargs.observable)
        try:
            gap = probe.mixedVsPureGap(vecPsi, tupleDims, obsO)
        except qerror.ZeroTraceless as e:
            utils.printInfo(str(e.args[0]))
            qReport.set("outcome", config.STR_NO_ADVANTAGE)
            return
        qReport.update({"outcome": "advantage", "visible_norm": gap.visible_norm, "pure_max": gap.pure_max,
                        "gap": gap.gap, "schmidt_rank": gap.schmidt_rank})

    def cmdSense(self, qReport):
        rho = self._readDensity(qReport, "rho", self.pargs.rho)
        try:
            sensing = probe.optimalObservable(rho, self.pargs.phi)
        except qerror.ZeroTraceless as e:
            utils.printInfo(str(e.args[0]))
            qReport.set("outcome", config.STR_NO_ADVANTAGE)
            return
        qReport.update({
            "outcome": "advantage",
            "observable": formats.matrixDocument(sensing.observable.mat),
            "achieved_norm": sensing.achieved_norm,
            "i_max": sensing.i_max,
            "i_min": sensing.i_min,
            "purity": qstate.purity(rho),
        })
