#!/usr/bin/env python
# -*- coding: UTF-8 -*-
"""
module qprobe.py
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


import sys
import os
import argparse

import qprobe.version as version
import qprobe.config as config
import qprobe.error as qerror
import qprobe.processor as processor
import qprobe.utils as utils


class ArgumentParser(argparse.ArgumentParser):
    # Usage errors are validation errors (exit 1), not argparse's exit 2...
    def error(self, message):
        raise qerror.InputError(self.prog + ": " + message)


def getArgs(listArgv = None):
    # Return arguments passed to qprobe on the command line...

    strProg = os.path.basename(__file__).replace(".py", "").capitalize()
    strDesc = strProg + " - Quantum Advantage Probe for Boltzmann Machines"
    strEpilog = (
        "--- " + strProg + " " + version.STR_VERSION + " ---\n" +
        "Author: " + version.author[0] + "\n" +
        strProg + " is open source software\n" +
        "  See: " + version.location
        )
    strNote = (
        "Exit Codes:\n" +
        "   0  success, including \"" + config.STR_NO_ADVANTAGE + "\"\n" +
        "   1  validation error (bad input, violated precondition)\n" +
        "   2  internal error\n" +
        "\n" +
        "Verbose Mode Notes:\n" +
        "    Level:   Mode:    Switch:   Output:\n" +
        "     -1      Quiet     -q       Errors\n" +
        "      0      Standard  N/A      Report + Errors + Warnings\n" +
        "      1      Verbose   -v       Standard + Info\n" +
        "      2      Enhanced  -vv      Verbose + per-epoch and per-stage Info\n" +
        "\n"
        )

    def addCommonOptions(parserTo, bTop):
        # Top level holds the defaults; subcommand copies only set what is given...
        def default(value):
            return value if bTop else argparse.SUPPRESS
        parserTo.add_argument("--seed", type=int, default=default(0), dest="seed",
                              help=("master random seed (default 0)"))
        parserTo.add_argument("--out", dest="out", metavar="FILE", default=default(None),
                              help=("write the report to FILE (default stdout)"))
        parserTo.add_argument("-q", "--quiet", action="store_true", dest="quiet", default=default(False),
                              help=("quiet output: Errors only\n" +
                                    "NOTE: -v overrides -q"))
        parserTo.add_argument("-v", "--verbose", action="count", default=default(0),
                              help=("verbose output, each use increments output level"))

    parserCommon = ArgumentParser(add_help=False)
    addCommonOptions(parserCommon, False)

    parser = ArgumentParser(prog=strProg.lower(), formatter_class=argparse.RawTextHelpFormatter,
                            description=strDesc, epilog=strNote + strEpilog)
    parser.add_argument("--version", action="version", version=strEpilog)
    addCommonOptions(parser, True)
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True

    def addCommand(strName, strHelp):
        return subparsers.add_parser(strName, parents=[parserCommon], help=strHelp, description=strHelp,
                                     formatter_class=argparse.RawTextHelpFormatter, epilog=strEpilog)

    parserProbe = addCommand("probe", "optimal probe state, oracle check, QFI, and preparation circuit\n" +
                                      "for an observable")
    parserProbe.add_argument("observable", metavar="OBSERVABLE", help=("matrix document of the observable"))
    parserProbe.add_argument("--oracle-restarts", type=int, default=config.DEFAULT_RESTARTS,
                             dest="oracle_restarts", metavar="K",
                             help=("Nelder-Mead restarts for the oracle (default %d)" % config.DEFAULT_RESTARTS))
    parserProbe.add_argument("--phi", type=float, default=0.0, help=("transverse azimuth (default 0)"))
    parserProbe.add_argument("--workers", type=int, default=1, metavar="W",
                             help=("oracle worker processes (default 1)"))

    parserTrain = addCommand("train", "fit a Boltzmann machine to data by exact KL gradient descent")
    parserTrain.add_argument("machine", metavar="MACHINE", help=("machine document (initial parameters)"))
    groupTarget = parserTrain.add_mutually_exclusive_group(required=True)
    groupTarget.add_argument("--data", metavar="SAMPLES", help=("sample file of visible configurations"))
    groupTarget.add_argument("--dist", metavar="DISTRIBUTION", help=("distribution document"))
    parserTrain.add_argument("--epochs", type=int, default=config.DEFAULT_EPOCHS,
                             help=("maximum epochs (default %d)" % config.DEFAULT_EPOCHS))
    parserTrain.add_argument("--lr", type=float, default=config.DEFAULT_LEARNING_RATE,
                             help=("initial learning rate (default %s)" % config.DEFAULT_LEARNING_RATE))
    parserTrain.add_argument("--jitter", type=float, default=0.0,
                             help=("seeded Gaussian noise added to the start parameters (default 0)"))

    parserEntropy = addCommand("entropy", "quantum relative entropy S(rho||sigma)")
    parserEntropy.add_argument("rho", metavar="RHO", help=("matrix document of rho"))
    parserEntropy.add_argument("sigma", metavar="SIGMA", help=("matrix document of sigma"))

    parserAnneal = addCommand("anneal", "simulated annealing samples from a Boltzmann machine")
    parserAnneal.add_argument("machine", metavar="MACHINE", help=("machine document"))
    parserAnneal.add_argument("--schedule", required=True, metavar="SCHEDULE",
                              help=("stages \"beta:sweeps,beta:sweeps,...\" with non-decreasing beta"))
    parserAnneal.add_argument("--samples", type=int, default=config.DEFAULT_SAMPLES, metavar="N",
                              help=("number of samples (default %d)" % config.DEFAULT_SAMPLES))
    parserAnneal.add_argument("--samples-out", dest="samples_out", metavar="PATH",
                              help=("write the samples to PATH"))

    parserPrep = addCommand("prep", "preparation circuit for the optimal probe state")
    parserPrep.add_argument("observable", metavar="OBSERVABLE", help=("matrix document of the observable"))
    parserPrep.add_argument("--phi", type=float, default=0.0, help=("transverse azimuth (default 0)"))

    parserGap = addCommand("gap", "visible mixed state against the pure optimum")
    parserGap.add_argument("state", metavar="STATE", help=("state vector document of a bipartite pure state"))
    parserGap.add_argument("observable", metavar="OBSERVABLE", help=("matrix document on the visible factor"))

    parserSense = addCommand("sense", "observable of maximum sensitivity for a given state")
    parserSense.add_argument("rho", metavar="RHO", help=("matrix document of the state"))
    parserSense.add_argument("--phi", type=float, default=0.0, help=("transverse azimuth (default 0)"))

    return parser.parse_args(listArgv)


# ================================================================================
#
# MAIN
#
# ================================================================================

def main(listArgv = None):
    try:
        config.ARGS = getArgs(listArgv)

        # Unify QUIET and VERBOSE modes...
        if (config.ARGS.quiet and config.ARGS.verbose == 0):
            config.VERBOSE = -1
        else:
            config.VERBOSE = config.ARGS.verbose
        utils.printInfo("Qprobe: Version " + version.STR_VERSION)

        processor.Processor(config.ARGS).run()
    except qerror.QprobeError as qe:
        qe.printError()
        return qe.iExitCode
    except Exception as e:
        pe = qerror.ProcessError(type(e).__name__ + ": " + str(e))
        pe.printError()
        return pe.iExitCode
    return 0


if __name__ == "__main__":
    sys.exit(main())
