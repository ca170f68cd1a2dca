# -*- coding: UTF-8 -*-
"""
module error.py
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
Qprobe Errors are categorized by the return exit codes:
   1  validation error (bad input, violated precondition)
   2  internal error

See the ReadMe.md file for more.
"""

import sys


ERROR = " Error"

class QprobeError(Exception):
    """
    Base class for exceptions in this module.
    """
    def __init__(self, *args):
        self.iExitCode = 2
        self.strErrHead = ERROR + ": "
        Exception.__init__(self, *args)

    def printError(self):
        sys.stderr.write(self.strErrHead + str(self.args[0] if self.args else "") + "\n")


class ProcessError(QprobeError):
    """
    Exception raised for internal errors.
    """
    def __init__(self, *args):
        QprobeError.__init__(self, *args)
        self.iExitCode = 2
        self.strErrHead = ERROR + " (Process): "


class ValidationError(QprobeError):
    """
    Base class for exceptions regarding invalid input or a violated precondition.
    """
    def __init__(self, *args):
        QprobeError.__init__(self, *args)
        self.iExitCode = 1
        self.strErrHead = ERROR + " (Validation): "


class InputError(ValidationError):
    """
    Exception raised for errors regarding input files.
    """
    def __init__(self, *args):
        ValidationError.__init__(self, *args)
        self.strErrHead = ERROR + " (Input): "


class OutputError(ValidationError):
    """
    Exception raised for errors regarding output files.
    """
    def __init__(self, *args):
        ValidationError.__init__(self, *args)
        self.strErrHead = ERROR + " (Output): "


class ParseError(ValidationError):
    """
    Exception raised for malformed matrix, machine, sample, or circuit documents.
    """
    def __init__(self, *args):
        ValidationError.__init__(self, *args)
        self.strErrHead = ERROR + " (Parse): "


class DimMismatch(ValidationError):
    def __init__(self, *args):
        ValidationError.__init__(self, *args)
        self.strErrHead = ERROR + " (Dimension): "


class NotHermitian(ValidationError):
    def __init__(self, *args):
        ValidationError.__init__(self, *args)
        self.strErrHead = ERROR + " (Hermitian): "


class NegativeSpectrum(ValidationError):
    def __init__(self, *args):
        ValidationError.__init__(self, *args)
        self.strErrHead = ERROR + " (Spectrum): "


class SingularLog(ValidationError):
    """
    Exception raised when a logarithm of a singular matrix is requested
    without asking for the infinite eigenspace.
    """
    def __init__(self, *args):
        ValidationError.__init__(self, *args)
        self.strErrHead = ERROR + " (Spectrum): "


class TooLarge(ValidationError):
    def __init__(self, *args):
        ValidationError.__init__(self, *args)
        self.strErrHead = ERROR + " (Size): "


class NonFiniteGradient(ValidationError):
    def __init__(self, *args):
        ValidationError.__init__(self, *args)
        self.strErrHead = ERROR + " (Training): "


class ScheduleError(ValidationError):
    """
    Exception raised for an annealing schedule with a non-positive or
    decreasing beta.
    """
    def __init__(self, *args):
        ValidationError.__init__(self, *args)
        self.strErrHead = ERROR + " (Schedule): "


class EmptySchedule(ScheduleError):
    def __init__(self, *args):
        ScheduleError.__init__(self, *args)


class NoHiddenLayer(ValidationError):
    def __init__(self, *args):
        ValidationError.__init__(self, *args)
        self.strErrHead = ERROR + " (Layers): "


class NotNormalized(ValidationError):
    def __init__(self, *args):
        ValidationError.__init__(self, *args)
        self.strErrHead = ERROR + " (State): "


class ZeroTraceless(ValidationError):
    """
    Exception raised when the traceless part of an operator vanishes: it
    commutes with every state and no quantum advantage is possible.
    """
    def __init__(self, *args):
        ValidationError.__init__(self, *args)
        self.strErrHead = ERROR + " (Traceless): "


class IndexOutOfRange(ValidationError):
    def __init__(self, *args):
        ValidationError.__init__(self, *args)
        self.strErrHead = ERROR + " (Circuit): "


class PaddingLeak(ValidationError):
    def __init__(self, *args):
        ValidationError.__init__(self, *args)
        self.strErrHead = ERROR + " (Circuit): "


class InvalidDensity(ValidationError):
    """
    Exception raised for a matrix violating a density matrix invariant.
    The violated invariant ("hermitian", "trace", or "psd") is kept in
    strInvariant.
    """
    def __init__(self, strInvariant, *args):
        if not args:
            args = ("Invalid density matrix (" + strInvariant + ")", )
        ValidationError.__init__(self, *args)
        self.strInvariant = strInvariant
        self.strErrHead = ERROR + " (Density): "
