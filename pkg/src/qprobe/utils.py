# -*- coding: UTF-8 -*-
"""
module utils.py
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
import math
from hashlib import md5

import numpy as np

import qprobe.config as config
import qprobe.error as qerror


def printInfo(strMsg, iLevel = 1):
    # Info messages show at verbose level 1 and above...
    if (config.VERBOSE >= iLevel):
        sys.stderr.write(" Info: " + strMsg + "\n")


def printWarning(strMsg):
    # Warnings show unless quiet...
    if (config.VERBOSE >= 0):
        sys.stderr.write(" Warning: " + strMsg + "\n")


def getFileDigest(strFileName):
    # MD5 of an input file for the run report...
    try:
        with open(strFileName, "rb") as fileIn:
            return md5( fileIn.read() ).hexdigest()
    except OSError as e:
        raise qerror.InputError("Cannot open file " + strFileName + ": " + str(e.strerror))


def formatFloat(fValue):
    # Non-finite values become strings so documents stay standard JSON...
    if math.isnan(fValue):
        return "nan"
    if math.isinf(fValue):
        return "+inf" if fValue > 0 else "-inf"
    return float(fValue)


def parseFloat(value):
    # Inverse of formatFloat...
    if isinstance(value, str):
        dictSpecial = {"nan": math.nan, "+inf": math.inf, "inf": math.inf, "-inf": -math.inf}
        if value not in dictSpecial:
            raise ValueError("Not a number: " + value)
        return dictSpecial[value]
    if isinstance(value, bool):
        raise ValueError("Not a number: " + str(value))
    return float(value)


def toDocument(value):
    # Convert numpy scalars, arrays, and non-finite floats to JSON friendly values.
    # Complex arrays are split into re/im parts.
    if isinstance(value, dict):
        return {str(key): toDocument(val) for key, val in value.items()}
    if isinstance(value, (list, tuple)):
        return [toDocument(val) for val in value]
    if isinstance(value, np.ndarray):
        if np.iscomplexobj(value):
            return {"re": toDocument(value.real.tolist()), "im": toDocument(value.imag.tolist())}
        return toDocument(value.tolist())
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return formatFloat(float(value))
    if isinstance(value, (complex, np.complexfloating)):
        return {"re": formatFloat(value.real), "im": formatFloat(value.imag)}
    return value
