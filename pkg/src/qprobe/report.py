# -*- coding: UTF-8 -*-
"""
module report.py
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

import qprobe.version as version
import qprobe.error as qerror
import qprobe.utils as utils
import qprobe.formats as formats


###############################################################################
# Qprobe Run Report Class
###############################################################################
class Report:
    """
    Document written by every command: the command name, the MD5 digest of
    each input file, the seed, the package version, and the command payload.
    Carries no timestamps, so identical runs give identical bytes.
    """
    def __init__(self, strCommand, iSeed):
        self.strCommand = strCommand
        self.iSeed = iSeed
        self.dictInputs = {}
        self.dictPayload = {}


    #--------------------------------------------------------------------------
    # Public Methods
    #--------------------------------------------------------------------------

    def addInput(self, strRole, strFileName):
        self.dictInputs[strRole] = {"path": strFileName, "md5": utils.getFileDigest(strFileName)}

    def set(self, strKey, value):
        self.dictPayload[strKey] = value

    def update(self, dictValues):
        self.dictPayload.update(dictValues)

    def document(self):
        return {
            "command": self.strCommand,
            "inputs": self.dictInputs,
            "seed": self.iSeed,
            "version": version.STR_VERSION,
            "payload": self.dictPayload,
        }

    def write(self, strFileName = None):
        if (strFileName is None or strFileName == "-"):
            formats.dumpDocument(self.document(), sys.stdout)
            return
        formats.saveDocument(self.document(), strFileName)
        utils.printInfo("Report written to " + strFileName)
