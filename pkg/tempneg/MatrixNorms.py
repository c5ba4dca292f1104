#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Schatten norms used throughout: trace norm and operator norm."""

import numpy as np
from scipy.linalg import eigvalsh, svdvals

from tempneg.CheckOperator import IsHermitian, CheckSquare
from tempneg.TempNegVariables import HermTol

def _HermitianFastPath(m):
    return IsHermitian(m,HermTol*max(1.,np.max(np.abs(m),initial=0.)))

def TraceNorm(m):
    m=CheckSquare(np.asarray(m,dtype=complex))
    if _HermitianFastPath(m):
        return float(np.sum(np.abs(eigvalsh((m+m.conj().T)/2))))
    return float(np.sum(svdvals(m)))

def OperatorNorm(m):
    m=CheckSquare(np.asarray(m,dtype=complex))
    if _HermitianFastPath(m):
        return float(np.max(np.abs(eigvalsh((m+m.conj().T)/2)),initial=0.))
    return float(np.max(svdvals(m),initial=0.))
