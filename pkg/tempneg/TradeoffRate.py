#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Dilution rate of omega_3 as a function of the tolerated error floor."""

import math

import numpy as np

from tempneg.MatrixNorms import OperatorNorm
from tempneg.NamedStates import Omega3, X3Delta
from tempneg.PartialTranspose import PartialTranspose
from tempneg.TempNegErrors import DomainError
from tempneg.TempNegVariables import CheckReport

def TradeoffRateLowerBound(delta):
    """1 for delta >= 1/3, log2(3(1-delta)/(2-3 delta)) for 0 < delta < 1/3."""
    if not 0<delta<=1:
        raise DomainError('delta must lie in (0,1], got %r' % (delta,))
    if delta>=1/3:
        return 1.
    return math.log2(3*(1-delta)/(2-3*delta))

def X3DeltaNormCheck(delta,tol=1e-10):
    """||X_3(delta)^Gamma||_inf = 1 and ||X_3(delta)||_inf = Tr X_3(delta) omega_3 = 2^rate."""
    x=X3Delta(delta)
    om=Omega3()
    ptn=OperatorNorm(PartialTranspose(x.matrix,x.shape))
    opn=OperatorNorm(x.matrix)
    ev=float(np.trace(x.matrix@om.matrix).real)
    rate=TradeoffRateLowerBound(delta)

    rep=CheckReport('X3(%.12g) norms' % delta)
    rep.lhs=opn
    rep.rhs=ev
    rep.slack=ev-opn
    rep.details={'pt_norm':ptn,'op_norm':opn,'expectation':ev,'rate':rate}
    rep.holds=(abs(ptn-1)<=tol and abs(opn-ev)<=tol and abs(math.log2(ev)-rate)<=tol)
    return rep
