#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Per-copy values on one or two copies. These are finite-size evidence
about the regularised quantities, never their limits."""

import math

from tempneg.NamedStates import TensorPower
from tempneg.RobustnessPPT import StdRobustnessPPT
from tempneg.TemperedNegativity import TemperedNegativity
from tempneg.TempNegErrors import DomainError

LabelFiniteSize='finite-size lower evidence'
Quantities=('tempered-log-negativity','std-robustness')

def RegularisedEvidence(rho,quantity,n,config=None):
    """(1/n) log2 N_tau(rho^n) or (1/n) log2(1 + R^s_PPT(rho^n)) for n in {1, 2}."""
    if quantity not in Quantities:
        raise DomainError('quantity must be one of %s, got %r' % (Quantities,quantity))
    if n not in (1,2):
        raise DomainError('n must be 1 or 2, got %r' % (n,))

    rn=TensorPower(rho,n)
    if quantity=='tempered-log-negativity':
        res=TemperedNegativity(rn,rn,config)
        base=res.value
    else:
        res=StdRobustnessPPT(rn,config=config)
        base=1+res.value
    res.value=math.log2(base)/n if base>0 else -math.inf
    res.label=LabelFiniteSize
    res.provenance='%s per copy on %d copies' % (quantity,n)
    return res
