#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Choi-level bounds for channels: a tempered log-negativity lower bound on
the cost and a max-relative-entropy upper bound on the capacity."""

import numpy as np

from tempneg.ChoiCalculus import ApplyViaChoi, ChoiOf
from tempneg.Entropies import MaxRelativeEntropy
from tempneg.LinearMaps import DephasingSpec
from tempneg.TemperedNegativity import TemperedLogNegativity
from tempneg.TempNegErrors import DomainError
from tempneg.TempNegVariables import BipartiteShape, ChoiMatrix, NamedOperator

def ChannelOutput(choi,probe):
    """[id (x) L](probe) for a probe on reference (x) input."""
    if probe.shape.d_b!=choi.d_in:
        raise DomainError('probe %s has input factor %d but the channel takes %d'
                          % (probe.label,probe.shape.d_b,choi.d_in))
    out=ApplyViaChoi(choi,probe.matrix,d_ref=probe.shape.d_a)
    out=(out+out.conj().T)/2
    return NamedOperator(out,BipartiteShape(probe.shape.d_a,choi.d_out),'L(%s)' % probe.label,True)

def ChannelTemperedNegativityLower(choi,probe,config=None):
    """E^tau_N([id (x) L](probe)) in bits; with a list of probes, the largest value.

    Each value is a lower bound on the channel tempered log-negativity; no
    search beyond the supplied probes is made.
    """
    probes=probe if isinstance(probe,(list,tuple)) else [probe]
    if not probes:
        raise DomainError('at least one probe is needed')
    return max(TemperedLogNegativity(ChannelOutput(choi,p),config).value for p in probes)

def ChannelCapacityUpperBound(choi,ansatz=None):
    """D_max(J_L || J_ansatz) for an entanglement-breaking ansatz channel.

    The ansatz defaults to complete dephasing. For Omega_3 this gives
    log2(3/2).
    """
    if ansatz is None:
        if choi.d_in!=choi.d_out:
            raise DomainError('default dephasing ansatz needs d_in == d_out, got %d and %d'
                              % (choi.d_in,choi.d_out))
        ansatz=ChoiOf(DephasingSpec(choi.d_in),choi.d_in)
    if not isinstance(ansatz,ChoiMatrix):
        ansatz=ChoiMatrix(np.asarray(ansatz),choi.d_in,choi.d_out)
    if (ansatz.d_in,ansatz.d_out)!=(choi.d_in,choi.d_out):
        raise DomainError('ansatz Choi dimensions (%d,%d) differ from (%d,%d)'
                          % (ansatz.d_in,ansatz.d_out,choi.d_in,choi.d_out))
    return MaxRelativeEntropy(choi.matrix,ansatz.matrix)
