#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Spectral entanglement quantities that need no optimization."""

import math

import numpy as np

from tempneg.CheckOperator import CheckState
from tempneg.Entropies import QuantumRelativeEntropy, VonNeumannEntropy
from tempneg.HermitianEigensystem import HermitianEigensystem
from tempneg.MatrixNorms import TraceNorm
from tempneg.PartialTrace import PartialTrace
from tempneg.PartialTranspose import PartialTranspose
from tempneg.TempNegErrors import DimensionError
from tempneg.TempNegVariables import MonotoneResult, CheckReport, InputTraceTol, PsdTol

def LogNegativity(rho):
    """E_N(rho) = log2 ||rho^Gamma||_1.

    The witness is the sign operator X = sgn(rho^Gamma)^Gamma, which attains
    the variational form sup{Tr X rho : ||X^Gamma||_inf <= 1}.
    """
    m=CheckState(rho.matrix,InputTraceTol,name=rho.label)
    sp=HermitianEigensystem(PartialTranspose(m,rho.shape))
    lam=sp.eigenvalues
    tn=float(np.sum(np.abs(lam)))
    sign=(sp.eigenvectors*np.where(lam<0,-1.,1.))@sp.eigenvectors.conj().T
    res=MonotoneResult(math.log2(tn),witness=PartialTranspose(sign,rho.shape))
    res.provenance='spectral'
    return res

def CoherentInformation(rho):
    """S(rho_B) - S(rho_AB) in bits."""
    m=CheckState(rho.matrix,InputTraceTol,name=rho.label)
    rho_b=PartialTrace(m,rho.shape,'B')
    return VonNeumannEntropy(rho_b)-VonNeumannEntropy(m)

def ReeUpperBound(rho,ansatz):
    """D(rho||ansatz), an upper bound on the relative entropy of entanglement
    whenever ansatz is free. Membership of ansatz is the caller's business."""
    if rho.shape!=ansatz.shape:
        raise DimensionError('%s has shape %r but ansatz %s has shape %r'
                             % (rho.label,rho.shape,ansatz.label,ansatz.shape))
    return QuantumRelativeEntropy(rho.matrix,ansatz.matrix)

def BinegativityCheck(rho):
    """Is |rho^Gamma|^Gamma positive semidefinite?"""
    m=CheckState(rho.matrix,InputTraceTol,name=rho.label)
    sp=HermitianEigensystem(PartialTranspose(m,rho.shape))
    absG=(sp.eigenvectors*np.abs(sp.eigenvalues))@sp.eigenvectors.conj().T
    lmin=float(np.linalg.eigvalsh(PartialTranspose(absG,rho.shape))[0])

    rep=CheckReport('binegativity %s' % rho.label)
    rep.lhs=0.
    rep.rhs=lmin
    rep.slack=lmin
    rep.holds=lmin>=-PsdTol
    rep.details['negativity']=TraceNorm(PartialTranspose(m,rho.shape))
    return rep
