#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Closed-form maps: isotropic twirl, the omega_3 preparation map, the
phase/permutation average on two qutrits and complete dephasing.

All of them accept arbitrary (non-Hermitian) square inputs so they can be
applied to matrix units when building Choi matrices.
"""

from itertools import permutations

import numpy as np

from tempneg.NamedStates import Omega3, Phi, Tau3Diag
from tempneg.TempNegErrors import DomainError

def _CheckDim(x,dim,what):
    x=np.asarray(x,dtype=complex)
    if x.shape!=(dim,dim):
        raise DomainError('%s acts on %dx%d matrices, got shape %s' % (what,dim,dim,x.shape))
    return x

def Twirl(x,d):
    """Tr[x Phi_d] Phi_d + Tr[x (1-Phi_d)] (1-Phi_d)/(d^2-1)."""
    x=_CheckDim(x,d*d,'twirl')
    ph=Phi(d).matrix
    rest=np.eye(d*d)-ph
    return np.trace(x@ph)*ph+np.trace(x@rest)*rest/(d*d-1)

def PrepareOmega3Map(x):
    """Lambda(x) = Tr[x Phi_2] omega_3 + Tr[x (1-Phi_2)] tau_3."""
    x=_CheckDim(x,4,'omega3 preparation map')
    ph=Phi(2).matrix
    return np.trace(x@ph)*Omega3().matrix+np.trace(x@(np.eye(4)-ph))*Tau3Diag().matrix

def PhaseSurvivalMask(d=3):
    """Entries <ab|x|cd> invariant under U_theta (x) U_-theta: {a,d} = {b,c} as multisets."""
    a,b,c,e=np.meshgrid(*[np.arange(d)]*4,indexing='ij')
    keep=((a==b)&(c==e))|((a==c)&(b==e))
    return keep.reshape(d*d,d*d)

def PermutationUnitary(pi):
    d=len(pi)
    P=np.zeros((d,d))
    P[list(pi),np.arange(d)]=1.
    return P

def PhasePermutationAverage(x):
    """Average of (U (x) U') x (U (x) U')^dag over phases and S_3 permutations.

    The phase integral keeps exactly the entries selected by
    PhaseSurvivalMask; the permutation average is an exact sum over S_3.
    """
    x=_CheckDim(x,9,'phase/permutation average')
    y=np.where(PhaseSurvivalMask(3),x,0.)
    out=np.zeros((9,9),dtype=complex)
    for pi in permutations(range(3)):
        P=PermutationUnitary(pi)
        PP=np.kron(P,P)
        out+=PP@y@PP.T
    return out/6

def Dephase(x):
    """Complete dephasing in the computational (product) basis."""
    x=np.asarray(x,dtype=complex)
    return np.diag(np.diag(x))
