#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Fidelity and entropic divergences of density matrices, in bits.

Support violations return math.inf. Eigenvalues at or below SupportCutoff are
treated as zero, with the convention 0 log 0 = 0.
"""

import math

import numpy as np
from scipy.linalg import eigh, svdvals

from tempneg.CheckOperator import CheckState
from tempneg.HermitianEigensystem import MatrixFunction
from tempneg.TempNegVariables import InputTraceTol, SupportCutoff

def Fidelity(rho,sigma):
    """Squared root fidelity ||sqrt(rho) sqrt(sigma)||_1^2."""
    rho=CheckState(rho,InputTraceTol,name='rho')
    sigma=CheckState(sigma,InputTraceTol,name='sigma')
    sr=MatrixFunction(rho,np.sqrt,clip=True)
    ss=MatrixFunction(sigma,np.sqrt,clip=True)
    f=np.sum(svdvals(sr@ss))**2
    return float(min(max(f,0.),1.))

def _Entropy(w):
    w=w[w>SupportCutoff]
    return float(-np.sum(w*np.log2(w)))

def VonNeumannEntropy(rho):
    rho=CheckState(rho,InputTraceTol,name='rho')
    return _Entropy(np.linalg.eigvalsh(rho))

def _OutsideSupport(rho,V,mu):
    """Weight of rho on the kernel of sigma."""
    K=V[:,mu<=SupportCutoff]
    if K.shape[1]==0:
        return 0.
    return float(np.real(np.trace(K.conj().T@rho@K)))

def QuantumRelativeEntropy(rho,sigma):
    """D(rho||sigma) = Tr rho (log2 rho - log2 sigma), inf if supp rho is not in supp sigma."""
    rho=CheckState(rho,InputTraceTol,name='rho')
    sigma=CheckState(sigma,InputTraceTol,name='sigma')

    lam,U=eigh(rho)
    mu,V=eigh(sigma)
    if _OutsideSupport(rho,V,mu)>SupportCutoff:
        return math.inf

    keep_r=lam>SupportCutoff
    keep_s=mu>SupportCutoff
    overlap=np.abs(U[:,keep_r].conj().T@V[:,keep_s])**2 #|<u_i|v_j>|^2
    cross=np.sum(lam[keep_r][:,None]*overlap*np.log2(mu[keep_s])[None,:])
    return float(max(-_Entropy(lam)-cross,0.))

def MaxRelativeEntropy(rho,sigma):
    """log2 of the least t with rho <= t sigma, via the pseudo-inverse square root of sigma."""
    rho=CheckState(rho,InputTraceTol,name='rho')
    sigma=CheckState(sigma,InputTraceTol,name='sigma')

    mu,V=eigh(sigma)
    if _OutsideSupport(rho,V,mu)>SupportCutoff:
        return math.inf

    Vs=V[:,mu>SupportCutoff]
    S=(Vs/np.sqrt(mu[mu>SupportCutoff]))@Vs.conj().T
    M=S@rho@S
    lmax=np.linalg.eigvalsh((M+M.conj().T)/2)[-1]
    return float(max(math.log2(lmax),0.))
