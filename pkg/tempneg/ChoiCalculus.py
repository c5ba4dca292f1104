#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Normalized Choi states J = [id (x) L](Phi_d) and the action they encode."""

import numpy as np

from tempneg.LinearMaps import ApplyLinearMap
from tempneg.PartialTrace import PartialTrace
from tempneg.TempNegErrors import ContractViolation, DomainError
from tempneg.TempNegVariables import ChoiMatrix, PsdTol

ChoiTraceTol=1e-10

def ChoiOf(spec,d_in):
    """J = (1/d) sum_ij E_ij (x) L(E_ij), checked to be a valid channel Choi state.

    Raises
    ------
    DomainError
        If spec does not act on d_in-dimensional inputs.
    ContractViolation
        If J is not PSD or its input marginal is not 1/d.
    """
    if spec.d_in!=d_in:
        raise DomainError('%r is not defined on %d-dimensional inputs' % (spec,d_in))
    d,do=spec.d_in,spec.d_out

    J=np.zeros((d*do,d*do),dtype=complex)
    for i in range(d):
        for j in range(d):
            E=np.zeros((d,d),dtype=complex)
            E[i,j]=1.
            J+=np.kron(E,ApplyLinearMap(spec,E))
    J=J/d
    J=(J+J.conj().T)/2

    choi=ChoiMatrix(J,d,do)
    lmin=np.linalg.eigvalsh(J)[0]
    if lmin< -PsdTol:
        raise ContractViolation('Choi matrix of %r has negative eigenvalue %.3e' % (spec,lmin))
    marg=PartialTrace(J,choi.shape,'A')
    dev=np.max(np.abs(marg-np.eye(d)/d))
    if dev>ChoiTraceTol:
        raise ContractViolation('input marginal of the Choi matrix of %r deviates from 1/d by %.3e' % (spec,dev))
    return choi

def ApplyViaChoi(choi,rho,d_ref=None):
    """L(rho) = d_in Tr_in[(rho^T (x) 1) J].

    With d_ref given, rho lives on R (x) In and the map acts on the second
    factor only, returning [id_R (x) L](rho) on R (x) Out.
    """
    rho=np.asarray(rho,dtype=complex)
    d,do=choi.d_in,choi.d_out
    dr=1 if d_ref is None else int(d_ref)
    if rho.shape!=(dr*d,dr*d):
        raise DomainError('input of shape %s does not match d_ref=%d, d_in=%d' % (rho.shape,dr,d))
    J4=choi.matrix.reshape(d,do,d,do)
    r4=rho.reshape(dr,d,dr,d)
    out=d*np.einsum('aibj,iojp->aobp',r4,J4)
    return out.reshape(dr*do,dr*do)
