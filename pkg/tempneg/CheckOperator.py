#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Contract checks on dense operators."""

import numpy as np

from tempneg.TempNegErrors import ContractViolation, DimensionError
from tempneg.TempNegVariables import HermTol, PsdTol, TraceTol

def IsHermitian(m,tol=HermTol):
    m=np.asarray(m)
    if m.ndim!=2 or m.shape[0]!=m.shape[1]:
        return False
    return np.max(np.abs(m-m.conj().T),initial=0.)<=tol

def CheckSquare(m,name='matrix'):
    m=np.asarray(m)
    if m.ndim!=2 or m.shape[0]!=m.shape[1]:
        raise DimensionError('%s must be square, got shape %s' % (name,m.shape))
    return m

def CheckHermitian(m,tol=HermTol,name='matrix'):
    """Raise ContractViolation unless m is Hermitian to tol; return its Hermitian part."""
    m=CheckSquare(m,name)
    dev=np.max(np.abs(m-m.conj().T),initial=0.)
    if dev>tol:
        raise ContractViolation('%s is not Hermitian: max |M - M^dag| = %.3e > %.1e' % (name,dev,tol))
    return (m+m.conj().T)/2

def CheckState(m,trace_tol=TraceTol,psd_tol=PsdTol,name='state'):
    """Raise ContractViolation unless m is a density matrix.

    Parameters
    ----------
    m : array_like
        Square complex matrix.
    trace_tol : float
        Allowed deviation of the trace from one. The Hermiticity check uses
        max(HermTol, trace_tol) so user supplied matrices get the looser bound.
    psd_tol : float
        Smallest eigenvalue accepted is -psd_tol.

    Returns
    -------
    numpy.ndarray
        The Hermitian part of m.
    """
    m=CheckHermitian(m,max(HermTol,trace_tol),name)
    tr=np.trace(m).real
    if abs(tr-1.)>trace_tol:
        raise ContractViolation('%s has trace %.12g, expected 1' % (name,tr))
    lmin=np.linalg.eigvalsh(m)[0]
    if lmin< -psd_tol:
        raise ContractViolation('%s has negative eigenvalue %.3e' % (name,lmin))
    return m

def CheckSameShape(rho,omega):
    if rho.shape!=omega.shape:
        raise DimensionError('%s has shape %r but %s has shape %r'
                             % (rho.label,rho.shape,omega.label,omega.shape))
