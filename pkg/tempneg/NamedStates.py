#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Named bipartite states and operators with analytically known structure.

Dimension guards: local dimension at most MaxLocalDim and total dimension at
most MaxTotalDim.
"""

import numpy as np

from tempneg.CheckOperator import CheckState
from tempneg.Tensor import CopyPermutation, BipartiteTensorPower
from tempneg.TempNegErrors import DomainError, DimensionError
from tempneg.TempNegVariables import BipartiteShape, NamedOperator, InputTraceTol

MaxLocalDim=9
MaxTotalDim=162

def _CheckLocalDim(d):
    if int(d)!=d or d<2:
        raise DomainError('local dimension must be an integer >= 2, got %r' % (d,))
    if d>MaxLocalDim:
        raise DomainError('local dimension %d exceeds the guard %d' % (d,MaxLocalDim))
    return int(d)

def _Square(d):
    return BipartiteShape(d,d)

def MaximallyEntangledVector(d):
    v=np.zeros(d*d,dtype=complex)
    v[np.arange(d)*(d+1)]=1/np.sqrt(d)
    return v

def Phi(d):
    """Phi_d = (1/d) sum_ij |ii><jj|."""
    d=_CheckLocalDim(d)
    v=MaximallyEntangledVector(d)
    return NamedOperator(np.outer(v,v.conj()),_Square(d),'phi%d' % d,True)

def PSubspace(d):
    """Projector sum_j |jj><jj| onto the maximally correlated subspace."""
    d=_CheckLocalDim(d)
    m=np.zeros((d*d,d*d),dtype=complex)
    idx=np.arange(d)*(d+1)
    m[idx,idx]=1.
    return NamedOperator(m,_Square(d),'P%d' % d,False)

def Omega3():
    """omega_3 = (P_3 - Phi_3)/2."""
    m=(PSubspace(3).matrix-Phi(3).matrix)/2
    return NamedOperator(m,_Square(3),'omega3',True)

def Omega3Entrywise():
    """omega_3 from (1/6) sum_ij (|ii><ii| - |ii><jj|), without going through P_3 and Phi_3."""
    m=np.zeros((9,9),dtype=complex)
    for i in range(3):
        for j in range(3):
            m[4*i,4*i]+=1/6
            m[4*i,4*j]-=1/6
    return NamedOperator(m,_Square(3),'omega3',True)

def X3():
    m=2*PSubspace(3).matrix-3*Phi(3).matrix
    return NamedOperator(m,_Square(3),'X3',False)

def X3Delta(delta):
    """X_3 for delta >= 1/3, else (3/(2-3 delta))((1-delta) P_3 - Phi_3)."""
    if not 0<delta<=1:
        raise DomainError('delta must lie in (0,1], got %r' % (delta,))
    if delta>=1/3:
        x=X3()
        x.label='X3(%.12g)' % delta
        return x
    m=3/(2-3*delta)*((1-delta)*PSubspace(3).matrix-Phi(3).matrix)
    return NamedOperator(m,_Square(3),'X3(%.12g)' % delta,False)

def SigmaPm(d):
    """The separable pair with d sigma_+ - (d-1) sigma_- = Phi_d."""
    d=_CheckLocalDim(d)
    ph=Phi(d).matrix
    one=np.eye(d*d)
    sp=(one+d*ph)/(d*(d+1))
    sm=(one-ph)/(d*d-1)
    return (NamedOperator(sp,_Square(d),'sigma+%d' % d,True),
            NamedOperator(sm,_Square(d),'sigma-%d' % d,True))

def Tau(m):
    """tau_m = (1 - Phi_2^{(x)m})/(4^m - 1), on (2^m)x(2^m) in the Phi_{2^m} ordering."""
    if int(m)!=m or not 1<=m<=3:
        raise DomainError('tau needs m in {1,2,3}, got %r' % (m,))
    m=int(m)
    D=2**m
    ph=EbitPower(m).matrix
    t=(np.eye(D*D)-ph)/(4**m-1)
    return NamedOperator(t,_Square(D),'tau%d' % m,True)

def Tau3Diag():
    """tau_3 = (1 - P_3)/6."""
    t=(np.eye(9)-PSubspace(3).matrix)/6
    return NamedOperator(t,_Square(3),'tau3',True)

def Isotropic(d,f):
    """f Phi_d + (1-f)(1-Phi_d)/(d^2-1)."""
    d=_CheckLocalDim(d)
    if not 0<=f<=1:
        raise DomainError('isotropic fidelity must lie in [0,1], got %r' % (f,))
    ph=Phi(d).matrix
    m=f*ph+(1-f)*(np.eye(d*d)-ph)/(d*d-1)
    return NamedOperator(m,_Square(d),'isotropic(%d,%.12g)' % (d,f),True)

def Flip(d):
    F=np.zeros((d*d,d*d),dtype=complex)
    for i in range(d):
        for j in range(d):
            F[i*d+j,j*d+i]=1.
    return F

def Antisymmetric(d):
    """Normalized projector (1-F)/(d(d-1)) onto the antisymmetric subspace."""
    d=_CheckLocalDim(d)
    m=(np.eye(d*d)-Flip(d))/(d*(d-1))
    return NamedOperator(m,_Square(d),'alpha%d' % d,True)

def MaximallyCorrelated(coeffs):
    """sum_ij c_ij |ii><jj| for a d x d density matrix c."""
    c=np.asarray(coeffs,dtype=complex)
    if c.ndim!=2 or c.shape[0]!=c.shape[1]:
        raise DimensionError('coefficient matrix must be square, got shape %s' % (c.shape,))
    d=_CheckLocalDim(c.shape[0])
    c=CheckState(c,InputTraceTol,name='maximally correlated coefficients')
    m=np.zeros((d*d,d*d),dtype=complex)
    idx=np.arange(d)*(d+1)
    m[np.ix_(idx,idx)]=c
    return NamedOperator(m,_Square(d),'maxcorr%d' % d,True)

def MaximallyMixed(d_a,d_b=None):
    if d_b is None:
        d_b=d_a
    shape=BipartiteShape(d_a,d_b)
    if shape.dim>MaxTotalDim:
        raise DomainError('total dimension %d exceeds the guard %d' % (shape.dim,MaxTotalDim))
    return NamedOperator(np.eye(shape.dim)/shape.dim,shape,'mixed%dx%d' % (d_a,d_b),True)

def QubitInterleaving(k):
    """Permutation taking k ebits from A1 B1 ... Ak Bk to A1..Ak | B1..Bk order."""
    return CopyPermutation([BipartiteShape(2,2)]*k)

def EbitPower(k):
    """Phi_2^{(x)k} regrouped as a (2^k)x(2^k) bipartite state; equals Phi_{2^k}."""
    if int(k)!=k or not 1<=k<=3:
        raise DomainError('ebit power needs k in {1,2,3}, got %r' % (k,))
    m,shape=BipartiteTensorPower(Phi(2).matrix,BipartiteShape(2,2),int(k))
    return NamedOperator(m,shape,'phi2^%d' % k,True)

def TensorPower(op,n):
    """op^{(x)n} as a bipartite operator on (A^n)|(B^n)."""
    if op.shape.dim**n>MaxTotalDim:
        raise DomainError('total dimension %d exceeds the guard %d' % (op.shape.dim**n,MaxTotalDim))
    m,shape=BipartiteTensorPower(op.matrix,op.shape,n)
    return NamedOperator(m,shape,'%s^%d' % (op.label,n),op.is_state)
