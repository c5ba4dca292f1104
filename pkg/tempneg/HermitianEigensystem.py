#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import numpy as np
from scipy.linalg import eigh, qr

from tempneg.CheckOperator import CheckHermitian
from tempneg.TempNegVariables import InputHermTol, Spectrum

DegenerateTol=1e-10 #eigenvalues closer than this, relative to the spectral radius, share an eigenspace
BasisPick=1e-3 #smallest residual of a projector column accepted into a canonical basis

def CanonicalBasis(V):
    """Orthonormal basis of span(V) that depends on the subspace only.

    The columns P e_j of the projector P = V V^dag are scanned in index order
    and kept when their residual against the columns already kept exceeds
    BasisPick. The kept columns are orthonormalized by QR with a real positive
    R diagonal.
    """
    P=V@V.conj().T
    k=V.shape[1]
    picked=[]
    Q=np.zeros((P.shape[0],0),dtype=P.dtype)
    for j in range(P.shape[0]):
        r=P[:,j]-Q@(Q.conj().T@P[:,j])
        nr=np.linalg.norm(r)
        if nr>BasisPick:
            picked.append(j)
            Q=np.column_stack([Q,r/nr])
            if len(picked)==k:
                break
    B,R=qr(P[:,picked],mode='economic')
    ph=np.diag(R)
    return B*(ph/np.abs(ph))

def HermitianEigensystem(m):
    """Ascending eigen-decomposition of a Hermitian matrix.

    Each eigenvector of a simple eigenvalue is rescaled by a unit phase so
    that its first component of modulus above 1e-12 is real and positive.
    Degenerate eigenspaces get their CanonicalBasis, so the output does not
    depend on the basis LAPACK happens to return.

    Parameters
    ----------
    m : array_like
        Square matrix, Hermitian to 1e-10.

    Returns
    -------
    Spectrum
    """
    h=CheckHermitian(m,InputHermTol,'eigensystem input')
    w,V=eigh(h)
    if w.size==0:
        return Spectrum(w,V)

    # 1 group eigenvalues into eigenspaces
    tol=DegenerateTol*max(1.,np.max(np.abs(w)))
    edges=np.flatnonzero(np.diff(w)>tol)+1
    groups=np.split(np.arange(w.size),edges)

    # 2 fix the basis of each eigenspace
    for g in groups:
        if g.size>1:
            V[:,g]=CanonicalBasis(V[:,g])
            continue
        k=g[0]
        big=np.flatnonzero(np.abs(V[:,k])>1e-12)
        if big.size:
            v0=V[big[0],k]
            V[:,k]*=np.conj(v0)/abs(v0)

    return Spectrum(w,V)

def MatrixFunction(m,func,clip=False):
    """Apply func to the eigenvalues of a Hermitian matrix; clip negatives to 0 if asked."""
    h=(np.asarray(m)+np.asarray(m).conj().T)/2
    w,V=eigh(h)
    if clip:
        w=np.maximum(w,0.)
    return (V*func(w))@V.conj().T

def SupportProjector(m,cutoff):
    """Projector onto the span of eigenvectors with eigenvalue above cutoff."""
    h=(np.asarray(m)+np.asarray(m).conj().T)/2
    w,V=eigh(h)
    Vs=V[:,w>cutoff]
    return Vs@Vs.conj().T
