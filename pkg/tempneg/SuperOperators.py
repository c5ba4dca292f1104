#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Sparse matrices of linear maps acting on row-major vec(X).

vec(X)[i*n+j] = X[i,j], so vec(A X B) = kron(A, B^T) vec(X).
"""

import numpy as np
from scipy import sparse

def IdentityMap(n):
    return sparse.identity(n*n,dtype=complex,format='csr')

def PartialTransposeMap(shape):
    """Permutation matrix P with P vec(X) = vec(X^Gamma)."""
    da,db,n=shape.d_a,shape.d_b,shape.dim
    src=np.arange(n*n).reshape(da,db,da,db).swapaxes(1,3).reshape(-1)
    return sparse.csr_matrix((np.ones(n*n,dtype=complex),(np.arange(n*n),src)),shape=(n*n,n*n))

def CongruenceMap(V):
    """X -> V X V^dag for a dense or sparse V of shape (n_out, n_in)."""
    V=sparse.csr_matrix(V,dtype=complex)
    return sparse.kron(V,V.conj(),format='csr')

def TraceMap(omega,n_in):
    """X -> Tr[X] omega."""
    w=sparse.csr_matrix(np.asarray(omega,dtype=complex).reshape(-1,1))
    one=sparse.csr_matrix(np.eye(n_in,dtype=complex).reshape(1,-1))
    return (w@one).tocsr()

def HermitianBasis(n):
    """Columns vec(H_k) of an orthonormal basis of n x n Hermitian matrices.

    Ordering: diagonal units E_ii, then (E_ij+E_ji)/sqrt(2) for i<j, then
    (-i E_ij + i E_ji)/sqrt(2) for i<j, both in row-major pair order.
    """
    iu,ju=np.triu_indices(n,1)
    npair=len(iu)
    diag=np.arange(n)*(n+1)
    up=iu*n+ju
    lo=ju*n+iu
    s=1/np.sqrt(2)

    rows=np.concatenate([diag,up,lo,up,lo])
    cols=np.concatenate([np.arange(n),
                         n+np.arange(npair),n+np.arange(npair),
                         n+npair+np.arange(npair),n+npair+np.arange(npair)])
    vals=np.concatenate([np.ones(n),
                         np.full(npair,s),np.full(npair,s),
                         np.full(npair,-1j*s),np.full(npair,1j*s)])
    return sparse.csr_matrix((vals.astype(complex),(rows,cols)),shape=(n*n,n*n))
