#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Block-Hermitian semidefinite program in standard primal form.

    maximize / minimize   sum_b Tr[C_b X_b]
    subject to            sum_b Tr[A_kb X_b] = r_k,   X_b >= 0.

Each constraint is stored, per block, as a sparse complex row r acting on
row-major vec(X_b), Tr[A X] = r . vec(X) with r = conj(vec(A)).
"""

import numpy as np
from scipy import sparse

from tempneg.CheckOperator import CheckHermitian
from tempneg.SuperOperators import HermitianBasis
from tempneg.TempNegErrors import DimensionError, DomainError
from tempneg.TempNegVariables import HermTol

Senses=('maximize','minimize')


class HermitianEquation:
    def __init__(self,first,n):
        self.first=first #index of the first constraint row
        self.n=n #the equation lives in Herm(n)

    @property
    def rows(self):
        return slice(self.first,self.first+self.n*self.n)


class SdpProblem:
    def __init__(self,sense='maximize'):
        if sense not in Senses:
            raise DomainError('sense must be one of %s, got %r' % (Senses,sense))
        self.sense=sense
        self.blocks={} #label -> dimension, in insertion order
        self.objective={} #label -> Hermitian coefficient matrix
        self.chunks={} #label -> list of (first row, sparse rows on vec(X_b))
        self.rhs=[] #one real right-hand side per constraint
        self.equations=[] #HermitianEquation handles

    @property
    def n_constraints(self):
        return len(self.rhs)

    def AddBlock(self,label,dim):
        if label in self.blocks:
            raise DomainError('block %r already exists' % (label,))
        if int(dim)<1:
            raise DimensionError('block %r needs a positive dimension, got %r' % (label,dim))
        self.blocks[label]=int(dim)
        self.chunks[label]=[]
        return label

    def _Dim(self,label):
        if label not in self.blocks:
            raise DomainError('unknown block %r' % (label,))
        return self.blocks[label]

    def SetObjective(self,label,C):
        n=self._Dim(label)
        C=np.asarray(C,dtype=complex)
        if C.shape!=(n,n):
            raise DimensionError('objective for block %r has shape %s, expected (%d,%d)' % (label,C.shape,n,n))
        self.objective[label]=CheckHermitian(C,HermTol*max(1.,np.max(np.abs(C))),'objective of %r' % (label,))

    def AddEquality(self,coeffs,rhs):
        """Add sum_b Tr[A_b X_b] = rhs for Hermitian A_b given as {label: A_b}; return the row index."""
        k=self.n_constraints
        for label,A in coeffs.items():
            n=self._Dim(label)
            A=np.asarray(A,dtype=complex)
            if A.shape!=(n,n):
                raise DimensionError('coefficient for block %r has shape %s, expected (%d,%d)' % (label,A.shape,n,n))
            A=CheckHermitian(A,HermTol*max(1.,np.max(np.abs(A))),'coefficient of %r' % (label,))
            row=sparse.csr_matrix(np.conj(A).reshape(1,-1))
            self.chunks[label].append((k,row))
        self.rhs.append(float(rhs))
        return k

    def AddHermitianEquation(self,terms,R):
        """Add the Herm(n)-valued equation sum_b L_b(X_b) = R.

        Parameters
        ----------
        terms : list of (label, L)
            L is a sparse (n*n) x (n_b*n_b) matrix acting on row-major vec(X_b);
            each L_b must map Hermitian matrices to Hermitian matrices.
        R : array_like
            Hermitian n x n right-hand side.

        Returns
        -------
        HermitianEquation
            Handle used by MultiplierMatrix to rebuild the matrix multiplier.
        """
        R=np.asarray(R,dtype=complex)
        n=R.shape[0]
        R=CheckHermitian(R,HermTol*max(1.,np.max(np.abs(R),initial=0.)),'equation right-hand side')
        Hb=HermitianBasis(n)
        first=self.n_constraints
        for label,L in terms:
            nb=self._Dim(label)
            if L.shape!=(n*n,nb*nb):
                raise DimensionError('map for block %r has shape %s, expected (%d,%d)' % (label,L.shape,n*n,nb*nb))
            rows=(Hb.conj().T@sparse.csr_matrix(L)).tocsr()
            rows.eliminate_zeros()
            self.chunks[label].append((first,rows))
        self.rhs+=list(np.real(Hb.conj().T@R.reshape(-1)))
        eq=HermitianEquation(first,n)
        self.equations.append(eq)
        return eq

    def MultiplierMatrix(self,eq,y):
        """sum_k y_k H_k over the rows of a Hermitian equation."""
        n=eq.n
        return (HermitianBasis(n)@np.asarray(y,dtype=complex)[eq.rows]).reshape(n,n)

    def ConstraintMatrix(self,label):
        """All constraint rows restricted to one block, as an m x n_b^2 csr matrix."""
        n=self._Dim(label)
        m=self.n_constraints
        r,c,v=[],[],[]
        for first,rows in self.chunks[label]:
            coo=rows.tocoo()
            r.append(coo.row+first)
            c.append(coo.col)
            v.append(coo.data)
        if not r:
            return sparse.csr_matrix((m,n*n),dtype=complex)
        return sparse.csr_matrix((np.concatenate(v),(np.concatenate(r),np.concatenate(c))),shape=(m,n*n))

    def Objective(self,label):
        n=self._Dim(label)
        return self.objective.get(label,np.zeros((n,n),dtype=complex))

    def ConstraintValues(self,X):
        """sum_b Tr[A_kb X_b] for block values X = {label: matrix}."""
        val=np.zeros(self.n_constraints)
        for label in self.blocks:
            val+=np.real(self.ConstraintMatrix(label)@np.asarray(X[label],dtype=complex).reshape(-1))
        return val

    def ObjectiveValue(self,X):
        return float(sum(np.real(np.trace(self.Objective(label)@X[label])) for label in self.blocks))

    def Adjoint(self,label,y):
        """The Hermitian matrix sum_k y_k A_kb of one block."""
        n=self._Dim(label)
        v=self.ConstraintMatrix(label).T@np.asarray(y,dtype=float)
        M=v.reshape(n,n).T
        return (M+M.conj().T)/2

    def DualSlack(self,label,y):
        """Z_b = A*y - C for maximize, C - A*y for minimize."""
        if self.sense=='maximize':
            return self.Adjoint(label,y)-self.Objective(label)
        return self.Objective(label)-self.Adjoint(label,y)
