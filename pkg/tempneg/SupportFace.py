#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Face of the witnesses X with ||X||_inf = Tr[X omega].

Such witnesses satisfy X omega = t omega with t = Tr[X omega], hence
X = t Pi + U Y U^dag, where Pi projects onto supp(omega) and the columns of U
span its complement. The norm condition then reads -t G^{-1} <= Y <= t G^{-1}
with G = U^dag U. Parametrizing the face this way keeps both sides of the
resulting programs strictly feasible.
"""

import numpy as np
from scipy import sparse
from scipy.linalg import qr, inv

from tempneg.HermitianEigensystem import SupportProjector
from tempneg.TempNegVariables import SupportCutoff

EntryCutoff=1e-14


class SupportFace:
    def __init__(self,omega):
        n=omega.shape[0]
        Pi=SupportProjector(omega,SupportCutoff)
        Pi[np.abs(Pi)<EntryCutoff]=0.
        Pc=np.eye(n)-Pi
        Pc[np.abs(Pc)<EntryCutoff]=0.
        rank=int(round(np.trace(Pi).real))

        self.n=n
        self.rank=rank #dim supp(omega)
        self.nc=n-rank #dimension of the complement
        self.Pi=Pi #support projector

        if self.nc>0:
            # pivoted QR picks unit columns first when they lie in the complement
            _,piv=qr(Pc,mode='r',pivoting=True)
            cols=np.sort(piv[:self.nc])
            U=Pc[:,cols]
            self.U=sparse.csr_matrix(U) #n x nc, spans the complement
            self.Udense=U
            self.G=(U.conj().T@U)
            self.Ginv=inv(self.G)
            self.Ginv=(self.Ginv+self.Ginv.conj().T)/2
        else:
            self.U=None
            self.Udense=None
            self.G=None
            self.Ginv=None

    def Compress(self,M):
        """U^dag M U."""
        U=self.Udense
        return U.conj().T@np.asarray(M)@U

    def Witness(self,t,Y):
        X=t*self.Pi
        if self.nc>0:
            X=X+self.Udense@Y@self.Udense.conj().T
        return (X+X.conj().T)/2
