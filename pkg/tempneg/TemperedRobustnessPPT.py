#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""omega-tempered PPT robustness.

    1 + 2 R^tau(rho|omega) = sup { Tr[X rho] : 1 - X = Y1 + Z1^Gamma, 1 + X = Y2 + Z2^Gamma,
                                               Yi, Zi >= 0, ||X||_inf = Tr[X omega] }

With X on the face t Pi + U Y U^dag, the conic dual is solved in blocks
B1 (for Z1), B2 (for Y1 = 1 - X - Z1^Gamma), B3 (for Z2), B4 (for Y2) and
Q1, Q2 (for t G^{-1} -/+ Y).
"""

import numpy as np

from tempneg.CheckOperator import CheckState, CheckSameShape
from tempneg.GetSolverConfig import GetSolverConfig
from tempneg.SdpProblem import SdpProblem
from tempneg.SolveSdp import SolveSdp
from tempneg.SuperOperators import CongruenceMap, IdentityMap, PartialTransposeMap
from tempneg.SupportFace import SupportFace
from tempneg.TempNegVariables import MonotoneResult, StatusOptimal, StatusMaxIterations, InputTraceTol

def TemperedRobustnessPPT(rho,omega,config=None):
    CheckSameShape(rho,omega)
    CheckState(rho.matrix,InputTraceTol,name=rho.label)
    CheckState(omega.matrix,InputTraceTol,name=omega.label)
    if config is None:
        config=GetSolverConfig()

    face=SupportFace(omega.matrix)
    n=rho.shape.dim
    if face.nc==0:
        res=MonotoneResult(0.,witness=np.eye(n,dtype=complex))
        res.provenance='full-rank omega'
        return res

    nc=face.nc
    r=rho.matrix
    prob=SdpProblem('minimize')
    for label,dim in (('B1',n),('B2',n),('B3',n),('B4',n),('Q1',nc),('Q2',nc)):
        prob.AddBlock(label,dim)
    prob.SetObjective('B2',np.eye(n))
    prob.SetObjective('B4',np.eye(n))

    PT=PartialTransposeMap(rho.shape)
    In=IdentityMap(n)
    zero=np.zeros((n,n))
    prob.AddHermitianEquation([('B1',-In),('B2',PT)],zero)
    prob.AddHermitianEquation([('B3',-In),('B4',PT)],zero)

    Uc=CongruenceMap(face.Udense.conj().T)
    Ic=IdentityMap(nc)
    yeq=prob.AddHermitianEquation([('B2',Uc),('B4',-Uc),('Q1',Ic),('Q2',-Ic)],face.Compress(r))
    trow=prob.AddEquality({'B2':face.Pi,'B4':-face.Pi,'Q1':-face.Ginv,'Q2':-face.Ginv},
                          np.trace(face.Pi@r).real)

    sol=SolveSdp(prob,config)
    res=MonotoneResult(np.nan,solver_status=sol.status)
    res.solution=sol
    res.dual_certificate=sol.dual_multipliers
    if sol.status in (StatusOptimal,StatusMaxIterations):
        t=sol.dual_multipliers[trow]
        Y=prob.MultiplierMatrix(yeq,sol.dual_multipliers)
        res.witness=face.Witness(t,Y)
        res.value=(sol.dual_value-1)/2
    return res
