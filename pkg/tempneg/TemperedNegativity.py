#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Tempered negativity N_tau(rho|omega) and the tempered log-negativity.

    N_tau(rho|omega) = sup { Tr[X rho] : -1 <= X^Gamma <= 1,
                                         -(Tr X omega) 1 <= X <= (Tr X omega) 1 }

The witness is restricted to the face X = t Pi + U Y U^dag (see SupportFace)
and the program handed to the solver is its conic dual in the PSD blocks
P1, P2 (for 1 -/+ X^Gamma) and Q1, Q2 (for t G^{-1} -/+ Y). The witness is
rebuilt from the multipliers of the t-row and of the Y-equation.
"""

import math

import numpy as np

from tempneg.CheckOperator import CheckState, CheckSameShape
from tempneg.GetSolverConfig import GetSolverConfig
from tempneg.PartialTranspose import PartialTranspose
from tempneg.SdpProblem import SdpProblem
from tempneg.SolveSdp import SolveSdp
from tempneg.SuperOperators import CongruenceMap, IdentityMap, PartialTransposeMap
from tempneg.SupportFace import SupportFace
from tempneg.TempNegVariables import MonotoneResult, StatusOptimal, StatusMaxIterations, InputTraceTol

def TemperedNegativityProblem(rho,omega,face=None):
    """The SdpProblem (minimize Tr P1 + Tr P2) and its equation handles."""
    if face is None:
        face=SupportFace(omega.matrix)
    n=rho.shape.dim
    nc=face.nc
    r=rho.matrix
    PiG=PartialTranspose(face.Pi,rho.shape)

    prob=SdpProblem('minimize')
    for label,dim in (('P1',n),('P2',n),('Q1',nc),('Q2',nc)):
        prob.AddBlock(label,dim)
    prob.SetObjective('P1',np.eye(n))
    prob.SetObjective('P2',np.eye(n))

    trow=prob.AddEquality({'P1':PiG,'P2':-PiG,'Q1':-face.Ginv,'Q2':-face.Ginv},
                          np.trace(face.Pi@r).real)

    L=CongruenceMap(face.Udense.conj().T)@PartialTransposeMap(rho.shape)
    I=IdentityMap(nc)
    yeq=prob.AddHermitianEquation([('P1',L),('P2',-L),('Q1',I),('Q2',-I)],face.Compress(r))
    return prob,trow,yeq

def TemperedNegativity(rho,omega,config=None):
    """Tempered negativity of rho with respect to omega.

    Parameters
    ----------
    rho, omega : NamedOperator
        States on the same bipartite shape.
    config : SolverConfig, optional

    Returns
    -------
    MonotoneResult
        value, witness X, the solver multipliers and status.
    """
    CheckSameShape(rho,omega)
    CheckState(rho.matrix,InputTraceTol,name=rho.label)
    CheckState(omega.matrix,InputTraceTol,name=omega.label)
    if config is None:
        config=GetSolverConfig()

    face=SupportFace(omega.matrix)
    if face.nc==0:
        # full-rank omega forces X = t 1 with |t| <= 1
        res=MonotoneResult(1.,witness=np.eye(rho.shape.dim,dtype=complex))
        res.provenance='full-rank omega'
        return res

    prob,trow,yeq=TemperedNegativityProblem(rho,omega,face)
    sol=SolveSdp(prob,config)

    res=MonotoneResult(sol.dual_value if sol.optimal else sol.primal_value,solver_status=sol.status)
    res.solution=sol
    res.dual_certificate=sol.dual_multipliers
    if sol.status in (StatusOptimal,StatusMaxIterations) and sol.dual_multipliers.size:
        t=sol.dual_multipliers[trow]
        Y=prob.MultiplierMatrix(yeq,sol.dual_multipliers)
        res.witness=face.Witness(t,Y)
        res.value=float(np.trace(res.witness@rho.matrix).real)
    return res

def TemperedLogNegativity(rho,config=None):
    """E^tau_N(rho) = log2 N_tau(rho|rho)."""
    res=TemperedNegativity(rho,rho,config)
    res.value=math.log2(res.value) if res.value>0 else -math.inf
    return res

def CostLowerBound(rho,config=None):
    """Certified lower bound on the entanglement cost under NE or PPT-preserving operations, in bits."""
    return TemperedLogNegativity(rho,config).value
