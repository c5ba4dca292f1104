#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Best fidelity with m e-bits reachable with delta-approximately free tests.

    phi(rho, m, delta) = max { Tr rho W : 0 <= W <= 1,
                                          Tr W sigma <= (1+delta)/2^m for every PPT state sigma }

The universally quantified constraint is the dual of the PPT overlap problem,
c 1 - W = Y + Z^Gamma with Y, Z >= 0 and c = (1+delta)/2^m. Blocks: W, S = 1 - W,
Y and Z, all on the space of rho.
"""

import numpy as np

from tempneg.CheckOperator import CheckState
from tempneg.Entropies import Fidelity
from tempneg.GetSolverConfig import GetSolverConfig
from tempneg.MatrixNorms import TraceNorm
from tempneg.NamedStates import EbitPower, Tau
from tempneg.SdpProblem import SdpProblem
from tempneg.SolveSdp import SolveSdp
from tempneg.SuperOperators import IdentityMap, PartialTransposeMap
from tempneg.TempNegErrors import DomainError
from tempneg.TempNegVariables import MonotoneResult, CheckReport, StatusOptimal, StatusMaxIterations, InputTraceTol

def OverlapCap(m,delta):
    if int(m)!=m or m<1:
        raise DomainError('m must be a positive integer, got %r' % (m,))
    if delta<0:
        raise DomainError('delta must be nonnegative, got %r' % (delta,))
    c=(1+delta)/2**int(m)
    if c>1:
        raise DomainError('(1+delta)/2^m = %.12g exceeds 1' % c)
    return c

def DistillationFidelityPhi(rho_n,m,delta,config=None):
    c=OverlapCap(m,delta)
    CheckState(rho_n.matrix,InputTraceTol,name=rho_n.label)
    if config is None:
        config=GetSolverConfig()
    n=rho_n.shape.dim
    In=IdentityMap(n)

    prob=SdpProblem('maximize')
    for label in ('W','S','Y','Z'):
        prob.AddBlock(label,n)
    prob.SetObjective('W',rho_n.matrix)
    prob.AddHermitianEquation([('W',In),('S',In)],np.eye(n))
    prob.AddHermitianEquation([('W',In),('Y',In),('Z',PartialTransposeMap(rho_n.shape))],c*np.eye(n))

    sol=SolveSdp(prob,config)
    res=MonotoneResult(sol.dual_value if sol.optimal else sol.primal_value,solver_status=sol.status)
    res.solution=sol
    res.dual_certificate=sol.dual_multipliers
    if sol.status in (StatusOptimal,StatusMaxIterations):
        W=sol.block_values['W']
        res.witness=(W+W.conj().T)/2
        res.value=float(np.trace(res.witness@rho_n.matrix).real)
    return res

def MeasurePrepareOutput(W,rho,m):
    """Gamma_W(rho) = Tr[W rho] Phi_2^{(x)m} + Tr[(1-W) rho] tau_m."""
    p=float(np.trace(W@rho).real)
    return p*EbitPower(m).matrix+(1-p)*Tau(m).matrix

def DistillationError(rho_n,m,delta,config=None):
    """Optimal distillation error 1 - phi under delta-approximately free operations.

    The report also brackets the error for negativity-quantified generation,
    [1 - phi(2 delta), 1 - phi(delta)], and replays the measure-prepare map
    built from the optimal W.
    """
    res=DistillationFidelityPhi(rho_n,m,delta,config)
    phi=res.value

    if (1+2*delta)/2**int(m)>1:
        phi2=1. # W = 1 is feasible
    else:
        phi2=DistillationFidelityPhi(rho_n,m,2*delta,config).value

    target=EbitPower(m).matrix
    out=MeasurePrepareOutput(res.witness,rho_n.matrix,m)
    fid=Fidelity(out,target)
    dist=TraceNorm(out-target)/2

    rep=CheckReport('distillation error m=%d delta=%.12g' % (m,delta))
    rep.lhs=1-phi2
    rep.rhs=1-phi
    rep.slack=rep.rhs-rep.lhs
    rep.details={'phi':phi,'phi_2delta':phi2,'fidelity':fid,'trace_distance':dist,
                 'solver_status':res.solver_status}
    rep.holds=(abs(fid-phi)<=1e-6 and abs(dist-(1-phi))<=1e-6 and rep.slack>=-1e-6)
    return rep
