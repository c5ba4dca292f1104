#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Standard and generalised robustness over the PPT cone, plus the
closed-form separable-cone values that are known analytically."""

import numpy as np

from tempneg.CheckOperator import CheckState
from tempneg.ExplicitMaps import Twirl
from tempneg.GetSolverConfig import GetSolverConfig
from tempneg.MatrixNorms import TraceNorm
from tempneg.NamedStates import Omega3, Phi
from tempneg.PartialTrace import PartialTrace
from tempneg.PartialTranspose import PartialTranspose
from tempneg.SdpProblem import SdpProblem
from tempneg.SolveSdp import SolveSdp
from tempneg.SuperOperators import IdentityMap, PartialTransposeMap
from tempneg.TempNegErrors import DomainError, UnsupportedMapError
from tempneg.TempNegVariables import MonotoneResult, ConePPT, ConeSepAnalytic, StatusOptimal, StatusMaxIterations, InputTraceTol

def _RobustnessPPT(rho,generalised,config):
    """Dual form: maximize -Tr[rho^Gamma D3] s.t. D1 + D2^Gamma + D3^Gamma = 1.

    The multiplier of the equation is the optimal noise delta, with
    delta >= 0, delta^Gamma >= 0 (standard only) and (rho+delta)^Gamma >= 0.
    """
    CheckState(rho.matrix,InputTraceTol,name=rho.label)
    if config is None:
        config=GetSolverConfig()
    n=rho.shape.dim
    PT=PartialTransposeMap(rho.shape)

    prob=SdpProblem('maximize')
    terms=[('D1',IdentityMap(n))]
    prob.AddBlock('D1',n)
    if not generalised:
        prob.AddBlock('D2',n)
        terms.append(('D2',PT))
    prob.AddBlock('D3',n)
    terms.append(('D3',PT))
    prob.SetObjective('D3',-PartialTranspose(rho.matrix,rho.shape))
    eq=prob.AddHermitianEquation(terms,np.eye(n))

    sol=SolveSdp(prob,config)
    res=MonotoneResult(sol.dual_value if sol.optimal else sol.primal_value,solver_status=sol.status)
    res.solution=sol
    res.dual_certificate=sol.dual_multipliers
    if sol.status in (StatusOptimal,StatusMaxIterations):
        res.witness=prob.MultiplierMatrix(eq,sol.dual_multipliers)
        res.value=float(np.trace(res.witness).real)
    return res

def StdRobustnessPPT(rho,cone=ConePPT,config=None):
    """R^s(rho) = min{Tr delta : delta PPT, (rho+delta)^Gamma >= 0}."""
    if cone==ConeSepAnalytic:
        return SepAnalyticRobustness(rho,'standard')
    if cone!=ConePPT:
        raise DomainError('unknown cone %r' % (cone,))
    return _RobustnessPPT(rho,False,config)

def GenRobustnessPPT(rho,cone=ConePPT,config=None):
    """R^g(rho) = min{Tr delta : delta >= 0, (rho+delta)^Gamma >= 0}."""
    if cone==ConeSepAnalytic:
        return SepAnalyticRobustness(rho,'generalised')
    if cone!=ConePPT:
        raise DomainError('unknown cone %r' % (cone,))
    return _RobustnessPPT(rho,True,config)

def PureStateRobustness(schmidt):
    """(sum_j sqrt(lambda_j))^2 - 1 for descending Schmidt coefficients."""
    lam=np.asarray(schmidt,dtype=float)
    if lam.ndim!=1 or lam.size==0:
        raise DomainError('Schmidt coefficients must form a non-empty list')
    if np.any(lam<0) or abs(np.sum(lam)-1)>1e-10:
        raise DomainError('Schmidt coefficients must be nonnegative and sum to 1, got %s' % lam)
    if np.any(np.diff(lam)>0):
        raise DomainError('Schmidt coefficients must be sorted in descending order')
    return float(np.sum(np.sqrt(lam))**2-1)

def NegativityRobustnessLowerBound(rho):
    """(||rho^Gamma||_1 - 1)/2, a lower bound on the standard robustness."""
    return (TraceNorm(PartialTranspose(rho.matrix,rho.shape))-1)/2

def SepAnalyticRobustness(rho,kind):
    """Separable-cone robustness where a closed form is known.

    Pure states use the Schmidt formula (both kinds agree), isotropic states
    give max(0, d f - 1), and omega_3 has standard value 3/4 and generalised
    value 1/2 (witness Phi_3/2, since omega_3 + Phi_3/2 = P_3/2).
    """
    if kind not in ('standard','generalised'):
        raise DomainError("kind must be 'standard' or 'generalised', got %r" % (kind,))
    m=CheckState(rho.matrix,InputTraceTol,name=rho.label)
    shape=rho.shape
    w,V=np.linalg.eigh(m)

    if w[-1]>1-1e-9:
        psi=V[:,-1]
        red=PartialTrace(np.outer(psi,psi.conj()),shape,'A')
        schmidt=np.sort(np.clip(np.linalg.eigvalsh(red),0.,None))[::-1]
        schmidt=schmidt/np.sum(schmidt)
        res=MonotoneResult(PureStateRobustness(schmidt))
        res.provenance='pure state: (sum sqrt(lambda))^2 - 1'
    elif shape.d_a==shape.d_b and np.max(np.abs(Twirl(m,shape.d_a)-m))<=1e-10:
        d=shape.d_a
        f=float(np.trace(m@Phi(d).matrix).real)
        res=MonotoneResult(max(0.,d*f-1))
        res.provenance='isotropic state: max(0, d f - 1)'
    elif shape==Omega3().shape and np.max(np.abs(m-Omega3().matrix))<=1e-12:
        if kind=='standard':
            res=MonotoneResult(0.75)
            res.provenance='omega3 standard separable robustness'
        else:
            res=MonotoneResult(0.5,witness=Phi(3).matrix/2)
            res.provenance='omega3 generalised separable robustness, delta = Phi3/2'
    else:
        raise UnsupportedMapError('no analytic separable robustness for %s' % rho.label)

    res.cone=ConeSepAnalytic
    return res
