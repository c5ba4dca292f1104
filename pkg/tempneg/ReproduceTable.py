#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""The regression table: every number behind the irreversibility results,
recomputed and compared with its expected value.

Each group declares the quantities it produces so that a filter can skip
groups without running their solves. Rows come out in a fixed order.
"""

import math

import numpy as np

from tempneg.ChannelBounds import ChannelCapacityUpperBound, ChannelTemperedNegativityLower
from tempneg.ChoiCalculus import ChoiOf
from tempneg.DilutionErrorFloorCheck import DilutionErrorFloorCheck
from tempneg.DistillationFidelityPhi import DistillationFidelityPhi
from tempneg.ExplicitMaps import PhasePermutationAverage
from tempneg.GenerationLevel import GenerationLevel
from tempneg.GetSolverConfig import GetSolverConfig
from tempneg.HermitianEigensystem import HermitianEigensystem
from tempneg.LinearMaps import Omega3ChannelSpec, PrepareOmega3Spec, TwirlSpec
from tempneg.MatrixNorms import OperatorNorm, TraceNorm
from tempneg.Entropies import MaxRelativeEntropy
from tempneg.NamedStates import EbitPower, Isotropic, Omega3, Phi, PSubspace, SigmaPm, Tau, Tau3Diag, TensorPower, X3
from tempneg.Negativities import BinegativityCheck, CoherentInformation, ReeUpperBound
from tempneg.PartialTranspose import PartialTranspose
from tempneg.ProtocolChecks import NegativityBoundCheck, PlusMinusProduct, SegmentSeparabilityCheck
from tempneg.RobustnessPPT import GenRobustnessPPT, StdRobustnessPPT
from tempneg.SdpProblem import SdpProblem
from tempneg.SolveSdp import SolveSdp
from tempneg.TemperedNegativity import CostLowerBound, TemperedNegativity
from tempneg.TradeoffRate import TradeoffRateLowerBound, X3DeltaNormCheck
from tempneg.TempNegVariables import NamedOperator, ReportRow

Paper='paper'
Derived='derived'
Trivial='trivial'

TableSeed=20240611

def RandomState(rng,n):
    """Density matrix G G^dag / Tr from a complex Ginibre matrix."""
    G=rng.standard_normal((n,n))+1j*rng.standard_normal((n,n))
    m=G@G.conj().T
    return m/np.trace(m).real

def _Spread(values,expected):
    return float(np.max(np.abs(np.sort(values)-np.sort(expected))))

def _TemperedNegativityRows(config):
    om=Omega3()
    res=TemperedNegativity(om,om,config)
    X=res.witness
    pt=OperatorNorm(PartialTranspose(X,om.shape))
    norm_gap=OperatorNorm(X)-float(np.trace(X@om.matrix).real)
    ok=pt<=1+1e-7 and norm_gap<=1e-6
    return [ReportRow('tempered negativity omega3',res.value,1e-6,Paper,expected=2.),
            ReportRow('tempered negativity omega3 witness feasibility',max(pt-1,norm_gap),1e-6,Derived,passed=ok)]

def _CostGapRows(config):
    om=Omega3()
    cost=CostLowerBound(om,config)
    coh=CoherentInformation(om)
    p3=NamedOperator(PSubspace(3).matrix/3,om.shape,'P3/3',True)
    ree=ReeUpperBound(om,p3)
    l32=math.log2(1.5)
    return [ReportRow('cost lower bound omega3',cost,1e-6,Paper,expected=1.),
            ReportRow('coherent information omega3',coh,1e-9,Paper,expected=l32),
            ReportRow('relative entropy bound omega3',ree,1e-9,Paper,expected=l32),
            ReportRow('irreversibility gap omega3',cost-coh,0.41,Paper,passed=cost-coh>=0.41)]

def _X3SpectrumRows(config):
    x=X3()
    ev=HermitianEigensystem(x.matrix).eigenvalues
    evg=HermitianEigensystem(PartialTranspose(x.matrix,x.shape)).eigenvalues
    return [ReportRow('eigenvalue deviation X3',_Spread(ev,[-1.]+[0.]*6+[2.]*2),1e-10,Paper,expected=0.),
            ReportRow('eigenvalue deviation X3^Gamma',_Spread(evg,[-1.]*3+[1.]*6),1e-10,Paper,expected=0.)]

def _EbitRobustnessRows(config):
    rows=[]
    for k in (1,2):
        r=StdRobustnessPPT(EbitPower(k),config=config)
        rows.append(ReportRow('std robustness phi2^%d' % k,r.value,1e-6,Paper,expected=2.**k-1))
    return rows

def _Omega3RobustnessRows(config):
    om=Omega3()
    rs=StdRobustnessPPT(om,config=config).value
    rg=GenRobustnessPPT(om,config=config).value
    return [ReportRow('std robustness omega3 in [1/2, 3/4]',rs,1e-6,Paper,
                      passed=0.5-1e-6<=rs<=0.75+1e-6),
            ReportRow('gen robustness omega3 at most 1/2',rg,1e-6,Paper,passed=rg<=0.5+1e-6)]

def _SupermultiplicativityRows(config):
    om2=TensorPower(Omega3(),2)
    res=TemperedNegativity(om2,om2,config)
    return [ReportRow('tempered negativity omega3^2',res.value,1e-4,Derived,expected=4.)]

def _EpsilonLemmaRows(config):
    rng=np.random.default_rng(TableSeed)
    om=Omega3()
    slack=np.inf
    for eps in (0.05,0.1,0.2):
        for _ in range(10):
            g=RandomState(rng,9)
            rp=NamedOperator((1-eps)*om.matrix+eps*g,om.shape,'perturbed',True)
            eh=TraceNorm(rp.matrix-om.matrix)/2
            val=TemperedNegativity(rp,om,config).value
            slack=min(slack,val-(1-2*eh)*2)
    return [ReportRow('epsilon-lemma tempered negativity slack (30 states)',slack,1e-6,Paper,passed=slack>=-1e-6)]

def _SeparableDecompositionRows(config):
    out=PhasePermutationAverage(PlusMinusProduct())
    om=Omega3().matrix
    tau=Tau3Diag().matrix
    formula=np.eye(9)/12+PSubspace(3).matrix/6-Phi(3).matrix/4
    return [ReportRow('phase/permutation average vs (omega3+tau3)/2',float(np.max(np.abs(out-(om+tau)/2))),1e-14,Paper,expected=0.),
            ReportRow('phase/permutation average vs 1/12+P3/6-Phi3/4',float(np.max(np.abs(out-formula))),1e-14,Paper,expected=0.)]

def _NegativityBoundRows(config):
    rows=[]
    for d in (2,3):
        sp,sm=SigmaPm(d)
        dev=float(np.max(np.abs(d*sp.matrix-(d-1)*sm.matrix-Phi(d).matrix)))
        rows.append(ReportRow('sigma+- decomposition of phi%d' % d,dev,1e-12,Paper,expected=0.))
    rep=NegativityBoundCheck(PrepareOmega3Spec(),2)
    rows.append(ReportRow('NE output negativity omega3 preparation (<= 3)',rep.lhs,1e-9,Paper,expected=2.,
                          passed=rep.holds and abs(rep.lhs-2)<=1e-9))
    for d in (2,3):
        rep=NegativityBoundCheck(TwirlSpec(d),d)
        rows.append(ReportRow('NE output negativity twirl d=%d (<= %d)' % (d,2*d-1),rep.lhs,1e-9,Derived,
                              expected=float(d),passed=rep.holds and abs(rep.lhs-d)<=1e-9))
    return rows

def _DistillationRows(config):
    v1=DistillationFidelityPhi(Phi(2),1,0.,config).value
    v2=DistillationFidelityPhi(Tau(1),1,0.,config).value
    rho=Isotropic(2,0.75)
    grid=[DistillationFidelityPhi(rho,1,dl,config).value for dl in (0.,0.25,0.5,0.75,1.)]
    step=float(np.min(np.diff(grid)))
    return [ReportRow('distillation fidelity phi2 m=1',v1,1e-7,Derived,expected=1.),
            ReportRow('distillation fidelity tau1 m=1',v2,1e-6,Derived,expected=0.5),
            ReportRow('distillation fidelity monotone in delta (smallest step)',step,1e-7,Trivial,passed=step>=-1e-7)]

def _TradeoffRows(config):
    rows=[ReportRow('tradeoff rate at delta=1/3',TradeoffRateLowerBound(1/3),0.,Paper,expected=1.),
          ReportRow('tradeoff rate at delta=0.1',TradeoffRateLowerBound(0.1),1e-12,Paper,expected=math.log2(27/17))]
    for dl in (0.05,0.1,0.2,0.3):
        rep=X3DeltaNormCheck(dl)
        rows.append(ReportRow('X3(%g) norm identities' % dl,rep.details['pt_norm'],1e-10,Paper,
                              expected=1.,passed=rep.holds))
    return rows

def _ChannelRows(config):
    om=Omega3()
    choi=ChoiOf(Omega3ChannelSpec(),3)
    dev=float(np.max(np.abs(choi.matrix-om.matrix)))
    ent=ChannelTemperedNegativityLower(choi,Phi(3),config)
    cap=ChannelCapacityUpperBound(choi)
    dmax=MaxRelativeEntropy(om.matrix,PSubspace(3).matrix/3)
    l32=math.log2(1.5)
    return [ReportRow('Choi state of Omega3 vs omega3',dev,1e-12,Paper,expected=0.),
            ReportRow('channel tempered log-negativity Omega3',ent,1e-6,Paper,expected=1.),
            ReportRow('max-relative entropy omega3 vs P3/3',dmax,1e-9,Paper,expected=l32),
            ReportRow('capacity bound Omega3 below cost',cap,1e-9,Paper,
                      passed=cap<=l32+1e-9 and l32<1 and ent>=1-1e-6)]

def _SolverAuditRows(config):
    rng=np.random.default_rng(TableSeed+1)
    worst=0.
    gap=0.
    for k in range(20):
        n=2+k%8
        H=rng.standard_normal((n,n))+1j*rng.standard_normal((n,n))
        M=(H+H.conj().T)/2
        prob=SdpProblem('maximize')
        prob.AddBlock('X',n)
        prob.SetObjective('X',M)
        prob.AddEquality({'X':np.eye(n)},1.)
        sol=SolveSdp(prob,config)
        worst=max(worst,abs(sol.dual_value-np.linalg.eigvalsh(M)[-1]))
        if sol.optimal:
            gap=max(gap,abs(sol.primal_value-sol.dual_value))
        else:
            worst=np.inf
    return [ReportRow('solver vs eigen-oracle (20 programs)',worst,1e-6,Derived,expected=0.),
            ReportRow('solver duality gap (20 programs)',gap,1e-7,Derived,expected=0.)]

def _SupplementRows(config):
    rows=[]
    rep=BinegativityCheck(Omega3())
    rows.append(ReportRow('binegativity omega3',rep.rhs,1e-9,Derived,passed=rep.holds))
    rep=SegmentSeparabilityCheck(np.linspace(0,0.5,6))
    rows.append(ReportRow('omega3/tau3 segment separable decomposition',rep.lhs,1e-13,Paper,
                          expected=0.,passed=rep.holds))
    lv=GenerationLevel(PrepareOmega3Spec(),config)
    rows.append(ReportRow('generation level omega3 preparation',lv.value,1e-6,Paper,expected=0.))
    for eps in (0.,0.1):
        rep=DilutionErrorFloorCheck(1,eps,config)
        rows.append(ReportRow('dilution chain n=1 eps=%g (smallest slack)' % eps,rep.slack,1e-6,Paper,
                              passed=rep.holds))
    return rows

Groups=[
    (['tempered negativity omega3','tempered negativity omega3 witness feasibility'],_TemperedNegativityRows),
    (['cost lower bound omega3','coherent information omega3','relative entropy bound omega3',
      'irreversibility gap omega3'],_CostGapRows),
    (['eigenvalue deviation X3','eigenvalue deviation X3^Gamma'],_X3SpectrumRows),
    (['std robustness phi2^1','std robustness phi2^2'],_EbitRobustnessRows),
    (['std robustness omega3 in [1/2, 3/4]','gen robustness omega3 at most 1/2'],_Omega3RobustnessRows),
    (['tempered negativity omega3^2'],_SupermultiplicativityRows),
    (['epsilon-lemma tempered negativity slack (30 states)'],_EpsilonLemmaRows),
    (['phase/permutation average vs (omega3+tau3)/2','phase/permutation average vs 1/12+P3/6-Phi3/4'],
     _SeparableDecompositionRows),
    (['sigma+- decomposition of phi2','sigma+- decomposition of phi3',
      'NE output negativity omega3 preparation (<= 3)','NE output negativity twirl d=2 (<= 3)',
      'NE output negativity twirl d=3 (<= 5)'],_NegativityBoundRows),
    (['distillation fidelity phi2 m=1','distillation fidelity tau1 m=1',
      'distillation fidelity monotone in delta (smallest step)'],_DistillationRows),
    (['tradeoff rate at delta=1/3','tradeoff rate at delta=0.1']
     +['X3(%g) norm identities' % dl for dl in (0.05,0.1,0.2,0.3)],_TradeoffRows),
    (['Choi state of Omega3 vs omega3','channel tempered log-negativity Omega3',
      'max-relative entropy omega3 vs P3/3','capacity bound Omega3 below cost'],_ChannelRows),
    (['solver vs eigen-oracle (20 programs)','solver duality gap (20 programs)'],_SolverAuditRows),
    (['binegativity omega3','omega3/tau3 segment separable decomposition',
      'generation level omega3 preparation','dilution chain n=1 eps=0 (smallest slack)',
      'dilution chain n=1 eps=0.1 (smallest slack)'],_SupplementRows),
]

def ReproduceTable(only=None,config=None,verbose=False):
    """Compute the regression rows whose quantity contains `only` (all rows if None)."""
    if config is None:
        config=GetSolverConfig()
    rows=[]
    for names,builder in Groups:
        if only is not None and not any(only in q for q in names):
            continue
        if verbose:
            print('Running %s' % builder.__name__.strip('_'))
        for row in builder(config):
            if only is None or only in row.quantity:
                rows.append(row)
    return rows
