import math

import numpy as np
import pytest

from tempneg.ChannelBounds import ChannelCapacityUpperBound, ChannelOutput, ChannelTemperedNegativityLower
from tempneg.ChoiCalculus import ChoiOf
from tempneg.DistillationFidelityPhi import DistillationError, DistillationFidelityPhi, OverlapCap
from tempneg.LinearMaps import DephasingSpec, IdentitySpec, Omega3ChannelSpec
from tempneg.MatrixNorms import OperatorNorm, TraceNorm
from tempneg.NamedStates import EbitPower, Isotropic, Omega3, PSubspace, Phi, Tau, Tau3Diag, TensorPower
from tempneg.Negativities import CoherentInformation, LogNegativity, ReeUpperBound
from tempneg.PartialTranspose import PartialTranspose
from tempneg.RegularisedEvidence import LabelFiniteSize, RegularisedEvidence
from tempneg.RobustnessPPT import (GenRobustnessPPT, NegativityRobustnessLowerBound, PureStateRobustness,
                                   StdRobustnessPPT)
from tempneg.TemperedNegativity import CostLowerBound, TemperedLogNegativity, TemperedNegativity
from tempneg.TemperedRobustnessPPT import TemperedRobustnessPPT
from tempneg.TempNegErrors import DimensionError, DomainError, UnsupportedMapError
from tempneg.TempNegVariables import ConeSepAnalytic, NamedOperator
from tempneg.TradeoffRate import TradeoffRateLowerBound, X3DeltaNormCheck

from tests.conftest import random_density, random_state

L32=math.log2(1.5)


def min_eig(m):
    return np.linalg.eigvalsh((m+m.conj().T)/2)[0]


def test_log_negativity_values():
    assert LogNegativity(Phi(2)).value==pytest.approx(1.)
    assert LogNegativity(Phi(3)).value==pytest.approx(math.log2(3))
    assert LogNegativity(Omega3()).value==pytest.approx(1.)
    assert LogNegativity(Isotropic(3,1/3)).value==pytest.approx(0.,abs=1e-12)


def test_log_negativity_witness(rng):
    rho=random_state(rng,2,3)
    res=LogNegativity(rho)
    X=res.witness
    assert res.provenance=='spectral'
    assert OperatorNorm(PartialTranspose(X,rho.shape))<=1+1e-10
    assert np.trace(X@rho.matrix).real==pytest.approx(2**res.value)


def test_tempered_negativity_omega3(config):
    om=Omega3()
    res=TemperedNegativity(om,om,config)
    X=res.witness
    assert res.optimal
    assert res.value==pytest.approx(2.,abs=1e-6)
    assert OperatorNorm(PartialTranspose(X,om.shape))<=1+1e-6
    assert OperatorNorm(X)<=np.trace(X@om.matrix).real+1e-6
    assert TemperedLogNegativity(om,config).value==pytest.approx(1.,abs=1e-6)


def test_tempered_negativity_full_rank_reference(rng,config):
    rho=random_state(rng,2,2)
    res=TemperedNegativity(Phi(2),rho,config)
    assert res.value==1.
    assert res.provenance=='full-rank omega'
    assert TemperedRobustnessPPT(Phi(2),rho,config).value==0.


def random_pairs(rng,d,count):
    """Full-rank rho against a reference omega of rank 1, 2 or 3."""
    for k in range(count):
        rho=random_state(rng,d,d)
        omega=random_state(rng,d,d,rank=1+k%3,label='omega')
        yield rho,omega


def check_sandwich(rho,omega,config):
    tn=TemperedNegativity(rho,omega,config)
    tr=TemperedRobustnessPPT(rho,omega,config)
    rs=StdRobustnessPPT(rho,config=config).value
    assert tn.optimal and tr.optimal
    upper=TraceNorm(PartialTranspose(rho.matrix,rho.shape))
    assert 1-1e-6<=tn.value<=upper+1e-6
    assert -1e-6<=tr.value<=rs+1e-6
    assert tr.value>=(tn.value-1)/2-1e-6
    X=tn.witness
    assert OperatorNorm(PartialTranspose(X,rho.shape))<=1+1e-6
    assert OperatorNorm(X)<=np.trace(X@omega.matrix).real+1e-6


@pytest.mark.parametrize('d,count',[(2,6),(3,2)])
def test_tempered_sandwich_and_bridge(rng,config,d,count):
    for rho,omega in random_pairs(rng,d,count):
        check_sandwich(rho,omega,config)


@pytest.mark.slow
@pytest.mark.parametrize('d',[2,3])
def test_tempered_sandwich_and_bridge_corpus(rng,config,d):
    for rho,omega in random_pairs(rng,d,50):
        check_sandwich(rho,omega,config)


def test_tempered_negativity_of_separable_diagonal(config):
    tau=Tau3Diag()
    res=TemperedNegativity(tau,tau,config)
    assert res.optimal
    assert res.value==pytest.approx(1.,abs=1e-6)
    assert TemperedLogNegativity(tau,config).value==pytest.approx(0.,abs=1e-6)


@pytest.mark.parametrize('name,expected',[('phi2',1.),('tau3',0.)])
def test_tempered_robustness_values(config,name,expected):
    rho=Phi(2) if name=='phi2' else Tau3Diag()
    res=TemperedRobustnessPPT(rho,rho,config)
    assert res.optimal
    assert res.value==pytest.approx(expected,abs=1e-6)
    X=res.witness
    assert np.trace(X@rho.matrix).real==pytest.approx(1+2*res.value,abs=1e-6)
    assert OperatorNorm(X)<=np.trace(X@rho.matrix).real+1e-6


def test_tempered_robustness_omega3(config):
    om=Omega3()
    res=TemperedRobustnessPPT(om,om,config)
    assert res.optimal
    assert res.value>=0.5-1e-6
    assert res.value<=StdRobustnessPPT(om,config=config).value+1e-6
    X=res.witness
    assert np.trace(X@om.matrix).real==pytest.approx(1+2*res.value,abs=1e-6)
    assert OperatorNorm(X)<=np.trace(X@om.matrix).real+1e-6


def test_tempered_quantities_below_standard_ones(rng,config):
    for rho in (Phi(2),Omega3(),random_state(rng,2,2,rank=2)):
        rs=StdRobustnessPPT(rho,config=config).value
        tn=TemperedNegativity(rho,rho,config).value
        tr=TemperedRobustnessPPT(rho,rho,config).value
        assert tn<=TraceNorm(PartialTranspose(rho.matrix,rho.shape))+1e-6
        assert TraceNorm(PartialTranspose(rho.matrix,rho.shape))<=1+2*rs+1e-6
        assert -1e-6<=tr<=rs+1e-6


def test_epsilon_lemma(rng,config):
    om=Omega3()
    tn=TemperedNegativity(om,om,config).value
    tr=TemperedRobustnessPPT(om,om,config).value
    for eps in (0.05,0.1,0.2):
        g=random_density(rng,9)
        rp=NamedOperator((1-eps)*om.matrix+eps*g,om.shape,'perturbed',True)
        eh=TraceNorm(rp.matrix-om.matrix)/2
        assert TemperedNegativity(rp,om,config).value>=(1-2*eh)*tn-1e-6
        assert TemperedRobustnessPPT(rp,om,config).value>=(1-2*eh)*tr-eh-1e-6


def test_ebit_supermultiplicativity(config):
    two=TensorPower(Phi(2),2)
    assert TemperedNegativity(two,two,config).value==pytest.approx(4.,abs=1e-5)


def test_random_state_supermultiplicativity(rng,config):
    rho=random_state(rng,2,2,rank=2)
    single=TemperedNegativity(rho,rho,config)
    two=TensorPower(rho,2)
    double=TemperedNegativity(two,two,config)
    assert single.optimal and double.optimal
    assert double.value>=single.value**2-1e-5


@pytest.mark.slow
def test_omega3_two_copies(config):
    om2=TensorPower(Omega3(),2)
    assert TemperedNegativity(om2,om2,config).value==pytest.approx(4.,abs=1e-4)


@pytest.mark.parametrize('k',[1,2])
def test_std_robustness_of_ebits(config,k):
    rho=EbitPower(k)
    res=StdRobustnessPPT(rho,config=config)
    assert res.value==pytest.approx(2.**k-1,abs=1e-6)
    delta=res.witness
    assert np.trace(delta).real==pytest.approx(res.value,abs=1e-6)
    assert min_eig(delta)>=-1e-6
    assert min_eig(PartialTranspose(delta,rho.shape))>=-1e-6
    assert min_eig(PartialTranspose(rho.matrix+delta,rho.shape))>=-1e-6


def test_gen_robustness_witness(config):
    rho=Phi(2)
    res=GenRobustnessPPT(rho,config=config)
    assert res.value==pytest.approx(1.,abs=1e-6)
    assert min_eig(res.witness)>=-1e-6
    assert min_eig(PartialTranspose(rho.matrix+res.witness,rho.shape))>=-1e-6


def test_omega3_robustness_bracket(config):
    om=Omega3()
    rs=StdRobustnessPPT(om,config=config).value
    rg=GenRobustnessPPT(om,config=config).value
    assert NegativityRobustnessLowerBound(om)==pytest.approx(0.5)
    assert 0.5-1e-6<=rs<=0.75+1e-6
    assert rg<=0.5+1e-6
    assert rg<=rs+1e-6


def test_robustness_of_ppt_state_vanishes(config):
    assert StdRobustnessPPT(Isotropic(3,1/3),config=config).value==pytest.approx(0.,abs=1e-6)


def test_pure_state_robustness():
    assert PureStateRobustness([0.5,0.5])==pytest.approx(1.)
    assert PureStateRobustness([1.])==0.
    assert PureStateRobustness([1/3]*3)==pytest.approx(2.)
    for bad in ([],[0.3,0.3],[0.2,0.8],[1.2,-0.2]):
        with pytest.raises(DomainError):
            PureStateRobustness(bad)


def test_separable_analytic_values(rng):
    res=StdRobustnessPPT(Omega3(),cone=ConeSepAnalytic)
    assert res.value==0.75
    assert res.cone==ConeSepAnalytic
    gen=GenRobustnessPPT(Omega3(),cone=ConeSepAnalytic)
    assert gen.value==0.5
    assert TraceNorm(gen.witness)==pytest.approx(0.5)
    assert StdRobustnessPPT(Phi(2),cone=ConeSepAnalytic).value==pytest.approx(1.)
    assert StdRobustnessPPT(Isotropic(3,0.5),cone=ConeSepAnalytic).value==pytest.approx(0.5)
    with pytest.raises(UnsupportedMapError):
        StdRobustnessPPT(random_state(rng,3,3),cone=ConeSepAnalytic)
    with pytest.raises(DomainError):
        StdRobustnessPPT(Omega3(),cone='SEP')


def test_entropic_bounds_and_cost_gap(config):
    om=Omega3()
    p3=NamedOperator(PSubspace(3).matrix/3,om.shape,'P3/3',True)
    coh=CoherentInformation(om)
    assert coh==pytest.approx(L32)
    assert CoherentInformation(Phi(2))==pytest.approx(1.)
    assert ReeUpperBound(om,p3)==pytest.approx(L32,abs=1e-9)
    cost=CostLowerBound(om,config)
    assert cost==pytest.approx(1.,abs=1e-6)
    assert cost-coh>=0.4
    with pytest.raises(DimensionError):
        ReeUpperBound(om,Phi(2))


def test_distillation_fidelity_examples(config):
    assert DistillationFidelityPhi(Phi(2),1,0.,config).value==pytest.approx(1.,abs=1e-7)
    assert DistillationFidelityPhi(Tau(1),1,0.,config).value==pytest.approx(0.5,abs=1e-6)


def test_distillation_fidelity_monotone_in_delta(config):
    rho=Isotropic(2,0.75)
    grid=[DistillationFidelityPhi(rho,1,dl,config).value for dl in (0.,0.5,1.)]
    assert grid[0]>=0.75-1e-6
    assert np.all(np.diff(grid)>=-1e-7)
    assert grid[-1]==pytest.approx(1.,abs=1e-6)


def test_overlap_cap_domain():
    assert OverlapCap(2,0.)==0.25
    for m,dl in ((0,0.),(1.5,0.),(1,-0.1),(1,1.5)):
        with pytest.raises(DomainError):
            OverlapCap(m,dl)


def test_distillation_error_report(config):
    rep=DistillationError(Isotropic(2,0.75),1,0.25,config)
    assert rep.holds
    d=rep.details
    assert d['fidelity']==pytest.approx(d['phi'],abs=1e-6)
    assert d['trace_distance']==pytest.approx(1-d['phi'],abs=1e-6)
    assert rep.lhs<=rep.rhs+1e-6
    # 2 delta pushes the overlap cap past one
    rep=DistillationError(Isotropic(2,0.75),1,0.6,config)
    assert rep.details['phi_2delta']==1.


def test_tradeoff_rate():
    assert TradeoffRateLowerBound(1/3)==1.
    assert TradeoffRateLowerBound(0.8)==1.
    assert TradeoffRateLowerBound(0.1)==pytest.approx(math.log2(27/17),abs=1e-12)
    rates=[TradeoffRateLowerBound(d) for d in np.linspace(0.01,0.33,20)]
    assert np.all(np.diff(rates)>0)
    for bad in (0.,-0.1,1.5):
        with pytest.raises(DomainError):
            TradeoffRateLowerBound(bad)


@pytest.mark.parametrize('delta',[0.05,0.1,0.2,0.3,0.5])
def test_x3_delta_norm_identities(delta):
    rep=X3DeltaNormCheck(delta)
    assert rep.holds
    assert rep.details['pt_norm']==pytest.approx(1.,abs=1e-10)


def test_regularised_evidence(config):
    res=RegularisedEvidence(Phi(2),'tempered-log-negativity',1,config)
    assert res.value==pytest.approx(1.,abs=1e-6)
    assert res.label==LabelFiniteSize
    assert RegularisedEvidence(Phi(2),'tempered-log-negativity',2,config).value==pytest.approx(1.,abs=1e-5)
    assert RegularisedEvidence(Phi(2),'std-robustness',1,config).value==pytest.approx(1.,abs=1e-6)
    with pytest.raises(DomainError):
        RegularisedEvidence(Phi(2),'log-negativity',1,config)
    with pytest.raises(DomainError):
        RegularisedEvidence(Phi(2),'std-robustness',3,config)


def test_channel_bounds(config):
    omega_choi=ChoiOf(Omega3ChannelSpec(),3)
    assert ChannelTemperedNegativityLower(omega_choi,Phi(3),config)==pytest.approx(1.,abs=1e-6)
    assert ChannelCapacityUpperBound(omega_choi)==pytest.approx(L32,abs=1e-9)

    ident=ChoiOf(IdentitySpec(2),2)
    assert ChannelTemperedNegativityLower(ident,[Phi(2),Tau(1)],config)==pytest.approx(1.,abs=1e-6)
    assert ChannelCapacityUpperBound(ident)==pytest.approx(1.,abs=1e-9)

    deph=ChoiOf(DephasingSpec(3),3)
    assert ChannelTemperedNegativityLower(deph,Phi(3),config)==pytest.approx(0.,abs=1e-6)
    assert ChannelCapacityUpperBound(deph)==pytest.approx(0.,abs=1e-9)


def test_channel_output_errors(config):
    choi=ChoiOf(Omega3ChannelSpec(),3)
    out=ChannelOutput(choi,Phi(3))
    assert np.max(np.abs(out.matrix-Omega3().matrix))<=1e-12
    with pytest.raises(DomainError):
        ChannelOutput(choi,Phi(2))
    with pytest.raises(DomainError):
        ChannelTemperedNegativityLower(choi,[],config)
