from itertools import permutations

import numpy as np
import pytest
from numpy.testing import assert_allclose

from tempneg.ApproxMonotonicityCheck import ApproxMonotonicityCheck
from tempneg.ChoiCalculus import ApplyViaChoi, ChoiOf
from tempneg.DilutionErrorFloorCheck import DilutionErrorFloorCheck
from tempneg.ExplicitMaps import (Dephase, PermutationUnitary, PhasePermutationAverage, PhaseSurvivalMask,
                                  PrepareOmega3Map, Twirl)
from tempneg.GenerationLevel import GenerationLevel, PptOverlapRange
from tempneg.LinearMaps import (AffineCombinationSpec, ApplyLinearMap, CompositionSpec, DephasingSpec,
                                IdentitySpec, IsTracePreserving, MeasurePrepareSpec, Omega3ChannelSpec,
                                PhasePermutationSpec, PrepareOmega3Spec, TwirlSpec, KindMeasurePrepare)
from tempneg.MatrixNorms import TraceNorm
from tempneg.NamedStates import Isotropic, Omega3, PSubspace, Phi, Tau3Diag
from tempneg.Negativities import BinegativityCheck
from tempneg.PartialTranspose import PartialTranspose
from tempneg.ProtocolChecks import (IsotropicSeparabilityCheck, NegativityBoundCheck, PlusMinusProduct,
                                    SegmentSeparabilityCheck)
from tempneg.TempNegErrors import ContractViolation, DomainError, UnsupportedMapError
from tempneg.TempNegVariables import BipartiteShape, LinearMapSpec

from tests.conftest import random_density, random_state

Shape22=BipartiteShape(2,2)
Shape33=BipartiteShape(3,3)


def random_pure(rng,d):
    v=rng.standard_normal(d)+1j*rng.standard_normal(d)
    return v/np.linalg.norm(v)


def random_product(rng,d_a,d_b):
    v=np.kron(random_pure(rng,d_a),random_pure(rng,d_b))
    return np.outer(v,v.conj())


def is_ppt(m,shape,tol=1e-9):
    return np.linalg.eigvalsh(m)[0]>=-tol and np.linalg.eigvalsh(PartialTranspose(m,shape))[0]>=-tol


def test_twirl_properties(rng):
    for d in (2,3):
        ph=Phi(d).matrix
        assert_allclose(Twirl(ph,d),ph,atol=1e-14)
        rho=random_density(rng,d*d)
        t=Twirl(rho,d)
        assert_allclose(Twirl(t,d),t,atol=1e-14)
        assert np.trace(t).real==pytest.approx(1.)
        assert np.trace(t@ph).real==pytest.approx(np.trace(rho@ph).real)
    with pytest.raises(DomainError):
        Twirl(np.eye(4),3)


def test_prepare_omega3_map():
    assert_allclose(PrepareOmega3Map(Phi(2).matrix),Omega3().matrix,atol=1e-15)
    mixed=PrepareOmega3Map(np.eye(4)/4)
    assert_allclose(mixed,Omega3().matrix/4+3*Tau3Diag().matrix/4,atol=1e-15)
    with pytest.raises(DomainError):
        PrepareOmega3Map(np.eye(9))


def test_phase_permutation_average_identities():
    out=PhasePermutationAverage(PlusMinusProduct())
    om=Omega3().matrix
    tau=Tau3Diag().matrix
    assert np.max(np.abs(out-(om+tau)/2))<=1e-14
    formula=np.eye(9)/12+PSubspace(3).matrix/6-Phi(3).matrix/4
    assert np.max(np.abs(out-formula))<=1e-14
    assert_allclose(PhasePermutationAverage(out),out,atol=1e-15)


def test_phase_survival_mask():
    keep=PhaseSurvivalMask(3)
    assert keep.shape==(9,9)
    # the <ab|.|ab> and <aa|.|bb> families overlap on <aa|.|aa>
    assert int(np.sum(keep))==9+9-3
    assert np.all(np.diag(keep))


def test_phase_permutation_generator_invariance(rng):
    x=random_density(rng,9)
    avg=PhasePermutationAverage(x)
    for _ in range(3):
        th=rng.uniform(0,2*np.pi,3)
        V=np.kron(np.diag(np.exp(1j*th)),np.diag(np.exp(-1j*th)))
        assert_allclose(PhasePermutationAverage(V@x@V.conj().T),avg,atol=1e-13)
    for pi in permutations(range(3)):
        PP=np.kron(PermutationUnitary(pi),PermutationUnitary(pi))
        assert_allclose(PhasePermutationAverage(PP@x@PP.T),avg,atol=1e-13)


def test_non_entangling_maps_on_product_states(rng):
    for _ in range(10):
        s33=random_product(rng,3,3)
        assert is_ppt(PhasePermutationAverage(s33),Shape33)
        assert is_ppt(Twirl(s33,3),Shape33)
        assert is_ppt(Dephase(s33),Shape33)
        assert is_ppt(PrepareOmega3Map(random_product(rng,2,2)),Shape33)


def test_isotropic_separability_check():
    rep=IsotropicSeparabilityCheck(Isotropic(3,1/3))
    assert rep.holds
    assert rep.slack==pytest.approx(0.,abs=1e-12)
    rep=IsotropicSeparabilityCheck(Isotropic(3,0.5))
    assert not rep.holds
    assert rep.details['fidelity']==pytest.approx(0.5)
    assert IsotropicSeparabilityCheck(Isotropic(2,0.2)).holds
    with pytest.raises(ContractViolation):
        IsotropicSeparabilityCheck(Omega3())


def test_isotropic_separability_rejects_rectangular(rng):
    with pytest.raises(ContractViolation):
        IsotropicSeparabilityCheck(random_state(rng,2,3))


def test_negativity_bound_check():
    rep=NegativityBoundCheck(PrepareOmega3Spec(),2)
    assert rep.holds
    assert rep.lhs==pytest.approx(2.,abs=1e-9)
    assert rep.rhs==3
    assert rep.details['direct']==pytest.approx(rep.lhs,abs=1e-9)
    assert rep.details['triangle']>=rep.lhs-1e-9
    for d in (2,3):
        rep=NegativityBoundCheck(TwirlSpec(d),d)
        assert rep.holds
        assert rep.lhs==pytest.approx(d,abs=1e-9)
    with pytest.raises(DomainError):
        NegativityBoundCheck(TwirlSpec(3),2)
    with pytest.raises(DomainError):
        NegativityBoundCheck(IdentitySpec(4),2)


def test_choi_of_named_channels():
    assert np.max(np.abs(ChoiOf(Omega3ChannelSpec(),3).matrix-Omega3().matrix))<=1e-12
    assert_allclose(ChoiOf(IdentitySpec(2),2).matrix,Phi(2).matrix,atol=1e-15)
    deph=ChoiOf(DephasingSpec(3),3).matrix
    assert_allclose(deph,np.diag(np.diag(Phi(3).matrix)),atol=1e-15)
    assert ChoiOf(PrepareOmega3Spec(),4).shape==BipartiteShape(4,9)


def test_choi_rejects_non_cp_and_wrong_dimension():
    not_cp=AffineCombinationSpec([(2.,IdentitySpec(2)),(-1.,DephasingSpec(2))])
    assert IsTracePreserving(not_cp)
    with pytest.raises(ContractViolation):
        ChoiOf(not_cp,2)
    with pytest.raises(DomainError):
        ChoiOf(IdentitySpec(2),3)


def test_apply_via_choi_matches_direct_action(rng):
    for spec in (Omega3ChannelSpec(),DephasingSpec(3),TwirlSpec(2),PrepareOmega3Spec()):
        choi=ChoiOf(spec,spec.d_in)
        rho=random_density(rng,spec.d_in)
        assert_allclose(ApplyViaChoi(choi,rho),ApplyLinearMap(spec,rho),atol=1e-12)
    choi=ChoiOf(Omega3ChannelSpec(),3)
    assert_allclose(ApplyViaChoi(choi,Phi(3).matrix,d_ref=3),choi.matrix,atol=1e-14)
    with pytest.raises(DomainError):
        ApplyViaChoi(choi,np.eye(4)/4)


def test_approx_monotonicity_twirl_equality(config):
    rep=ApproxMonotonicityCheck(TwirlSpec(2),0.,Phi(2),config)
    assert rep.holds
    assert rep.lhs==pytest.approx(2.,abs=1e-6)
    assert rep.slack==pytest.approx(0.,abs=1e-6)


def test_approx_monotonicity_prepare_map(config):
    rep=ApproxMonotonicityCheck(PrepareOmega3Spec(),0.,Phi(2),config)
    assert rep.holds
    assert rep.details['generation_level']==pytest.approx(0.,abs=1e-6)
    assert 1.5-1e-6<=rep.lhs<=1.75+1e-6
    assert rep.details['negativity_lhs']==pytest.approx(1.5,abs=1e-9)


def test_approx_monotonicity_composition(config):
    spec=CompositionSpec([PrepareOmega3Spec(),DephasingSpec(9,Shape33)])
    rep=ApproxMonotonicityCheck(spec,0.,Phi(2),config)
    assert rep.holds
    assert rep.lhs==pytest.approx(1.,abs=1e-6)
    assert rep.details['level_label']=='product-state sweep'


def test_approx_monotonicity_errors(config):
    with pytest.raises(DomainError):
        ApproxMonotonicityCheck(TwirlSpec(2),-0.1,Phi(2),config)
    with pytest.raises(DomainError):
        ApproxMonotonicityCheck(TwirlSpec(2),0.,Phi(3),config)
    with pytest.raises(DomainError):
        ApproxMonotonicityCheck(IdentitySpec(4),0.,Phi(2),config)


def test_dilution_chain_single_copy(config):
    rep=DilutionErrorFloorCheck(1,0.,config)
    assert rep.holds
    assert_allclose(rep.details['links'],[3.,2.,2.,2.],atol=1e-6)
    rep=DilutionErrorFloorCheck(1,0.1,config)
    assert rep.holds
    assert rep.details['epsilon_hat']==pytest.approx(0.1,abs=1e-12)
    assert rep.details['links'][-1]==pytest.approx(1.6,abs=1e-6)


@pytest.mark.slow
def test_dilution_chain_two_copies(config):
    rep=DilutionErrorFloorCheck(2,0.,config)
    assert rep.holds
    assert rep.details['links'][0]==7.


def test_dilution_chain_domain(config):
    for n,eps in ((3,0.),(1,0.5),(1,-0.1)):
        with pytest.raises(DomainError):
            DilutionErrorFloorCheck(n,eps,config)


def test_binegativity():
    assert BinegativityCheck(Omega3()).holds
    rep=BinegativityCheck(Phi(2))
    assert rep.holds
    assert rep.details['negativity']==pytest.approx(2.)


def test_segment_separability():
    rep=SegmentSeparabilityCheck(np.linspace(0,0.5,6))
    assert rep.holds
    assert rep.details['midpoint_deviation']<=1e-14
    assert rep.details['min_pt_eigenvalue']>=-1e-12
    assert len(rep.details['points'])==6
    with pytest.raises(DomainError):
        SegmentSeparabilityCheck([0.6])


def test_ppt_overlap_range(config):
    lo,hi,statuses=PptOverlapRange(Phi(2).matrix,Shape22,config)
    assert lo==pytest.approx(0.,abs=1e-6)
    assert hi==pytest.approx(0.5,abs=1e-6)
    assert statuses==['optimal','optimal']


def test_generation_level_certified(config):
    for spec in (TwirlSpec(3),PhasePermutationSpec(),CompositionSpec([TwirlSpec(2),IdentitySpec(4)])):
        res=GenerationLevel(spec,config)
        assert res.value==0.
        assert res.label=='certified'
    res=GenerationLevel(PrepareOmega3Spec(),config)
    assert res.label=='certified'
    assert res.value==pytest.approx(0.,abs=1e-6)


def test_generation_level_positive_for_entangling_prepare(config):
    # Tr[E sigma] reaches 1 on PPT states, so omega3 itself is reachable
    spec=MeasurePrepareSpec([np.diag([1.,0.,0.,0.]),np.diag([0.,1.,1.,1.])],
                            [Omega3().matrix,Tau3Diag().matrix],Shape22,Shape33)
    res=GenerationLevel(spec,config)
    assert 0.5-1e-6<=res.value<=0.75+1e-6


def test_generation_level_unsupported(config):
    three=MeasurePrepareSpec([np.diag([1.,0.,0.,0.]),np.diag([0.,1.,0.,0.]),np.diag([0.,0.,1.,1.])],
                             [Omega3().matrix,Tau3Diag().matrix,np.eye(9)/9],Shape22,Shape33)
    with pytest.raises(UnsupportedMapError):
        GenerationLevel(three,config)
    bare=MeasurePrepareSpec([np.eye(4)],[Omega3().matrix])
    with pytest.raises(UnsupportedMapError):
        GenerationLevel(bare,config)


def test_linear_map_errors():
    with pytest.raises(DomainError):
        MeasurePrepareSpec([np.eye(2)/2],[np.eye(2)/2])
    with pytest.raises(DomainError):
        MeasurePrepareSpec([np.eye(2)],[])
    with pytest.raises(DomainError):
        AffineCombinationSpec([(0.5,IdentitySpec(2)),(0.4,DephasingSpec(2))])
    with pytest.raises(DomainError):
        AffineCombinationSpec([(0.5,IdentitySpec(2)),(0.5,DephasingSpec(3))])
    with pytest.raises(DomainError):
        CompositionSpec([IdentitySpec(2),DephasingSpec(3)])
    with pytest.raises(DomainError):
        CompositionSpec([])
    with pytest.raises(DomainError):
        ApplyLinearMap(IdentitySpec(2),np.eye(3))


def test_trace_preservation():
    for spec in (Omega3ChannelSpec(),PrepareOmega3Spec(),TwirlSpec(2),PhasePermutationSpec(),
                 CompositionSpec([PrepareOmega3Spec(),DephasingSpec(9)])):
        assert IsTracePreserving(spec)
    leaky=LinearMapSpec(KindMeasurePrepare,2,2,effects=[np.eye(2)/2],states=[np.eye(2)/2])
    assert not IsTracePreserving(leaky)


def test_omega3_channel_output_on_reference_states():
    out=ApplyLinearMap(Omega3ChannelSpec(),np.diag([1.,0.,0.]))
    assert_allclose(out,np.diag([1.,0.,0.]),atol=1e-15)
    # off-diagonal coherences flip sign and halve
    x=np.zeros((3,3))
    x[0,1]=1.
    assert ApplyLinearMap(Omega3ChannelSpec(),x)[0,1]==pytest.approx(-0.5)
    assert TraceNorm(PartialTranspose(ApplyViaChoi(ChoiOf(Omega3ChannelSpec(),3),Phi(3).matrix,d_ref=3),
                                      Shape33))==pytest.approx(2.)
