import math

import numpy as np
import pytest
from hypothesis import given, seed, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays
from numpy.testing import assert_allclose

from tempneg.Entropies import Fidelity, MaxRelativeEntropy, QuantumRelativeEntropy, VonNeumannEntropy
from tempneg.HermitianEigensystem import CanonicalBasis, HermitianEigensystem
from tempneg.MatrixNorms import OperatorNorm, TraceNorm
from tempneg.NamedStates import Omega3, Phi, PSubspace, Tau, X3
from tempneg.PartialTrace import PartialTrace
from tempneg.PartialTranspose import PartialTranspose
from tempneg.Tensor import BipartiteTensor, Tensor
from tempneg.TempNegErrors import ContractViolation, DimensionError, DomainError
from tempneg.TempNegVariables import BipartiteShape

from tests.conftest import random_density, random_hermitian, random_unitary

Shape33=BipartiteShape(3,3)
Shape22=BipartiteShape(2,2)

entries=st.floats(min_value=-10,max_value=10,allow_nan=False,allow_infinity=False)


def hermitian_from(re,im):
    m=re+1j*im
    return (m+m.conj().T)/2


def test_tensor_identities():
    assert_allclose(Tensor(np.eye(2),np.eye(3)),np.eye(6))
    assert np.trace(Tensor(Phi(2).matrix,Phi(2).matrix)).real==pytest.approx(1.)
    assert OperatorNorm(Tensor(X3().matrix,X3().matrix))==pytest.approx(4.,abs=1e-9)


def test_bipartite_tensor_regroups_factors(rng):
    a=random_density(rng,4)
    b=random_density(rng,4)
    m,shape=BipartiteTensor(a,Shape22,b,Shape22)
    assert shape==BipartiteShape(4,4)
    # partial transpose of the regrouped product is the product of partial transposes
    lhs=PartialTranspose(m,shape)
    rhs,_=BipartiteTensor(PartialTranspose(a,Shape22),Shape22,PartialTranspose(b,Shape22),Shape22)
    assert_allclose(lhs,rhs,atol=1e-14)


def test_partial_transpose_of_simple_tensor(rng):
    x=rng.standard_normal((2,2))+1j*rng.standard_normal((2,2))
    y=rng.standard_normal((2,2))+1j*rng.standard_normal((2,2))
    assert_allclose(PartialTranspose(np.kron(x,y),Shape22),np.kron(x,y.T))


def test_partial_transpose_of_omega3_spectrum():
    ev=np.linalg.eigvalsh(PartialTranspose(Omega3().matrix,Shape33))
    assert_allclose(ev,[-1/6]*3+[1/6]*3+[1/3]*3,atol=1e-12)


def test_partial_transpose_shape_mismatch():
    with pytest.raises(DimensionError):
        PartialTranspose(np.eye(6),Shape22)


@seed(7)
@settings(max_examples=100,deadline=None)
@given(re=arrays(np.float64,(9,9),elements=entries),im=arrays(np.float64,(9,9),elements=entries))
def test_partial_transpose_involution_trace_hermiticity(re,im):
    m=hermitian_from(re,im)
    g=PartialTranspose(m,Shape33)
    assert_allclose(PartialTranspose(g,Shape33),m)
    assert np.trace(g)==pytest.approx(np.trace(m))
    assert_allclose(g,g.conj().T)


def test_partial_trace_examples(rng):
    assert_allclose(PartialTrace(Phi(3).matrix,Shape33,'B'),np.eye(3)/3,atol=1e-15)
    assert_allclose(PartialTrace(Omega3().matrix,Shape33,'B'),np.eye(3)/3,atol=1e-15)
    ra=random_density(rng,2)
    rb=random_density(rng,3)
    assert_allclose(PartialTrace(np.kron(ra,rb),BipartiteShape(2,3),'A'),ra*np.trace(rb),atol=1e-14)


def test_partial_trace_errors():
    with pytest.raises(DomainError):
        PartialTrace(np.eye(4),Shape22,'C')
    with pytest.raises(DimensionError):
        PartialTrace(np.eye(5),Shape22,'A')


def test_eigensystem_named_spectra():
    assert_allclose(HermitianEigensystem(np.eye(4)).eigenvalues,np.ones(4))
    x=X3()
    assert_allclose(HermitianEigensystem(x.matrix).eigenvalues,[-1]+[0]*6+[2]*2,atol=1e-10)
    assert_allclose(HermitianEigensystem(PartialTranspose(x.matrix,x.shape)).eigenvalues,
                    [-1]*3+[1]*6,atol=1e-10)


def test_eigensystem_rejects_non_hermitian():
    with pytest.raises(ContractViolation):
        HermitianEigensystem(np.array([[0,1],[0,0]]))


@pytest.mark.parametrize('n',[4,27,81])
def test_eigensystem_reconstruction(rng,n):
    m=random_hermitian(rng,n)
    sp=HermitianEigensystem(m)
    V=sp.eigenvectors
    assert np.all(np.diff(sp.eigenvalues)>=0)
    assert np.linalg.norm(m-sp.Reconstruct())<=1e-9*max(1.,np.linalg.norm(m))
    assert_allclose(V.conj().T@V,np.eye(n),atol=1e-10)


def test_eigensystem_phase_convention(rng):
    sp=HermitianEigensystem(random_hermitian(rng,5))
    for k in range(5):
        v=sp.eigenvectors[:,k]
        first=v[np.flatnonzero(np.abs(v)>1e-12)[0]]
        assert abs(first.imag)<1e-14 and first.real>0


def test_eigensystem_degenerate_blocks_use_unit_vectors():
    sp=HermitianEigensystem(PSubspace(3).matrix)
    I=np.eye(9)
    assert_allclose(sp.eigenvectors[:,:6],I[:,[1,2,3,5,6,7]],atol=1e-12)
    assert_allclose(sp.eigenvectors[:,6:],I[:,[0,4,8]],atol=1e-12)


def test_canonical_basis_ignores_input_basis(rng):
    n,k=6,3
    V=random_unitary(rng,n)[:,:k]
    W=random_unitary(rng,k)
    B=CanonicalBasis(V)
    assert_allclose(CanonicalBasis(V@W),B,atol=1e-12)
    assert_allclose(B.conj().T@B,np.eye(k),atol=1e-12)
    assert_allclose(B@B.conj().T,V@V.conj().T,atol=1e-12)


def test_eigensystem_of_conjugated_degenerate_matrix(rng):
    # a rank-3 projector plus a scaled rank-2 projector, both with degenerate spectra
    U=random_unitary(rng,6)
    m=U@np.diag([0,0,0,1,1,2.])@U.conj().T
    sp=HermitianEigensystem(m)
    assert np.linalg.norm(m-sp.Reconstruct())<=1e-12
    assert_allclose(sp.eigenvectors[:,:3],CanonicalBasis(U[:,:3]),atol=1e-10)
    assert_allclose(sp.eigenvectors[:,3:5],CanonicalBasis(U[:,3:5]),atol=1e-10)


def test_norm_examples():
    assert TraceNorm(Omega3().matrix)==pytest.approx(1.)
    for d in (2,3):
        assert TraceNorm(PartialTranspose(Phi(d).matrix,Phi(d).shape))==pytest.approx(d)
    assert TraceNorm(PartialTranspose(Omega3().matrix,Shape33))==pytest.approx(2.)
    x=X3()
    assert OperatorNorm(x.matrix)==pytest.approx(2.)
    assert OperatorNorm(PartialTranspose(x.matrix,x.shape))==pytest.approx(1.)
    assert OperatorNorm(np.eye(5))==pytest.approx(1.)


def test_trace_norm_non_hermitian():
    assert TraceNorm(np.array([[0,2],[0,0]]))==pytest.approx(2.)


def test_trace_norm_bounds_and_unitary_invariance(rng):
    for _ in range(10):
        m=rng.standard_normal((6,6))+1j*rng.standard_normal((6,6))
        U=random_unitary(rng,6)
        assert TraceNorm(m)>=abs(np.trace(m))-1e-12
        assert abs(TraceNorm(U@m@U.conj().T)-TraceNorm(m))<1e-9


def test_operator_norm_multiplicative(rng):
    for _ in range(5):
        a=rng.standard_normal((3,3))+1j*rng.standard_normal((3,3))
        b=random_hermitian(rng,4)
        assert OperatorNorm(np.kron(a,b))==pytest.approx(OperatorNorm(a)*OperatorNorm(b),abs=1e-9)


def test_fidelity_examples(rng):
    rho=random_density(rng,4)
    assert Fidelity(rho,rho)==pytest.approx(1.,abs=1e-9)
    assert Fidelity(Phi(2).matrix,np.eye(4)/4)==pytest.approx(0.25,abs=1e-12)
    assert Fidelity(Phi(2).matrix,Tau(1).matrix)==pytest.approx(0.,abs=1e-12)


def test_fidelity_symmetric(rng):
    a=random_density(rng,4)
    b=random_density(rng,4)
    assert Fidelity(a,b)==pytest.approx(Fidelity(b,a),abs=1e-9)


def test_fidelity_rejects_non_state():
    with pytest.raises(ContractViolation):
        Fidelity(np.eye(2),np.eye(2)/2)


def test_entropy_examples():
    assert VonNeumannEntropy(Phi(2).matrix)==pytest.approx(0.,abs=1e-12)
    assert VonNeumannEntropy(np.eye(3)/3)==pytest.approx(math.log2(3))
    assert VonNeumannEntropy(Omega3().matrix)==pytest.approx(1.)


def test_relative_entropy_examples(rng):
    rho=random_density(rng,4)
    l32=math.log2(1.5)
    assert QuantumRelativeEntropy(rho,rho)==pytest.approx(0.,abs=1e-9)
    assert QuantumRelativeEntropy(Omega3().matrix,PSubspace(3).matrix/3)==pytest.approx(l32,abs=1e-9)
    assert QuantumRelativeEntropy(Phi(2).matrix,np.eye(4)/4)==pytest.approx(2.,abs=1e-9)
    assert QuantumRelativeEntropy(Phi(2).matrix,Tau(1).matrix)==math.inf


def test_max_relative_entropy_examples(rng):
    rho=random_density(rng,4)
    assert MaxRelativeEntropy(rho,rho)==pytest.approx(0.,abs=1e-9)
    assert MaxRelativeEntropy(Omega3().matrix,PSubspace(3).matrix/3)==pytest.approx(math.log2(1.5),abs=1e-9)
    assert MaxRelativeEntropy(Phi(2).matrix,np.eye(4)/4)==pytest.approx(2.,abs=1e-9)
    assert MaxRelativeEntropy(Phi(2).matrix,Tau(1).matrix)==math.inf


def test_divergence_ordering_and_positivity(rng):
    for _ in range(20):
        rho=random_density(rng,4)
        sigma=random_density(rng,4)
        d=QuantumRelativeEntropy(rho,sigma)
        assert d>0
        assert MaxRelativeEntropy(rho,sigma)>=d-1e-9
        assert TraceNorm(rho-sigma)>1e-8
