import numpy as np
import pytest

from tempneg.GetSolverConfig import GetSolverConfig
from tempneg.TempNegVariables import BipartiteShape, NamedOperator

Seed=20240611


@pytest.fixture
def rng():
    return np.random.default_rng(Seed)


@pytest.fixture
def config():
    return GetSolverConfig(tol=1e-8)


def random_hermitian(rng,n):
    H=rng.standard_normal((n,n))+1j*rng.standard_normal((n,n))
    return (H+H.conj().T)/2


def random_unitary(rng,n):
    Q,R=np.linalg.qr(rng.standard_normal((n,n))+1j*rng.standard_normal((n,n)))
    return Q*(np.diag(R)/np.abs(np.diag(R)))


def random_density(rng,n,rank=None):
    """G G^dag / Tr with a complex Ginibre G of n x rank."""
    rank=n if rank is None else rank
    G=rng.standard_normal((n,rank))+1j*rng.standard_normal((n,rank))
    m=G@G.conj().T
    return m/np.trace(m).real


def random_state(rng,d_a,d_b,rank=None,label='random'):
    return NamedOperator(random_density(rng,d_a*d_b,rank),BipartiteShape(d_a,d_b),label,True)
