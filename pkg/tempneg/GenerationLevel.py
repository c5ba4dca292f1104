#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""How much PPT standard robustness a map can create from PPT inputs.

    level(L) = sup { R^s_PPT(L(sigma)) : sigma a PPT state }

Identity, dephasing, twirl and the phase/permutation average never leave the
PPT cone (level 0). A two-outcome measure-prepare map sends PPT states to the
segment p s_1 + (1-p) s_2 with p in the range of Tr[E sigma]; convexity of the
robustness puts the supremum at an end point. Other maps are estimated by a
sweep over product states, which is reported as such.
"""

import itertools

import numpy as np

from tempneg.CheckOperator import IsHermitian
from tempneg.GetSolverConfig import GetSolverConfig
from tempneg.LinearMaps import (ApplyLinearMap, KindIdentity, KindDephasing, KindTwirl, KindPhasePerm,
                                KindMeasurePrepare, KindAffine, KindComposition)
from tempneg.PartialTranspose import PartialTranspose
from tempneg.RobustnessPPT import StdRobustnessPPT
from tempneg.SdpProblem import SdpProblem
from tempneg.SolveSdp import SolveSdp
from tempneg.SuperOperators import IdentityMap, PartialTransposeMap
from tempneg.TempNegErrors import DomainError, UnsupportedMapError
from tempneg.TempNegVariables import MonotoneResult, NamedOperator, StatusOptimal, PsdTol

PptPreservingKinds=(KindIdentity,KindDephasing,KindTwirl,KindPhasePerm)

LabelSweep='product-state sweep'

def PptOverlapRange(E,shape,config=None):
    """(min, max) of Tr[E sigma] over PPT states sigma on shape."""
    if config is None:
        config=GetSolverConfig()
    E=np.asarray(E,dtype=complex)
    shape.Check(E)
    n=shape.dim

    vals=[]
    statuses=[]
    for sign in (-1.,1.):
        prob=SdpProblem('maximize')
        prob.AddBlock('S',n)
        prob.AddBlock('T',n)
        prob.SetObjective('S',sign*E)
        prob.AddHermitianEquation([('T',IdentityMap(n)),('S',-PartialTransposeMap(shape))],np.zeros((n,n)))
        prob.AddEquality({'S':np.eye(n)},1.)
        sol=SolveSdp(prob,config)
        vals.append(sign*(sol.dual_value if sol.optimal else sol.primal_value))
        statuses.append(sol.status)
    return vals[0],vals[1],statuses

def _IsPpt(m,shape):
    return np.linalg.eigvalsh(m)[0]>=-PsdTol and np.linalg.eigvalsh(PartialTranspose(m,shape))[0]>=-PsdTol

def _LocalProbes(d):
    """Pure states |k>, (|j>+|k>)/sqrt2 and (|j>+i|k>)/sqrt2; their projectors span all d x d matrices."""
    vecs=[np.eye(d)[k] for k in range(d)]
    for j,k in itertools.combinations(range(d),2):
        for ph in (1.,1j):
            v=np.zeros(d,dtype=complex)
            v[j]=1.
            v[k]=ph
            vecs.append(v/np.sqrt(2))
    return vecs

def _Robustness(out,shape,config):
    op=NamedOperator((out+out.conj().T)/2,shape,'output',True)
    return StdRobustnessPPT(op,config=config)

def _IsPptPreserving(spec):
    if spec.kind in PptPreservingKinds:
        return True
    if spec.kind==KindComposition:
        return all(_IsPptPreserving(s) for s in spec.params['maps'])
    return False

def GenerationLevel(spec,config=None,verbose=False):
    """Certified (or swept) PPT standard-robustness generation level of a map.

    Returns
    -------
    MonotoneResult
        value is the level; label is 'certified' or 'product-state sweep'.
    """
    if config is None:
        config=GetSolverConfig()

    if _IsPptPreserving(spec):
        res=MonotoneResult(0.)
        res.label='certified'
        res.provenance='%s preserves the PPT cone' % spec.kind
        return res

    if spec.input_shape is None or spec.output_shape is None:
        raise UnsupportedMapError('%r has no bipartite input and output shapes' % (spec,))

    if spec.kind==KindMeasurePrepare:
        effects=spec.params['effects']
        states=spec.params['states']
        if len(effects)!=2:
            raise UnsupportedMapError('measure-prepare maps with %d outcomes are not supported' % len(effects))
        if not all(IsHermitian(E,1e-10) for E in effects):
            raise UnsupportedMapError('measure-prepare effects must be Hermitian')
        pmin,pmax,statuses=PptOverlapRange(effects[0],spec.input_shape,config)
        pmin=min(max(pmin,0.),1.)
        pmax=min(max(pmax,0.),1.)
        ends=[p*states[0]+(1-p)*states[1] for p in (pmin,pmax)]
        vals=[]
        for out in ends:
            if _IsPpt(out,spec.output_shape):
                vals.append(0.)
            else:
                r=_Robustness(out,spec.output_shape,config)
                vals.append(max(r.value,0.))
                statuses.append(r.solver_status)
        status=StatusOptimal if all(s==StatusOptimal for s in statuses) else [s for s in statuses if s!=StatusOptimal][0]
        res=MonotoneResult(max(vals),solver_status=status)
        res.label='certified'
        res.provenance='measure-prepare end points p in [%.12g, %.12g]' % (pmin,pmax)
        return res

    if spec.kind not in (KindAffine,KindComposition):
        raise UnsupportedMapError('no generation level for map kind %r' % (spec.kind,))

    sa=spec.input_shape
    level=0.
    status=StatusOptimal
    for va in _LocalProbes(sa.d_a):
        for vb in _LocalProbes(sa.d_b):
            v=np.kron(va,vb)
            out=ApplyLinearMap(spec,np.outer(v,v.conj()))
            if _IsPpt(out,spec.output_shape):
                continue
            if np.linalg.eigvalsh((out+out.conj().T)/2)[0]< -PsdTol:
                raise DomainError('%r maps a product state outside the state space' % (spec,))
            r=_Robustness(out,spec.output_shape,config)
            if r.solver_status!=StatusOptimal:
                status=r.solver_status
            level=max(level,r.value)
            if verbose:
                print('Sweep output robustness %.10g' % r.value)
    res=MonotoneResult(level,solver_status=status)
    res.label=LabelSweep
    res.provenance='largest output robustness over %d product states' % (len(_LocalProbes(sa.d_a))*len(_LocalProbes(sa.d_b)))
    return res
