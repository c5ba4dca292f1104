#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Constructors for LinearMapSpec and their direct action on matrices.

Kinds: identity, dephasing, twirl, phase-perm-average, measure-prepare,
affine-combination and composition. Every map accepts arbitrary square
inputs of dimension d_in (not only states), which ChoiOf relies on.
"""

import numpy as np

from tempneg.ExplicitMaps import Dephase, PhasePermutationAverage, Twirl
from tempneg.NamedStates import Omega3, Phi, Tau3Diag
from tempneg.TempNegErrors import DomainError
from tempneg.TempNegVariables import BipartiteShape, LinearMapSpec

KindIdentity='identity'
KindDephasing='dephasing'
KindTwirl='twirl'
KindPhasePerm='phase-perm-average'
KindMeasurePrepare='measure-prepare'
KindAffine='affine-combination'
KindComposition='composition'

MapKinds=(KindIdentity,KindDephasing,KindTwirl,KindPhasePerm,KindMeasurePrepare,KindAffine,KindComposition)

def IdentitySpec(d,shape=None):
    return LinearMapSpec(KindIdentity,d,d,input_shape=shape,output_shape=shape)

def DephasingSpec(d,shape=None):
    """Complete dephasing in the computational basis of a d-dimensional system."""
    return LinearMapSpec(KindDephasing,d,d,input_shape=shape,output_shape=shape)

def TwirlSpec(d):
    shape=BipartiteShape(d,d)
    return LinearMapSpec(KindTwirl,d*d,d*d,d=d,input_shape=shape,output_shape=shape)

def PhasePermutationSpec():
    shape=BipartiteShape(3,3)
    return LinearMapSpec(KindPhasePerm,9,9,input_shape=shape,output_shape=shape)

def MeasurePrepareSpec(effects,states,input_shape=None,output_shape=None):
    """x -> sum_k Tr[E_k x] s_k.

    The effects must sum to the identity and every s_k must be a state, so
    the map is a channel.
    """
    effects=[np.asarray(E,dtype=complex) for E in effects]
    states=[np.asarray(s,dtype=complex) for s in states]
    if len(effects)==0 or len(effects)!=len(states):
        raise DomainError('measure-prepare needs as many states as effects, got %d and %d'
                          % (len(effects),len(states)))
    d_in=effects[0].shape[0]
    d_out=states[0].shape[0]
    if any(E.shape!=(d_in,d_in) for E in effects) or any(s.shape!=(d_out,d_out) for s in states):
        raise DomainError('measure-prepare effects and states must share their dimensions')
    if np.max(np.abs(sum(effects)-np.eye(d_in)))>1e-10:
        raise DomainError('measure-prepare effects do not sum to the identity')
    return LinearMapSpec(KindMeasurePrepare,d_in,d_out,effects=effects,states=states,
                         input_shape=input_shape,output_shape=output_shape)

def PrepareOmega3Spec():
    """Tr[x Phi_2] omega_3 + Tr[x (1-Phi_2)] tau_3 as a two-outcome measure-prepare map."""
    ph=Phi(2).matrix
    return MeasurePrepareSpec([ph,np.eye(4)-ph],[Omega3().matrix,Tau3Diag().matrix],
                              BipartiteShape(2,2),BipartiteShape(3,3))

def AffineCombinationSpec(terms):
    """sum_k c_k L_k for terms [(c_k, spec_k)] with real coefficients summing to one."""
    terms=[(float(c),s) for c,s in terms]
    if not terms:
        raise DomainError('affine combination needs at least one term')
    d_in,d_out=terms[0][1].d_in,terms[0][1].d_out
    if any((s.d_in,s.d_out)!=(d_in,d_out) for _,s in terms):
        raise DomainError('affine combination terms must share their dimensions')
    if abs(sum(c for c,_ in terms)-1)>1e-12:
        raise DomainError('affine coefficients must sum to 1, got %.12g' % sum(c for c,_ in terms))
    s0=terms[0][1]
    return LinearMapSpec(KindAffine,d_in,d_out,terms=terms,
                         input_shape=s0.input_shape,output_shape=s0.output_shape)

def CompositionSpec(maps):
    """Apply maps[0] first, then maps[1], and so on."""
    if not maps:
        raise DomainError('composition needs at least one map')
    for a,b in zip(maps[:-1],maps[1:]):
        if a.d_out!=b.d_in:
            raise DomainError('cannot compose %r with %r' % (a,b))
    return LinearMapSpec(KindComposition,maps[0].d_in,maps[-1].d_out,maps=list(maps),
                         input_shape=maps[0].input_shape,output_shape=maps[-1].output_shape)

def Omega3ChannelSpec():
    """Omega_3 = (3/2) Delta - (1/2) id on a qutrit; its Choi state is omega_3."""
    return AffineCombinationSpec([(1.5,DephasingSpec(3)),(-0.5,IdentitySpec(3))])

def ApplyLinearMap(spec,x):
    """Evaluate spec on a d_in x d_in matrix."""
    x=np.asarray(x,dtype=complex)
    if x.shape!=(spec.d_in,spec.d_in):
        raise DomainError('%r cannot act on a matrix of shape %s' % (spec,x.shape))

    kind=spec.kind
    if kind==KindIdentity:
        return x.copy()
    elif kind==KindDephasing:
        return Dephase(x)
    elif kind==KindTwirl:
        return Twirl(x,spec.params['d'])
    elif kind==KindPhasePerm:
        return PhasePermutationAverage(x)
    elif kind==KindMeasurePrepare:
        out=np.zeros((spec.d_out,spec.d_out),dtype=complex)
        for E,s in zip(spec.params['effects'],spec.params['states']):
            out+=np.trace(E@x)*s
        return out
    elif kind==KindAffine:
        return sum(c*ApplyLinearMap(s,x) for c,s in spec.params['terms'])
    elif kind==KindComposition:
        for s in spec.params['maps']:
            x=ApplyLinearMap(s,x)
        return x
    else:
        raise DomainError('unknown map kind %r' % (kind,))

def IsTracePreserving(spec,tol=1e-10):
    """Tr L(E_ij) = delta_ij on every matrix unit."""
    n=spec.d_in
    for i in range(n):
        for j in range(n):
            E=np.zeros((n,n),dtype=complex)
            E[i,j]=1.
            if abs(np.trace(ApplyLinearMap(spec,E))-(i==j))>tol:
                return False
    return True
