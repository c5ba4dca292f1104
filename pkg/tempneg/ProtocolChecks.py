#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Numerical checks of the separability and negativity identities used by
the irreversibility argument."""

import numpy as np

from tempneg.CheckOperator import CheckState
from tempneg.ExplicitMaps import PhasePermutationAverage, Twirl
from tempneg.LinearMaps import ApplyLinearMap
from tempneg.MatrixNorms import TraceNorm
from tempneg.NamedStates import Omega3, Phi, SigmaPm, Tau3Diag
from tempneg.PartialTranspose import PartialTranspose
from tempneg.TempNegErrors import ContractViolation, DomainError
from tempneg.TempNegVariables import CheckReport, InputTraceTol, PsdTol

IsotropicTol=1e-10
MarginTol=1e-12

def IsotropicSeparabilityCheck(rho):
    """An isotropic state is separable iff Tr[rho Phi_d] <= 1/d; slack is 1/d - Tr[rho Phi_d]."""
    m=CheckState(rho.matrix,InputTraceTol,name=rho.label)
    d=rho.shape.d_a
    if rho.shape.d_b!=d:
        raise ContractViolation('%s is not on a d x d space' % rho.label)
    dev=np.max(np.abs(Twirl(m,d)-m))
    if dev>IsotropicTol:
        raise ContractViolation('%s is not isotropic: twirl changes it by %.3e' % (rho.label,dev))

    f=float(np.trace(m@Phi(d).matrix).real)
    rep=CheckReport('isotropic separability %s' % rho.label)
    rep.lhs=f
    rep.rhs=1/d
    rep.slack=1/d-f
    rep.holds=rep.slack>=-MarginTol
    rep.details={'fidelity':f,'margin':rep.slack}
    return rep

def NegativityBoundCheck(spec,d):
    """||L(Phi_d)^Gamma||_1 <= 2d - 1 via Phi_d = d sigma_+ - (d-1) sigma_-.

    The bound presumes a non-entangling L; the report carries the triangle
    inequality value d ||L(sigma_+)^Gamma||_1 + (d-1) ||L(sigma_-)^Gamma||_1
    so a map that entangles shows up in the details.
    """
    if spec.d_in!=d*d:
        raise DomainError('%r does not act on %dx%d inputs' % (spec,d,d))
    if spec.output_shape is None:
        raise DomainError('%r has no bipartite output shape' % (spec,))
    sp,sm=SigmaPm(d)
    shape=spec.output_shape
    out_p=ApplyLinearMap(spec,sp.matrix)
    out_m=ApplyLinearMap(spec,sm.matrix)
    out=d*out_p-(d-1)*out_m

    np_=TraceNorm(PartialTranspose(out_p,shape))
    nm=TraceNorm(PartialTranspose(out_m,shape))
    rep=CheckReport('NE output negativity d=%d %s' % (d,spec.kind))
    rep.lhs=TraceNorm(PartialTranspose(out,shape))
    rep.rhs=2*d-1
    rep.slack=rep.rhs-rep.lhs
    rep.details={'negativity_sigma_plus':np_,'negativity_sigma_minus':nm,
                 'triangle':d*np_+(d-1)*nm,
                 'direct':TraceNorm(PartialTranspose(ApplyLinearMap(spec,Phi(d).matrix),shape))}
    rep.holds=rep.slack>=-1e-9
    return rep

def PlusMinusProduct():
    """|+><+| (x) |-><-| on two qutrits with |+-> = (|0> +- |1>)/sqrt2."""
    p=np.array([1.,1.,0.])/np.sqrt(2)
    m=np.array([1.,-1.,0.])/np.sqrt(2)
    return np.kron(np.outer(p,p),np.outer(m,m)).astype(complex)

def SegmentSeparabilityCheck(lambdas,tol=1e-13):
    """lambda omega_3 + (1-lambda) tau_3 for lambda in [0, 1/2].

    Each point is checked PPT and compared entrywise with the explicit
    separable mixture (1 - 2 lambda) tau_3 + 2 lambda P(|+><+| (x) |-><-|),
    whose two components are diagonal and a phase/permutation average of a
    product state.
    """
    om=Omega3()
    tau=Tau3Diag().matrix
    mid=PhasePermutationAverage(PlusMinusProduct())

    rep=CheckReport('omega3/tau3 segment separability')
    rows=[]
    worst=0.
    ppt_min=np.inf
    for lam in lambdas:
        if not 0<=lam<=0.5:
            raise DomainError('lambda must lie in [0, 1/2], got %r' % (lam,))
        st=lam*om.matrix+(1-lam)*tau
        dec=(1-2*lam)*tau+2*lam*mid
        dev=float(np.max(np.abs(st-dec)))
        lmin=float(np.linalg.eigvalsh(PartialTranspose(st,om.shape))[0])
        rows.append((lam,dev,lmin))
        worst=max(worst,dev)
        ppt_min=min(ppt_min,lmin)

    rep.lhs=worst
    rep.rhs=tol
    rep.slack=tol-worst
    rep.details={'points':rows,'min_pt_eigenvalue':ppt_min,
                 'midpoint_deviation':float(np.max(np.abs(mid-(om.matrix+tau)/2)))}
    rep.holds=worst<=tol and ppt_min>=-PsdTol
    return rep
