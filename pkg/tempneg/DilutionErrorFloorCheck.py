#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""The dilution chain for omega_3 at rate 1 on n copies.

The exact preparation map sends Phi_2^{(x)n} to omega_3^{(x)n}; an error
epsilon mixes in tau_3^{(x)n}, which is orthogonal to it. The chain

    2^{n+1} - 1 >= ||out^Gamma||_1 >= N_tau(out|omega_3^{(x)n}) >= (1 - 2 eps) N_tau(omega_3)^n

is evaluated link by link.
"""

import time

from tempneg.MatrixNorms import TraceNorm
from tempneg.NamedStates import Omega3, Tau3Diag, TensorPower
from tempneg.PartialTranspose import PartialTranspose
from tempneg.TemperedNegativity import TemperedNegativity
from tempneg.TempNegErrors import DomainError
from tempneg.TempNegVariables import CheckReport, NamedOperator, StatusOptimal

LinkTol=1e-6

def DilutionErrorFloorCheck(n,epsilon=0.,config=None,verbose=False):
    if n not in (1,2):
        raise DomainError('n must be 1 or 2, got %r' % (n,))
    if not 0<=epsilon<0.5:
        raise DomainError('epsilon must lie in [0, 1/2), got %r' % (epsilon,))
    tic=time.process_time()

    om=Omega3()
    omn=TensorPower(om,n)
    taun=TensorPower(Tau3Diag(),n)
    out=NamedOperator((1-epsilon)*omn.matrix+epsilon*taun.matrix,omn.shape,'output n=%d' % n,True)

    # 1. links
    top=2.**(n+1)-1
    neg=TraceNorm(PartialTranspose(out.matrix,out.shape))
    nt_out=TemperedNegativity(out,omn,config)
    nt_one=TemperedNegativity(om,om,config)
    eps_hat=TraceNorm(out.matrix-omn.matrix)/2
    bottom=(1-2*eps_hat)*nt_one.value**n

    links=[top,neg,nt_out.value,bottom]
    slacks=[a-b for a,b in zip(links[:-1],links[1:])]

    rep=CheckReport('dilution chain n=%d eps=%.12g' % (n,epsilon))
    rep.lhs=bottom
    rep.rhs=top
    rep.slack=min(slacks)
    rep.details={'links':links,'slacks':slacks,'epsilon_hat':eps_hat,
                 'solver_status':(nt_out.solver_status,nt_one.solver_status)}
    rep.holds=all(s>=-LinkTol for s in slacks) and nt_out.solver_status==StatusOptimal

    if verbose:
        print('Chain %s, CPU time %.2f s' % (' >= '.join('%.10g' % v for v in links),time.process_time()-tic))
    return rep
