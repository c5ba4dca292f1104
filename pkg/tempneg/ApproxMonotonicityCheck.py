#!/usr/bin/env python3
# -*- coding: utf-8 -*-

from tempneg.GenerationLevel import GenerationLevel
from tempneg.LinearMaps import ApplyLinearMap
from tempneg.MatrixNorms import TraceNorm
from tempneg.PartialTranspose import PartialTranspose
from tempneg.RobustnessPPT import StdRobustnessPPT
from tempneg.TempNegErrors import DomainError
from tempneg.TempNegVariables import CheckReport, NamedOperator

CheckTol=1e-6

def ApproxMonotonicityCheck(spec,delta_level,rho,config=None):
    """Check R^s(L(rho)) + 1 <= (1 + 2 delta)(R^s(rho) + 1) for a map of generation level <= delta.

    The report also carries the negativity form
    (||L(rho)^Gamma||_1 + 1)/2 <= (1 + 2 delta)(R^s(rho) + 1).
    """
    if delta_level<0:
        raise DomainError('delta_level must be nonnegative, got %r' % (delta_level,))
    if spec.output_shape is None:
        raise DomainError('%r has no bipartite output shape' % (spec,))
    if rho.shape.dim!=spec.d_in:
        raise DomainError('%s has dimension %d but %r acts on %d' % (rho.label,rho.shape.dim,spec,spec.d_in))

    # 1. the map must be delta-approximately free
    level=GenerationLevel(spec,config)
    if level.value>delta_level+CheckTol:
        raise DomainError('generation level %.10g of %r exceeds delta %.10g' % (level.value,spec,delta_level))

    # 2. both sides
    out=ApplyLinearMap(spec,rho.matrix)
    out=NamedOperator((out+out.conj().T)/2,spec.output_shape,'L(%s)' % rho.label,True)
    r_out=StdRobustnessPPT(out,config=config)
    r_in=StdRobustnessPPT(rho,config=config)

    rep=CheckReport('approximate monotonicity %s' % spec.kind)
    rep.lhs=r_out.value+1
    rep.rhs=(1+2*delta_level)*(r_in.value+1)
    rep.slack=rep.rhs-rep.lhs
    neg=(TraceNorm(PartialTranspose(out.matrix,out.shape))+1)/2
    rep.details={'generation_level':level.value,'level_label':level.label,
                 'robustness_out':r_out.value,'robustness_in':r_in.value,
                 'negativity_lhs':neg,'negativity_slack':rep.rhs-neg,
                 'solver_status':(r_out.solver_status,r_in.solver_status)}
    rep.holds=rep.slack>=-CheckTol and rep.rhs-neg>=-CheckTol
    return rep
