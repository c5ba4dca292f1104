#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Containers and tolerances shared across the tempneg package."""

import numpy as np

from tempneg.TempNegErrors import DimensionError, ConfigError

HermTol=1e-12 #hermiticity tolerance for operators built in this package
InputHermTol=1e-10 #hermiticity tolerance for matrices read from files
PsdTol=1e-9 #smallest eigenvalue still accepted as positive
TraceTol=1e-12 #trace deviation allowed for constructed states
InputTraceTol=1e-9 #trace deviation allowed for user supplied states
SupportCutoff=1e-10 #eigenvalues at or below this lie outside the support

ConePPT='PPT'
ConeSepAnalytic='SEP-analytic'

StatusOptimal='optimal'
StatusInfeasible='infeasible'
StatusUnbounded='unbounded'
StatusMaxIterations='max-iterations'


class BipartiteShape:
    def __init__(self,d_a,d_b):
        if int(d_a)<1 or int(d_b)<1:
            raise DimensionError('local dimensions must be positive, got (%s,%s)' % (d_a,d_b))
        self.d_a=int(d_a) #dimension of the A factor
        self.d_b=int(d_b) #dimension of the B factor

    @property
    def dim(self):
        return self.d_a*self.d_b

    def Check(self,m):
        """Raise DimensionError unless m is a dim x dim matrix."""
        if np.shape(m)!=(self.dim,self.dim):
            raise DimensionError('matrix of shape %s does not match bipartite shape %dx%d'
                                 % (np.shape(m),self.d_a,self.d_b))

    def __eq__(self,other):
        return isinstance(other,BipartiteShape) and (self.d_a,self.d_b)==(other.d_a,other.d_b)

    def __hash__(self):
        return hash((self.d_a,self.d_b))

    def __repr__(self):
        return 'BipartiteShape(%d,%d)' % (self.d_a,self.d_b)


class Spectrum:
    def __init__(self,eigenvalues,eigenvectors):
        self.eigenvalues=eigenvalues #ascending real eigenvalues
        self.eigenvectors=eigenvectors #unitary, eigenvectors as columns

    def Reconstruct(self):
        V=self.eigenvectors
        return (V*self.eigenvalues)@V.conj().T


class NamedOperator:
    def __init__(self,matrix,shape,label,is_state):
        self.matrix=np.asarray(matrix,dtype=complex) #dense square matrix
        self.shape=shape #BipartiteShape giving meaning to partial operations
        self.label=label #human readable name, e.g. 'omega3'
        self.is_state=bool(is_state) #PSD with unit trace when True
        shape.Check(self.matrix)

    @property
    def dim(self):
        return self.shape.dim

    def __repr__(self):
        return 'NamedOperator(%s, %r, is_state=%s)' % (self.label,self.shape,self.is_state)


class SolverConfig:
    def __init__(self,tol=1e-8,max_iterations=200,verbosity=0):
        if not 1e-12<tol<1e-2:
            raise ConfigError('solver tolerance must lie in (1e-12, 1e-2), got %r' % tol)
        if int(max_iterations)<1:
            raise ConfigError('max_iterations must be positive, got %r' % max_iterations)
        self.tol=float(tol) #relative accuracy on residuals and duality gap
        self.max_iterations=int(max_iterations)
        self.verbosity=int(verbosity) #0 silent, 1 one line per iteration
        self.step_fraction=0.98 #fraction-to-boundary factor
        self.stall_window=30 #iterations allowed without a 10x drop of mu
        self.near_optimal_factor=10. #best iterate within this multiple of tol counts as optimal
        self.presolve_tol=1e-10 #rank threshold of the equality presolve


class SdpSolution:
    def __init__(self,status):
        self.status=status #optimal, infeasible, unbounded or max-iterations
        self.primal_value=np.nan #sum_b Tr[C_b X_b]
        self.dual_value=np.nan #b^T y
        self.block_values={} #label -> Hermitian primal block X_b
        self.dual_blocks={} #label -> Hermitian dual slack Z_b
        self.dual_multipliers=np.zeros(0) #one real multiplier per equality
        self.iterations=0
        self.residuals={} #primal, dual, gap and complementarity measures of the returned point
        self.solve_time=0.

    @property
    def optimal(self):
        return self.status==StatusOptimal


class MonotoneResult:
    def __init__(self,value,witness=None,dual_certificate=None,solver_status=StatusOptimal):
        self.value=value #the monotone value
        self.witness=witness #optimal X or delta, when the value comes from an SDP
        self.dual_certificate=dual_certificate #solver multipliers
        self.solver_status=solver_status
        self.cone=ConePPT
        self.provenance='' #where a closed form value comes from
        self.label='' #e.g. 'finite-size lower evidence'
        self.solution=None #full SdpSolution when one was computed

    @property
    def optimal(self):
        return self.solver_status==StatusOptimal

    def __float__(self):
        return float(self.value)

    def __repr__(self):
        return 'MonotoneResult(value=%.12g, status=%s)' % (self.value,self.solver_status)


class ChoiMatrix:
    def __init__(self,matrix,d_in,d_out):
        self.matrix=np.asarray(matrix,dtype=complex) #normalized Choi state [id x L](Phi_d)
        self.d_in=int(d_in)
        self.d_out=int(d_out)
        if self.matrix.shape!=(self.d_in*self.d_out,self.d_in*self.d_out):
            raise DimensionError('Choi matrix of shape %s does not match d_in=%d, d_out=%d'
                                 % (self.matrix.shape,self.d_in,self.d_out))

    @property
    def shape(self):
        return BipartiteShape(self.d_in,self.d_out)


class LinearMapSpec:
    def __init__(self,kind,d_in,d_out,**params):
        self.kind=kind #measure-prepare, twirl, phase-perm-average, dephasing, identity, affine-combination, composition
        self.d_in=int(d_in) #total input dimension
        self.d_out=int(d_out) #total output dimension
        self.params=params #kind specific parameters
        self.input_shape=params.get('input_shape') #BipartiteShape of inputs, if bipartite
        self.output_shape=params.get('output_shape') #BipartiteShape of outputs, if bipartite

    def __repr__(self):
        return 'LinearMapSpec(%s, %d -> %d)' % (self.kind,self.d_in,self.d_out)


class CheckReport:
    def __init__(self,name):
        self.name=name
        self.lhs=np.nan #left side of the checked inequality
        self.rhs=np.nan #right side
        self.holds=False
        self.slack=np.nan #rhs - lhs for <= checks
        self.details={} #intermediate quantities, links of chains

    def __bool__(self):
        return bool(self.holds)

    def __repr__(self):
        return 'CheckReport(%s: %.12g <= %.12g, holds=%s)' % (self.name,self.lhs,self.rhs,self.holds)


class ReportRow:
    def __init__(self,quantity,computed,tolerance,provenance,expected=None,passed=None):
        self.quantity=quantity
        self.expected=expected #None when only a bound or a boolean is checked
        self.computed=computed
        self.tolerance=tolerance
        self.provenance=provenance #paper, derived or trivial
        if passed is None:
            passed=expected is not None and abs(expected-computed)<=tolerance
        self.passed=bool(passed)
