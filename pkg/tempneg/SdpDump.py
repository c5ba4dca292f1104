#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Plain-text dump of an SdpProblem, for debugging.

Layout, one item per line, floats written with repr:

    SDP 1
    sense <maximize|minimize>
    block <label> <dim>                       (one line per block)
    objective <label>                         followed by dim lines of
    <re> <im> <re> <im> ...                   the dense row-major matrix
    equation <first row> <n>                  (one line per Hermitian equation)
    constraint <k> rhs <value>                then, per block with entries,
    coef <label> <nnz>                        followed by nnz lines
    <i> <j> <re> <im>                         of A_kb[i,j], row-major

Labels may not contain whitespace. The format is not guaranteed to be stable.
"""

import numpy as np
from scipy import sparse

from tempneg.SdpProblem import SdpProblem, HermitianEquation
from tempneg.TempNegErrors import MatrixFileError

def DumpSdpProblem(problem,path):
    lines=['SDP 1','sense %s' % problem.sense]
    for label,n in problem.blocks.items():
        if len(label.split())!=1:
            raise MatrixFileError('block label %r cannot be dumped' % (label,))
        lines.append('block %s %d' % (label,n))
    for label in problem.objective:
        lines.append('objective %s' % label)
        for row in problem.objective[label]:
            lines.append(' '.join('%r %r' % (float(z.real),float(z.imag)) for z in row))
    for eq in problem.equations:
        lines.append('equation %d %d' % (eq.first,eq.n))

    A={label:problem.ConstraintMatrix(label).tocsr() for label in problem.blocks}
    for k,r in enumerate(problem.rhs):
        lines.append('constraint %d rhs %r' % (k,float(r)))
        for label,n in problem.blocks.items():
            row=A[label].getrow(k).tocoo()
            keep=row.data!=0
            if not np.any(keep):
                continue
            lines.append('coef %s %d' % (label,int(np.sum(keep))))
            for col,val in sorted(zip(row.col[keep],row.data[keep])):
                a=np.conj(val) #A[i,j] = conj(r[i*n+j])
                lines.append('%d %d %r %r' % (col//n,col%n,float(a.real),float(a.imag)))

    with open(path,'w') as f:
        f.write('\n'.join(lines)+'\n')

def _Fail(lineno,msg):
    raise MatrixFileError('SDP dump line %d: %s' % (lineno,msg))

def LoadSdpProblem(path):
    with open(path) as f:
        raw=[ln.rstrip('\n') for ln in f]

    if not raw or raw[0].strip()!='SDP 1':
        _Fail(1,"expected header 'SDP 1'")

    problem=None
    i=1
    k=-1
    while i<len(raw):
        tok=raw[i].split()
        i+=1
        if not tok:
            continue
        try:
            if tok[0]=='sense':
                problem=SdpProblem(tok[1])
            elif problem is None:
                _Fail(i,'sense must come first')
            elif tok[0]=='block':
                problem.AddBlock(tok[1],int(tok[2]))
            elif tok[0]=='objective':
                label=tok[1]
                n=problem.blocks[label]
                C=np.zeros((n,n),dtype=complex)
                for r in range(n):
                    vals=[float(x) for x in raw[i].split()]
                    if len(vals)!=2*n:
                        _Fail(i+1,'objective row needs %d numbers' % (2*n))
                    C[r]=np.array(vals[0::2])+1j*np.array(vals[1::2])
                    i+=1
                problem.SetObjective(label,C)
            elif tok[0]=='equation':
                problem.equations.append(HermitianEquation(int(tok[1]),int(tok[2])))
            elif tok[0]=='constraint':
                k=int(tok[1])
                if k!=problem.n_constraints or tok[2]!='rhs':
                    _Fail(i,'constraints must be numbered consecutively from 0')
                problem.rhs.append(float(tok[3]))
            elif tok[0]=='coef':
                label=tok[1]
                n=problem.blocks[label]
                nnz=int(tok[2])
                cols,vals=[],[]
                for _ in range(nnz):
                    a,b,re,im=raw[i].split()
                    cols.append(int(a)*n+int(b))
                    vals.append(np.conj(float(re)+1j*float(im)))
                    i+=1
                row=sparse.csr_matrix((vals,(np.zeros(nnz,dtype=int),cols)),shape=(1,n*n),dtype=complex)
                problem.chunks[label].append((k,row))
            else:
                _Fail(i,'unknown keyword %r' % tok[0])
        except MatrixFileError:
            raise
        except (KeyError,IndexError,ValueError) as err:
            _Fail(i,'malformed entry (%s)' % err)

    if problem is None:
        _Fail(len(raw),'no sense line')
    return problem
