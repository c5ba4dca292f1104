#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""MatrixFile JSON: {"dims": [d_a, d_b], "matrix": [[re, im], ...]} with the
(d_a d_b)^2 entries in row-major order. Numbers are written as shortest
round-trip decimals, so files are bit-stable across runs."""

import json
from pathlib import Path

import numpy as np

from tempneg.CheckOperator import CheckHermitian, CheckState
from tempneg.TempNegErrors import MatrixFileError
from tempneg.TempNegVariables import BipartiteShape, NamedOperator, InputHermTol, InputTraceTol

def _Number(x,where):
    if isinstance(x,bool) or not isinstance(x,(int,float)):
        raise MatrixFileError('%s: entries must be numbers, got %r' % (where,x))
    return float(x)

def ParseMatrixFile(data,label='matrix'):
    """Validate a decoded MatrixFile object and return (matrix, shape)."""
    if not isinstance(data,dict) or 'dims' not in data or 'matrix' not in data:
        raise MatrixFileError('%s: expected an object with fields dims and matrix' % label)
    dims=data['dims']
    if (not isinstance(dims,list) or len(dims)!=2
            or not all(isinstance(d,int) and not isinstance(d,bool) and d>0 for d in dims)):
        raise MatrixFileError('%s: dims must be two positive integers, got %r' % (label,dims))
    shape=BipartiteShape(dims[0],dims[1])
    n=shape.dim
    entries=data['matrix']
    if not isinstance(entries,list) or len(entries)!=n*n:
        raise MatrixFileError('%s: matrix must hold (d_a d_b)^2 = %d entries, got %s'
                              % (label,n*n,len(entries) if isinstance(entries,list) else type(entries).__name__))
    vals=np.empty(n*n,dtype=complex)
    for k,e in enumerate(entries):
        if not isinstance(e,list) or len(e)!=2:
            raise MatrixFileError('%s: entry %d must be a [re, im] pair, got %r' % (label,k,e))
        vals[k]=complex(_Number(e[0],'%s entry %d' % (label,k)),_Number(e[1],'%s entry %d' % (label,k)))
    if not np.all(np.isfinite(vals)):
        raise MatrixFileError('%s: entries must be finite' % label)
    return vals.reshape(n,n),shape

def ReadMatrixFile(path,expect_state=True):
    """Read a MatrixFile into a NamedOperator labelled by the file stem.

    With expect_state the matrix must be Hermitian to 1e-10, PSD and of unit
    trace; otherwise only Hermiticity is required.
    """
    path=Path(path)
    with open(path) as jsonfile:
        try:
            data=json.load(jsonfile)
        except json.JSONDecodeError as err:
            raise MatrixFileError('%s is not valid JSON: %s' % (path,err))
    m,shape=ParseMatrixFile(data,str(path))
    if expect_state:
        m=CheckState(m,InputTraceTol,name=str(path))
    else:
        m=CheckHermitian(m,InputHermTol,name=str(path))
    return NamedOperator(m,shape,path.stem,expect_state)

def _Real(x):
    return float(x)+0. # no negative zeros

def MatrixFileText(matrix,shape):
    """The MatrixFile JSON text of a matrix, newline terminated."""
    matrix=np.asarray(matrix,dtype=complex)
    shape.Check(matrix)
    entries=[[_Real(z.real),_Real(z.imag)] for z in matrix.reshape(-1)]
    return json.dumps({'dims':[shape.d_a,shape.d_b],'matrix':entries})+'\n'

def WriteMatrixFile(path,matrix,shape):
    with open(path,'w') as f:
        f.write(MatrixFileText(matrix,shape))
