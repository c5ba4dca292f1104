#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Kronecker products and the reordering that keeps tensor powers bipartite.

The computational basis is row-major, |i>_A|j>_B -> i*d_b+j. A plain Kronecker
product of two bipartite operators is ordered A1 B1 A2 B2; BipartiteTensor
reorders it to A1 A2 | B1 B2 so that partial operations act on B1 B2 jointly.
"""

from functools import reduce

import numpy as np

from tempneg.TempNegErrors import DomainError
from tempneg.TempNegVariables import BipartiteShape

def Tensor(a,b):
    return np.kron(np.asarray(a,dtype=complex),np.asarray(b,dtype=complex))

def CopyPermutation(shapes):
    """Index map from A1 B1 A2 B2 ... ordering to A1 A2 ... | B1 B2 ... ordering.

    Parameters
    ----------
    shapes : list of BipartiteShape
        One shape per tensor factor, in Kronecker order.

    Returns
    -------
    numpy.ndarray
        perm such that M[np.ix_(perm,perm)] is the reordered operator.
    """
    dims=[]
    for s in shapes:
        dims+=[s.d_a,s.d_b]
    k=len(shapes)
    order=list(range(0,2*k,2))+list(range(1,2*k,2))
    return np.arange(int(np.prod(dims))).reshape(dims).transpose(order).reshape(-1)

def BipartiteTensor(a,shape_a,b,shape_b):
    """Tensor product of two bipartite operators, regrouped as (A1A2)|(B1B2)."""
    perm=CopyPermutation([shape_a,shape_b])
    m=Tensor(a,b)[np.ix_(perm,perm)]
    return m,BipartiteShape(shape_a.d_a*shape_b.d_a,shape_a.d_b*shape_b.d_b)

def BipartiteTensorPower(a,shape,n):
    if n<1:
        raise DomainError('tensor power needs n >= 1, got %r' % n)
    perm=CopyPermutation([shape]*n)
    m=reduce(Tensor,[a]*n)[np.ix_(perm,perm)]
    return m,BipartiteShape(shape.d_a**n,shape.d_b**n)
