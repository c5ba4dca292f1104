#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import numpy as np

from tempneg.TempNegErrors import DomainError

def PartialTrace(m,shape,keep):
    """Reduced operator on subsystem `keep` ('A' or 'B')."""
    m=np.asarray(m)
    shape.Check(m)
    m4=m.reshape(shape.d_a,shape.d_b,shape.d_a,shape.d_b)
    if keep=='A':
        return np.einsum('ijkj->ik',m4)
    elif keep=='B':
        return np.einsum('ijil->jl',m4)
    else:
        raise DomainError("keep must be 'A' or 'B', got %r" % (keep,))
