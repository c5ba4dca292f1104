#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import numpy as np

def PartialTranspose(m,shape):
    """Transpose the B factor: <i j|out|k l> = <i l|m|k j>."""
    m=np.asarray(m)
    shape.Check(m)
    da,db=shape.d_a,shape.d_b
    return m.reshape(da,db,da,db).swapaxes(1,3).reshape(shape.dim,shape.dim)
