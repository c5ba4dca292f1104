#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import os

from tempneg.TempNegErrors import ConfigError
from tempneg.TempNegVariables import SolverConfig

DefaultTol=1e-8

def GetSolverConfig(tol=None,max_iterations=None,verbosity=None):
    """Build a SolverConfig; the tolerance falls back to TM_SOLVER_TOL, then 1e-8."""

    if tol is None:
        envtol=os.environ.get('TM_SOLVER_TOL')
        if envtol is None or envtol.strip()=='':
            tol=DefaultTol
        else:
            try:
                tol=float(envtol)
            except ValueError:
                raise ConfigError('TM_SOLVER_TOL=%r is not a number' % envtol)

    if max_iterations is None:
        max_iterations=200
    if verbosity is None:
        verbosity=0

    return SolverConfig(tol=tol,max_iterations=max_iterations,verbosity=verbosity)
