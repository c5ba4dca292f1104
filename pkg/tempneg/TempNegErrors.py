#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Exceptions raised by the tempneg package.

Solver degradation is not an exception; it is carried by SdpSolution.status.
"""


class TempNegError(Exception):
    """Base class for every error raised on purpose by tempneg."""


class DimensionError(TempNegError, ValueError):
    """Matrix dimensions do not match the bipartite shape or each other."""


class DomainError(TempNegError, ValueError):
    """A scalar parameter lies outside its documented range."""


class ContractViolation(TempNegError, ValueError):
    """An input matrix fails a documented contract (Hermitian, state, ...)."""


class UnsupportedMapError(TempNegError):
    """No certified route exists for the requested map kind or cone."""


class ConfigError(TempNegError, ValueError):
    """Solver configuration out of range or unparsable."""


class MatrixFileError(TempNegError, ValueError):
    """Malformed MatrixFile JSON or SDP dump."""
