"""Exact membership tests for powers, integral closures and symbolic powers of monomial ideals."""

from ._monpow import *  # noqa: F401,F403
from ._monpow import GuardError, InvariantViolation, MonomialIdeal, Hypergraph  # noqa: F401

__version__ = "0.1.0"
