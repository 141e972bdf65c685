"""Invariants of finite groups acting on the quantum and Jordan planes."""

from ._ncinv import *  # noqa: F401,F403
from ._ncinv import InternalInconsistency, Algebra, Group, Presentation  # noqa: F401
