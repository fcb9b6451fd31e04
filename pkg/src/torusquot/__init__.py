"""Exact combinatorics of torus quotients of Schubert cells.

Everything is integer or rational arithmetic: Weyl group elements and
their orders, weight images, the gateway criterion for semistable
cells, torus-invariant cross-ratio coordinates, the symmetric-group
action on them, the stratified quotient of the rank-two family, and
the full-flag quotient map.  A sampling Hilbert-Mumford oracle and the
named suites in :mod:`torusquot.verify` cross-check each piece.
"""

from .schubert import GrassmannElement, semistable_cells, tau_r
from .verify import CheckReport, available_suites, exhaustive_check

__version__ = "0.1.0"

__all__ = [
    "CheckReport",
    "GrassmannElement",
    "available_suites",
    "exhaustive_check",
    "semistable_cells",
    "tau_r",
    "__version__",
]
