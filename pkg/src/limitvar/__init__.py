"""Equational theory of the monoid A¹×B¹: evaluation, basis, canonical forms, decision."""

from .basis import basis_identities, instantiate, nonidentity_witnesses, verify_basis
from .canonical import CanonicalWord, PerfectSquare, canonicalize, insert_boundary_squares
from .catalog import catalog
from .decider import decide, fast_reject, oracle_decide
from .derivation import DerivationTrace, check_trace, match_instance
from .monoid import Monoid, satisfies
from .words import Identity

__all__ = [
    "CanonicalWord", "DerivationTrace", "Identity", "Monoid", "PerfectSquare",
    "basis_identities", "canonicalize", "catalog", "check_trace", "decide",
    "fast_reject", "insert_boundary_squares", "instantiate", "match_instance", "nonidentity_witnesses",
    "oracle_decide", "satisfies", "verify_basis",
]
