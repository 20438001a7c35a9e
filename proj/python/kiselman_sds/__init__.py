"""Kiselman semigroups, Hecke-Kiselman monoids and sequential dynamical systems."""

from ._core import (
    GuardExceeded,
    InvalidArgument,
    KsdsError,
    ParseError,
    Word,
    canonical_form,
    canonical_form_restricted,
    dynamics_size,
    enumerate_kn,
    hk_size,
    is_canonical,
    is_quasi_subword,
    is_subword,
    join,
    kn_multiply,
    suffix_split,
    sweep,
    truncate,
    universal_state_sizes,
    verify_theorem,
)

__all__ = [
    "GuardExceeded",
    "InvalidArgument",
    "KsdsError",
    "ParseError",
    "Word",
    "canonical_form",
    "canonical_form_restricted",
    "dynamics_size",
    "enumerate_kn",
    "hk_size",
    "is_canonical",
    "is_quasi_subword",
    "is_subword",
    "join",
    "kn_multiply",
    "suffix_split",
    "sweep",
    "truncate",
    "universal_state_sizes",
    "verify_theorem",
]
