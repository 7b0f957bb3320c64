"""Squarefree monomial ideals, NCI detection and Betti tables."""

from ._core import (
    REFERENCE_NCI,
    NcilabError,
    analyze,
    betti,
    bounds,
    check,
    decompose,
    gn_family,
    invert,
    join,
    matching,
    normalize,
    render_betti,
    selftest,
    status,
)

__all__ = [
    "REFERENCE_NCI",
    "NcilabError",
    "analyze",
    "betti",
    "bounds",
    "check",
    "decompose",
    "gn_family",
    "invert",
    "join",
    "matching",
    "normalize",
    "render_betti",
    "selftest",
    "status",
]
