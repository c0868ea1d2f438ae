"""Exact Chevalley operators on Satake cohomology.

Coweights are given in fundamental-coweight coordinates, either as a list of
integers or as a comma-separated string.
"""

import json

from . import _satake
from ._satake import CapExceeded, LefschetzError, character, classify, run_cli, support_feasible, weyl_dimension

__all__ = [
    "CapExceeded",
    "LefschetzError",
    "build",
    "cells",
    "character",
    "classify",
    "decompose",
    "run_cli",
    "support_feasible",
    "verify",
    "verify_file",
    "weyl_dimension",
]


def _coords(c):
    return c if isinstance(c, str) else ",".join(str(int(x)) for x in c)


def build(type, coweight, cap=None):
    """Module document for the IC cohomology with highest weight `coweight`."""
    return json.loads(_satake.build(type, _coords(coweight), cap))


def verify(type, coweight, cap=None):
    """Verification report for the built module."""
    return json.loads(_satake.verify(type, _coords(coweight), cap))


def verify_file(path, coweight=None):
    """Verification report for a module document on disk."""
    return json.loads(_satake.verify_file(str(path), "" if coweight is None else _coords(coweight)))


def cells(type, coweight):
    """Case tables and word feasibility for a minuscule or quasi-minuscule coweight."""
    return json.loads(_satake.cells(type, _coords(coweight)))


def decompose(type, coweight, coweight2, cap=None):
    """Simple constituents of V(coweight) (x) V(coweight2)."""
    return json.loads(_satake.decompose(type, _coords(coweight), _coords(coweight2), cap))
