"""Exact checks for Novikov and pre-Novikov structures.

Scalars go in as int, str ("-1/2") or Fraction and come back as Fraction.
Tables are nested lists t[i][j][k]: coefficient of e_k in e_i·e_j.
"""

from fractions import Fraction
import json

from . import _core
from ._core import Refused, canonicalize, bundle_kind, equation_label

__all__ = [
    "Refused",
    "bundle_kind",
    "canonicalize",
    "check_bialgebra",
    "check_novikov",
    "check_pre_novikov",
    "coboundary_maps",
    "equation_label",
    "run",
    "search_symmetric_ybe",
    "ybe_residual",
]


def _fractions(x):
    if isinstance(x, str):
        return Fraction(x)
    return [_fractions(y) for y in x]


def check_novikov(op):
    return json.loads(_core.check_novikov(op))


def check_pre_novikov(lhd, rhd):
    return json.loads(_core.check_pre_novikov(lhd, rhd))


def check_bialgebra(lhd, rhd, alpha, beta):
    return json.loads(_core.check_bialgebra(lhd, rhd, alpha, beta))


def ybe_residual(lhd, rhd, r):
    """Flat list, index (i*n + j)*n + k."""
    return _fractions(_core.ybe_residual(lhd, rhd, r))


def coboundary_maps(lhd, rhd, r):
    alpha, beta = _core.coboundary_maps(lhd, rhd, r)
    return _fractions(alpha), _fractions(beta)


def search_symmetric_ybe(lhd, rhd, values, budget=2_000_000, workers=0):
    return _fractions(_core.search_symmetric_ybe(lhd, rhd, values, budget, workers))


def run(*args):
    """Run a CLI command in-process; returns (exit_code, stdout, stderr)."""
    return _core.run([str(a) for a in args])
