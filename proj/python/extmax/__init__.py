"""Exterior-algebra multivectors and generalized Maxwell fields over (k,n) space-times."""

import json

from ._core import (
    Multivector,
    Signature,
    classical_pack,
    classical_unpack,
    cross,
    dof_count,
    dot,
    hodge,
    inv_hodge,
    left_interior,
    lorentz_force,
    null_frequency,
    right_interior,
    sort_with_sign,
    stress_tensor,
    stress_tensor_def,
    trace,
    trace_formula,
    verify_identities,
    wedge,
)
from ._core import _run


def run(command, config=None, **options):
    """Run a CLI subcommand in-process.

    Returns (report, exit_code, summary); report is None on usage errors.
    """
    text, code, summary = _run(command, config or "", **options)
    return (json.loads(text) if text else None), code, summary


__all__ = [
    "Multivector",
    "Signature",
    "classical_pack",
    "classical_unpack",
    "cross",
    "dof_count",
    "dot",
    "hodge",
    "inv_hodge",
    "left_interior",
    "lorentz_force",
    "null_frequency",
    "right_interior",
    "run",
    "sort_with_sign",
    "stress_tensor",
    "stress_tensor_def",
    "trace",
    "trace_formula",
    "verify_identities",
    "wedge",
]
