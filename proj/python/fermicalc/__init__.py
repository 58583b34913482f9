"""Exterior and Clifford algebra kernel with Berezin expectation and ordering maps.

Scalars live in Q(i, sqrt2) and are exact. Build a ``Context`` from a
``Structure`` and call ``expectation``, ``nu`` and friends on ``Multivector``
values, or use ``eval`` with the expression language of the command line tool.
"""

import json

from ._fermicalc import (
    CliffordElement,
    ConfigError,
    Context,
    DivisionByZero,
    EvalError,
    InvalidStructure,
    Multivector,
    ParseError,
    Polarity,
    Scalar,
    Structure,
    Vector,
    cl_mul,
    det_inner,
    eval,
    ext_exp,
    from_vector,
    grade_automorphism,
    star,
    to_multivector,
    trace,
    tracial_inner,
    verify_json,
    wedge,
)


def verify(M=2, trials=50, seed=1, backend="exact", structure="standard", jobs=1):
    """Run the identity suite and return the report as a dict."""
    return json.loads(verify_json(M, trials, seed, backend, structure, jobs))


__all__ = [
    "CliffordElement",
    "ConfigError",
    "Context",
    "DivisionByZero",
    "EvalError",
    "InvalidStructure",
    "Multivector",
    "ParseError",
    "Polarity",
    "Scalar",
    "Structure",
    "Vector",
    "cl_mul",
    "det_inner",
    "eval",
    "ext_exp",
    "from_vector",
    "grade_automorphism",
    "star",
    "to_multivector",
    "trace",
    "tracial_inner",
    "verify",
    "wedge",
]
