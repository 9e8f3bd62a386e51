"""Creative telescoping and differential Galois group checks over Q(t)(x).

The heavy lifting lives in the C++ extension ``dgal._core``; this package
adds dict-level convenience over its JSON-string interface.
"""

import json

from ._core import (  # noqa: F401
    DgalError,
    __version__,
    apply_operator,
    canonicalize,
    derivative_t,
    derivative_x,
    run_json,
    telescope,
    verify_json,
)


def run(problem: dict) -> dict:
    """Execute one problem object and return its certificate as a dict."""
    return json.loads(run_json(json.dumps(problem)))


def verify(certificate: dict) -> bool:
    """Independently re-check a certificate produced by :func:`run`."""
    return verify_json(json.dumps(certificate))


__all__ = [
    "DgalError",
    "__version__",
    "apply_operator",
    "canonicalize",
    "derivative_t",
    "derivative_x",
    "run",
    "run_json",
    "telescope",
    "verify",
    "verify_json",
]
