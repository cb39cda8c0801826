"""Python access to the hrgraph library."""

import json

from ._hrgraph import (  # noqa: F401
    Error,
    KGraph,
    PreconditionError,
    braiding,
    keys,
    suites,
)
from ._hrgraph import verify as _verify


def verify(suite, algebras=()):
    """Run a verification suite and return the parsed report."""
    return json.loads(_verify(suite, list(algebras)))
