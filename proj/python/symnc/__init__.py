from ._symnc import (
    SymncError,
    complex_summary,
    condition,
    construct,
    count,
    crossing,
    enumerate_collections,
    export,
    quiver_summary,
    stage_block,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "SymncError",
    "complex_summary",
    "condition",
    "construct",
    "count",
    "crossing",
    "enumerate_collections",
    "export",
    "quiver_summary",
    "stage_block",
    "verify",
]
