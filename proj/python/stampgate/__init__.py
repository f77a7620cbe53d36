import json

from ._core import (
    StampgateError,
    block_duration,
    capacity,
    header_bytes,
    header_digest,
    normalize,
    predict_stamp_savings,
    run,
    signature_checksum,
    validate,
)


def simulate(scenario, seed=None):
    """Run a scenario given as a dict or JSON text; returns the report as a dict."""
    text = scenario if isinstance(scenario, str) else json.dumps(scenario)
    return json.loads(run(text, seed))


__all__ = [
    "StampgateError",
    "block_duration",
    "capacity",
    "header_bytes",
    "header_digest",
    "normalize",
    "predict_stamp_savings",
    "run",
    "signature_checksum",
    "simulate",
    "validate",
]
