"""Central-binomial series, finite harmonic sums, and colored multiple zeta
values, with an identity-verification registry.

Values cross the C++ boundary as decimal strings at the requested precision;
the helpers below convert to float for quick interactive use.
"""

from _zetalab import (  # noqa: F401
    cmzv,
    dual,
    eval_series,
    eval_series_integral,
    explain,
    finsum,
    mtv,
    registry_ids,
    verify_json,
)

__all__ = [
    "cmzv",
    "dual",
    "eval_series",
    "eval_series_float",
    "eval_series_integral",
    "explain",
    "finsum",
    "mtv",
    "registry_ids",
    "verify",
    "verify_json",
]


def eval_series_float(spec, digits=32, budget=1000000):
    """Evaluate a series spec and return (value, err) as floats."""
    r = eval_series(spec, digits, budget)
    return float(r["value"]), float(r["err"])


def verify(filter="*", workers=1):
    """Run the identity registry and return the report as a list of dicts."""
    import json

    return json.loads(verify_json(filter, workers))
