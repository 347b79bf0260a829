"""Equivariant L-values and class formulas for t-modules over F_q[t].

The heavy lifting is in the C++ core; this package re-exports it and adds
a small convenience wrapper around ``run``.
"""

import json

from ._core import (
    REPORT_SCHEMA,
    ConfigError,
    ContextError,
    GroupRingError,
    PrecisionError,
    TModuleError,
    class_formula,
    euler_product,
    exp_coefficients,
    parse_config_text,
    primes,
    render_config_text,
    trace_check_qpower,
    zeta_monic_sum,
)
from ._core import run as _run


def run(command, **options):
    """Run a pipeline the way the CLI does; returns (verdict, report dict).

    Keyword names follow the CLI flags with dashes turned into underscores,
    e.g. ``run("zeta", q=2, carlitz=1, prec=8)``.
    """
    config = {key.replace("_", "-"): _text(value) for key, value in options.items()}
    config["command"] = command
    out = _run(config)
    return out["verdict"], json.loads(out["json"])


def _text(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (dict, list)):
        return json.dumps(value)
    return str(value)


__all__ = [
    "REPORT_SCHEMA",
    "ConfigError",
    "ContextError",
    "GroupRingError",
    "PrecisionError",
    "TModuleError",
    "class_formula",
    "euler_product",
    "exp_coefficients",
    "parse_config_text",
    "primes",
    "render_config_text",
    "run",
    "trace_check_qpower",
    "zeta_monic_sum",
]
