"""Double controlled cone metric spaces: axiom falsification and fixed-point runs.

Thin wrapper over the C++ extension. Report-producing calls return
``(report_dict, exit_code)`` with the same exit-code contract as the CLI.
"""

import json

from . import _dccm
from ._dccm import (
    DomainError,
    alpha,
    apply_map,
    beta,
    metric,
    nonnormal_family_norms,
    space_ids,
)

__all__ = [
    "DomainError",
    "alpha",
    "apply_map",
    "beta",
    "estimate",
    "metric",
    "nonnormal_family_norms",
    "solve",
    "space_ids",
    "summary",
    "verify",
]


def verify(space, mode="exhaustive", n_samples=10_000, seed=0):
    text, code = _dccm.verify(space, mode, n_samples, seed)
    return json.loads(text), code


def estimate(space, map, family="banach", n_samples=10_000, seed=0, grid_step=1.0 / 48.0):
    return json.loads(_dccm.estimate(space, map, family, n_samples, seed, grid_step))


def solve(space, map, family="banach", x0=None, n_samples=10_000, seed=0, tol=1e-9,
          max_iter=10_000, grid_step=1.0 / 48.0):
    text, code = _dccm.solve(space, map, family, x0, n_samples, seed, tol, max_iter, grid_step)
    return json.loads(text), code


def summary(reports):
    """CSV summary of report dicts or raw report texts."""
    texts = [r if isinstance(r, str) else json.dumps(r, indent=2, sort_keys=True) + "\n"
             for r in reports]
    return _dccm.summary(texts)
