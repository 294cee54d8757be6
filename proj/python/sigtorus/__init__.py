"""Signatures and nullities of colored links on the torus."""

import json

from ._core import (
    IoError,
    Link,
    SigtorusError,
    default_tolerance,
    inertia,
    oracle_torus,
    rho_ell,
    signature_nullity,
    slope,
    tau_ell,
)
from . import _core

__all__ = [
    "IoError",
    "Link",
    "SigtorusError",
    "default_tolerance",
    "directional_limit",
    "inertia",
    "oracle_torus",
    "predict_torres",
    "rho_ell",
    "signature_nullity",
    "slope",
    "tau_ell",
    "verify",
]


def directional_limit(link, omega_rest, side="plus", tol=None):
    """Limit of sigma as omega_1 -> 1 from one side; dict with value (None if unstable) and samples."""
    tol = default_tolerance() if tol is None else tol
    return json.loads(_core.directional_limit_json(link, omega_rest, side, tol))


def verify(link, suite="all", samples=20, seed=1, tol=None):
    tol = default_tolerance() if tol is None else tol
    return json.loads(_core.verify_json(link, suite, samples, seed, tol))


def predict_torres(link, omega_rest, tol=None):
    tol = default_tolerance() if tol is None else tol
    return json.loads(_core.predict_torres_json(link, omega_rest, tol))
