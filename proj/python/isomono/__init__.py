"""Isomonodromic families: exact verification and numerics."""

import json

from ._isomono import (
    IsomonoError,
    cubic_eval,
    derived_flow,
    enumerate_families,
    family_json,
    family_keys,
    good_cyclic_count,
    hamiltonian_holds,
    integrate_flow,
    isomonodromy_residual,
    run_suite,
    second_order_holds,
    smooth_fibre,
    zero_curvature_holds,
)


def family(key):
    """Registry entry as a dict."""
    return json.loads(family_json(key))


def suite(name, seed=1, tol=1e-10):
    """Run a verification suite and return the parsed report."""
    return json.loads(run_suite(name, seed, tol))


__all__ = [
    "IsomonoError",
    "cubic_eval",
    "derived_flow",
    "enumerate_families",
    "family",
    "family_json",
    "family_keys",
    "good_cyclic_count",
    "hamiltonian_holds",
    "integrate_flow",
    "isomonodromy_residual",
    "run_suite",
    "second_order_holds",
    "smooth_fibre",
    "suite",
    "zero_curvature_holds",
]
