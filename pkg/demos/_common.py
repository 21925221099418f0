"""Shared helpers for the demo scripts: an output directory, a small
reference universe, and optional plotting."""

from pathlib import Path

import numpy as np

import marketpaths as mp

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)


def reference_universe() -> mp.CmaParameters:
    """A compact three-class universe with plausible annualized assumptions."""
    return mp.CmaParameters(
        asset_ids=("world_equity", "agg_bonds", "hedge_funds"),
        asset_classes=("Equity", "FixedIncome", "Alternative"),
        mu_annual=np.array([0.089, 0.032, 0.046]),
        sigma_annual=np.array([0.166, 0.042, 0.089]),
        correlation=np.array(
            [[1.0, 0.15, 0.55], [0.15, 1.0, 0.10], [0.55, 0.10, 1.0]]
        ),
    )


def single_equity() -> mp.CmaParameters:
    return mp.CmaParameters(
        asset_ids=("world_equity",),
        asset_classes=("Equity",),
        mu_annual=np.array([0.089]),
        sigma_annual=np.array([0.166]),
        correlation=np.eye(1),
    )


def maybe_pyplot():
    try:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt

        return plt
    except ImportError:
        return None
