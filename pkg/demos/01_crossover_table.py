"""Crossover horizons and Sharpe ratios.

For an asset with annualized drift mu and volatility sigma, diffusion
dominates the outcome up to the crossover horizon (sigma/mu)^2 years; beyond
it the drift takes over.  Low-risk bonds cross within months, equity indexes
within years to decades -- which is exactly why equities are long-horizon
investments.
"""

from _common import OUT, reference_universe

from marketpaths import write_report
from marketpaths.stats import crossover_table

cma = reference_universe()
report = crossover_table(cma)
curve = report.curve("crossover")

print(f"{'asset':14s} {'class':12s} {'mu':>7s} {'sigma':>7s} {'cross-over':>11s} {'Sharpe':>7s}")
for i, (aid, cls) in enumerate(zip(cma.asset_ids, cma.asset_classes)):
    print(
        f"{aid:14s} {cls:12s} {curve.values['mu_annual'][i]:7.3f} "
        f"{curve.values['sigma_annual'][i]:7.3f} "
        f"{curve.values['crossover_years'][i]:9.2f} y "
        f"{curve.values['sharpe'][i]:7.2f}"
    )

files = write_report(report, OUT / "crossover.csv")
print("\nwrote", *files)
