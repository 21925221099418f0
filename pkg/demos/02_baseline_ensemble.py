"""The constant/constant/normal baseline walk.

Simulates the plain multiplicative random walk for one equity index and
shows the signature of a memoryless process: the annualized mean drift and
the annualized dispersion of terminal wealth are both flat in the horizon,
while the 5% quantile first dips (diffusion regime) and then climbs through
its crossover (drift regime).
"""

import numpy as np
from _common import OUT, maybe_pyplot, single_equity

import marketpaths as mp

cma = single_equity()
grid = mp.TimeGrid(n_steps=240)  # 20 years, monthly
horizons = list(range(1, 21))

result = mp.simulate_ensemble(mp.ProcessSpec(), cma, grid, n_paths=20_000,
                              master_seed=101, workers=1)
report = mp.wealth_statistics(result, horizons)
vals = report.curves[0].values

print(f"{'years':>5s} {'drift':>8s} {'stddev':>8s} {'VaR 5%':>8s} {'VaR 1%':>8s} {'ratio':>6s}")
for i, h in enumerate(horizons):
    print(
        f"{h:5d} {vals['mean_drift_annual'][i]:8.4f} {vals['stddev_annual'][i]:8.4f} "
        f"{vals['var_05'][i]:8.3f} {vals['var_01'][i]:8.3f} {vals['var_ratio'][i]:6.3f}"
    )
print(f"\ninputs: mu={cma.mu_annual[0]}, sigma={cma.sigma_annual[0]} "
      "(both curves should sit at these levels)")

files = mp.write_report(report, OUT / "baseline_wealth.csv")
print("wrote", *files)

plt = maybe_pyplot()
if plt:
    fig, axes = plt.subplots(1, 3, figsize=(12, 3.5))
    axes[0].plot(horizons, vals["mean_drift_annual"], marker="o")
    axes[0].axhline(cma.mu_annual[0], ls="--", c="gray")
    axes[0].set_title("annualized mean drift")
    axes[1].plot(horizons, vals["stddev_annual"], marker="o")
    axes[1].axhline(cma.sigma_annual[0], ls="--", c="gray")
    axes[1].set_title("annualized dispersion")
    axes[2].plot(horizons, vals["var_05"], marker="o", label="VaR 5%")
    axes[2].plot(horizons, vals["var_01"], marker="s", label="VaR 1%")
    axes[2].axhline(1.0, ls="--", c="gray")
    axes[2].set_title("terminal wealth quantiles")
    axes[2].legend()
    for ax in axes:
        ax.set_xlabel("horizon (years)")
    fig.tight_layout()
    fig.savefig(OUT / "baseline_wealth.png", dpi=120)
    print("wrote", OUT / "baseline_wealth.png")
