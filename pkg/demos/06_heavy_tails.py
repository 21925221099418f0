"""Skewed heavy-tailed innovations.

Draws one million innovations from the normal law and from the chi-square
mixture at several tail indexes and skews, then compares folded cdfs: the
mixture keeps exactly zero mean and unit variance while adding power-law
tails and a negative-side asymmetry (down moves larger than up moves).
"""

import numpy as np
from _common import OUT, maybe_pyplot

import marketpaths as mp
from marketpaths import StatCurve, StatReport

N = 1_000_000
stream = mp.RngStream(61, 0)
z = stream.normals((N, 1))

samples = {"normal": z[:, 0]}
for nu, gamma in ((8.0, 0.0), (8.0, -0.3), (5.0, -0.3)):
    params = mp.build_student_params(nu, [gamma])
    w = mp.sample_mixing(mp.RngStream(62, int(nu * 10 + gamma * 10)), nu, N)
    eps = mp.student_innovations(z, w, params)[:, 0]
    samples[f"nu={nu:g}, gamma={gamma:+.1f}"] = eps

curves = []
print(f"{'law':>20s} {'mean':>9s} {'var':>7s} {'skew':>7s} {'ex.kurt':>8s}")
for label, s in samples.items():
    f = mp.folded_cdf(s)
    stride = max(1, len(f.x) // 4000)  # thin the cdf for the report
    curves.append(StatCurve(f"fcdf[{label}]", "value", f.x[::stride],
                            {"fold": f.fold[::stride]}))
    print(
        f"{label:>20s} {np.mean(s):+9.4f} {np.var(s):7.3f} "
        f"{np.mean(s**3):+7.3f} {np.mean(s**4) / np.var(s)**2 - 3:8.2f}"
    )

report = StatReport(title="innovation_tails", curves=tuple(curves))
print("wrote", *mp.write_report(report, OUT / "innovation_tails.csv"))

plt = maybe_pyplot()
if plt:
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for c in curves:
        ax.semilogy(c.x, c.values["fold"], label=c.name[5:-1], lw=1.2)
    ax.set_xlim(-8, 8)
    ax.set_ylim(1e-6, 0.6)
    ax.set_xlabel("innovation")
    ax.set_ylabel("folded cdf")
    ax.legend()
    fig.tight_layout()
    fig.savefig(OUT / "innovation_tails.png", dpi=120)
    print("wrote", OUT / "innovation_tails.png")
