"""Figure rendering for CLI reports (matplotlib, Agg backend).

Each helper writes a PNG next to the delimited output of the corresponding
report; figures are presentation artifacts and carry no data beyond what
the text output already contains.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def _style(ax, title, xlabel, ylabel):
    ax.set_title(title, fontsize=11)
    ax.set_xlabel(xlabel, fontsize=9)
    ax.set_ylabel(ylabel, fontsize=9)
    ax.tick_params(labelsize=8)


def multiplicity_heatmap(rows, path, title="tilting multiplicities",
                         xlabel="socle weight", ylabel="highest weight"):
    """rows: iterables (lam, mu, mult); renders a sparse integer heatmap."""
    rows = list(rows)
    if not rows:
        return None
    lam_max = max(r[0] for r in rows)
    mu_max = max(r[1] for r in rows)
    grid = [[0] * (mu_max + 1) for _ in range(lam_max + 1)]
    for lam, mu, m in rows:
        grid[lam][mu] = m
    fig, ax = plt.subplots(figsize=(5.2, 4.4), dpi=130)
    im = ax.imshow(grid, origin="lower", cmap="Blues", interpolation="nearest",
                   aspect="auto")
    fig.colorbar(im, ax=ax, shrink=0.85)
    _style(ax, title, xlabel, ylabel)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path


def dims_bar(dims, path, title="graded dimensions", xlabel="degree"):
    fig, ax = plt.subplots(figsize=(4.8, 3.4), dpi=130)
    ax.bar(range(len(dims)), dims, color="#4878a8")
    _style(ax, title, xlabel, "dimension")
    ax.set_xticks(range(len(dims)))
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path


def ext_heatmap(dim_map, path, title="Ext dimensions"):
    """dim_map: {(k, n): dim} with cohomological k and internal n."""
    if not dim_map:
        return None
    ks = sorted({k for (k, _) in dim_map})
    ns = sorted({n for (_, n) in dim_map})
    grid = [[dim_map.get((k, n), 0) for n in ns] for k in ks]
    fig, ax = plt.subplots(figsize=(4.8, 3.6), dpi=130)
    im = ax.imshow(grid, origin="lower", cmap="Purples", interpolation="nearest",
                   aspect="auto")
    ax.set_xticks(range(len(ns)))
    ax.set_xticklabels([str(n) for n in ns])
    ax.set_yticks(range(len(ks)))
    ax.set_yticklabels([str(k) for k in ks])
    fig.colorbar(im, ax=ax, shrink=0.85)
    _style(ax, title, "internal shift n", "cohomological degree k")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path
