"""PNG renderings of a block report.  matplotlib is imported here only, so
the rest of the package does not depend on it."""

from __future__ import annotations

from pathlib import Path


def _pyplot():
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    return plt


def _layers(weights: list[str], edges: list[list[str]]) -> dict[str, int]:
    """Depth of each weight: the longest chain of covers from a maximal one."""
    depth = {w: 0 for w in weights}
    # weights are listed top down, so one pass in order settles every depth
    for w in weights:
        for a, b in edges:
            if a == w:
                depth[b] = max(depth[b], depth[w] + 1)
    return depth


def hasse_figure(report: dict, path: Path) -> Path:
    plt = _pyplot()
    weights = report["poset"]["weights"]
    edges = report["poset"]["edges"]
    depth = _layers(weights, edges)
    by_layer: dict[int, list[str]] = {}
    for w in weights:
        by_layer.setdefault(depth[w], []).append(w)
    pos = {}
    for d, ws in by_layer.items():
        for k, w in enumerate(ws):
            pos[w] = (k - (len(ws) - 1) / 2, -d)
    fig, ax = plt.subplots(figsize=(4, 0.45 * (max(depth.values()) + 2)))
    for a, b in edges:
        (x0, y0), (x1, y1) = pos[a], pos[b]
        ax.annotate("", xy=(x1, y1), xytext=(x0, y0),
                    arrowprops=dict(arrowstyle="->", color="0.4", shrinkA=9, shrinkB=9))
    for w, (x, y) in pos.items():
        ax.text(x, y, f"({w})", ha="center", va="center", fontsize=7,
                bbox=dict(boxstyle="round", fc="white", ec="0.6"))
    ax.set_xlim(-1.5, 1.5)
    ax.set_ylim(-max(depth.values()) - 0.7, 0.7)
    ax.axis("off")
    ax.set_title(f"block {report['block']} of {report['sig']}", fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def flag_figure(report: dict, kind: str, path: Path) -> Path:
    """Heads as rows, flag weights as columns, multiplicity as colour."""
    plt = _pyplot()
    flags = report[kind]
    heads = [r["head"] for r in flags]
    cols = list(heads)
    for r in flags:
        for w, _ in r["rows"]:
            if w not in cols:
                cols.append(w)
    index = {w: k for k, w in enumerate(cols)}
    grid = [[0] * len(cols) for _ in heads]
    for i, r in enumerate(flags):
        for w, m in r["rows"]:
            grid[i][index[w]] = m
    fig, ax = plt.subplots(figsize=(0.32 * len(cols) + 2, 0.3 * len(heads) + 1.5))
    ax.imshow(grid, cmap="Greys", vmin=0, vmax=max(1, max(max(row) for row in grid)))
    ax.set_xticks(range(len(cols)), cols, rotation=90, fontsize=6)
    ax.set_yticks(range(len(heads)), heads, fontsize=6)
    ax.set_title(f"{kind} multiplicities", fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def write_figures(report: dict, directory: Path) -> list[str]:
    directory.mkdir(parents=True, exist_ok=True)
    out = [hasse_figure(report, directory / "poset.png")]
    for kind in ("tilting", "verma", "projective"):
        out.append(flag_figure(report, kind, directory / f"{kind}.png"))
    return [str(p) for p in out]
