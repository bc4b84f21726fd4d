import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import networkx as nx  # noqa: E402
import seaborn as sns  # noqa: E402

RANK_COLORS = ["#0F2E4C", "#2C5F8E", "#4A90C2", "#7FB3DD", "#B5D3EE"]


def hasse_layout(poset):
    """Positions with y = rank and elements of one rank spread evenly on x"""
    pos = {}
    if not len(poset):
        return pos
    for r in range(poset.rank + 1):
        level = poset.rank_level(r)
        width = len(level)
        for k, i in enumerate(level):
            pos[poset.elements[i]] = (k - (width - 1) / 2, r)
    return pos


def create_hasse_figure(poset, title=None, highlight=None):
    """Static Hasse diagram; highlighted labels are drawn in red"""
    graph = nx.DiGraph()
    graph.add_nodes_from(poset.elements)
    graph.add_edges_from((poset.elements[i], poset.elements[j]) for i, j in poset.covers)
    pos = hasse_layout(poset)
    highlight = set(highlight or ())

    fig, ax = plt.subplots(figsize=(max(4, len(poset) * 0.6), max(3, (poset.rank + 1) * 1.2 if len(poset) else 3)))
    if len(poset):
        colors = [
            "#F44336" if x in highlight else RANK_COLORS[int(poset.ranks[poset.index(x)]) % len(RANK_COLORS)]
            for x in graph.nodes
        ]
        nx.draw_networkx_edges(graph, pos, ax=ax, arrows=False, edge_color="#888888")
        nx.draw_networkx_nodes(graph, pos, ax=ax, node_color=colors, node_size=500)
        nx.draw_networkx_labels(graph, pos, ax=ax, font_color="white", font_size=8)
    ax.set_title(title or f"Hasse diagram ({len(poset)} elements)")
    ax.axis("off")
    fig.tight_layout()
    return fig


def create_betti_heatmap(table, title=None):
    """Betti diagram as an annotated heatmap, rows j - i and columns i"""
    frame = table.to_frame()
    fig, ax = plt.subplots(figsize=(max(4, 0.7 * frame.shape[1] + 2), max(2.5, 0.6 * frame.shape[0] + 1.5)))
    sns.heatmap(frame, annot=True, fmt="d", cmap="Blues", cbar=False, linewidths=0.5, ax=ax)
    ax.set_title(title or f"Betti table (pd {table.pd}, reg {table.reg})")
    fig.tight_layout()
    return fig


def save_figure(fig, path):
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
