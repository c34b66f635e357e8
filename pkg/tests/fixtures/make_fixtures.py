"""Regenerate the graph6 fixture streams (deterministic)."""

import random
from pathlib import Path

import networkx as nx

HERE = Path(__file__).parent


def g6(h) -> str:
    return nx.to_graph6_bytes(h, header=False).decode("ascii").strip()


def main():
    atlas = [h for h in nx.graph_atlas_g() if h.number_of_nodes() >= 1]
    connected = [h for h in atlas if nx.is_connected(h)]
    le5 = [g6(h) for h in connected if h.number_of_nodes() <= 5]
    n4 = [g6(h) for h in connected if h.number_of_nodes() == 4]
    (HERE / "connected_le5.g6").write_text("\n".join(le5) + "\n")
    (HERE / "connected_n4.g6").write_text("\n".join(n4) + "\n")

    rng = random.Random(20240611)
    sample = []
    while len(sample) < 50:
        h = nx.gnp_random_graph(6, rng.uniform(0.25, 0.75), seed=rng.randrange(2**32))
        if nx.is_connected(h):
            sample.append(g6(h))
    (HERE / "random_n6.g6").write_text("\n".join(sample) + "\n")


if __name__ == "__main__":
    main()
