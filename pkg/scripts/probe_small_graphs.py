"""Exhaustively look for antimagic orientations of every small graph.

Walks the networkx graph atlas (all graphs on up to 7 vertices), keeps those
with no isolated vertices and at most ``--max-edges`` edges, and reports any
graph for which the search finds no antimagic orientation.

    python scripts/probe_small_graphs.py --max-edges 7
"""
import argparse
import sys
import time

import networkx as nx

from antimagic.graph_core import UndirectedGraph
from antimagic.oracle import SearchLimits, search


def to_graph(h):
    nodes = sorted(h.nodes)
    idx = {v: i for i, v in enumerate(nodes, start=1)}
    return UndirectedGraph(len(nodes), tuple((idx[u], idx[v]) for u, v in h.edges))


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-edges", type=int, default=7)
    args = parser.parse_args()

    limits = SearchLimits(max_edges=args.max_edges)
    checked, missing = 0, []
    start = time.perf_counter()
    for h in nx.graph_atlas_g()[1:]:
        if h.number_of_edges() == 0 or h.number_of_edges() > args.max_edges:
            continue
        if any(d == 0 for _, d in h.degree):
            continue
        g = to_graph(h)
        checked += 1
        if not search(g, limits).found:
            missing.append(g)
    print(f"checked {checked} graphs in {time.perf_counter() - start:.1f}s")
    for g in missing:
        print("no antimagic orientation:", g.n, g.edges)
    return 1 if missing else 0


if __name__ == "__main__":
    sys.exit(main())
