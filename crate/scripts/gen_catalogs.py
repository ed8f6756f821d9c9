#!/usr/bin/env python3
"""Regenerate the graph6 catalogs under crates/core/tests/data.

connected_n1-7.g6: every connected simple graph on 1..7 vertices, one per
isomorphism class (networkx graph atlas order).
trees_n1-8.g6: every tree on 1..8 vertices, one per isomorphism class.
"""
import os

import networkx as nx
from networkx.generators.atlas import graph_atlas_g

out = os.path.join(os.path.dirname(__file__), "..", "crates", "core", "tests", "data")


def g6(g):
    g = nx.convert_node_labels_to_integers(g)
    return nx.to_graph6_bytes(g, header=False).decode().strip()


with open(os.path.join(out, "connected_n1-7.g6"), "w") as f:
    for g in graph_atlas_g():
        if g.number_of_nodes() > 0 and nx.is_connected(g):
            f.write(g6(g) + "\n")

with open(os.path.join(out, "trees_n1-8.g6"), "w") as f:
    f.write(g6(nx.empty_graph(1)) + "\n")
    for n in range(2, 9):
        for t in nx.nonisomorphic_trees(n):
            f.write(g6(t) + "\n")
