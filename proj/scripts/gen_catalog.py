#!/usr/bin/env python3
"""Regenerate data/catalog/*.g6 and manifest.csv from explicit constructions.

Each graph is built from a standard construction (networkx generator, LCF
notation, or an explicit edge list) and checked against its known vertex
count, edge count and k-independence numbers before it is written.
"""
import itertools
import pathlib
import sys

import networkx as nx


def lcf(n, shifts, repeats):
    return nx.LCF_graph(n, shifts, repeats)


def generalized_petersen(n, k):
    g = nx.Graph()
    for i in range(n):
        g.add_edge(i, (i + 1) % n)
        g.add_edge(i, n + i)
        g.add_edge(n + i, n + (i + k) % n)
    return g


def coxeter():
    # 3-subsets of a 7-set that are not Fano lines, adjacent when disjoint.
    lines = {frozenset(((i) % 7, (i + 1) % 7, (i + 3) % 7)) for i in range(7)}
    verts = [frozenset(s) for s in itertools.combinations(range(7), 3)
             if frozenset(s) not in lines]
    g = nx.Graph()
    g.add_nodes_from(range(len(verts)))
    for a, b in itertools.combinations(range(len(verts)), 2):
        if not verts[a] & verts[b]:
            g.add_edge(a, b)
    return g


def hexagon_hull():
    edges = [(1, 2), (1, 6), (2, 3), (2, 5), (2, 7), (3, 4), (3, 5), (4, 5),
             (5, 6), (6, 7)]
    g = nx.Graph()
    g.add_nodes_from(range(7))
    g.add_edges_from((u - 1, v - 1) for u, v in edges)
    return g


# name, file stem, constructor, n, |E|, alpha_2, alpha_3
GRAPHS = [
    ("Heawood graph", "heawood", nx.heawood_graph, 14, 21, 2, 1),
    ("Coxeter Graph", "coxeter", coxeter, 28, 42, 7, 4),
    ("Icosahedron", "icosahedron", nx.icosahedral_graph, 12, 30, 2, 1),
    ("Hexahedron", "hexahedron", nx.cubical_graph, 8, 12, 2, 1),
    ("Dodecahedron", "dodecahedron", nx.dodecahedral_graph, 20, 30, 4, 2),
    ("Moebius-Kantor Graph", "moebius_kantor", nx.moebius_kantor_graph, 16, 24, 4, 2),
    ("Desargues Graph", "desargues", nx.desargues_graph, 20, 30, 4, 2),
    ("Pappus Graph", "pappus", nx.pappus_graph, 18, 27, 3, 3),
    ("Nauru Graph", "nauru", lambda: lcf(24, [5, -9, 7, -7, 9, -5], 4), 24, 36, 6, 4),
    ("Franklin graph", "franklin", lambda: lcf(12, [5, -5], 6), 12, 18, 2, 1),
    ("Folkman Graph", "folkman", lambda: lcf(20, [5, -7, -7, 5], 5), 20, 40, 3, 2),
    ("Tutte-Coxeter graph", "tutte_coxeter", lambda: lcf(30, [-13, -9, 7, -7, 9, 13], 5), 30, 45, 6, 5),
    ("Frucht graph", "frucht", nx.frucht_graph, 12, 18, 3, 2),
    ("Truncated Tetrahedron", "truncated_tetrahedron", nx.truncated_tetrahedron_graph, 12, 18, 3, 1),
    ("Krackhardt Kite Graph", "krackhardt_kite", nx.krackhardt_kite_graph, 10, 18, 2, 2),
    ("Bidiakis cube", "bidiakis", lambda: lcf(12, [6, 4, -4], 4), 12, 18, 2, 1),
    ("Durer graph", "durer", lambda: generalized_petersen(6, 2), 12, 18, 2, 2),
    ("Dyck graph", "dyck", lambda: lcf(32, [5, -5, 13, -13], 8), 32, 48, 8, 4),
    ("F26A Graph", "f26a", lambda: lcf(26, [-7, 7], 13), 26, 39, 6, 3),
    ("McGee graph", "mcgee", lambda: lcf(24, [12, 7, -7], 8), 24, 36, 5, 2),
    ("Tutte Graph", "tutte", nx.tutte_graph, 46, 69, 10, 6),
    ("Petersen graph", "petersen", nx.petersen_graph, 10, 15, 1, 1),
    ("Hexagon hull graph", "hexagon_hull", hexagon_hull, 7, 10, None, None),
]


def alpha_k(g, k):
    power = nx.power(g, k) if k > 1 else g
    comp = nx.complement(power)
    clique, _ = nx.max_weight_clique(comp, weight=None)
    return len(clique)


def main(out_dir):
    out = pathlib.Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    rows = []
    for name, stem, build, n, m, a2, a3 in GRAPHS:
        g = nx.convert_node_labels_to_integers(build())
        assert g.number_of_nodes() == n, (name, g.number_of_nodes())
        assert g.number_of_edges() == m, (name, g.number_of_edges())
        if a2 is not None and n <= 32:
            assert alpha_k(g, 2) == a2, (name, "alpha_2", alpha_k(g, 2))
            assert alpha_k(g, 3) == a3, (name, "alpha_3", alpha_k(g, 3))
        text = nx.to_graph6_bytes(g, header=False).decode().strip()
        (out / f"{stem}.g6").write_text(text + "\n")
        rows.append(f"{name},{stem}.g6")
    (out / "manifest.csv").write_text("name,file\n" + "\n".join(rows) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/catalog")
