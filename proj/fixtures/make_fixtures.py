#!/usr/bin/env python3
"""Regenerates the bundled graph6 fixtures that the library does not construct.

    python3 make_fixtures.py            # writes *.g6 next to this script

Every graph is verified (strong regularity or intersection array) before it is
written. See PROVENANCE.md for the constructions.
"""
import itertools
import pathlib

import networkx as nx


def chang_graphs():
    """Seidel switches of T(8) = J(8,2) w.r.t. 4K2, C3+C5 and C8 in K8."""
    pairs = [frozenset(p) for p in itertools.combinations(range(8), 2)]
    cycle = lambda vs: {frozenset((vs[i], vs[(i + 1) % len(vs)])) for i in range(len(vs))}
    switch_sets = {
        "chang1": {frozenset((0, 1)), frozenset((2, 3)), frozenset((4, 5)), frozenset((6, 7))},
        "chang2": cycle([0, 1, 2]) | cycle([3, 4, 5, 6, 7]),
        "chang3": cycle(list(range(8))),
    }
    out = {}
    for name, s in switch_sets.items():
        g = nx.Graph()
        g.add_nodes_from(range(len(pairs)))
        for i, j in itertools.combinations(range(len(pairs)), 2):
            adjacent = len(pairs[i] & pairs[j]) == 1
            if (pairs[i] in s) != (pairs[j] in s):
                adjacent = not adjacent
            if adjacent:
                g.add_edge(i, j)
        out[name] = g
    return out


def _gf25():
    # GF(25) = GF(5)[t]/(t^2 + t + 2)
    def mul(a, b):
        c0, c1, c2 = a[0] * b[0], a[0] * b[1] + a[1] * b[0], a[1] * b[1]
        return ((c0 - 2 * c2) % 5, (c1 - c2) % 5)

    def add(a, b):
        return ((a[0] + b[0]) % 5, (a[1] + b[1]) % 5)

    elems = [(a, b) for a in range(5) for b in range(5)]
    inv = {a: b for a in elems for b in elems if mul(a, b) == (1, 0)}
    return elems, mul, add, inv


def hall_graph():
    """PSL(2,25)-orbit of the Baer subline PG(1,5); adjacent iff disjoint."""
    elems, mul, add, inv = _gf25()
    zero, one = (0, 0), (1, 0)

    def act(m, p):
        a, b, c, d = m
        if p == "inf":
            return "inf" if c == zero else mul(a, inv[c])
        num, den = add(mul(a, p), b), add(mul(c, p), d)
        return "inf" if den == zero else mul(num, inv[den])

    def det(m):
        a, b, c, d = m
        return add(mul(a, d), mul(((-b[0]) % 5, (-b[1]) % 5), c))

    base = frozenset(["inf"] + [(i, 0) for i in range(5)])
    orbit = set()
    for m in itertools.product(elems, repeat=4):
        if det(m) == one:
            orbit.add(frozenset(act(m, p) for p in base))
    orbit = sorted(orbit, key=lambda s: sorted(map(str, s)))
    g = nx.Graph()
    g.add_nodes_from(range(len(orbit)))
    for i, j in itertools.combinations(range(len(orbit)), 2):
        if not (orbit[i] & orbit[j]):
            g.add_edge(i, j)
    return g


def _nullspace_mod3(rows, ncols):
    a = [list(r) for r in rows]
    pivots, r = [], 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c] % 3), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        s = pow(a[r][c], -1, 3)
        a[r] = [(v * s) % 3 for v in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] % 3:
                f = a[i][c]
                a[i] = [(u - f * v) % 3 for u, v in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    basis = []
    for f in (c for c in range(ncols) if c not in pivots):
        v = [0] * ncols
        v[f] = 1
        for i, c in enumerate(pivots):
            v[c] = (-a[i][f]) % 3
        basis.append(v)
    return basis


def conway_smith_graph():
    """Triangular Z3-cover of Kneser(7,2): a Z3 edge voltage that sums to zero on
    every triangle but is not a coboundary."""
    verts = [frozenset(c) for c in itertools.combinations(range(7), 2)]
    edges = [(i, j) for i, j in itertools.combinations(range(21), 2) if not (verts[i] & verts[j])]
    eidx = {e: k for k, e in enumerate(edges)}
    tris = [t for t in itertools.combinations(range(21), 3)
            if all(p in eidx for p in itertools.combinations(t, 2))]
    rows = []
    for a, b, c in tris:
        row = [0] * len(edges)
        row[eidx[(a, b)]], row[eidx[(b, c)]], row[eidx[(a, c)]] = 1, 1, 2
        rows.append(row)
    basis = _nullspace_mod3(rows, len(edges))
    for coeffs in itertools.product(range(3), repeat=len(basis)):
        phi = [sum(c * b[k] for c, b in zip(coeffs, basis)) % 3 for k in range(len(edges))]
        g = nx.Graph()
        for k, (i, j) in enumerate(edges):
            for s in range(3):
                g.add_edge(3 * i + s, 3 * j + (s + phi[k]) % 3)
        if nx.is_connected(g):
            return g
    raise RuntimeError("no connected triangular cover found")


def main():
    here = pathlib.Path(__file__).resolve().parent
    graphs = chang_graphs()
    graphs["conway_smith"] = conway_smith_graph()
    graphs["hall"] = hall_graph()

    t8 = nx.line_graph(nx.complete_graph(8))
    changs = [graphs[n] for n in ("chang1", "chang2", "chang3")]
    for g in changs:
        assert g.number_of_nodes() == 28 and all(d == 12 for _, d in g.degree())
        assert nx.is_strongly_regular(g) and not nx.is_isomorphic(g, t8)
    for a, b in itertools.combinations(changs, 2):
        assert not nx.is_isomorphic(a, b)
    assert nx.intersection_array(graphs["conway_smith"]) == ([10, 6, 4, 1], [1, 2, 6, 10])
    assert nx.intersection_array(graphs["hall"]) == ([10, 6, 4], [1, 2, 5])

    for name, g in graphs.items():
        g = nx.convert_node_labels_to_integers(g, ordering="sorted")
        data = nx.to_graph6_bytes(g, header=False).strip()
        (here / f"{name}.g6").write_bytes(data + b"\n")
        print(name, g.number_of_nodes(), g.number_of_edges())


if __name__ == "__main__":
    main()
