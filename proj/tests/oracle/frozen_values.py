"""Independent brute-force values frozen into the C++ tests.

Uses networkx for graph construction and graph6 encoding and plain
itertools enumeration for every parameter. Run: python3 frozen_values.py
"""
from itertools import combinations, permutations

import networkx as nx


def subsets(nodes):
    nodes = list(nodes)
    for r in range(len(nodes) + 1):
        yield from combinations(nodes, r)


def lk(g, k):
    best = 0
    for s in subsets(g.nodes):
        s = set(s)
        if all(len(({v} | set(g[v])) & s) <= k for v in g.nodes):
            best = max(best, len(s))
    return best


def rho0(g):
    return max(len(s) for s in subsets(g.nodes) if all(len(set(g[v]) & set(s)) <= 1 for v in g.nodes))


def gamma(g):
    return min(len(s) for s in subsets(g.nodes) if all(({v} | set(g[v])) & set(s) for v in g.nodes))


def gamma_t(g):
    return min(len(s) for s in subsets(g.nodes) if all(set(g[v]) & set(s) for v in g.nodes))


def g6(g):
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def petersen():
    g = nx.Graph()
    g.add_nodes_from(range(10))
    for i in range(5):
        g.add_edge(i, (i + 1) % 5)
        g.add_edge(i, i + 5)
        g.add_edge(i + 5, (i + 2) % 5 + 5)
    return g


def diam2(a):
    g = nx.Graph()
    g.add_nodes_from(range(a + a * (a - 1) // 2))
    ys = list(range(a, a + a * (a - 1) // 2))
    for y1, y2 in combinations(ys, 2):
        g.add_edge(y1, y2)
    for j in range(a):
        for i in range(j):
            y = a + j * (j - 1) // 2 + i
            g.add_edge(i, y)
            g.add_edge(j, y)
    return g


def prescribed_case2(a, b):
    r = b - a
    g = nx.Graph()
    for i in range(1, a + 1):
        g.add_edge(0, i)
    for i in range(1, a):
        g.add_edge(i, a + i)
    for i in range(1, r):
        g.add_edge(i, 2 * a - 1 + i)
    return g


def self_complementary(g):
    h = nx.complement(g)
    n = g.number_of_nodes()
    return any(all(h.has_edge(p[u], p[v]) for u, v in g.edges) for p in permutations(range(n)))


if __name__ == "__main__":
    p = petersen()
    print("petersen graph6", g6(p))
    print("petersen L1 L2 L3", lk(p, 1), lk(p, 2), lk(p, 3))
    print("petersen diameter girth", nx.diameter(p), nx.girth(p))
    print("C7 gamma", gamma(nx.cycle_graph(7)))
    print("C6 gamma_t", gamma_t(nx.cycle_graph(6)))
    print("P4 rho0", rho0(nx.path_graph(4)))
    p3 = nx.Graph()
    p3.add_nodes_from(range(3))
    p3.add_edges_from([(0, 2), (1, 2)])
    print("P3 centred at 2 graph6", g6(p3))
    print("P3 0-1-2 graph6", g6(nx.path_graph(3)))
    print("K2 graph6", g6(nx.complete_graph(2)))
    for a in (3, 4):
        d = diam2(a)
        print(f"diam2({a}) n diameter L2", d.number_of_nodes(), nx.diameter(d), lk(d, 2))
    t = prescribed_case2(3, 4)
    print("prescribed(3,4) n rho0 L1 L2", t.number_of_nodes(), rho0(t), lk(t, 1), lk(t, 2))
    print("C5 self-complementary", self_complementary(nx.cycle_graph(5)))
    k2k1 = nx.Graph()
    k2k1.add_nodes_from(range(3))
    k2k1.add_edge(0, 1)
    print("K2+K1 L2, complement L2", lk(k2k1, 2), lk(nx.complement(k2k1), 2))
    c6 = nx.cycle_graph(6)
    b = {0, 1, 3, 4}
    print("C6 {0,1,3,4} is 2-packing", all(len(({v} | set(c6[v])) & b) <= 2 for v in c6))
    print("Petersen L2 witness count at optimum",
          sum(1 for s in combinations(range(10), lk(p, 2))
              if all(len(({v} | set(p[v])) & set(s)) <= 2 for v in p)))
