"""
Exit labels on a small downward graph
=====================================

Builds a five-vertex graph in N^2, labels it three ways and prints the
vertices whose label beats their own minimum coordinate.
"""

from lattice_exit import make_graph, p_hat, p_total, significant, t_hat, t_hat_oracle
from lattice_exit.dot import to_dot

# every edge must lower the maximum coordinate
z, a, b, c, d = (9, 9), (2, 7), (3, 4), (2, 1), (6, 5)
G = make_graph(2, [z, a, b, c, d], [(z, a), (z, b), (b, c), (d, b)])

for name, labels in [("p", p_total(G)), ("p_hat", p_hat(G)), ("t_hat", t_hat(G))]:
    print(f"{name:6s}", {v: labels[v] for v in G.sorted_vertices()})

# the memoized recursion agrees with brute-force path enumeration
assert t_hat(G).values == t_hat_oracle(G).values

verts, values = significant(t_hat(G))
print("significant vertices:", sorted(verts), "labels:", sorted(values))

print(to_dot(G, t_hat(G)))
