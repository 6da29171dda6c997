"""
The committee model
===================

A boss (7,11) hears from three ordered committees of its successors.  Each
committee reports one member's value; the boss keeps the smallest report.
Replacing the value of "no committee" vertices by rho gives h^rho, which
agrees with s-hat wherever some committee reported.
"""

from lattice_exit import RhoFunction, h_rho, phi_set, s_hat, t_hat, total_min_selection
from lattice_exit.fixtures import COMMITTEE_BOSS, committee_graph, committee_selection
from lattice_exit.lattice import random_downward

G = committee_graph()
F = committee_selection()
L = s_hat(G, F)
print("committee reports:", sorted(phi_set(G, F, COMMITTEE_BOSS, L)))
print("boss label:", L[COMMITTEE_BOSS])

H = h_rho(G, F, RhoFunction("sum"))
for v in G.sorted_vertices():
    tag = "no committee" if L.phi_empty[v] else "committee"
    print(v, tag, "s_hat =", L[v], "h_rho =", H[v])

# with a single always-defined member per committee, s-hat is t-hat
R = random_downward(2, 5, 0.4, seed=3)
assert s_hat(R, total_min_selection()).values == t_hat(R).values
