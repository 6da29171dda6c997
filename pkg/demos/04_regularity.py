"""
Regressive regularity
=====================

Checks the worked labeling over E = {4, 7, 11}, then searches small ranges
for sets E over which a seeded committee family is regressively regular.
"""

from lattice_exit import Family, RhoFunction, SeededSelection, is_regressively_regular, search_regular_E
from lattice_exit.fixtures import WORKED_E, worked_labels
from lattice_exit.lattice import OrderTypeRule

report = is_regressively_regular(worked_labels(), WORKED_E, 2)
for cls, verdict in report.verdicts.items():
    print(cls, verdict.kind, verdict.value)
print("E_L:", sorted(report.E_L))
print("E_empty:", sorted(report.E_empty))

for seed in range(4):
    family = Family(
        OrderTypeRule(density=0.3, seed=seed),
        "h_rho",
        SeededSelection(2, 0.5, seed, diagonal_restricted=True),
        RhoFunction("sum"),
        domain="lower",
    )
    found = search_regular_E(family, p=3, k=2, coord_bound=9)
    if found is None:
        print(seed, "nothing regular in range")
        continue
    E, r = found
    print(seed, "E =", E, "regressive values:", sorted(r.regressive_values))
