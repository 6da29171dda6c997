"""
Subset-sum instances from regular bi-arrays
===========================================

Each regular bi-array yields a multiset and a target that is reachable
exactly when some row of Y starts below e_0.  The first column alone decides
solvability; the dynamic-programming solver confirms it.
"""

from lattice_exit import Family, RhoFunction, SeededSelection, build_instance, run_pipeline, solve_subset_sum
from lattice_exit.fixtures import WORKED_E, worked_domain, worked_labels, worked_rho
from lattice_exit.lattice import OrderTypeRule, RandomRule
from lattice_exit.subsetsum import biarray_from_labels, verify_first_column

B = biarray_from_labels(worked_labels(), WORKED_E, 2, worked_domain(), worked_rho())
inst = build_instance(B)
print("items", inst.items, "target", inst.target, "designated", inst.designated)
print("solutions:", solve_subset_sum(inst, "count").count)
print("first column says solvable:", verify_first_column(B))

for seed in range(6):
    rule = OrderTypeRule(density=0.3, seed=seed) if seed % 2 else RandomRule(0.2, seed)
    family = Family(rule, "h_rho", SeededSelection(2, 0.5, seed, True), RhoFunction("sum"), "lower")
    for p in (2, 3):
        res = run_pipeline(family, p, 2, 9)
        if res is None:
            continue
        print(
            f"seed={seed} p={p} E={res.E} |E_L|={len(res.report.E_L)} "
            f"target={res.instance.target} solvable={res.solution.feasible} count={res.count}"
        )
