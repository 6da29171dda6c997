"""Acceptance criteria, one test each, printing one PASS/FAIL line apiece.

Run alone with ``pytest tests/test_acceptance.py -s`` or
``python tests/test_acceptance.py``.
"""

import sys
import time
from contextlib import contextmanager
from itertools import product
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import graph_corpus  # noqa: E402

from lattice_exit import fixtures
from lattice_exit.committee import RhoFunction, SeededSelection, h_rho, s_hat, total_min_selection
from lattice_exit.labelers import p_hat, p_total, significant, t_hat, t_hat_oracle
from lattice_exit.lattice import OrderTypeRule, RandomRule, cube, induce
from lattice_exit.ordertypes import canonical_array, enumerate_OT, instantiate, ot_equal_pairwise
from lattice_exit.regularity import (
    DECREASING,
    Family,
    check_decreasing,
    check_jump_free,
    is_regressively_regular,
    lower_domain,
    random_jump_free_triple,
)
from lattice_exit.subsetsum import (
    biarray_from_labels,
    build_instance,
    run_pipeline,
    solve_subset_sum,
    verify_first_column,
)

_CORPUS = None
RESULTS = []


def corpus():
    global _CORPUS
    if _CORPUS is None:
        _CORPUS = graph_corpus(200)
    return _CORPUS


@contextmanager
def criterion(n, name, limit):
    start = time.perf_counter()
    status = "FAIL"
    note = ""
    try:
        yield
        elapsed = time.perf_counter() - start
        if elapsed >= limit:
            note = f" (too slow: limit {limit}s)"
            raise AssertionError(f"criterion {n} took {elapsed:.2f}s, limit {limit}s")
        status = "PASS"
    except Exception as exc:
        note = note or f" ({type(exc).__name__}: {exc})"
        raise
    finally:
        elapsed = time.perf_counter() - start
        RESULTS.append(f"[acceptance {n:2d}] {status} {name} in {elapsed:.2f}s{note}")


def test_01_canonical_array():
    with criterion(1, "canonical array T and T^2_E", 1):
        T = canonical_array(2, 3)
        assert T.rows == (
            ((0, 0), (1, 1), (2, 2)),
            ((0, 1), (0, 2), (1, 2)),
            ((1, 0), (2, 0), (2, 1)),
        )
        X = instantiate(T, [4, 7, 11])
        assert X.entries == fixtures.WORKED_X


def test_02_regularity_fixture():
    with criterion(2, "regularity of the worked (X, Y) fixture", 1):
        E = fixtures.WORKED_E
        Y = fixtures.WORKED_Y
        values = {z: y for xs, ys in zip(fixtures.WORKED_X, Y) for z, y in zip(xs, ys)}
        r = is_regressively_regular(values, E, 2)
        assert r.regular
        assert r.regressive_values == {2}
        assert r.E_L == {(4, 7), (4, 11), (7, 11)}
        flagged = fixtures.worked_labels()
        assert [[flagged[z] for z in row] for row in fixtures.WORKED_X] == [list(y) for y in Y]
        rf = is_regressively_regular(flagged, E, 2)
        diag = {(4, 4), (7, 7), (11, 11)}
        assert rf.E_empty == diag | {(11, 7)}


def test_03_oracle_equivalence():
    with criterion(3, "t_hat equals path-enumeration oracle on 200 graphs", 10):
        graphs = corpus()
        assert len(graphs) == 200
        assert {G.k for G in graphs} == {2, 3} and max(len(G) for G in graphs) <= 12
        failures = [i for i, G in enumerate(graphs) if t_hat(G).values != t_hat_oracle(G).values]
        assert failures == []


def test_04_reduction():
    with criterion(4, "s_hat under total-min selection equals t_hat", 10):
        F = total_min_selection()
        failures = [i for i, G in enumerate(corpus()) if s_hat(G, F).values != t_hat(G).values]
        assert failures == []


def test_05_p_hat_agreement():
    with criterion(5, "p_hat = p on nonterminals, max on terminals", 10):
        bad = 0
        for G in corpus():
            ph, pt = p_hat(G), p_total(G)
            for z in G.vertices:
                want = max(z) if G.is_terminal(z) else pt[z]
                bad += ph[z] != want
        assert bad == 0


def test_06_family_axioms():
    with criterion(6, "jump-free (t_hat, s_hat) and decreasing (p_hat), 500 each", 30):
        rng = np.random.Generator(np.random.PCG64(606))
        violations = 0
        for i in range(500):
            rule = RandomRule(0.35, seed=i)
            B, x, extras = random_jump_free_triple(rng, 2, 6, 14)
            violations += not check_jump_free(rule, "t_hat", B, x, extras).ok
            F = SeededSelection(1 + i % 2, 0.5, seed=i)
            violations += not check_jump_free(rule, "s_hat", B, x, extras, selection=F).ok
            subset = [z for z in B if rng.random() < 0.6] or [B[0]]
            violations += not check_decreasing(rule, subset, B).ok
        assert violations == 0


def test_07_p_hat_single_significant_label():
    with criterion(7, "p_hat on E^2 has significant labels within {min E}", 30):
        rng = np.random.Generator(np.random.PCG64(707))
        violations = 0
        for seed in range(50):
            rule = OrderTypeRule(density=float(rng.uniform(0.2, 0.8)), seed=seed)
            for _ in range(5):
                p = int(rng.integers(2, 5))
                E = sorted(int(c) for c in rng.choice(20, size=p, replace=False))
                labels = significant(p_hat(induce(rule, cube(E, 2), 2)))[1]
                violations += not labels <= {min(E)}
        assert violations == 0


def test_08_rho_invariance():
    with criterion(8, "h^rho = s_hat off empty Phi; reports identical across rho", 30):
        rng = np.random.Generator(np.random.PCG64(808))
        mismatches = 0
        for i in range(100):
            p = int(rng.integers(2, 4))
            E = sorted(int(c) for c in rng.choice(7, size=p, replace=False))
            G = induce(RandomRule(0.15, seed=i), lower_domain(E, 2), 2)
            F = SeededSelection(1 + i % 2, 0.5, seed=i, diagonal_restricted=bool(i % 3 == 0))
            s = s_hat(G, F)
            base = is_regressively_regular(s, E, 2)
            for j in range(3):
                h = h_rho(G, F, RhoFunction("random", seed=1000 * i + j, spread=1 + j * 7))
                mismatches += any(h[z] != s[z] for z in G.vertices if not s.phi_empty[z])
                mismatches += not is_regressively_regular(h, E, 2).same_partition(base)
        assert mismatches == 0


def _pipeline_families():
    for seed in range(300):
        rule = OrderTypeRule(density=0.3, seed=seed) if seed % 2 else RandomRule(0.2, seed)
        F = SeededSelection(1 + seed % 2, 0.5, seed, diagonal_restricted=True)
        rho = RhoFunction("sum" if seed % 3 else "min")
        yield seed, Family(rule, "h_rho", F, rho, "lower"), 2 + seed % 2


def test_09_subset_sum_pipeline():
    with criterion(9, "subset-sum pipeline: fixture plus 100 seeded pipelines", 60):
        L = fixtures.worked_labels()
        B = biarray_from_labels(L, fixtures.WORKED_E, 2, fixtures.worked_domain(), fixtures.worked_rho())
        inst = build_instance(B)
        assert inst.target == 16 == (3 + 1) * 4
        S = inst.meta["S"]
        assert S + inst.items[inst.designated[-1]] == (inst.meta["EL_size"] + 1) * 4
        sol = solve_subset_sum(inst, "witness")
        assert sol.feasible and sol.witness == inst.designated

        done = 0
        branches = set()
        for seed, family, p in _pipeline_families():
            res = run_pipeline(family, p, 2, 9)
            if res is None:
                continue
            el = bool(res.report.E_L)
            assert res.solution.feasible == el
            assert verify_first_column(res.biarray) == el
            if el:
                i = res.instance
                assert sum(i.items[j] for j in i.designated) == i.target
                assert i.meta["S"] + i.meta["diag"][0] == (i.meta["EL_size"] + 1) * res.E[0]
            branches.add(el)
            done += 1
            if done == 100:
                break
        assert done == 100
        assert branches == {True, False}


def test_10_order_type_counts():
    with criterion(10, "order-type class counts against brute force, 2 <= k, p <= 4", 5):
        for k, p in product(range(2, 5), repeat=2):
            reps = []
            for g in product(range(p), repeat=k):
                if not any(ot_equal_pairwise(g, r) for r in reps):
                    reps.append(g)
            assert len(enumerate_OT(k, p)) == len(reps)
        assert len(enumerate_OT(2, 3)) == 3 and len(enumerate_OT(3, 3)) == 13


if __name__ == "__main__":
    code = pytest.main([__file__, "-q", "-p", "no:cacheprovider"])
    sys.exit(code)
