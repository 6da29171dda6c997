"""Canonical capped bi-arrays and the subset-sum instances built from them.

A regular bi-array (X, Y) over E yields a multiset M_p (all rows whose first
label is below e_0, plus the diagonal row) and a target t_p.  The instance is
solvable exactly when E_L^k is nonempty, which can be read off the first
columns of X and Y alone.
"""

from dataclasses import dataclass, field

from .committee import RhoFunction, h_rho
from .errors import BudgetExceeded, NotRegular, PolicyViolatesRho, PreconditionFailed
from .lattice import Vertex, cube, induce, is_capped, setmax
from .ordertypes import apply, canonical_array, instantiate
from .regularity import lower_domain

COUNT_CELL_BUDGET = 2**24


@dataclass(frozen=True)
class CappedBiArray:
    X: object
    Y: object
    E: tuple
    k: int
    capped: bool
    phi_empty: dict | None = None
    rho: RhoFunction | None = None
    graph: object = field(default=None, compare=False, repr=False)
    selection: object = field(default=None, compare=False, repr=False)

    @property
    def p(self):
        return len(self.E)

    @property
    def e0(self):
        return self.E[0]

    def rows(self):
        return zip(self.X.entries, self.Y.entries)


def biarray_from_labels(labels, E, k, domain=None, rho=None, graph=None, selection=None):
    """Package a label map as (X, Y); ``capped`` is checked against ``domain``."""
    E = tuple(sorted(set(E)))
    X = instantiate(canonical_array(k, len(E)), E)
    Y = apply(labels, X)
    D = domain if domain is not None else labels.values.keys()
    phi = labels.phi_empty
    if phi is not None:
        phi = {z: phi[z] for z in cube(E, k)}
    return CappedBiArray(X, Y, E, k, is_capped(D, E, k), phi, rho, graph, selection)


def capped_biarray(rule, F, rho, E, k, domain="cube"):
    """(T^k_E, h^rho_D T^k_E) for D = E^k, or E^k plus the points below max(E)."""
    E = tuple(sorted(set(E)))
    if len(E) < 2:
        raise ValueError("need |E| >= 2")
    if domain == "cube":
        D = set(cube(E, k))
    elif domain == "lower":
        D = lower_domain(E, k)
    else:
        D = {Vertex(z) for z in domain}
    G = induce(rule, D, k)
    if setmax(G.vertices) != setmax(cube(E, k)):
        raise PreconditionFailed(f"domain is not capped by E^{k}")
    labels = h_rho(G, F, rho)
    return biarray_from_labels(labels, E, k, G.vertices, rho, G, F)


def biarray_is_regular(B):
    """Each row is either pointwise >= min of its vertex, or constant below min(E)."""
    e0 = B.e0
    for xs, ys in B.rows():
        if all(y >= min(x) for x, y in zip(xs, ys)):
            continue
        if len(set(ys)) == 1 and ys[0] < e0:
            continue
        return False
    return True


def first_column_scan(B):
    """(E_L^k nonempty?, number of comparisons) using column 1 of X and Y only."""
    e0 = min(min(x) for x in (row[0] for row in B.X.entries))
    comparisons = 0
    found = False
    for xs, ys in B.rows():
        comparisons += 1
        if ys[0] < e0:
            found = True
    return found, comparisons


def verify_first_column(B):
    return first_column_scan(B)[0]


def lower_rows(B):
    """Rows i with Y(i, 1) < e_0; in a regular bi-array these tile E_L^k."""
    return [(xs, ys) for xs, ys in B.rows() if ys[0] < B.e0]


def assign_rho_diag(E, report, base_rho):
    """rho with rho(e_0, ..., e_0) raised so the E_L labels plus the
    diagonal corner sum to (|E_L| + 1) e_0."""
    E = tuple(sorted(set(E)))
    e0 = E[0]
    if not report.E_L:
        raise PreconditionFailed("E_L^k is empty; there is nothing to balance")
    diag = report.diag()
    if report.E_empty is None:
        raise PreconditionFailed("report carries no Phi flags; cannot confirm diag(E^k) in E_empty")
    if not diag <= report.E_empty:
        raise PreconditionFailed("diag(E^k) is not contained in E_empty (diagonal not restricted)")
    S = sum(report.values[z] for z in report.E_L)
    corner = Vertex((e0,) * report.k)
    value = e0 + (len(report.E_L) * e0 - S)
    return base_rho.override({corner: value})


@dataclass(frozen=True)
class SubsetSumInstance:
    items: tuple
    target: int
    designated: tuple | None = None
    meta: dict = field(default_factory=dict)
    rho: RhoFunction | None = field(default=None, compare=False, repr=False)

    def to_dict(self):
        order = sorted(range(len(self.items)), key=lambda i: (self.items[i], i))
        where = {orig: pos for pos, orig in enumerate(order)}
        d = {
            "items": [self.items[i] for i in order],
            "permutation": order,
            "target": self.target,
            "meta": self.meta,
        }
        if self.designated is not None:
            d["designated"] = sorted(where[i] for i in self.designated)
        return d

    @classmethod
    def from_dict(cls, d):
        items = [0] * len(d["items"])
        perm = d.get("permutation", list(range(len(items))))
        for pos, orig in enumerate(perm):
            items[orig] = d["items"][pos]
        designated = d.get("designated")
        if designated is not None:
            designated = tuple(sorted(perm[pos] for pos in designated))
        return cls(tuple(items), d["target"], designated, d.get("meta", {}))


def offset_fill(target, j, E):
    """Default diagonal fill: column j (1-based, j >= 2) gets target + j."""
    return target + j


def build_instance(B, diag_fill_policy=offset_fill):
    if not biarray_is_regular(B):
        raise NotRegular("bi-array is not regressively regular")
    E, e0, k, p = B.E, B.e0, B.k, B.p
    X, Y = B.X.entries, B.Y.entries
    diag_x = X[0]
    if any(len(set(z)) != 1 for z in diag_x):
        raise PreconditionFailed("row 1 of X is not the diagonal")
    low = lower_rows(B)
    EL = [z for xs, _ in low for z in xs]
    below_items = [y for _, ys in low for y in ys]
    S = sum(below_items)
    n_EL = len(EL)

    # Cross-check of the two first-column formulas.
    indicator = [1 if ys[0] < e0 else 0 for ys in Y]
    assert n_EL * e0 == e0 * sum(c * len(row) for c, row in zip(indicator, X))
    assert S == sum(c * sum(row) for c, row in zip(indicator, Y))

    meta = {"k": k, "p": p, "E": list(E), "EL_size": n_EL, "S": S}
    rho = B.rho
    if n_EL == 0:
        diag_items = list(Y[0])
        items = tuple(diag_items)
        target = sum(items) + 1
        meta["diag"] = diag_items
        return SubsetSumInstance(items, target, None, meta, rho)

    if B.phi_empty is None or not all(B.phi_empty[z] for z in diag_x):
        raise PreconditionFailed("diag(E^k) must lie in E_empty (restricted diagonal)")
    target = (n_EL + 1) * e0
    corner = e0 + (n_EL * e0 - S)
    diag_items = [corner]
    for j in range(2, p + 1):
        v = diag_fill_policy(target, j, E)
        if v < min(diag_x[j - 1]):
            raise PolicyViolatesRho(
                f"fill {v} for {diag_x[j - 1]} is below its min {min(diag_x[j - 1])}"
            )
        diag_items.append(v)
    if S + corner != target:
        raise AssertionError("balance equation failed")
    if rho is not None:
        rho = rho.override({z: v for z, v in zip(diag_x, diag_items)})
    items = tuple(below_items + diag_items)
    designated = tuple(range(n_EL)) + (n_EL,)
    meta["diag"] = diag_items
    return SubsetSumInstance(items, target, designated, meta, rho)


@dataclass(frozen=True)
class SolveResult:
    feasible: bool
    witness: tuple | None = None
    count: int | None = None


def _decide(items, target):
    if target < 0:
        return False
    mask = (1 << (target + 1)) - 1
    reach = 1
    for a in items:
        reach = (reach | (reach << a)) & mask
    return bool(reach >> target & 1)


def _witness(items, target):
    if target < 0:
        return None
    mask = (1 << (target + 1)) - 1
    layers = [1]
    for a in items:
        layers.append((layers[-1] | (layers[-1] << a)) & mask)
    if not layers[-1] >> target & 1:
        return None
    chosen = []
    t = target
    for i in range(len(items), 0, -1):
        if layers[i - 1] >> t & 1:
            continue
        chosen.append(i - 1)
        t -= items[i - 1]
    return tuple(sorted(chosen))


def _count(items, target):
    if target < 0:
        return 0
    if len(items) * (target + 1) > COUNT_CELL_BUDGET:
        raise BudgetExceeded(
            f"counting table of {len(items)} x {target + 1} cells exceeds {COUNT_CELL_BUDGET}",
            budget=COUNT_CELL_BUDGET,
        )
    ways = [1] + [0] * target
    for a in items:
        for s in range(target, a - 1, -1):
            ways[s] += ways[s - a]
    return ways[target]


def solve_subset_sum(inst, mode="decide"):
    """Exact subset-sum by dynamic programming over reachable sums.

    ``mode`` is "decide", "witness" (indices of one solution) or "count"
    (number of index subsets hitting the target).
    """
    items, target = inst.items, inst.target
    if any(a < 0 for a in items):
        raise ValueError("items must be nonnegative")
    if mode == "decide":
        return SolveResult(_decide(items, target))
    if mode == "witness":
        w = _witness(items, target)
        return SolveResult(w is not None, w)
    if mode == "count":
        c = _count(items, target)
        return SolveResult(c > 0, None, c)
    raise ValueError(f"unknown mode {mode!r}")


@dataclass(frozen=True)
class PipelineResult:
    E: tuple
    report: object
    biarray: CappedBiArray
    instance: SubsetSumInstance
    solution: SolveResult
    count: int | None

    @property
    def unique(self):
        return self.count == 1


def run_pipeline(family, p, k, coord_bound, budget=10_000):
    """Search a regular E for ``family``, build the bi-array and instance, solve it.

    ``family`` should use the h_rho labeler with a diagonally restricted
    selection, since the bi-array is rebuilt from h^rho.

    Returns None when no regular E exists in range.
    """
    from .regularity import search_regular_E

    found = search_regular_E(family, p, k, coord_bound, budget)
    if found is None:
        return None
    E, report = found
    B = capped_biarray(family.rule, family.selection, family.rho, E, k, family.domain)
    inst = build_instance(B)
    sol = solve_subset_sum(inst, "witness")
    try:
        count = solve_subset_sum(inst, "count").count
    except BudgetExceeded:
        count = None
    return PipelineResult(E, report, B, inst, sol, count)
