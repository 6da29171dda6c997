"""Regressive regularity over E, the E^k partitions, family-axiom checks,
and the search for a regularly labeled cube."""

from collections.abc import Mapping
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, islice, product

from .committee import RhoFunction, h_rho, s_hat
from .errors import BudgetExceeded, CubeNotInDomain
from .labelers import LabelMap, p_hat, p_total, t_hat
from .lattice import Vertex, cube, induce
from .ordertypes import enumerate_OT, rank_tuple

DECREASING = "decreasing-mins"
NONDECREASING = "nondecreasing-mins"
VIOLATION = "violation"


@dataclass(frozen=True)
class ClassVerdict:
    kind: str
    value: int | None = None
    witness: tuple | None = None


@dataclass(frozen=True)
class RegularityReport:
    E: tuple
    k: int
    verdicts: dict
    regressive_values: frozenset
    E_L: frozenset
    E_U: frozenset
    E_nonempty: frozenset | None = None
    E_empty: frozenset | None = None
    values: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def regular(self):
        return all(v.kind != VIOLATION for v in self.verdicts.values())

    @property
    def m(self):
        return len(self.verdicts)

    @property
    def decreasing_classes(self):
        return [c for c, v in self.verdicts.items() if v.kind == DECREASING]

    def diag(self):
        return frozenset(Vertex((e,) * self.k) for e in self.E)

    def same_partition(self, other):
        """Verdicts and every partition block agree (E and k included)."""
        return (
            self.E == other.E
            and self.k == other.k
            and self.verdicts == other.verdicts
            and self.E_L == other.E_L
            and self.E_U == other.E_U
            and self.E_nonempty == other.E_nonempty
            and self.E_empty == other.E_empty
        )

    def to_dict(self):
        def vs(s):
            return None if s is None else [list(z) for z in sorted(s)]

        verdicts = {}
        for cls, v in self.verdicts.items():
            d = {"kind": v.kind}
            if v.value is not None:
                d["value"] = v.value
            if v.witness is not None:
                d["witness"] = [list(z) for z in v.witness]
            verdicts["".join(map(str, cls))] = d
        return {
            "E": list(self.E),
            "k": self.k,
            "regular": self.regular,
            "verdicts": verdicts,
            "regressive_values": sorted(self.regressive_values),
            "E_L": vs(self.E_L),
            "E_U": vs(self.E_U),
            "E_nonempty": vs(self.E_nonempty),
            "E_empty": vs(self.E_empty),
        }


def regressive_values(f, X):
    values = f if isinstance(f, Mapping) else f.values
    return {values[x] for x in X if values[x] < min(x)}


def _classify(members, values, e0):
    below = [x for x in members if values[x] < min(x)]
    if not below:
        return ClassVerdict(NONDECREASING)
    first = below[0]
    v = values[first]
    if v >= e0:
        return ClassVerdict(VIOLATION, witness=(first, first))
    for y in members:
        if values[y] != v:
            return ClassVerdict(VIOLATION, witness=(first, y))
    return ClassVerdict(DECREASING, value=v)


def is_regressively_regular(f, E, k):
    """Classify every order type of E^k as decreasing / nondecreasing mins.

    ``f`` is a LabelMap (Phi-flags, if present, also yield the split of E^k
    into vertices with nonempty and empty Phi) or a plain mapping.
    """
    E = tuple(sorted(set(E)))
    values = f if isinstance(f, Mapping) else f.values
    pts = cube(E, k)
    missing = [z for z in pts if z not in values]
    if missing:
        raise CubeNotInDomain(f"{len(missing)} points of E^{k} unlabeled, first {missing[0]}")
    e0 = E[0]
    classes = {c: [] for c in enumerate_OT(k, len(E))}
    for z in pts:
        classes[rank_tuple(z)].append(z)
    verdicts = {c: _classify(ms, values, e0) for c, ms in classes.items()}
    E_L = frozenset(z for z in pts if values[z] < e0)
    E_U = frozenset(z for z in pts if values[z] >= min(z))
    phi = getattr(f, "phi_empty", None)
    E_ne = E_e = None
    if phi is not None:
        E_ne = frozenset(z for z in pts if not phi[z])
        E_e = frozenset(z for z in pts if phi[z])
    return RegularityReport(
        E,
        k,
        verdicts,
        frozenset(regressive_values(values, pts)),
        E_L,
        E_U,
        E_ne,
        E_e,
        {z: values[z] for z in pts},
    )


# --- labeled families -------------------------------------------------------


def label_graph(G, labeler, selection=None, rho=None):
    if labeler == "p":
        return p_total(G)
    if labeler == "p_hat":
        return p_hat(G)
    if labeler == "t_hat":
        return t_hat(G)
    if labeler == "s_hat":
        return s_hat(G, selection)
    if labeler == "h_rho":
        return h_rho(G, selection, rho if rho is not None else RhoFunction("min"))
    if callable(labeler):
        return labeler(G)
    raise ValueError(f"unknown labeler {labeler!r}")


def lower_domain(E, k):
    """E^k together with every lattice point whose max is below max(E).

    The result is capped by E^k.
    """
    top = max(E)
    return set(cube(E, k)) | {Vertex(z) for z in product(range(top), repeat=k)}


@dataclass(frozen=True)
class Family:
    """A labeled family: one label function per finite domain D.

    ``domain`` says which D to use for a candidate E: the bare cube E^k, or
    "lower" for E^k plus all points of max below max(E).
    """

    rule: object
    labeler: str = "t_hat"
    selection: object = None
    rho: RhoFunction | None = None
    domain: str = "cube"

    def domain_for(self, E, k):
        if self.domain == "cube":
            return set(cube(E, k))
        if self.domain == "lower":
            return lower_domain(E, k)
        raise ValueError(f"unknown domain policy {self.domain!r}")

    def graph(self, E, k):
        return induce(self.rule, self.domain_for(E, k), k)

    def labels(self, E, k):
        return label_graph(self.graph(E, k), self.labeler, self.selection, self.rho)


# --- family axioms ------------------------------------------------------------


@dataclass(frozen=True)
class AxiomVerdict:
    ok: bool
    witness: object = None
    detail: dict = field(default_factory=dict)


def check_decreasing(rule, A, B, k=None):
    """p-hat over nested domains A <= B never increases: p-hat_A >= p-hat_B on A."""
    A, B = set(A), set(B)
    if not A <= B:
        raise ValueError("check_decreasing needs A to be a subset of B")
    k = k or len(next(iter(B)))
    fa = p_hat(induce(rule, A, k))
    fb = p_hat(induce(rule, B, k))
    for x in sorted(A):
        if fa[x] < fb[x]:
            return AxiomVerdict(False, x, {"f_A": fa[x], "f_B": fb[x]})
    return AxiomVerdict(True)


def jump_free_domain(B, x, extras=()):
    """A = B_x + {x} + extras, so that A_x = B_x."""
    mx = max(x)
    return {z for z in B if max(z) < mx} | {tuple(x)} | set(map(tuple, extras))


def check_jump_free(rule, labeler, B, x, extras=(), selection=None, rho=None, k=None):
    B = set(map(tuple, B))
    x = tuple(x)
    if x not in B:
        raise ValueError(f"{x} is not in B")
    if any(max(z) < max(x) or z not in B for z in extras):
        raise ValueError("extras must lie in B with max >= max(x)")
    k = k or len(x)
    A = jump_free_domain(B, x, extras)
    fa = label_graph(induce(rule, A, k), labeler, selection, rho)
    fb = label_graph(induce(rule, B, k), labeler, selection, rho)
    detail = {"f_A": fa[x], "f_B": fb[x]}
    if fa[x] < fb[x]:
        return AxiomVerdict(False, x, detail)
    return AxiomVerdict(True, None, detail)


def random_jump_free_triple(rng, k, coord_bound, n_vertices):
    """Sample (B, x, extras) satisfying the jump-free hypotheses by construction."""
    box = list(product(range(coord_bound), repeat=k))
    idx = rng.choice(len(box), size=min(n_vertices, len(box)), replace=False)
    B = sorted(box[i] for i in idx)
    x = B[int(rng.integers(len(B)))]
    above = [z for z in B if z != x and max(z) >= max(x)]
    extras = [z for z in above if rng.random() < 0.5]
    return B, x, extras


# --- search -------------------------------------------------------------------


def _evaluate(args):
    family, E, k = args
    if isinstance(family, LabelMap):
        if not all(z in family for z in cube(E, k)):
            return None
        return is_regressively_regular(family, E, k)
    return is_regressively_regular(family.labels(E, k), E, k)


def check_bound(report):
    """The bound on regressive values, checked as plain arithmetic.

    Only meaningful for regular reports: there each decreasing class
    contributes exactly one regressive value.
    """
    k = report.k
    return len(report.regressive_values) <= len(report.decreasing_classes) <= report.m <= k**k


def search_regular_E(family, p, k, coord_bound, budget=10_000, jobs=1):
    """First E of size p in {0..coord_bound-1} (lexicographic) with a regular labeling.

    ``family`` is a :class:`Family` or a fixed LabelMap; for the latter,
    candidates whose cube is not in the domain are skipped and not charged to
    the budget.  Returns (E, report), or None once the range is exhausted.
    Raises BudgetExceeded when ``budget`` candidate cubes were evaluated first.
    """
    if p < 2:
        raise ValueError("p must be at least 2")
    candidates = combinations(range(coord_bound), p)
    spent = 0
    chunk = max(1, jobs) * 8
    pool = ProcessPoolExecutor(jobs) if jobs > 1 else None
    try:
        while True:
            batch = list(islice(candidates, chunk))
            if not batch:
                return None
            work = [(family, E, k) for E in batch]
            results = pool.map(_evaluate, work) if pool else map(_evaluate, work)
            for E, report in zip(batch, results):
                if report is None:
                    continue
                if spent >= budget:
                    raise BudgetExceeded(
                        f"evaluated {spent} candidate cubes without finding a regular E",
                        budget=budget,
                    )
                spent += 1
                if report.regular:
                    if not check_bound(report):
                        raise AssertionError(f"regressive-value bound broken for E = {E}")
                    return E, report
    finally:
        if pool:
            pool.shutdown()
