"""Committee-model labels: partial selection functions, s-hat_D and h^rho_D.

A committee at z is an ordered tuple of successors of z, repetition allowed.
Each member y reports its own label if its set of defined committee values
is nonempty and min(y) otherwise; the selection function either picks one
member's report or is undefined.  The vertex takes the minimum over all
defined committee reports (its Phi set).
"""

from dataclasses import dataclass, field
from itertools import product

from ._hashing import int_hash
from .errors import BudgetExceeded, RhoBelowMin
from .labelers import LabelMap

MAX_R = 3
PHI_BUDGET = 10**6


def is_diagonal(z):
    return len(set(z)) == 1


class SelectionFunction:
    """Partial selection F(z, ((y_1, n_1), ..., (y_r, n_r))).

    Subclasses return a 0-based member index from :meth:`_choose`, or None
    where F is undefined.  The selected *value* is always looked up by the
    caller from the member list, so the selection property holds by
    construction.
    """

    kind = "abstract"

    def __init__(self, r, diagonal_restricted=False):
        if r < 1:
            raise ValueError(f"committee size must be >= 1, got {r}")
        self.r = r
        self.diagonal_restricted = diagonal_restricted

    @property
    def sizes(self):
        return (self.r,)

    def select(self, z, members):
        if self.diagonal_restricted and is_diagonal(z):
            return None
        return self._choose(z, members)

    def _choose(self, z, members):
        raise NotImplementedError

    def to_dict(self):
        return {"kind": self.kind, "r": self.r, "diagonal_restricted": self.diagonal_restricted}

    def __repr__(self):
        return f"{type(self).__name__}({self.to_dict()})"


class TotalMinSelection(SelectionFunction):
    """r = 1, always defined, picks the only member: reduces s-hat to t-hat."""

    kind = "total-min"

    def __init__(self, diagonal_restricted=False):
        super().__init__(1, diagonal_restricted)

    def _choose(self, z, members):
        return 0


class SeededSelection(SelectionFunction):
    """Defined on each committee with probability q; index chosen by hash."""

    kind = "seeded"

    def __init__(self, r=2, q=0.5, seed=0, diagonal_restricted=False):
        super().__init__(r, diagonal_restricted)
        self.q = q
        self.seed = seed

    def _choose(self, z, members):
        # one 64-bit hash: high 53 bits decide definedness, the rest the member
        h = int_hash(self.seed, "sel", z, members)
        if (h >> 11) / 2.0**53 >= self.q:
            return None
        return h % len(members)

    def to_dict(self):
        return {**super().to_dict(), "q": self.q, "seed": self.seed}


class TableSelection(SelectionFunction):
    """Explicit F: {(z, (y_1, ..., y_s)): index}.  Committee sizes may vary."""

    kind = "table"

    def __init__(self, table, diagonal_restricted=False):
        self.table = {(tuple(z), tuple(map(tuple, ys))): i for (z, ys), i in table.items()}
        sizes = sorted({len(ys) for _, ys in self.table}) or [1]
        super().__init__(max(sizes), diagonal_restricted)
        self._sizes = tuple(sizes)

    @property
    def sizes(self):
        return self._sizes

    def _choose(self, z, members):
        return self.table.get((tuple(z), tuple(tuple(y) for y, _ in members)))

    def to_dict(self):
        rows = [
            {"z": list(z), "committee": [list(y) for y in ys], "index": i}
            for (z, ys), i in sorted(self.table.items())
        ]
        return {**super().to_dict(), "table": rows}


def total_min_selection(diagonal_restricted=False):
    return TotalMinSelection(diagonal_restricted)


def selection_from_dict(d):
    kind = d.get("kind", "total-min")
    restricted = bool(d.get("diagonal_restricted", False))
    if kind == "total-min":
        return TotalMinSelection(restricted)
    if kind == "seeded":
        return SeededSelection(int(d.get("r", 2)), float(d.get("q", 0.5)), int(d.get("seed", 0)), restricted)
    if kind == "table":
        table = {(tuple(row["z"]), tuple(map(tuple, row["committee"]))): int(row["index"]) for row in d["table"]}
        return TableSelection(table, restricted)
    raise ValueError(f"unknown selection kind {kind!r}")


@dataclass(frozen=True)
class RhoFunction:
    """Value given to vertices with an empty Phi set.  Must satisfy rho(z) >= min(z).

    ``kind`` picks the base rule (min, sum, max, or a seeded random offset
    above min); ``overrides`` pins individual vertices.
    """

    kind: str = "min"
    seed: int = 0
    spread: int = 10
    overrides: dict = field(default_factory=dict, hash=False, compare=False)

    def __call__(self, z):
        if z in self.overrides:
            return self.overrides[z]
        if self.kind == "min":
            return min(z)
        if self.kind == "sum":
            return sum(z)
        if self.kind == "max":
            return max(z)
        if self.kind == "random":
            return min(z) + int_hash(self.seed, "rho", tuple(z)) % self.spread
        raise ValueError(f"unknown rho kind {self.kind!r}")

    def override(self, updates):
        return RhoFunction(self.kind, self.seed, self.spread, {**self.overrides, **updates})

    def to_dict(self):
        d = {"kind": self.kind}
        if self.kind == "random":
            d.update(seed=self.seed, spread=self.spread)
        if self.overrides:
            d["overrides"] = [{"v": list(z), "value": v} for z, v in sorted(self.overrides.items())]
        return d


def rho_from_spec(spec):
    if isinstance(spec, RhoFunction):
        return spec
    if isinstance(spec, str):
        return RhoFunction(spec)
    overrides = {tuple(o["v"]): int(o["value"]) for o in spec.get("overrides", [])}
    return RhoFunction(spec.get("kind", "min"), int(spec.get("seed", 0)), int(spec.get("spread", 10)), overrides)


def _reports(y, values, phi_empty):
    return min(y) if phi_empty[y] else values[y]


def _phi(G, F, z, values, phi_empty, budget):
    succ = G.successors(z)
    if not succ:
        return set()
    if F.diagonal_restricted and is_diagonal(z):
        return set()
    total = sum(len(succ) ** s for s in F.sizes)
    if total > budget:
        raise BudgetExceeded(
            f"{total} committees at {tuple(z)} exceed the budget of {budget}", budget=budget
        )
    reports = [(y, _reports(y, values, phi_empty)) for y in succ]
    out = set()
    for s in F.sizes:
        for members in product(reports, repeat=s):
            i = F.select(z, members)
            if i is not None:
                out.add(members[i][1])
    return out


def phi_set(G, F, z, memo, budget=PHI_BUDGET):
    """Phi^D_z given labels and Phi-emptiness flags of every successor of z."""
    return _phi(G, F, z, memo.values, memo.phi_empty, budget)


def _committee_labels(G, F, fallback, max_r, budget):
    if F.r > max_r:
        raise BudgetExceeded(f"committee size {F.r} exceeds the cap of {max_r}", budget=max_r)
    values = {}
    phi_empty = {}
    for z in G.bottom_up():
        phi = _phi(G, F, z, values, phi_empty, budget)
        phi_empty[z] = not phi
        values[z] = min(phi) if phi else fallback(z)
    terminal = {z: G.is_terminal(z) for z in G.vertices}
    return LabelMap(values, terminal, phi_empty)


def s_hat(G, F, max_r=MAX_R, budget=PHI_BUDGET):
    return _committee_labels(G, F, max, max_r, budget)


def h_rho(G, F, rho, max_r=MAX_R, budget=PHI_BUDGET):
    for z in G.vertices:
        v = rho(z)
        if v < min(z):
            raise RhoBelowMin(z, v)
    return _committee_labels(G, F, rho, max_r, budget)
