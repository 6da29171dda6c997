"""Label functions on finite downward graphs: p_D, t-hat_D, p-hat_D.

All recursive labelers walk vertices in increasing max(z).  Edges strictly
decrease max, so that order is topological and ties never matter.
"""

from dataclasses import dataclass, field

from .errors import TooLarge
from .lattice import reachable

ORACLE_BUDGET = 10**6


@dataclass(frozen=True)
class LabelMap:
    """Vertex -> label, with terminal flags and (for committee labels) the
    flag recording whether the set of defined committee values was empty."""

    values: dict
    terminal: dict
    phi_empty: dict | None = field(default=None)

    def __getitem__(self, z):
        return self.values[z]

    def __contains__(self, z):
        return z in self.values

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(sorted(self.values))

    def items(self):
        return sorted(self.values.items())

    def restrict(self, D):
        D = set(D)
        phi = None if self.phi_empty is None else {z: self.phi_empty[z] for z in D}
        return LabelMap(
            {z: self.values[z] for z in D}, {z: self.terminal[z] for z in D}, phi
        )


def _terminal_flags(G):
    return {z: G.is_terminal(z) for z in G.vertices}


def p_total(G):
    """p_D(z): smallest coordinate seen anywhere reachable from z (z included)."""
    values = {}
    for z in G.bottom_up():
        best = min(z)
        for y in G.successors(z):
            if values[y] < best:
                best = values[y]
        values[z] = best
    return LabelMap(values, _terminal_flags(G))


def t_hat(G):
    values = {}
    terminal = _terminal_flags(G)
    for z in G.bottom_up():
        succ = G.successors(z)
        if not succ:
            values[z] = max(z)
            continue
        values[z] = min(min(y) if terminal[y] else values[y] for y in succ)
    return LabelMap(values, terminal)


def p_hat(G):
    values = {}
    terminal = _terminal_flags(G)
    for z in G.bottom_up():
        succ = G.successors(z)
        if not succ:
            values[z] = max(z)
            continue
        best = min(z)
        for y in succ:
            v = min(y) if terminal[y] else values[y]
            if v < best:
                best = v
        values[z] = best
    return LabelMap(values, terminal)


def maximal_paths(G, z, budget=ORACLE_BUDGET):
    """Every terminal path starting at z, by explicit depth-first enumeration."""
    count = 0
    stack = [(z,)]
    while stack:
        path = stack.pop()
        succ = G.successors(path[-1])
        if not succ:
            count += 1
            if count > budget:
                raise TooLarge(budget)
            yield path
            continue
        for y in reversed(succ):
            stack.append(path + (y,))


def t_hat_oracle(G, budget=ORACLE_BUDGET):
    """t-hat_D straight from its path definition; exponential, for cross-checks."""
    values = {}
    spent = 0
    for z in G.sorted_vertices():
        if G.is_terminal(z):
            values[z] = max(z)
            continue
        lasts = set()
        for path in maximal_paths(G, z, budget - spent):
            spent += 1
            lasts.add(path[-1])
        values[z] = min(min(x) for x in lasts)
    return LabelMap(values, _terminal_flags(G))


def p_total_oracle(G):
    return {z: min(min(x) for x in reachable(G, z)) for z in G.vertices}


def significant(L):
    """Vertices whose label is strictly below min(z), and those labels."""
    verts = {z for z, v in L.values.items() if v < min(z)}
    return verts, {L.values[z] for z in verts}


LABELERS = ("p", "p_hat", "t_hat", "s_hat", "h_rho")
