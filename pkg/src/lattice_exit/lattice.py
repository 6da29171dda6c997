"""Vertices of N^k, finite downward directed graphs, and edge rules that
stand in for the infinite ambient graph on N^k."""

from collections import deque
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from ._hashing import unit_hash
from .errors import (
    CubeNotContained,
    DimensionMismatch,
    NotDownward,
    TerminalSource,
    VertexNotInDomain,
)
from .ordertypes import rank_tuple

COORD_LIMIT = 2**32


class Vertex(tuple):
    """A point of N^k.  Hashes and compares exactly like the plain tuple."""

    __slots__ = ()

    def __new__(cls, coords):
        return super().__new__(cls, (int(c) for c in coords))

    @property
    def max(self):
        return max(self)

    @property
    def min(self):
        return min(self)

    @property
    def k(self):
        return len(self)


def _check_coords(z, k):
    if len(z) != k:
        raise DimensionMismatch(f"vertex {tuple(z)} has length {len(z)}, expected k = {k}")
    for c in z:
        if c < 0 or c >= COORD_LIMIT:
            raise DimensionMismatch(f"coordinate {c} of {tuple(z)} outside [0, 2^32)")


class LatticeDigraph:
    """Immutable finite downward directed graph G_D = (D, Theta_D).

    Built through :func:`make_graph`, which validates the downward condition
    and indexes successor lists in lexicographic order.
    """

    __slots__ = ("k", "vertices", "edges", "_adj")

    def __init__(self, k, vertices, edges, adjacency):
        self.k = k
        self.vertices = vertices
        self.edges = edges
        self._adj = adjacency

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, z):
        return z in self.vertices

    def __eq__(self, other):
        return (
            isinstance(other, LatticeDigraph)
            and self.k == other.k
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.k, self.vertices, self.edges))

    def __repr__(self):
        return f"LatticeDigraph(k={self.k}, |D|={len(self.vertices)}, |Theta|={len(self.edges)})"

    def successors(self, z):
        """G^z_D, sorted lexicographically."""
        try:
            return self._adj[z]
        except KeyError:
            raise VertexNotInDomain(z) from None

    def is_terminal(self, z):
        return not self.successors(z)

    def sorted_vertices(self):
        return sorted(self.vertices)

    def bottom_up(self):
        """Vertices by increasing max; every successor precedes its source."""
        return sorted(self.vertices, key=lambda z: (max(z), z))

    def sorted_edges(self):
        return sorted(self.edges)


def make_graph(k, vertices, edges=()):
    if k < 2:
        raise DimensionMismatch(f"k must be at least 2, got {k}")
    vs = set()
    for z in vertices:
        _check_coords(z, k)
        vs.add(Vertex(z))
    es = set()
    for x, y in edges:
        _check_coords(x, k)
        _check_coords(y, k)
        x, y = Vertex(x), Vertex(y)
        if max(x) <= max(y):
            raise NotDownward((x, y))
        if x not in vs or y not in vs:
            missing = x if x not in vs else y
            raise VertexNotInDomain(missing)
        es.add((x, y))
    adj = {z: [] for z in vs}
    for x, y in es:
        adj[x].append(y)
    adj = {z: tuple(sorted(ys)) for z, ys in adj.items()}
    return LatticeDigraph(k, frozenset(vs), frozenset(es), adj)


# --- edge rules -------------------------------------------------------------


class EdgeRule:
    """Pure predicate on ordered pairs; abstracts the ambient graph on N^k.

    Subclasses implement :meth:`_allows`; the downward condition is enforced
    here so no rule can ever produce an illegal edge.
    """

    kind = "abstract"

    def __call__(self, x, y):
        return max(x) > max(y) and self._allows(x, y)

    def _allows(self, x, y):
        raise NotImplementedError

    def to_dict(self):
        raise NotImplementedError


@dataclass(frozen=True)
class ExplicitRule(EdgeRule):
    edges: frozenset = frozenset()
    kind = "explicit"

    def __init__(self, edges=()):
        object.__setattr__(self, "edges", frozenset((tuple(x), tuple(y)) for x, y in edges))

    def _allows(self, x, y):
        return (tuple(x), tuple(y)) in self.edges

    def to_dict(self):
        return {"kind": self.kind, "edges": [[list(x), list(y)] for x, y in sorted(self.edges)]}


@dataclass(frozen=True)
class RandomRule(EdgeRule):
    """Each downward pair is an edge with probability ``density``, decided by a
    keyed hash of (seed, x, y) so the verdict does not depend on which domain
    is being induced."""

    density: float
    seed: int = 0
    box: int | None = None
    kind = "seeded-random"

    def _allows(self, x, y):
        if self.box is not None and (max(x) >= self.box or max(y) >= self.box):
            return False
        return unit_hash(self.seed, "edge", tuple(x), tuple(y)) < self.density

    def to_dict(self):
        return {"kind": self.kind, "density": self.density, "seed": self.seed, "box": self.box}


@dataclass(frozen=True)
class OrderTypeRule(EdgeRule):
    """Verdict depends only on the order type of the concatenation x + y.

    With an explicit ``table`` (rank tuple of length 2k -> bool) missing classes
    mean "no edge".  Without one, each class is switched on with probability
    ``density`` by a keyed hash of (seed, class).
    """

    table: dict | None = field(default=None, hash=False, compare=False)
    density: float = 0.5
    seed: int = 0
    kind = "order-type-table"

    def verdict(self, cls):
        if self.table is not None:
            return bool(self.table.get(tuple(cls), False))
        return unit_hash(self.seed, "ot", tuple(cls)) < self.density

    def _allows(self, x, y):
        return self.verdict(rank_tuple(tuple(x) + tuple(y)))

    def to_dict(self):
        if self.table is not None:
            table = {"".join(map(str, c)): bool(v) for c, v in sorted(self.table.items())}
            return {"kind": self.kind, "table": table}
        return {"kind": self.kind, "density": self.density, "seed": self.seed}


def complete_rule():
    """Every downward pair is an edge."""
    return OrderTypeRule(density=1.0)


def edgeless_rule():
    return ExplicitRule(())


def rule_from_dict(d):
    kind = d.get("kind")
    if kind in ("explicit", "explicit-set"):
        return ExplicitRule([(tuple(x), tuple(y)) for x, y in d.get("edges", [])])
    if kind in ("seeded-random", "random"):
        return RandomRule(float(d["density"]), int(d.get("seed", 0)), d.get("box"))
    if kind in ("order-type-table", "order-type"):
        if "table" in d:
            table = {tuple(int(ch) for ch in key): bool(v) for key, v in d["table"].items()}
            return OrderTypeRule(table=table)
        return OrderTypeRule(density=float(d.get("density", 0.5)), seed=int(d.get("seed", 0)))
    if kind == "complete":
        return complete_rule()
    if kind == "edgeless":
        return edgeless_rule()
    raise ValueError(f"unknown edge rule kind {kind!r}")


# --- operations -------------------------------------------------------------


def induce(rule, D, k=None):
    """G_D: the subgraph of the ambient graph (given by ``rule``) induced by D."""
    D = sorted({Vertex(z) for z in D})
    if k is None:
        if not D:
            raise DimensionMismatch("k must be given for an empty domain")
        k = len(D[0])
    by_max = sorted(D, key=max)
    edges = []
    for i, x in enumerate(by_max):
        mx = max(x)
        for y in by_max[:i]:
            if max(y) >= mx:
                break
            if rule(x, y):
                edges.append((x, y))
    return make_graph(k, D, edges)


def reachable(G, z):
    """P_D(z): all vertices at the end of a path from z, z included."""
    if z not in G:
        raise VertexNotInDomain(z)
    seen = {z}
    queue = deque([z])
    while queue:
        for y in G.successors(queue.popleft()):
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def terminal_targets(G, z):
    """T_D(z): last vertices of the terminal paths starting at a nonterminal z."""
    if z not in G:
        raise VertexNotInDomain(z)
    if G.is_terminal(z):
        raise TerminalSource(z)
    return {y for y in reachable(G, z) if G.is_terminal(y)}


def cube(E, k):
    E = sorted(set(E))
    return [Vertex(z) for z in product(E, repeat=k)]


def setmax(D):
    D = list(D)
    if not D:
        return set()
    top = max(max(z) for z in D)
    return {z for z in D if max(z) == top}


def is_capped(D, E, k):
    return setmax(D) == setmax(cube(E, k))


def trim_to_cap(G, E):
    """Drop everything that prevents D from being capped by E^k.

    Removed vertices have max >= max(E) and are not in E^k; nothing that
    survives can reach them, so labels of surviving vertices are unchanged.
    """
    cubeset = set(cube(E, G.k))
    if not cubeset <= G.vertices:
        raise CubeNotContained(f"E^{G.k} with E = {sorted(set(E))} is not contained in D")
    top = max(E)
    keep = {z for z in G.vertices if max(z) < top or z in cubeset}
    edges = [(x, y) for x, y in G.edges if x in keep and y in keep]
    return make_graph(G.k, keep, edges)


def random_downward(k, coord_bound, density, seed, n_vertices=None):
    """Seeded random downward graph on (a sample of) the box {0..coord_bound-1}^k.

    Uses numpy's PCG64 bit generator.  When ``n_vertices`` is given, that many
    distinct box points are drawn first; then candidate pairs (x, y) with
    max(x) > max(y) are visited in lexicographic order and each consumes one
    uniform draw, kept when the draw is below ``density``.
    """
    if not 0.0 <= density <= 1.0:
        raise ValueError(f"density must lie in [0, 1], got {density}")
    rng = np.random.Generator(np.random.PCG64(seed))
    box = list(product(range(coord_bound), repeat=k))
    if n_vertices is not None and n_vertices < len(box):
        picks = rng.choice(len(box), size=n_vertices, replace=False)
        vertices = sorted(box[i] for i in picks)
    else:
        vertices = box
    edges = []
    for x in vertices:
        for y in vertices:
            if max(x) > max(y) and rng.random() < density:
                edges.append((x, y))
    return make_graph(k, vertices, edges)
