"""Order types of k-tuples, their canonical representatives, and the
canonical order type array instantiated over a finite set E.

Tuples are compared in plain left-to-right integer order throughout, which
fixes every listing (and hence every serialized array) byte for byte.
"""

from collections.abc import Mapping
from dataclasses import dataclass
from itertools import product

from .errors import MissingVertex, SizeMismatch


def rank_tuple(x):
    """Replace each coordinate by its rank among the distinct coordinates.

    >>> rank_tuple((3, 8, 5, 3, 8))
    (0, 2, 1, 0, 2)
    """
    ranks = {v: i for i, v in enumerate(sorted(set(x)))}
    return tuple(ranks[v] for v in x)


def ot_equal(x, y):
    return len(x) == len(y) and rank_tuple(x) == rank_tuple(y)


def ot_equal_pairwise(x, y):
    """Order equivalence straight from the comparison patterns of coordinates."""
    if len(x) != len(y):
        return False
    k = len(x)
    for i in range(k):
        for j in range(k):
            if (x[i] < x[j]) != (y[i] < y[j]) or (x[i] == x[j]) != (y[i] == y[j]):
                return False
    return True


def surjections(k, j):
    """All maps {0..k-1} -> {0..j-1} that hit every value, as sorted tuples."""
    if j < 1 or j > k:
        return []
    return [f for f in product(range(j), repeat=k) if len(set(f)) == j]


def enumerate_OT(k, p):
    """Canonical representatives of the order types realizable with p values,
    grouped by number of distinct values, lexicographic inside each group."""
    out = []
    for j in range(1, min(k, p) + 1):
        out.extend(surjections(k, j))
    return out


@dataclass(frozen=True)
class OrderTypeArray:
    """Rows of F_kp grouped by order type; row i starts with its representative."""

    k: int
    p: int
    rows: tuple

    @property
    def m(self):
        return len(self.rows)

    @property
    def first_column(self):
        return tuple(row[0] for row in self.rows)


def canonical_array(k, p):
    classes = {f: [] for f in enumerate_OT(k, p)}
    for g in product(range(p), repeat=k):
        classes[rank_tuple(g)].append(g)
    # product() yields lexicographic order, so each row is already sorted and
    # its first entry is the rank tuple itself.
    return OrderTypeArray(k, p, tuple(tuple(classes[f]) for f in classes))


@dataclass(frozen=True)
class InstantiatedArray:
    """Either X = T^k_E (vertex entries) or Y = g T^k_E (integer entries)."""

    E: tuple
    k: int
    entries: tuple

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    @property
    def shape(self):
        return tuple(len(row) for row in self.entries)

    def flat(self):
        for row in self.entries:
            yield from row


def e_f(E, f):
    """The point (e_{f(0)}, ..., e_{f(k-1)}) of E^k indexed by f."""
    return tuple(E[i] for i in f)


def instantiate(T, E):
    E = tuple(sorted(E))
    if len(E) != T.p or len(set(E)) != T.p:
        raise SizeMismatch(f"|E| = {len(set(E))} but the array was built for p = {T.p}")
    return InstantiatedArray(E, T.k, tuple(tuple(e_f(E, f) for f in row) for row in T.rows))


def apply(g, X):
    """Evaluate the label function ``g`` entrywise on the vertex array ``X``.

    ``g`` may be a LabelMap or any mapping from vertex to integer.
    """
    values = g if isinstance(g, Mapping) else g.values
    rows = []
    for row in X.entries:
        out = []
        for z in row:
            if z not in values:
                raise MissingVertex(z)
            out.append(values[z])
        rows.append(tuple(out))
    return InstantiatedArray(X.E, X.k, tuple(rows))


def as_mapping(X, Y):
    """Vertex -> value mapping encoded by a bi-array (X, Y)."""
    return {z: v for rx, ry in zip(X.entries, Y.entries) for z, v in zip(rx, ry)}
