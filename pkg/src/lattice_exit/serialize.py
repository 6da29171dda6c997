"""JSON encodings.  Output is key-sorted and newline-terminated so files can
be compared byte for byte."""

import json

from .labelers import LabelMap
from .lattice import make_graph


def dumps(obj):
    return json.dumps(obj, sort_keys=True) + "\n"


def graph_to_dict(G):
    return {
        "k": G.k,
        "vertices": [list(z) for z in G.sorted_vertices()],
        "edges": [[list(x), list(y)] for x, y in G.sorted_edges()],
    }


def graph_from_dict(d):
    return make_graph(
        int(d["k"]),
        [tuple(z) for z in d["vertices"]],
        [(tuple(x), tuple(y)) for x, y in d.get("edges", [])],
    )


def labels_to_dict(L):
    rows = []
    for z in sorted(L.values):
        row = {"v": list(z), "value": L.values[z], "terminal": bool(L.terminal[z])}
        if L.phi_empty is not None:
            row["phi_empty"] = bool(L.phi_empty[z])
        rows.append(row)
    return {"labels": rows}


def labels_from_dict(d):
    values, terminal, phi = {}, {}, {}
    for row in d["labels"]:
        z = tuple(row["v"])
        values[z] = int(row["value"])
        terminal[z] = bool(row["terminal"])
        if "phi_empty" in row:
            phi[z] = bool(row["phi_empty"])
    return LabelMap(values, terminal, phi if len(phi) == len(values) else None)


def array_to_dict(X, Y=None):
    d = {
        "k": X.k,
        "p": len(X.E),
        "E": list(X.E),
        "X": [[list(z) for z in row] for row in X.entries],
    }
    if Y is not None:
        d["Y"] = [list(row) for row in Y.entries]
    return d
