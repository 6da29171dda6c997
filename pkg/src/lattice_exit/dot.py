"""Graphviz DOT export; significant vertices are drawn with a double outline."""


def _name(z):
    return '"' + ",".join(map(str, z)) + '"'


def to_dot(G, labels=None, name="G"):
    lines = [f"digraph {name} {{"]
    for z in G.sorted_vertices():
        text = "(" + ",".join(map(str, z)) + ")"
        attrs = []
        if labels is not None:
            v = labels[z]
            text += f"\\n{v}"
            if v < min(z):
                attrs.append("peripheries=2")
        attrs.insert(0, f'label="{text}"')
        lines.append(f"  {_name(z)} [{', '.join(attrs)}];")
    for x, y in G.sorted_edges():
        lines.append(f"  {_name(x)} -> {_name(y)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
