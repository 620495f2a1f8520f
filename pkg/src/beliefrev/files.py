"""Text formats for priority graphs and preference models.

Both formats start with an ``atoms:`` header. Blank lines and lines
starting with ``#`` are ignored.

Graph files::

    atoms: p q
    node a: p & q
    node b: q
    a < b          # a is strictly more important than b

Model files::

    atoms: p q
    world w1: ~p & q     # total literal conjunction, one per atom
    world w2: p & ~q
    w1 <= w2             # w1 is at least as preferred as w2

Graph edge lines carry the strict order only; model order lines are
generator edges whose reflexive transitive closure is the relation, so a
tie is written as two opposite edges. Dumps produced here parse back to an
equal structure.
"""

from __future__ import annotations

import re

from .errors import FileFormatError
from .formula import Formula, Signature, Valuation, parse, to_text
from .pgraph import PGraph
from .semantics import PreferenceModel, World

_ATOMS_RE = re.compile(r"atoms\s*:\s*(.*)")
_NODE_RE = re.compile(r"node\s+(\w+)\s*:\s*(.+)")
_WORLD_RE = re.compile(r"world\s+(\w+)\s*:\s*(.+)")
_GRAPH_EDGE_RE = re.compile(r"(\w+)\s*<\s*(\w+)")
_MODEL_EDGE_RE = re.compile(r"(\w+)\s*<=\s*(\w+)")


def _content_lines(text: str) -> list[tuple[int, str]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        lines.append((number, line))
    return lines


def _parse_header(lines: list[tuple[int, str]]) -> Signature:
    if not lines:
        raise FileFormatError("empty file", 1)
    number, line = lines[0]
    match = _ATOMS_RE.fullmatch(line)
    if not match:
        raise FileFormatError("expected an 'atoms:' header", number)
    names = match.group(1).replace(",", " ").split()
    if not names:
        raise FileFormatError("atoms header lists no atoms", number)
    try:
        return Signature(names)
    except Exception as exc:
        raise FileFormatError(str(exc), number) from exc


def parse_graph_file(text: str) -> tuple[Signature, PGraph]:
    """Parse graph text; the returned graph is already validated."""
    lines = _content_lines(text)
    sig = _parse_header(lines)
    labels: dict[str, Formula] = {}
    edges: set[tuple[str, str]] = set()
    for number, line in lines[1:]:
        node = _NODE_RE.fullmatch(line)
        if node:
            name, formula_text = node.groups()
            if name in labels:
                raise FileFormatError(f"duplicate node {name!r}", number)
            try:
                labels[name] = parse(formula_text, sig)
            except Exception as exc:
                raise FileFormatError(str(exc), number) from exc
            continue
        edge = _GRAPH_EDGE_RE.fullmatch(line)
        if edge:
            a, b = edge.groups()
            for end in (a, b):
                if end not in labels:
                    raise FileFormatError(f"unknown node {end!r} in edge", number)
            edges.add((a, b))
            continue
        raise FileFormatError(f"cannot parse graph line: {line!r}", number)
    graph = PGraph(labels, edges)
    graph.validate()
    return sig, graph


def _parse_literal_conjunction(
    text: str, sig: Signature, line: int
) -> Valuation:
    assignment: dict[str, bool] = {}
    for chunk in text.split("&"):
        literal = chunk.strip()
        negated = literal.startswith(("~", "!"))
        name = literal[1:].strip() if negated else literal
        if name not in sig:
            raise FileFormatError(f"unknown atom {name!r} in valuation", line)
        if name in assignment:
            raise FileFormatError(f"atom {name!r} assigned twice", line)
        assignment[name] = not negated
    missing = [a for a in sig if a not in assignment]
    if missing:
        raise FileFormatError(f"valuation does not assign {missing[0]!r}", line)
    return Valuation.from_dict(sig, assignment)


def parse_model_file(text: str) -> tuple[Signature, PreferenceModel]:
    """Parse model text: worlds with total literal-conjunction valuations
    and generator order edges, closed reflexively and transitively."""
    lines = _content_lines(text)
    sig = _parse_header(lines)
    worlds: dict[str, World] = {}
    edges: list[tuple[str, str]] = []
    for number, line in lines[1:]:
        world = _WORLD_RE.fullmatch(line)
        if world:
            name, literals = world.groups()
            if name in worlds:
                raise FileFormatError(f"duplicate world {name!r}", number)
            worlds[name] = World(name, _parse_literal_conjunction(literals, sig, number))
            continue
        edge = _MODEL_EDGE_RE.fullmatch(line)
        if edge:
            a, b = edge.groups()
            for end in (a, b):
                if end not in worlds:
                    raise FileFormatError(f"unknown world {end!r} in order line", number)
            edges.append((a, b))
            continue
        raise FileFormatError(f"cannot parse model line: {line!r}", number)
    if not worlds:
        raise FileFormatError("model file declares no worlds", len(text.splitlines()))
    model = PreferenceModel.from_edges(tuple(worlds.values()), edges)
    return sig, model


def dump_graph(sig: Signature, graph: PGraph) -> str:
    lines = [f"atoms: {' '.join(sig)}"]
    for node in graph.node_ids:
        lines.append(f"node {node}: {to_text(graph.label(node))}")
    for a, b in sorted(graph.edges):
        lines.append(f"{a} < {b}")
    return "\n".join(lines) + "\n"


def _class_reduction(model: PreferenceModel) -> list[tuple[str, str]]:
    """Edges between tie-class representatives forming the transitive
    reduction of the class order."""
    classes = model.tie_classes()
    reps = [group[0] for group in classes]
    strict = {
        (a, b)
        for a in reps
        for b in reps
        if a != b and model.strictly_below(a, b)
    }
    reduced = []
    for a, b in sorted(strict):
        if not any((a, c) in strict and (c, b) in strict for c in reps):
            reduced.append((a, b))
    return reduced


def dump_model(sig: Signature, model: PreferenceModel) -> str:
    """Render a model file: worlds listed most preferred first, tie classes
    written as edge cycles, classes linked by their representatives."""
    classes = model.tie_classes()
    lines = [f"atoms: {' '.join(sig)}"]
    lines.append(f"# preference order: {model.describe_order()}")
    for group in classes:
        for world_id in group:
            world = model.world(world_id)
            lines.append(f"world {world_id}: {world.valuation.describe()}")
    for group in classes:
        if len(group) > 1:
            cycle = group + [group[0]]
            for a, b in zip(cycle, cycle[1:]):
                lines.append(f"{a} <= {b}")
    for a, b in _class_reduction(model):
        lines.append(f"{a} <= {b}")
    return "\n".join(lines) + "\n"


def graph_to_dot(graph: PGraph) -> str:
    """Graphviz rendering of the stored strict-importance edges."""
    lines = ["digraph priority {"]
    for node in graph.node_ids:
        label = to_text(graph.label(node)).replace('"', '\\"')
        lines.append(f'  "{node}" [label="{node}\\n{label}"];')
    for a, b in sorted(graph.edges):
        lines.append(f'  "{a}" -> "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def model_to_dot(model: PreferenceModel) -> str:
    """Graphviz rendering: edges point from more preferred to less
    preferred, ties drawn both ways, transitive edges omitted."""
    lines = ["digraph preference {"]
    for world in model.worlds:
        label = world.valuation.describe().replace('"', '\\"')
        lines.append(f'  "{world.id}" [label="{world.id}\\n{label}"];')
    for group in model.tie_classes():
        if len(group) > 1:
            cycle = group + [group[0]]
            for a, b in zip(cycle, cycle[1:]):
                lines.append(f'  "{a}" -> "{b}";')
    for a, b in _class_reduction(model):
        lines.append(f'  "{a}" -> "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
