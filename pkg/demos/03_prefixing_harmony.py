"""Prefixing is the graph form of lexicographic revision.

Revising a belief base syntactically means transforming its priority
graph. Prefixing adds the new information as a fresh most-important node
above everything. This script checks, exhaustively over a small graph
space, that prefixing and lexicographic revision commute with the
graph-to-model translation: inducing a model and then revising it
lexicographically lands on the same order as prefixing the graph and then
inducing.
"""

from beliefrev import (
    PGraph,
    Signature,
    canonical_model,
    lex_revise,
    parse,
    prefix,
    sweep_harmony,
)

sig = Signature(("p", "q"))

g = PGraph({"a": parse("p", sig), "b": parse("q", sig)}, {("a", "b")})
by = parse("~p", sig)

before = canonical_model(g, sig)
via_model = lex_revise(before, by).model
via_graph = canonical_model(prefix(g, by), sig)

print("graph: p more important than q")
print("before revision:        ", before.describe_order())
print("lexicographic, by ~p:   ", via_model.describe_order())
print("prefix then induce:     ", via_graph.describe_order())
print("identical relations?    ", via_model == via_graph)
print()

pool = tuple(parse(t, sig) for t in ("p", "q", "~p", "p & q", "p | q"))
report = sweep_harmony(2, sig, pool)
print(report.render())
