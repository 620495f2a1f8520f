"""What graph transformations cannot express.

A priority graph underdetermines the models it induces: the same graph
orders any world set you hand it. Two consequences follow, both made
executable here. First, no propositional formula can name "the most
plausible worlds satisfying x" across all models of one graph, because
different world sets leave different worlds on top. Second, no graph
transformation can implement natural revision: one graph induces two
models whose natural revisions disagree about the same pair of
valuations, and a single output graph cannot order one valuation pair
both ways.
"""

from beliefrev import PGraph, Signature, demo_fact_cb, demo_fact_min, parse

sig = Signature(("p", "q"))

print("=== no formula selects the most plausible x-worlds ===")
graph = PGraph({"a": parse("p", sig), "b": parse("q", sig)}, {("a", "b")})
report = demo_fact_min(graph, parse("~p", sig), sig)
print(report.render())
print()

print("=== no graph transformation implements natural revision ===")
report = demo_fact_cb()
print(report.render())
print()
print("Natural revision satisfies faithfulness and conditional-belief")
print("conservation, and the demo shows those two postulates already")
print("force the conflicting outputs; so no graph transformation can")
print("satisfy both, and none can implement natural revision.")
