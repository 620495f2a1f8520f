"""From formula graphs to world orders.

A belief base is represented as a priority graph: formulas under a strict
"more important than" order. Any graph orders the possible worlds: a world
w is at least as preferred as w' when every formula w' satisfies is either
satisfied by w too, or outranked by a more important formula separating w
from w'. This script builds a few graphs, prints the orders they induce,
and shows that syntactically different graphs can induce the same order.
"""

from beliefrev import PGraph, Signature, canonical_model, graphs_equivalent, parse

sig = Signature(("p", "q"))


def g(labels, edges=()):
    return PGraph({n: parse(t, sig) for n, t in labels.items()}, edges)


simple = g({"a": "p", "b": "q"}, [("a", "b")])
print("graph 1: p more important than q")
print("   induced order:", canonical_model(simple, sig).describe_order())
print()

# the same order, spelled out world by world
chain4 = g(
    {"m1": "p & q", "m2": "p & ~q", "m3": "~p & q", "m4": "~p & ~q"},
    [("m1", "m2"), ("m2", "m3"), ("m3", "m4")],
)
print("graph 2: a chain of full world descriptions")
print("   induced order:", canonical_model(chain4, sig).describe_order())
print()
print("graphs 1 and 2 equivalent?", graphs_equivalent(simple, chain4, sig))
print()

# swapping two middle links changes the induced order
reordered = g(
    {"m1": "p & q", "m3": "~p & q", "m2": "p & ~q", "m4": "~p & ~q"},
    [("m1", "m3"), ("m3", "m2"), ("m2", "m4")],
)
print("graph 3: the same chain with the middle links swapped")
print("   induced order:", canonical_model(reordered, sig).describe_order())
print("graphs 1 and 3 equivalent?", graphs_equivalent(simple, reordered, sig))
print()

# incomparability is expressible: two formulas with no order between them
antichain = g({"a": "p", "b": "q"})
flat = canonical_model(antichain, sig)
print("graph 4: p and q equally important")
print("   w_p vs w_q comparable?", flat.leq("w_p", "w_q") or flat.leq("w_q", "w_p"))
print("   order:", sorted(flat.pairs()))
