"""Tour of the weighted neighbourhood graph for degree 3.

What can a node know after one communication round? Its own random bit and
how many neighbours drew the same bit. This script builds the graph whose
nodes are exactly those knowledge states and whose edge weights are the
exact probabilities of seeing each pair of states across an edge of any
3-regular triangle-free graph.
"""

from fractions import Fraction

from localcut import Neighbourhood, build_ngraph, evaluate_cut, threshold_assignment
from localcut.cutsearch import ThresholdRule

d = 3
g = build_ngraph(d)

print(f"degree d = {d}: {len(g.nodes)} neighbourhood states")
print("states:", ", ".join(f"({n.side},{n.like_count})" for n in g.nodes))
print()

# The probability mass is normalised: every possible pair of views across an
# edge is accounted for.
print("total weight:", g.total_weight())
print()

print("a few representative weights:")
for n1, n2 in [
    (Neighbourhood("a", 1), Neighbourhood("b", 1)),
    (Neighbourhood("a", 2), Neighbourhood("b", 0)),
    (Neighbourhood("b", 0), Neighbourhood("b", 1)),  # impossible across an edge
    (Neighbourhood("a", 1), Neighbourhood("a", 2)),
]:
    print(f"  w(({n1.side},{n1.like_count}), ({n2.side},{n2.like_count})) =",
          g.weight(n1, n2))
print()

# Any two-labeling of these states is a one-round algorithm; its cut weight
# in this graph equals the algorithm's expected cut weight on every
# 3-regular triangle-free graph. The threshold rules are the labelings
# "flip my side once like_count reaches tau":
print("threshold rules as cuts of the neighbourhood graph:")
for tau in range(d + 2):
    value = evaluate_cut(g, threshold_assignment(ThresholdRule(d, tau)))
    marker = "  <- best" if value == Fraction(11, 16) else ""
    print(f"  tau = {tau}: expected cut weight {value} = {float(value):.6f}{marker}")
