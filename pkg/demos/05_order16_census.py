"""The 14 groups of order 16 produce only 12 distinct power graphs.

The catalog ships all fourteen groups (five abelian, nine not).  Bucketing
their power graphs by degree sequence and resolving each bucket by explicit
isomorphism search leaves 12 classes: two pairs of non-isomorphic groups
share a power graph, and by the lattice correspondence they also share the
enhanced, directed, and difference graphs.
"""

from latgraph import graph_isomorphism, order16_catalog, order_statistics, pow_oracle
from latgraph.iso import isomorphism_classes

entries = order16_catalog()
print("catalog:", ", ".join(e.name for e in entries))

graphs = [pow_oracle(e.group) for e in entries]
classes = isomorphism_classes(
    len(entries),
    lambda i: graphs[i].degree_sequence(),
    lambda i, j: graph_isomorphism(graphs[i], graphs[j]).found,
)

print(f"\n{len(entries)} groups, {len(classes)} power-graph classes:")
for cls in classes:
    names = " = ".join(entries[i].name for i in cls)
    print(f"  {names}")

print("\nthe merged pairs have identical order statistics too:")
for cls in classes:
    if len(cls) > 1:
        for i in cls:
            print(f"  {entries[i].name:12s} {order_statistics(entries[i].group)}")
