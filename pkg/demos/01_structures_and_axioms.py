"""Build small structures, check every axiom, and look at the composition
monoid of binary operations.

Run:  python demos/01_structures_and_axioms.py
"""

from disthom import (MultiMagma, boolean_algebra, chain_lattice, compose_ops,
                     hasse_text, analyze_lattice, left_projection,
                     right_projection, orbit)

print("== the four-operation system of the two-element lattice ==")
b1 = boolean_algebra(1)
r = b1.report
print("operations:", b1.labels)
print("distributive set:", r.is_multishelf,
      "| every operation idempotent:", all(r.idempotent))
print("join has unit", r.units[1], "and projector", r.projectors[1])

print("\n== composing join with meet collapses to the right projection ==")
join, meet = b1.ops[1], b1.ops[2]
print("join;meet == right projection:",
      compose_ops(join, meet) == right_projection(2))
print("left projection is a two-sided unit:",
      compose_ops(left_projection(2), join) == join
      and compose_ops(join, left_projection(2)) == join)

print("\n== a commutative spindle that is not associative ==")
dihedral = MultiMagma([[[(2 * y - x) % 3 for y in range(3)]
                        for x in range(3)]])
r = dihedral.report
print("self-distributive:", r.self_distributive[0],
      "| commutative:", r.commutative[0],
      "| associative:", r.associative[0])

print("\n== orbits inside the 4-element diamond ==")
b2 = boolean_algebra(2)
for x in range(4):
    print(f"join orbit of {x}: {orbit(b2, 1, x)}   "
          f"meet orbit of {x}: {orbit(b2, 2, x)}")

print("\n== cover relations of the 9-element product lattice ==")
from disthom import product_lattice
l33 = product_lattice(chain_lattice(3), chain_lattice(3))
info = analyze_lattice(l33.ops[1], l33.ops[2])
print(hasse_text(info.poset))
print("irreducible count:", info.irreducible_count,
      "| longest chain:", info.max_chain_length)
