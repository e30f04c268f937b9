"""The three-generator deformation and the web of maps between families.

Restricting the bracket to span{e, f, h} with e = partial, f = -t^2
partial, h = -2t partial (partial the generator for g = t(p - q), so
delta = q/p) closes exactly and deforms sl(2).  The summary diagrams
relate six Witt-type and five sl(2)-type algebras through isomorphisms,
twist equivalences and q = p degenerations; every edge is verified.
"""

from homlie import check_morphism, diagram_report, sl2_pq, sl2_r
from homlie.algebra import Combo
from homlie.families import GeneratorMap, SL2_BASIS, sl2_context
from homlie.scalar import P

ctx = sl2_context()
print("partial-generator context: g =", ctx.g, ", delta =", ctx.delta)
print()

s = sl2_pq()
print("brackets:")
for x, y in (("h", "e"), ("h", "f"), ("e", "f")):
    print(f"  [{x}, {y}] = {s.bracket_gen(x, y)}")
print("twists:")
for x in SL2_BASIS:
    print(f"  alpha({x}) = {s.twist_gen(x)}")
print()

print("at p = q = 1 the classical table returns:")
for x, y in (("h", "e"), ("h", "f"), ("e", "f")):
    combo = s.bracket_gen(x, y)
    shown = {k: str(c.specialize(1, 1)) for k, c in combo.terms.items()}
    print(f"  [{x}, {y}] -> {shown}")
print()

print("multiplication by p intertwines the one- and two-parameter versions:")
phi = GeneratorMap({k: Combo.basis(k, P) for k in SL2_BASIS})
rep = check_morphism(phi, sl2_r(), sl2_pq(), 3)
print("  weak morphism:", rep.data["weak"], "| full morphism:", rep.data["full"])
print()

print("deformation-summary diagrams, all edges:")
for entry in diagram_report(window=3).entries:
    print(f"  [{entry.status:4}] {entry.id}")
