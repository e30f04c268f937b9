"""The classical zoo of twisted derivations on plain polynomials.

Differentiation, the shift difference, dilatations and the Jackson
derivatives all satisfy product rules twisted by substitution operators.
Each row of the catalogue states its rule; verification is exact on
random rational polynomials.
"""

from homlie.opcat import PlainPoly, catalogue

t = PlainPoly.t

for entry in catalogue():
    rep = entry.verify(pairs=40)
    mark = "ok " if rep.ok else "FAIL"
    print(f"[{mark}] {entry.name:34} pair {entry.pair}")

print()
print("sample actions on t^4:")
for entry in catalogue():
    print(f"  {entry.name:34} t^4 |-> {entry.operator(t(4))}")
