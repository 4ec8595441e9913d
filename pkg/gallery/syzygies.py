"""Walk through one Gröbner basis computation and its syzygies.

The ideal (x^2, xy + y^2) in K[x, y] with y < x needs a third basis
element y^3.  Each S-pair that reduces to zero contributes a syzygy.
"""

from solvres import FreeModule, buchberger, polynomial_ring, schreyer_syzygies, syzygies_of_generators

A = polynomial_ring(("x", "y"), precedence=(1, 0))
x, y = A.gens()
L = FreeModule(A, [0])
U = [L.from_components([x ** 2]), L.from_components([x * y + y ** 2])]

G, T = buchberger(U)
print("basis as produced:")
for k, g in enumerate(G):
    print(f"  g{k + 1} = {g}")
print("reduced:", ", ".join(str(g) for g in G.reduced()))

print("syzygies of the basis (Schreyer ordering):")
for s in schreyer_syzygies(G):
    print(f"  {s.provenance}: {s.element}   leading {s.element.lm}")

print("syzygies of the two inputs:")
for h in syzygies_of_generators(U, G, T):
    print(f"  {h.element}")
