"""Betti tables of residue fields over three graded algebras.

Run with ``python3 gallery/resolutions.py``.
"""

from solvres import FreeModule, Presentation, minimal_free_resolution, mq2, polynomial_ring, quantum_plane
from solvres import verify_resolution


def residue_field(A):
    L = FreeModule(A, [0])
    return Presentation(L, [L.from_components([g]) for g in A.gens()])


for label, A in [("K[x,y,z]", polynomial_ring(("x", "y", "z"))),
                 ("quantum plane, q = 2", quantum_plane(2)),
                 ("M_q(2), q = 2", mq2(2))]:
    R = minimal_free_resolution(residue_field(A))
    print(f"{label}: length {R.length}, verified {verify_resolution(R).ok}")
    print("  " + str(R.betti()).replace("\n", "\n  "))
