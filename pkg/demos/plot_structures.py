"""
Real structures on the torus
============================

Every orientation-reversing affine involution of the torus is conjugate to
one of three normal forms, told apart by how many circles it fixes.
"""
from fractions import Fraction as F

from reallefschetz import STRUCTURE_REPS, affine, conjugate, fixed_components, normalize_structure

##############################################################################
# The three normal forms and their fixed circles.

for k, c in sorted(STRUCTURE_REPS.items(), reverse=True):
    report = fixed_components(c)
    print(k, c.matrix, c.translation, [f.direction for f in report.components])

##############################################################################
# Disguise one of them by an area-preserving change of coordinates, then
# recover the normal form together with the conjugator that produces it.

phi = affine(((2, 1), (1, 1)), (F(1, 3), F(1, 5)))
disguised = conjugate(phi, STRUCTURE_REPS[0])
print("disguised:", disguised)

psi, rep = normalize_structure(disguised)
print("normal form:", rep)
print("conjugator works:", conjugate(psi, disguised) == rep)
