"""
Chains and their decorated invariant
====================================

A chain is a starting structure and a list of vanishing cycles.  Each cycle
twists the structure into the next one.  The decorated invariant records the
code class at every critical value plus one bit per junction where twin
curves make the gluing ambiguous.
"""
from fractions import Fraction as F

from reallefschetz import (
    STRUCTURE_REPS,
    CurveClass,
    chains_isomorphic,
    ambiguous_junctions,
    apply_twin_move,
    build_chain,
    decorated_invariant,
    flip_twin,
    validate_chain,
)

chain = build_chain(STRUCTURE_REPS[1], [CurveClass((1, 1), F(1, 2)), CurveClass((1, 1))])
print("valid:", bool(validate_chain(chain)))
for c in chain.structures:
    print("  ", c)

d = decorated_invariant(chain)
print("classes:", [int(x) for x in d.classes], "bits:", d.bits)

##############################################################################
# Conjugating the tail of a chain does not change its isomorphism type, so
# the invariant stays put.  Swapping twins at an ambiguous junction gives a
# different chain and toggles exactly that bit.

refl = build_chain(STRUCTURE_REPS[2], [CurveClass((0, 1)), CurveClass((2, 1), F(1, 2))])
moved = apply_twin_move(refl, 1)
print("twin move keeps the type:", chains_isomorphic(refl, moved),
      decorated_invariant(moved) == decorated_invariant(refl))

for j in ambiguous_junctions(chain):
    print("junction", j, "flipped:", decorated_invariant(flip_twin(chain, j)).bits)
