"""
The six real codes
==================

A real code pairs a real structure with a vanishing cycle it preserves.
Up to conjugacy there are six of them.
"""
from reallefschetz import (
    STRUCTURE_REPS,
    enumerate_code_classes,
    fiber_profile,
    invariant_curve_classes,
    local_model,
    code_class,
)

##############################################################################
# Invariant curves of each normal form.  Twin pairs carry an index 0/1.

for k in (2, 1, 0):
    for inv in invariant_curve_classes(STRUCTURE_REPS[k]):
        print(k, inv.curve, inv.action.value, inv.twin_index)

##############################################################################
# One representative per class, with the local model and the number of real
# components on either side of the critical value.

for code in enumerate_code_classes():
    cid = code_class(code)
    print(int(cid), cid.label, local_model(code).value,
          fiber_profile(code), fiber_profile(code, mirror=True))
