"""
Counting beyond the torus
=========================

For higher genus only the bookkeeping survives: real structures are listed by
separating type and number of real circles, and real-code classes with a
non-separating vanishing cycle follow a closed formula.
"""
from reallefschetz.genus import count_code_classes_nonsep, crosscheck_genus1, structure_classes

for g in range(1, 7):
    classes = structure_classes(g)
    sep = [c.components for c in classes if c.kind.value == "sep"]
    print(g, len(classes), "separating k =", sep, "codes:", count_code_classes_nonsep(g))

##############################################################################
# On the torus the formula agrees with the explicit enumeration.

print("genus 1 cross-check:", crosscheck_genus1())
