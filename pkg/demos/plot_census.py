"""
Closing chains over the sphere
==============================

A chain closes up over the sphere when its total monodromy is trivial.  The
census lists closed chains of a given length up to cyclic rotation.  Nothing
closes below twelve critical values.
"""
import time
from collections import Counter

from reallefschetz import census_entries, sphere_closure
from reallefschetz.census import to_jsonl

for n in range(1, 12):
    assert not census_entries(n)

start = time.perf_counter()
entries = census_entries(12)
print(len(entries), "closed chains of length 12 in", round(time.perf_counter() - start, 1), "s")

##############################################################################
# How many chains admit two inequivalent closures, and how often each
# code class occurs.

print(Counter(sphere_closure(e.witness).extension_count for e in entries))
print(Counter(int(c) for e in entries for c in e.invariant.classes))

print(to_jsonl(e.invariant for e in entries[:3]), end="")
