"""The transition table: coherence and (deliberate) rotation asymmetry.

The automaton has two states and reads ten neighbours, so a situation is
a state letter plus a 10-letter word.  The shipped table covers exactly
the situations its signal machinery produces; this script checks it
prescribes a single outcome per situation and maps out where rotated
versions of the same neighbourhood get different outcomes — the automaton
intentionally reads direction from its neighbourhood.
"""

from collections import Counter

from pentaca.rules import (
    check_determinism,
    find_rotation_conflicts,
    load_rules,
    rotate_word,
    rotation_orbits,
)

table = load_rules()
print(f"{len(table)} rules")
states = Counter((r.current, r.next) for r in table)
for (cur, nxt), n in sorted(states.items()):
    kind = "conservative" if cur == nxt else "motion"
    print(f"  {cur} -> {nxt}: {n:3d} rules ({kind})")

# Coherence: no situation may have two different outcomes.
conflicts = check_determinism(table)
print(f"\ncontradictions: {len(conflicts)}")

# Rotating a word turns sides 1-5 and diagonals 6-10 together, keeping
# each diagonal glued to its side pair.
w = table.by_id[26].word
print(f"\nrule 26 word      : {w}")
print(f"rotated by 2      : {rotate_word(w, 2)}")

# Orbits group rules whose situations are rotations of one another.
orbits = rotation_orbits(table)
multi = [o for o in orbits if len(o) > 1]
sizes = Counter(len(o) for o in orbits)
print(f"\nrotation orbits: {len(orbits)} total, {len(multi)} with >1 rule "
      f"(sizes {dict(sorted(sizes.items()))})")
full = next(o for o in multi if len(o) == 5)
print(f"a full orbit: {full}")

# Where rotation invariance breaks: same current state, rotated word,
# different outcome.  These pairs are what lets a cell tell "a signal
# approaching from my side 2" apart from "from my side 4".
pairs = find_rotation_conflicts(table)
print(f"\nrotation-invariance conflicts: {len(pairs)} pairs")
for c in pairs:
    a, b = table.by_id[c.rule_a], table.by_id[c.rule_b]
    print(f"  {c.rule_a:3d} ~ {c.rule_b:3d} shift {c.shift}: "
          f"{a.current} {a.word} -> {a.next} vs {b.next}")
