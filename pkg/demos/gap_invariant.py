"""The normalized two-variable polynomial of a virtual braid closure.

Run with: python3 demos/gap_invariant.py
"""

from biquandles import (
    available_moves,
    braid_matrix_up,
    gap,
    gap_text,
    parse_braid_word,
    presentation_from_braid,
    random_braid,
    relation_matrix_from_braid,
)

hopf = parse_braid_word("n=2; v1 s1")
print("virtual Hopf word:", "n=2; v1 s1")
print("presentation:")
print(presentation_from_braid(hopf).render(), end="")
print("braid matrix:", braid_matrix_up(hopf))
print("relation matrix:", relation_matrix_from_braid(hopf))
print("gap:", gap_text(hopf))
print()

# the invariant vanishes on every classical closure, so a nonzero value
# proves a knot cannot be drawn without virtual crossings
trefoil = parse_braid_word("n=2; s1 s1 s1")
print("classical trefoil gap:", gap_text(trefoil))
print()

print("invariance under closure-preserving moves:")
word = random_braid(3, 6, seed=31)
value = gap(word)
print("start:", word, "  gap:", gap_text(word))
for label, moved in available_moves(word)[:8]:
    status = "unchanged" if gap(moved) == value else "CHANGED"
    print(f"  {label:24s} -> {moved}  [{status}]")
