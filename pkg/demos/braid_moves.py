"""Tour of braid words and the moves that preserve their closure.

Run with: python3 demos/braid_moves.py
"""

from biquandles import (
    ad_inversion,
    apply_relator_move,
    free_reduce,
    invert_braid,
    markov_move,
    parse_braid_word,
    relator_move_sites,
    render_braid_word,
    sigma,
)

word = parse_braid_word("n=4; s1 s2 s1 v3 -s3 s3")
print("word:          ", render_braid_word(word))
print("inverse:       ", render_braid_word(invert_braid(word)))
print("free reduction:", render_braid_word(free_reduce(word)))
print()

print("relator move sites (family, position, direction):")
for site in relator_move_sites(word):
    family, pos, direction = site
    moved = apply_relator_move(word, family, pos, direction)
    print(f"  {family}@{pos}{'+' if direction == 1 else '-'} ->",
          render_braid_word(moved))
print()

conjugated = markov_move(word, "conjugate", letter=sigma(2))
stabilized = markov_move(word, "stabilize", sign=-1)
print("conjugate by s2: ", render_braid_word(conjugated))
print("stabilize with -:", render_braid_word(stabilized))

# a stabilization can be undone as long as the new letter stays untouched
print("destabilize back:", render_braid_word(markov_move(stabilized, "destabilize")))
print()

# switch-virtualization replaces every classical crossing by v s^-1 v and
# then reverses the orientation of the closure; applying it twice returns
# a word with the same closure, and free reduction exposes that
once = ad_inversion(word)
twice = free_reduce(ad_inversion(once))
print("ad inversion:      ", render_braid_word(once))
print("applied twice:     ", render_braid_word(twice))
print("original (reduced):", render_braid_word(free_reduce(word)))
