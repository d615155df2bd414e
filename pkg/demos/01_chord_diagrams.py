# %% [markdown]
# # Chord diagrams and their transition polynomial
#
# A chord diagram is stored as a double-occurrence word: walk around the
# circle and write down which chord each endpoint belongs to.

# %%
from transpoly import chord
from transpoly.chord import Convention, Greek

w = chord.parse("a b a b")
print(w, chord.canonicalize((1, 0, 1, 0)))

# %% [markdown]
# Rotations of the word give the same diagram. There are 1, 2, 5, 18, 105
# diagrams with 1..5 chords.

# %%
for n in range(1, 6):
    print(n, len(chord.enumerate_diagrams(n)))

# %% [markdown]
# A state picks one of three transitions at each chord. Tracing the circle
# through the state splits it into circles.

# %%
for g in Greek:
    print(g.value, chord.state_boundary_count((0, 0), [g]))

# %% [markdown]
# Summing weights over all 3^n states gives Q. The default weights are
# s for phi, t for chi and -t for psi.

# %%
print(chord.q_chord((0, 0)).to_text())
print(chord.q_chord((0, 0), Convention.SEC23).to_text())
print(chord.q_chord(w).to_text())

# %% [markdown]
# Four-term sums vanish at every pair of neighbouring chord ends.

# %%
k3 = (0, 1, 2, 0, 1, 2)
print([chord.four_term_sum(k3, i).to_text() for i, a, b in chord.adjacent_pairs(k3)])

# %% [markdown]
# Q is multiplicative under gluing two diagrams along cut points.

# %%
left, right = (0, 1, 0, 1), (0, 0)
print(chord.q_chord(chord.multiply(left, right)) == chord.q_chord(left) * chord.q_chord(right))
