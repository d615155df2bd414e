# %% [markdown]
# # Delta-matroids
#
# A set system is a ground set with a family of feasible subsets. The
# feasible sets of a ribbon graph are the edge sets whose spanning subgraph
# has a single boundary circle.

# %%
from transpoly import chord, delta_matroid as dm, ribbon
from transpoly.delta_matroid import SetSystem

torus = ribbon.from_word((0, 1, 0, 1))
d = dm.from_ribbon_graph(torus)
print(d.to_text())

# %% [markdown]
# One-vertex ribbon graphs give the same system as the intersection graph
# of the chord diagram.

# %%
print(d == dm.from_simple_graph(chord.intersection_graph((0, 1, 0, 1))))

# %% [markdown]
# Twisting, loop complementation and the dual pivot are involutions.

# %%
e = SetSystem.parse("ground: a b c\nfeasible: {}, {a b}, {b c}\n")
print(dm.twist(e, ["a"]).to_text())
print(dm.loop_complement(e, "a").to_text())
print(dm.dual_pivot(dm.dual_pivot(e, "b"), "b") == e)

# %% [markdown]
# The smallest feasible set has one element fewer than the ribbon graph
# has vertices, and bc recovers the number of boundary circles.

# %%
two = ribbon.parse("vertex u: 1 2\nvertex w: 3 4\nedge a: 1 3 twist=0\nedge b: 2 4 twist=1\n")
dtwo = dm.from_ribbon_graph(two)
print(dm.d0(dtwo) + 1, ribbon.vertex_count(two), dm.bc(dtwo), ribbon.boundary_components(two))

# %% [markdown]
# Q computed from the set system alone agrees with Q of the ribbon graph.

# %%
print(dm.q_dm(dtwo) == ribbon.q_ribbon(two))

# %% [markdown]
# Slides and exchanges of elements mirror the moves on chord diagrams; the
# four-term sum vanishes for every pair of elements.

# %%
print(dm.exchange(d, 0, 1) == dm.from_simple_graph(chord.intersection_graph((0, 0, 1, 1))))

# %%
print([dm.four_term_dm(dtwo, a, b).to_text() for a in dtwo.ground for b in dtwo.ground if a != b])
