# %% [markdown]
# # Ribbon graphs
#
# Vertices carry a cyclic order of half-edges and every edge has a twist bit.

# %%
from transpoly import ribbon

torus = ribbon.parse("""
vertex v: 1 2 3 4
edge a: 1 3 twist=0
edge b: 2 4 twist=0
""")
print(torus.to_text())

# %%
print(ribbon.boundary_components(torus), ribbon.vertex_count(torus))

# %% [markdown]
# An untwisted loop is an annulus with two boundary circles; a twisted loop
# is a Moebius band with one.

# %%
annulus = ribbon.parse("vertex v: 1 2\nedge a: 1 2 twist=0\n")
band = ribbon.parse("vertex v: 1 2\nedge a: 1 2 twist=1\n")
print(ribbon.boundary_components(annulus), ribbon.boundary_components(band))

# %%
print(ribbon.q_ribbon(annulus).to_text())
print(ribbon.q_ribbon(band).to_text())

# %% [markdown]
# Sliding one ribbon end along a neighbouring ribbon keeps the surface, so
# the boundary count does not change. Sliding over a twisted ribbon twists
# the sliding one.

# %%
mixed = ribbon.from_word((0, 1, 0, 1), twists=[0, 1])
slid = ribbon.handle_slide(mixed, 0, 1)
print(slid.to_text())
print(ribbon.boundary_components(mixed), ribbon.boundary_components(slid))

# %%
print(ribbon.four_term_ribbon(mixed, 0, 1).is_zero())

# %% [markdown]
# The same four-term sum on a graph with two vertices.

# %%
two = ribbon.parse("""
vertex u: 1 2 3
vertex w: 4 5 6
edge a: 1 4 twist=0
edge b: 2 5 twist=1
edge c: 3 6 twist=0
""")
print([ribbon.four_term_ribbon(two, h1, h2).to_text() for h1, h2 in ribbon.neighbouring_ends(two)])
