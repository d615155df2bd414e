# %% [markdown]
# # Running the identity checks
#
# Every check returns a result with an instance count and any
# counterexamples in input format. The same checks back the
# ``transpoly check`` command.

# %%
import time

from transpoly import checks

start = time.perf_counter()
results = [
    checks.check_chord_4t(4),
    checks.check_multiplicativity(2),
    checks.check_corank(5),
]
graphs = checks.ribbon_instances(3)
results += [
    checks.check_qdr(3, graphs=graphs),
    checks.check_dm_4t(3, graphs=graphs),
    checks.check_vertex_count(3, graphs=graphs),
    checks.check_bc(3, graphs=graphs),
    checks.check_ribbon_4t(3, graphs=graphs),
]
for r in results:
    print(r.line())
print(f"{time.perf_counter() - start:.1f}s")

# %% [markdown]
# Identities of the set-system operations hold even for families that are
# not delta-matroids, so random families make a good stress test.

# %%
for r in checks.check_algebra(checks.random_set_systems(100, seed=3)):
    print(r.line())

# %% [markdown]
# A broken input is reported with the offending instance.

# %%
from transpoly import delta_matroid as dm, ribbon

r = ribbon.from_word((0, 1, 0, 1))
wrong = dm.SetSystem.parse("ground: 0 1\nfeasible: {}\n")
print(checks.check_q_pair(wrong, r).report())
