# %% [markdown]
# # Odd characteristic
#
# The same engine handles p > 2.  The sequence dim H^m(L(2 p^m)) is
# irregular for small m but grows over longer ranges.

# %%
from sl2ext import ExtEngine

engine = ExtEngine()
for p in (3, 5):
    print(p, [engine.cohomology_dim(m, 2 * p**m, p) for m in range(1, 31)])

# %% [markdown]
# H^1 is supported on twists of 2p - 2.

# %%
for p in (3, 5, 7):
    print(p, [mu for mu in range(3 * p**4) if engine.cohomology_dim(1, mu, p)])
