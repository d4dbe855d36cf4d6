# %% [markdown]
# # H^2 of simple modules for p > 3, and unbounded Ext^2
#
# The closed-form classification agrees with the recursion, and summing it
# over the simple summands of V_n (x) V_n* gives Ext^2(V_n, V_n) = n.

# %%
from sl2ext import ext2_self_tower, h2_cross_check, h2_dim
from sl2ext.h2 import tower_summands

for mu in (10, 38, 50, 208, 48, 11):
    dim, witness = h2_dim(mu, 5)
    print(f"H^2(L({mu})) = {dim}   [{witness}]")

# %%
for p in (5, 7):
    print(p, "disagreements up to 2p^3:", h2_cross_check(p, 2 * p**3))

# %%
for n in range(6):
    print(n, ext2_self_tower(n, 7))

print([(sorted(s), w) for s, w, d in tower_summands(3, 5) if d])
