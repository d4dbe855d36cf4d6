# %% [markdown]
# # Twist stability and the SL3 wall reduction
#
# H^m(L(1)^[r]) increases with r until r = m and is constant afterwards.

# %%
from sl2ext import stability_profile, wall_reduce_sl3

for m in range(2, 9):
    print(m, stability_profile(m, m + 3))

# %% [markdown]
# Along a beta-string in SL3, Ext between a Weyl module and a simple module
# reduces to an SL2 computation.

# %%
for k in range(1, 6):
    weyl, simple = (2**k, 0), (0, 2 ** (k + 1))
    print(weyl, simple, wall_reduce_sl3(weyl, simple, 2 * k, 2))
