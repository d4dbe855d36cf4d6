# %% [markdown]
# # Three ways to count the same sequence
#
# dim H^m(SL2, L(2^m)) at p = 2, the number of c-strings of length m - 1,
# and the number of partitions of 1 into m powers of 1/2 all agree.

# %%
from sl2ext import (
    cohomology_dim,
    count_c_strings,
    doubling_family,
    enumerate_b_strings,
    growth_bounds,
    partitions_of_unity,
)

for m in range(2, 16):
    print(m, partitions_of_unity(m), count_c_strings(m - 1), cohomology_dim(m, 2**m, 2))

# %% [markdown]
# b-strings certify individual non-trivial a-strings.

# %%
for b in enumerate_b_strings(5, 5):
    print(b.entries, "->", b.a_string)

# %% [markdown]
# An explicit family of 2^t c-strings of length 2t + 1 gives the
# exponential lower bound.

# %%
for t in range(4):
    print(t, sorted(doubling_family(t)))

# %%
report = growth_bounds(40)
print("bounds hold:", report.ok)
print("successive ratios (approx.):", [round(report.ratios[k], 4) for k in (10, 20, 30, 40)])
