# %% [markdown]
# # Walking the expansion tree by hand
#
# `expand_trace` follows every branch of the p = 2 expansion of
# Ext^m(Delta(0), L(mu)) without memoisation.  Each branch records the
# degree drops it chose (its a-string) and ends in failure (a parity
# clash), a zero Hom leaf, or a non-zero Hom leaf.

# %%
from collections import Counter

from sl2ext import LeafStatus, cohomology_dim, expand_trace

traces = list(expand_trace(6, 24))
print(Counter(t.status.value for t in traces))
for t in traces:
    if t.status is not LeafStatus.FAILED:
        print(t.a_string, t.status.value, "leaf Hom(Delta(%d), L(%d))" % t.leaf)

# %% [markdown]
# The number of non-trivial leaves is the dimension.

# %%
nontrivial = sum(t.status is LeafStatus.NONTRIVIAL for t in traces)
print(nontrivial, cohomology_dim(6, 24, 2))

# %% [markdown]
# The tree grows exponentially, so enumeration takes a cap.

# %%
from sl2ext import CapExceeded

try:
    list(expand_trace(14, 2**14, cap=10_000))
except CapExceeded as exc:
    print(exc)
