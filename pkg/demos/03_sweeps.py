# %% [markdown]
# Desk-scale sweeps
#
# Each statement is checked over every input in a small box.  The
# phi/psi reduction is followed on numpy coordinate arrays, which makes the
# 4x4 box (about three million pairs) affordable.

# %%
import time

from schurpos.partitions import ShapePair, parse_shape
from schurpos.positivity import SweepBounds, midpoint_reduction, reduction_sweep, sweep

bounds = SweepBounds(rows=2, cols=3)
for statement in ("cell_transfer", "okounkov", "fflp", "midpoint"):
    cases = list(sweep(statement, bounds))
    print(f"{statement:14s} {len(cases):6d} cases, all ok: {all(c.ok for c in cases)}")

# %%
for p in midpoint_reduction(ShapePair(parse_shape("4,1"), parse_shape("0"))):
    print(p.first, "|", p.second)

# %%
start = time.perf_counter()
summary = reduction_sweep(3, 3)
print(summary, f"{time.perf_counter() - start:.1f}s")
