"""
Why summed gradients can wash out
=================================

A two-weight model y_j = c_j * w_j * x_j with c = (100, 0.1). The first
weight is a thousand times more sensitive than the second. Safe mutation
should shrink steps along w0 and stretch them along w1.
"""
import numpy as np

from safemut.mutation import ExperienceArchive, sensitivity_abs, sensitivity_so, sensitivity_sum
from safemut.network import build_toy_model

toy = build_toy_model()
w = np.ones(2)

# %%
# One experience: every gradient-based sensitivity sees the same scale.
arc = ExperienceArchive.record(toy, w, np.array([[[1.0, 1.0]]]))
print("single input   ABS", sensitivity_abs(toy, w, arc).values, " SUM", sensitivity_sum(toy, w, arc).values)

# %%
# Two experiences with opposite signs. The per-experience gradients of y0
# with respect to w0 are +100 and -100, so their sum is zero and SUM reports
# w0 (and likewise w1) as insensitive. ABS averages magnitudes and keeps the 100.
arc = ExperienceArchive.record(toy, w, np.array([[[1.0, 1.0], [-1.0, -1.0]]]))
print("washout        ABS", sensitivity_abs(toy, w, arc).values, " SUM", sensitivity_sum(toy, w, arc).values)

# %%
# The second-order sensitivity works with the squared output change, which
# cannot cancel.
rng = np.random.default_rng(0)
print("washout         SO", sensitivity_so(toy, w, arc, rng.normal(0, 0.5, 2)).values)

# %%
# What this means for one mutation of strength 0.5: dividing the draw by the
# clamped sensitivity. Both SUM entries cancel, so both weights fly off.
delta = np.array([0.5, 0.5])
for name, s in [("ABS", sensitivity_abs(toy, w, arc)), ("SUM", sensitivity_sum(toy, w, arc))]:
    print(f"{name} step", delta / s.clamped(1e-8))
