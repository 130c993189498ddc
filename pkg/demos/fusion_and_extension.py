"""Fuse a few module labels, then show the two extensions of U and the map eta."""

import numpy as np

from orbicheck import fusion
from orbicheck.extension import ExtensionGeometry
from orbicheck.fusion import ModuleLabel, fuse

ring = fusion.FusionRing()
m = ModuleLabel.T((1, 0, 2, 0, 0, 1), 1, 1)
n = ModuleLabel.S((0, 1, 1, 0, 2, 0), 2)
print(f"{m} x {n} = {fuse(m, n)}")
print(f"q({m}) = {ring.qform(m)}, B({m}, {n}) = {ring.bform(m, n)}")
print("nonzero singular labels:", len(ring.singular_vectors()))

geo = ExtensionGeometry(ring)
print("|U| =", geo.U.size, " extensions of U:", len(geo.lines))
rng = np.random.default_rng(0)
for v in rng.integers(0, 3, (4, 8)):
    lab = ModuleLabel.from_vector(v)
    img = ModuleLabel.from_vector(geo.eta_apply(v[None, :])[0])
    print(f"eta: {lab} -> {img}   q: {ring.qform(lab)} -> {ring.qform(img)}")
