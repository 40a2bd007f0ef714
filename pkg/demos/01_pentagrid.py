"""The playing field: right-angled pentagons tiling the hyperbolic disk.

Builds finite patches of the {5,4} tessellation, checks their basic
numbers, and writes a labeled picture of a small patch.
"""

from pathlib import Path

import numpy as np

from pentaca import geometry
from pentaca.engine import Configuration, get_lattice
from pentaca.render import RenderStyle, render_configuration

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

# The tile everything is built from: a regular pentagon, all five interior
# angles right angles.  That is impossible in the Euclidean plane and pins
# the circumradius uniquely in the Poincaré disk model.
r = geometry.circumradius()
print(f"circumradius of the base pentagon: {r:.15f}")
print(f"interior angle: {np.degrees(geometry._interior_angle(r)):.12f} degrees")

base = geometry.central_pentagon()
print(f"vertex distances from origin: {np.linalg.norm(base.vertices, axis=1)}")

# New tiles come from reflecting existing ones in their sides (circle
# inversion).  Reflecting twice in the same side is the identity.
image = geometry.reflect(base, 1)
back = geometry.reflect(image, 1)
print(f"reflect twice, worst coordinate error: "
      f"{np.max(np.abs(back.vertices - base.vertices)):.2e}")

# Patches grow in rings around the central tile.  Ring sizes follow the
# even-indexed Fibonacci numbers times five: 5, 15, 40, 105, 275, ...
for radius in range(5):
    patch = geometry.build_patch(radius)
    counts = np.bincount(patch.rings)
    print(f"radius {radius}: {len(patch):5d} tiles, ring sizes {counts.tolist()}")

# Four pentagons meet at every vertex: itself, its two side neighbours
# across the adjacent sides, and one diagonal ("vertex") neighbour.
patch = geometry.build_patch(3)
tile = patch.tiles[0]
corner = {0, tile.side_neighbors[4], tile.side_neighbors[0], tile.vertex_neighbors[0]}
print(f"tiles around one vertex of the central tile: {sorted(corner)}")

# A picture of the radius-2 patch with coordinate labels.
doc = render_configuration(
    Configuration(), get_lattice(2), RenderStyle(labels=True)
)
target = OUT / "pentagrid_radius2.svg"
target.write_text(doc, encoding="utf-8")
print(f"wrote {target}")
