"""Naming tiles without geometry: Fibonacci-tree coordinates.

Every tile has a coordinate ``index(sector)``: the disk splits into five
sectors of trees rooted at the central tile's side neighbours, and tiles
are numbered level by level inside each sector.  All navigation — sides,
diagonals, fathers, rings — is integer arithmetic on these coordinates,
and it provably matches the geometric adjacency.
"""

from pentaca.coords import (
    CENTRAL,
    TileCoord,
    father,
    ring,
    tree_neighbors,
)
from pentaca.engine import get_lattice

# Coordinates parse from and print back to the same text form.
print(f"0(0): ring {ring(CENTRAL)} (the central tile, no father)")
for label in ("1(1)", "12(1)", "33(4)"):
    c = TileCoord.parse(label)
    print(f"{label}: ring {ring(c)}, father {father(c)}")

# The ten neighbours of a tile, in canonical order: five side neighbours
# (positions 1-5), then five diagonal neighbours (positions 6-10).
c = TileCoord.parse("1(1)")
nm = tree_neighbors(c)
print(f"\nneighbours of {c}:")
print("  sides:    ", " ".join(str(n) for n in nm.sides))
print("  diagonals:", " ".join(str(n) for n in nm.vertices))

# Side adjacency is symmetric: each side neighbour lists c among its own.
for n in nm.sides:
    assert c in tree_neighbors(n).sides
print("side adjacency is symmetric around", c)

# The combinatorial neighbours agree with the geometric patch built by
# reflections.  That cross-check is the package's central oracle: two
# independent constructions, one answer.
lattice = get_lattice()
agree = sum(
    1
    for coord in lattice.mapping.coord_to_geo
    if ring(coord) <= 5
    and lattice.rows[coord] == tree_neighbors(coord).sides + tree_neighbors(coord).vertices
)
print(f"combinatorial == geometric neighbour maps: {agree}/441 tiles")

# Walking down a branch: each White tile has three sons, each Black two,
# so ring populations follow the Fibonacci recurrence.
print("\na radial walk from the centre:")
c = CENTRAL
path = [c]
while ring(c) < 5:
    c = tree_neighbors(c).sides[2]  # always leave through side 3
    path.append(c)
print("  " + " -> ".join(str(p) for p in path))
