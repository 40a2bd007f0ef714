"""Signal machinery: switches, duplication, routing, and memory.

Beyond plain tracks the built-in structures implement the components a
signal network needs: merging entries, duplicating a locomotive,
forking it onto two exits, routing by locomotive kind, and one-bit
memories that passing locomotives read or flip.
"""

from pathlib import Path

from pentaca import scenarios as sc
from pentaca.coords import TileCoord, tree_neighbors
from pentaca.engine import get_lattice, iterate
from pentaca.render import render_run, write_frames
from pentaca.rules import load_rules

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)
table = load_rules()
lattice = get_lattice()


def final_config(scenario):
    cfg = scenario.initial
    for cfg in iterate(cfg, table, scenario.orientations, scenario.steps, lattice):
        pass
    return cfg


def emitted(scenario, structure):
    idle = sc.idle_scenario(structure).initial.black_cells
    return sorted(final_config(scenario).black_cells - idle, key=str)


def show(cells):
    return " ".join(str(c) for c in cells)


# Fixed switch: two entry branches, one exit; a locomotive entering on
# either branch leaves on the same trunk.
for side in ("left", "right"):
    scenario = sc.fixed_switch(entry_side=side)
    print(f"{scenario.name}: exits at {show(emitted(scenario, 'fixed-switch'))}")

# Doubler: a simple locomotive becomes a double one (two side-adjacent
# black cells) on the exit track.
out = emitted(sc.doubler(), "doubler")
a, b = out
print(f"\ndoubler: emits {show(out)}, side-adjacent: {b in tree_neighbors(a).sides}")

# Fork: one locomotive in, one out on each of the two exit tracks.
out = emitted(sc.fork(), "fork")
print(f"fork: emits {show(out)} on the two exits")

# Selector: the exit depends on the locomotive kind.
for kind in ("simple", "double"):
    scenario = sc.selector(kind)
    print(f"selector({kind}): exits at {show(emitted(scenario, 'selector'))}")

# Controller: a one-bit memory gates the passage track, and a signal sent
# along the control track flips the bit.
memory = TileCoord.parse("1(1)")
scenario = sc.controller("black", "signal")
before = scenario.initial.state(memory)
after = final_config(scenario).state(memory)
print(f"\n{scenario.name}: memory cell {memory} {before} -> {after}")

# Sensor: the same component with a sensing bit — a locomotive passing on
# the main track writes the bit, a signal clears it.
for colour, mode in (("white", "passage"), ("black", "signal")):
    scenario = sc.controller_sensor(colour, mode)
    before = scenario.initial.state(memory)
    after = final_config(scenario).state(memory)
    print(f"{scenario.name}: memory cell {memory} {before} -> {after}")

# There is no (white, signal) sensor run: a signal only ever arrives at a
# black sensor.
try:
    sc.controller_sensor("white", "signal")
except ValueError as exc:
    print(f"controller_sensor('white', 'signal') -> ValueError: {exc}")

# Frames of the doubler run, written as SVG files.
frames = render_run(sc.doubler(), table=table, lattice=lattice)
paths = write_frames(frames, OUT / "doubler_frames")
print(f"\nwrote {len(paths)} frames under {paths[0].parent}")
