"""
Drawing arcs
============

Scenes are labelled points on the unit sphere joined by great-circle arcs.
They round-trip through JSON and render to SVG (orthographic view, far side
dashed). Usage: ``python3 demos/04_figures.py [outdir]``.
"""

import sys
from pathlib import Path

from spherical_vectors import arg, from_pair
from spherical_vectors.quaternion import I, K
from spherical_vectors.scene import FIGURES, Scene, View, figure_scene

out = Path(sys.argv[1] if len(sys.argv) > 1 else "figures")
out.mkdir(parents=True, exist_ok=True)

# The built-in figures.
for name in FIGURES:
    scene = figure_scene(name)
    (out / f"{name}.svg").write_text(scene.to_svg(), encoding="utf-8")
    (out / f"{name}.json").write_text(scene.to_json(), encoding="utf-8")
    print(f"{name}: {len(scene.points)} points, {len(scene.arcs)} arcs")

# A scene of our own: the three quarter turns making up arg(i) + arg(k) = arg(j).
scene = Scene(view=View(azimuth=30, elevation=20))
a = scene.add_point("e_x", (1, 0, 0))
b = scene.add_point("e_y", (0, 1, 0))
c = scene.add_point("e_z", (0, 0, 1))
scene.add_arc("arg i", a, b)
scene.add_arc("arg k", b, c)
scene.add_arc("arg j", a, c)
assert from_pair((1, 0, 0), (0, 1, 0)) == arg(I) and from_pair((0, 1, 0), (0, 0, 1)) == arg(K)

# JSON is lossless.
assert Scene.from_json(scene.to_json()) == scene
(out / "custom.svg").write_text(scene.to_svg(), encoding="utf-8")
print("wrote", sorted(p.name for p in out.iterdir()))
