"""Figure scenes: labelled points on the unit sphere joined by arcs.

A :class:`Scene` serializes to a small JSON document and renders to SVG by
orthographic projection. Arcs are drawn along great circles; the parts on
the far hemisphere are dashed.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from html import escape

import jsonschema
import numpy as np

from .linalg3 import Vec3, norm, orthonormal_to
from .quaternion import Quaternion
from .polar import arg
from .spherical_vector import chain_pair

ARC_SEGMENTS = 64
UNIT_TOL = 1e-9

SCENE_SCHEMA = {
    "type": "object",
    "required": ["points", "arcs", "view"],
    "additionalProperties": False,
    "properties": {
        "points": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["label", "pos"],
                "additionalProperties": False,
                "properties": {
                    "label": {"type": "string"},
                    "pos": {"type": "array", "items": {"type": "number"},
                            "minItems": 3, "maxItems": 3},
                },
            },
        },
        "arcs": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["label", "from", "to", "branch"],
                "additionalProperties": False,
                "properties": {
                    "label": {"type": "string"},
                    "from": {"type": "integer", "minimum": 0},
                    "to": {"type": "integer", "minimum": 0},
                    "branch": {"type": "boolean"},
                },
            },
        },
        "view": {
            "type": "object",
            "required": ["azimuth", "elevation"],
            "additionalProperties": False,
            "properties": {
                "azimuth": {"type": "number"},
                "elevation": {"type": "number"},
            },
        },
    },
}


class SceneError(ValueError):
    pass


@dataclass(frozen=True)
class Point:
    label: str
    pos: Vec3


@dataclass(frozen=True)
class Arc:
    """Arc from ``points[start]`` to ``points[end]``; ``minor`` selects the
    short way round the great circle."""
    label: str
    start: int
    end: int
    minor: bool = True


@dataclass(frozen=True)
class View:
    azimuth: float = 45.0
    elevation: float = 25.0


@dataclass
class Scene:
    points: list[Point] = field(default_factory=list)
    arcs: list[Arc] = field(default_factory=list)
    view: View = field(default_factory=View)

    def add_point(self, label, pos) -> int:
        self.points.append(Point(label, Vec3.of(pos)))
        return len(self.points) - 1

    def add_arc(self, label, start, end, minor=True):
        self.arcs.append(Arc(label, start, end, minor))

    def validate(self):
        for p in self.points:
            if abs(norm(p.pos) - 1.0) > UNIT_TOL:
                raise SceneError(f"point {p.label!r} is not on the unit sphere")
        for a in self.arcs:
            for idx in (a.start, a.end):
                if not 0 <= idx < len(self.points):
                    raise SceneError(f"arc {a.label!r} references missing point {idx}")

    def to_dict(self) -> dict:
        return {
            "points": [{"label": p.label, "pos": list(p.pos)} for p in self.points],
            "arcs": [{"label": a.label, "from": a.start, "to": a.end, "branch": a.minor}
                     for a in self.arcs],
            "view": {"azimuth": self.view.azimuth, "elevation": self.view.elevation},
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Scene":
        try:
            jsonschema.validate(data, SCENE_SCHEMA)
        except jsonschema.ValidationError as exc:
            raise SceneError(exc.message) from exc
        scene = cls(
            points=[Point(p["label"], Vec3.of(p["pos"])) for p in data["points"]],
            arcs=[Arc(a["label"], a["from"], a["to"], a["branch"]) for a in data["arcs"]],
            view=View(float(data["view"]["azimuth"]), float(data["view"]["elevation"])),
        )
        scene.validate()
        return scene

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Scene":
        return cls.from_dict(json.loads(text))

    def to_svg(self, size=480) -> str:
        return render_svg(self, size)


def _view_basis(view: View):
    az, el = math.radians(view.azimuth), math.radians(view.elevation)
    toward = np.array([math.cos(el) * math.cos(az), math.cos(el) * math.sin(az), math.sin(el)])
    right = np.array([-math.sin(az), math.cos(az), 0.0])
    up = np.cross(toward, right)
    return right, up, toward


def arc_samples(u, v, minor=True, segments=ARC_SEGMENTS) -> np.ndarray:
    """``segments + 1`` points along the great circle from ``u`` to ``v``."""
    u, v = np.asarray(list(u), float), np.asarray(list(v), float)
    axis = np.cross(u, v)
    s = np.linalg.norm(axis)
    theta = math.atan2(s, float(np.dot(u, v)))
    if s <= 1e-12:
        # (anti)parallel endpoints: any great circle through u will do
        axis = np.asarray(list(orthonormal_to(Vec3.of(u))), float)
        axis = np.cross(u, axis)
    else:
        axis = axis / s
    if not minor:
        theta = theta - 2 * math.pi
    t = np.linspace(0.0, theta, segments + 1)[:, None]
    # rotate u about the axis (axis is orthogonal to u)
    return u * np.cos(t) + np.cross(axis, u) * np.sin(t)


def _fmt(x):
    return f"{x:.2f}"


def render_svg(scene: Scene, size=480) -> str:
    scene.validate()
    right, up, toward = _view_basis(scene.view)
    c = size / 2
    radius = 0.4 * size

    def project(p):
        p = np.asarray(p, float)
        return c + radius * p @ right, c - radius * p @ up, p @ toward

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        '<defs><marker id="head" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="7" '
        'markerHeight="7" orient="auto-start-reverse"><path d="M0,0 L10,5 L0,10 z" '
        'fill="#1f4e9c"/></marker></defs>',
        '<rect width="100%" height="100%" fill="white"/>',
        f'<circle cx="{_fmt(c)}" cy="{_fmt(c)}" r="{_fmt(radius)}" fill="none" '
        'stroke="#999" stroke-width="1"/>',
    ]
    for arc in scene.arcs:
        pts = arc_samples(scene.points[arc.start].pos, scene.points[arc.end].pos, arc.minor)
        xs, ys, depth = project(pts)
        front = depth >= 0
        # split into runs of equal visibility, sharing the boundary vertex
        start = 0
        for k in range(1, len(pts) + 1):
            if k == len(pts) or front[k] != front[start]:
                stop = min(k + 1, len(pts))
                coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in zip(xs[start:stop], ys[start:stop]))
                dash = "" if front[start] else ' stroke-dasharray="4 3"'
                head = ' marker-end="url(#head)"' if stop == len(pts) else ""
                out.append(f'<polyline points="{coords}" fill="none" stroke="#1f4e9c" '
                           f'stroke-width="1.6"{dash}{head}/>')
                start = k
        mid = len(pts) // 2
        out.append(f'<text x="{_fmt(xs[mid] + 4)}" y="{_fmt(ys[mid] - 4)}" font-size="12" '
                   f'font-style="italic" fill="#1f4e9c">{escape(arc.label)}</text>')
    for p in scene.points:
        x, y, d = project(list(p.pos))
        fill = "black" if d >= 0 else "white"
        out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="3" fill="{fill}" stroke="black"/>')
        out.append(f'<text x="{_fmt(x + 5)}" y="{_fmt(y + 14)}" font-size="13">{escape(p.label)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _worked_example_scene(arc_labels, view) -> Scene:
    sq2, sq6 = math.sqrt(2), math.sqrt(6)
    p = Quaternion(2 * sq6 / 6, 0.0, -sq6 / 6, -sq6 / 6)
    q = Quaternion(sq2 / 2, sq2 / 2, 0.0, 0.0)
    a_p, a_q = arg(p), arg(q)
    u, v, w = chain_pair(a_p, a_q)
    u2, v2, w2 = chain_pair(a_q, a_p)
    scene = Scene(view=view)
    iu = scene.add_point("u", u)
    iv = scene.add_point("v", v)
    iw = scene.add_point("w", w)
    ix = scene.add_point("e_x", u2)
    iw2 = scene.add_point("w′", w2)
    lp, lq, lh, lh2 = arc_labels
    scene.add_arc(lp, iu, iv)
    scene.add_arc(lq, iv, iw)
    scene.add_arc(lh, iu, iw)
    scene.add_arc(lq, ix, iv)
    scene.add_arc(lp, iv, iw2)
    scene.add_arc(lh2, ix, iw2)
    return scene


def figure_scene(name: str) -> Scene:
    """Scene for one of the named figures: fig5, fig6, fig8, fig9."""
    if name == "fig5":
        sq2, sq3 = math.sqrt(2) / 2, math.sqrt(3) / 3
        scene = Scene(view=View(40.0, 25.0))
        a = scene.add_point("A", (sq3, sq3, sq3))
        b = scene.add_point("B", (sq2, sq2, 0.0))
        c = scene.add_point("C", (0.0, 1.0, 0.0))
        scene.add_arc("AB", a, b)
        scene.add_arc("BC", b, c)
        scene.add_arc("AC", a, c)
        return scene
    if name == "fig6":
        scene = Scene(view=View(45.0, 30.0))
        ex = scene.add_point("e_x", (1.0, 0.0, 0.0))
        ey = scene.add_point("e_y", (0.0, 1.0, 0.0))
        ez = scene.add_point("e_z", (0.0, 0.0, 1.0))
        scene.add_arc("α_i", ex, ey)
        scene.add_arc("α_k", ey, ez)
        scene.add_arc("α_j", ex, ez)
        return scene
    if name == "fig8":
        return _worked_example_scene(("α_p", "α_q", "α_h", "α_h′"), View(30.0, 20.0))
    if name == "fig9":
        return _worked_example_scene(("p", "q", "qp", "pq"), View(30.0, 20.0))
    raise KeyError(f"unknown figure {name!r}")


FIGURES = ("fig5", "fig6", "fig8", "fig9")
