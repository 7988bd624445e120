"""The configuration catalog.

Each reducible entry carries a generic instance: a concrete plane fragment
in which the forbidden structure appears with nothing overlapping and every
relevant vertex completed to maximum degree 4.  Vertices whose distance
from the removed/recolored core exceeds two are truncated, since only
vertices within distance two contribute to the demand counts.

Structural entries (disconnectedness and the two face-adjacency bans) have
no generic instance; they record derivation cases that lean on other
entries or on the forbidden 5-cycle, each with a concrete forced patch
where one can be built.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping, Optional

from .plane_graph import PlaneGraph, named_layout

CATALOG_ORDER = (
    "conn",
    "no1v",
    "no2v3f",
    "no2v4f",
    "no22v",
    "no23v",
    "no33v",
    "no242v",
    "no243v",
    "no2v_3f",
    "no3v_33f",
    "no333f",
    "no34f",
    "no3v_44f",
    "no3v3f3f",
    "no3v3f_3f",
    "no3v_3f3v",
    "no3v_m3f3f",
    "no2v__m3f3f",
)

REDUCIBLE_IDS = tuple(c for c in CATALOG_ORDER if c not in ("conn", "no333f", "no34f"))
STRUCTURAL_IDS = ("conn", "no333f", "no34f")


@dataclass(frozen=True)
class StructuralCase:
    """One branch of a structural entry's derivation.

    ``patch_check`` is "five_cycle" (the forced patch contains a 5-cycle,
    so the structure cannot occur in a 5-cycle-free graph), "match" (the
    cited configuration must be detected inside the forced patch), or
    "none" (pure induction, nothing to build).
    """

    description: str
    cites: tuple[str, ...] = ()
    patch: Optional[PlaneGraph] = None
    patch_check: str = "none"


@dataclass(frozen=True)
class Configuration:
    """One catalog entry: pattern, removal/recoloring roles, expected demands."""

    config_id: str
    kind: str  # "reducible" | "structural"
    pattern: Optional[PlaneGraph]
    roles: Mapping[str, int] = field(default_factory=dict)
    removed: frozenset[int] = frozenset()  # X: vertices deleted with their edges
    recolored: frozenset[int] = frozenset()  # R: vertices whose color is redone
    dropped_edges: frozenset[frozenset[int]] = frozenset()  # Y
    expected_f: Optional[Mapping[str, int]] = None  # keyed by role name
    expected_f_multiset: Optional[tuple[int, ...]] = None
    check_completed_square: bool = False
    cases: tuple[StructuralCase, ...] = ()

    def core(self) -> frozenset[int]:
        return self.removed | self.recolored

    def expected_f_by_vertex(self) -> Optional[dict[int, int]]:
        if self.expected_f is None:
            return None
        return {self.roles[name]: f for name, f in self.expected_f.items()}


def _pol(angle_deg: float, radius: float = 1.0) -> tuple[float, float]:
    a = math.radians(angle_deg)
    return (radius * math.cos(a), radius * math.sin(a))


class _Fragment:
    """Accumulates a named straight-line drawing of one generic instance."""

    def __init__(self) -> None:
        self.points: dict[str, tuple[float, float]] = {}
        self.edges: list[tuple[str, str]] = []
        self._pads = 0

    def put(self, name: str, base: Optional[str], offset: tuple[float, float]) -> str:
        bx, by = self.points[base] if base else (0.0, 0.0)
        self.points[name] = (bx + offset[0], by + offset[1])
        return name

    def edge(self, a: str, b: str) -> None:
        self.edges.append((a, b))

    def leaf(self, base: str, angle_deg: float, radius: float = 1.0) -> str:
        name = f"pad{self._pads}"
        self._pads += 1
        self.put(name, base, _pol(angle_deg, radius))
        self.edge(base, name)
        return name

    def stem(self, base: str, angle_deg: float, fan: int = 3, radius: float = 1.0) -> str:
        """A filler neighbor of the core: attach it, then fan out its own pads."""
        name = self.leaf(base, angle_deg, radius)
        for d in {3: (-30, 0, 30), 2: (-30, 30)}[fan]:
            self.leaf(name, angle_deg + d, radius)
        return name

    def build(
        self,
        config_id: str,
        roles: dict[str, str],
        removed: tuple[str, ...] = (),
        recolored: tuple[str, ...] = (),
        dropped: tuple[tuple[str, str], ...] = (),
        expected_f: Optional[dict[str, int]] = None,
        expected_f_multiset: Optional[tuple[int, ...]] = None,
        check_completed_square: bool = False,
    ) -> Configuration:
        graph, index = named_layout(self.points, self.edges)
        x = frozenset(index[n] for n in removed)
        r = frozenset(index[n] for n in recolored)
        y = frozenset(frozenset((index[a], index[b])) for a, b in dropped)
        for v in x:
            for u in graph.neighbors(v):
                assert frozenset((v, u)) in y, "removed vertices keep no edges"
        assert not (x & r)
        assert x or y, "a reducible instance must shrink the graph"
        return Configuration(
            config_id=config_id,
            kind="reducible",
            pattern=graph,
            roles={role: index[n] for role, n in roles.items()},
            removed=x,
            recolored=r,
            dropped_edges=y,
            expected_f=expected_f,
            expected_f_multiset=expected_f_multiset,
            check_completed_square=check_completed_square,
        )


def _no1v() -> Configuration:
    f = _Fragment()
    f.put("lone", None, _pol(0))
    f.put("hub", None, _pol(180))
    f.edge("lone", "hub")
    for a in (90, 180, 270):
        f.leaf("hub", a)
    return f.build(
        "no1v",
        roles={"leaf": "lone"},
        removed=("lone",),
        dropped=(("lone", "hub"),),
        expected_f={"leaf": 8},
    )


def _no2v3f() -> Configuration:
    f = _Fragment()
    f.put("mid", None, _pol(0))
    f.put("top", None, _pol(120))
    f.put("bot", None, _pol(240))
    f.edge("mid", "top")
    f.edge("mid", "bot")
    f.edge("top", "bot")
    f.leaf("top", 90)
    f.leaf("top", 150)
    f.leaf("bot", -90)
    f.leaf("bot", -150)
    return f.build(
        "no2v3f",
        roles={"deg2": "mid"},
        removed=("mid",),
        dropped=(("mid", "top"), ("mid", "bot")),
        expected_f={"deg2": 6},
    )


def _no2v4f() -> Configuration:
    f = _Fragment()
    f.put("mid", None, _pol(0))
    f.put("top", None, _pol(90))
    f.put("far", None, _pol(180))
    f.put("bot", None, _pol(270))
    f.edge("mid", "top")
    f.edge("top", "far")
    f.edge("far", "bot")
    f.edge("bot", "mid")
    f.leaf("top", 45)
    f.leaf("top", 135)
    f.leaf("bot", -45)
    f.leaf("bot", -135)
    return f.build(
        "no2v4f",
        roles={"deg2": "mid"},
        removed=("mid",),
        dropped=(("mid", "top"), ("mid", "bot")),
        expected_f={"deg2": 5},
    )


def _no22v() -> Configuration:
    f = _Fragment()
    f.put("a", None, _pol(0))
    f.put("b", None, _pol(180))
    f.edge("a", "b")
    sa = f.stem("a", 0)
    sb = f.stem("b", 180)
    return f.build(
        "no22v",
        roles={"deg2_a": "a", "deg2_b": "b"},
        removed=("a", "b"),
        dropped=(("a", "b"), ("a", sa), ("b", sb)),
        expected_f={"deg2_a": 7, "deg2_b": 7},
    )


def _no23v() -> Configuration:
    f = _Fragment()
    f.put("a", None, _pol(0))
    f.put("b", None, _pol(180))
    f.edge("a", "b")
    f.stem("a", 0)
    f.stem("b", 240)
    f.stem("b", 120)
    return f.build(
        "no23v",
        roles={"deg2": "a", "deg3": "b"},
        recolored=("a", "b"),
        dropped=(("a", "b"),),
        expected_f={"deg2": 6, "deg3": 3},
    )


def _no33v() -> Configuration:
    f = _Fragment()
    f.put("a", None, _pol(0))
    f.put("b", None, _pol(180))
    f.edge("a", "b")
    f.stem("a", 60)
    f.stem("a", -60)
    f.stem("b", 240)
    f.stem("b", 120)
    return f.build(
        "no33v",
        roles={"deg3_a": "a", "deg3_b": "b"},
        recolored=("a", "b"),
        dropped=(("a", "b"),),
        expected_f={"deg3_a": 2, "deg3_b": 2},
    )


def _no242v() -> Configuration:
    f = _Fragment()
    f.put("a", None, _pol(0))
    f.put("mid", None, (0.0, 0.0))
    f.put("c", None, _pol(180))
    f.edge("a", "mid")
    f.edge("mid", "c")
    sa = f.stem("a", 0)
    f.stem("mid", 60)
    f.stem("mid", 120)
    sc = f.stem("c", 180)
    return f.build(
        "no242v",
        roles={"deg2_a": "a", "middle": "mid", "deg2_b": "c"},
        removed=("a", "c"),
        recolored=("mid",),
        dropped=(("a", "mid"), ("mid", "c"), ("a", sa), ("c", sc)),
        expected_f={"deg2_a": 6, "middle": 2, "deg2_b": 6},
    )


def _no243v() -> Configuration:
    f = _Fragment()
    f.put("a", None, _pol(0))
    f.put("mid", None, (0.0, 0.0))
    f.put("c", None, _pol(180))
    f.edge("a", "mid")
    f.edge("mid", "c")
    sa = f.stem("a", 0)
    f.stem("mid", 60)
    f.stem("mid", 120)
    f.stem("c", 150)
    f.stem("c", 210)
    return f.build(
        "no243v",
        roles={"deg2": "a", "middle": "mid", "deg3": "c"},
        removed=("a",),
        recolored=("mid", "c"),
        dropped=(("a", "mid"), ("a", sa)),
        expected_f={"deg2": 6, "middle": 1, "deg3": 2},
    )


def _no2v_3f() -> Configuration:
    f = _Fragment()
    f.put("anchor", None, _pol(0, 0.75))
    f.put("t1", None, _pol(120, 0.75))
    f.put("t2", None, _pol(240, 0.75))
    f.put("deg2", None, (1.5, 0.0))
    f.edge("anchor", "t1")
    f.edge("t1", "t2")
    f.edge("t2", "anchor")
    f.edge("anchor", "deg2")
    f.stem("anchor", 90, radius=0.75)
    f.leaf("t1", 90, 0.75)
    f.leaf("t1", 150, 0.75)
    f.leaf("t2", 210, 0.75)
    f.leaf("t2", 270, 0.75)
    sd = f.stem("deg2", 0, radius=0.75)
    return f.build(
        "no2v_3f",
        roles={"deg2": "deg2", "anchor": "anchor"},
        removed=("deg2",),
        recolored=("anchor",),
        dropped=(("anchor", "deg2"), ("deg2", sd)),
        expected_f={"anchor": 1, "deg2": 5},
    )


def _no3v_33f() -> Configuration:
    f = _Fragment()
    f.put("deg3", None, (0.0, 0.0))
    f.put("right", None, _pol(0))
    f.put("shared", None, _pol(120))
    f.put("left", None, _pol(240))
    f.edge("right", "shared")
    f.edge("shared", "left")
    f.edge("right", "deg3")
    f.edge("deg3", "left")
    f.edge("shared", "deg3")
    f.leaf("right", -30)
    f.leaf("right", 30)
    f.leaf("shared", 120)
    f.leaf("left", 210)
    f.leaf("left", 270)
    return f.build(
        "no3v_33f",
        roles={"deg3": "deg3", "shared_end": "shared"},
        recolored=("deg3",),
        dropped=(("deg3", "shared"),),
        expected_f={"deg3": 4},
    )


def _no3v_44f() -> Configuration:
    f = _Fragment()
    f.put("deg3", None, (0.0, 0.0))
    f.put("right", None, _pol(0))
    f.put("shared", None, _pol(90))
    f.put("left", None, _pol(180))
    f.put("ne", None, _pol(45, 1.4142))
    f.put("nw", None, _pol(135, 1.4142))
    f.edge("right", "ne")
    f.edge("ne", "shared")
    f.edge("shared", "nw")
    f.edge("nw", "left")
    f.edge("right", "deg3")
    f.edge("deg3", "left")
    f.edge("shared", "deg3")
    f.leaf("right", -30)
    f.leaf("right", 30)
    f.leaf("shared", 90)
    f.leaf("left", 150)
    f.leaf("left", 210)
    return f.build(
        "no3v_44f",
        roles={"deg3": "deg3", "shared_end": "shared"},
        recolored=("deg3",),
        dropped=(("deg3", "shared"),),
        expected_f={"deg3": 2},
    )


def _no3v3f3f() -> Configuration:
    f = _Fragment()
    f.put("deg3", None, _pol(0))
    f.put("a", None, _pol(120))
    f.put("b", None, _pol(240))
    f.put("apex", None, _pol(180, 2.0))
    f.edge("a", "b")
    f.edge("b", "deg3")
    f.edge("deg3", "a")
    f.edge("b", "apex")
    f.edge("apex", "a")
    f.leaf("deg3", 0)
    f.stem("a", 120)
    f.stem("b", 240)
    f.leaf("apex", 150)
    f.leaf("apex", 210)
    return f.build(
        "no3v3f3f",
        roles={"deg3": "deg3", "shared_a": "a", "shared_b": "b"},
        recolored=("a", "b"),
        dropped=(("a", "b"),),
        expected_f={"shared_a": 2, "shared_b": 2},
    )


def _no3v3f_3f() -> Configuration:
    f = _Fragment()
    f.put("deg3", None, _pol(0))
    f.put("pivot", None, _pol(120))
    f.put("t3", None, _pol(240))
    px, py = f.points["pivot"]
    dx, dy = f.points["deg3"]
    tx, ty = f.points["t3"]
    f.points["far_a"] = (2 * px - dx, 2 * py - dy)
    f.points["far_b"] = (2 * px - tx, 2 * py - ty)
    f.edge("deg3", "pivot")
    f.edge("pivot", "t3")
    f.edge("t3", "deg3")
    f.edge("far_a", "far_b")
    f.edge("far_b", "pivot")
    f.edge("pivot", "far_a")
    f.stem("deg3", 0)
    f.leaf("t3", 210)
    f.leaf("t3", 270)
    f.leaf("far_a", 150)
    f.leaf("far_a", 210)
    f.leaf("far_b", 30)
    f.leaf("far_b", 90)
    return f.build(
        "no3v3f_3f",
        roles={"deg3": "deg3", "pivot": "pivot"},
        recolored=("deg3", "pivot"),
        dropped=(("deg3", "pivot"),),
        expected_f={"deg3": 3, "pivot": 2},
    )


def _no3v_3f3v() -> Configuration:
    f = _Fragment()
    f.put("anchor", None, _pol(0))
    f.put("deg3_on", None, _pol(120))
    f.put("t3", None, _pol(240))
    f.put("deg3_off", None, (2.0, 0.0))
    f.edge("anchor", "deg3_on")
    f.edge("deg3_on", "t3")
    f.edge("t3", "anchor")
    f.edge("anchor", "deg3_off")
    f.stem("anchor", -80)
    f.stem("deg3_on", 120)
    f.leaf("t3", 210)
    f.leaf("t3", 270)
    f.leaf("deg3_off", -30)
    f.leaf("deg3_off", 30)
    return f.build(
        "no3v_3f3v",
        roles={"deg3_off": "deg3_off", "anchor": "anchor", "deg3_on": "deg3_on"},
        recolored=("anchor", "deg3_on"),
        dropped=(("anchor", "deg3_on"),),
        expected_f={"anchor": 1, "deg3_on": 3},
    )


def _no3v_m3f3f() -> Configuration:
    f = _Fragment()
    f.put("near", None, _pol(0))
    f.put("far", None, _pol(120))
    f.put("apex_lo", None, _pol(240))
    f.put("apex_hi", None, _pol(60, 2.0))
    f.edge("near", "far")
    f.edge("far", "apex_lo")
    f.edge("apex_lo", "near")
    f.edge("far", "apex_hi")
    f.edge("apex_hi", "near")
    f.stem("near", 0, fan=2)
    f.stem("far", 120)
    f.leaf("apex_lo", 210)
    f.leaf("apex_lo", 270)
    f.leaf("apex_hi", 30)
    f.leaf("apex_hi", 90)
    return f.build(
        "no3v_m3f3f",
        roles={"near_end": "near", "far_end": "far", "deg3": "pad0"},
        recolored=("near", "far"),
        dropped=(("near", "far"),),
        expected_f={"near_end": 2, "far_end": 1},
    )


def _no2v__m3f3f() -> Configuration:
    f = _Fragment()
    f.put("near", None, _pol(0))
    f.put("far", None, _pol(120))
    f.put("apex_lo", None, _pol(240))
    f.put("apex_hi", None, _pol(60, 2.0))
    f.put("middle", "near", (1.0, 0.0))
    f.put("deg2", "middle", (1.0, 0.0))
    f.edge("near", "far")
    f.edge("far", "apex_lo")
    f.edge("apex_lo", "near")
    f.edge("far", "apex_hi")
    f.edge("apex_hi", "near")
    f.edge("near", "middle")
    f.edge("middle", "deg2")
    f.stem("far", 120)
    f.leaf("apex_lo", 210)
    f.leaf("apex_lo", 270)
    f.leaf("apex_hi", 30)
    f.leaf("apex_hi", 90)
    f.stem("middle", -120)
    f.stem("middle", -60)
    f.stem("deg2", 90)
    return f.build(
        "no2v__m3f3f",
        roles={
            "deg2": "deg2",
            "middle": "middle",
            "near_end": "near",
            "far_end": "far",
        },
        recolored=("near", "far", "middle", "deg2"),
        dropped=(("near", "far"),),
        # The per-endpoint split of the demands 2 and 3 is easy to get
        # backwards, so only the multiset is pinned for this entry.
        expected_f_multiset=(1, 2, 3, 6),
        check_completed_square=True,
    )


def _triangle() -> PlaneGraph:
    g, _ = named_layout(
        {"a": (0.0, 0.0), "b": (2.0, 0.0), "c": (1.0, 1.5)},
        [("a", "b"), ("b", "c"), ("c", "a")],
    )
    return g


def _k4() -> PlaneGraph:
    g, _ = named_layout(
        {"a": (0.0, 0.0), "b": (2.0, 0.0), "c": (1.0, 2.0), "m": (1.0, 0.7)},
        [
            ("a", "b"),
            ("b", "c"),
            ("c", "a"),
            ("m", "a"),
            ("m", "b"),
            ("m", "c"),
        ],
    )
    return g


def _three_fans_patch() -> PlaneGraph:
    # A 3-face flanked by edge-sharing 3-faces on two of its sides; the rim
    # through the two apexes closes a 5-cycle.
    g, _ = named_layout(
        {
            "u": (0.0, 0.0),
            "v": (2.0, 0.0),
            "w": (1.0, -1.5),
            "a": (1.0, 1.2),
            "b": (2.8, -1.2),
        },
        [
            ("u", "v"),
            ("v", "w"),
            ("w", "u"),
            ("u", "a"),
            ("a", "v"),
            ("v", "b"),
            ("b", "w"),
        ],
    )
    return g


def _tri_in_quad_patch() -> PlaneGraph:
    # A 3-face sharing two edges with the same 4-face: the wedge vertex is
    # forced to degree 2 on the 3-face.
    g, _ = named_layout(
        {
            "u": (0.0, 0.0),
            "wedge": (1.0, 0.6),
            "w": (2.0, 0.0),
            "z": (1.0, 2.0),
        },
        [("u", "wedge"), ("wedge", "w"), ("u", "w"), ("u", "z"), ("z", "w")],
    )
    return g


def _tri_beside_quad_patch() -> PlaneGraph:
    # A 3-face sharing exactly one edge with a 4-face; the rim is a 5-cycle.
    g, _ = named_layout(
        {
            "u": (0.0, 0.0),
            "v": (2.0, 0.0),
            "w": (1.0, -1.5),
            "a": (2.0, 1.6),
            "b": (0.0, 1.6),
        },
        [("u", "v"), ("v", "w"), ("w", "u"), ("v", "a"), ("a", "b"), ("b", "u")],
    )
    return g


def _conn() -> Configuration:
    return Configuration(
        config_id="conn",
        kind="structural",
        pattern=None,
        cases=(
            StructuralCase(
                "components are strictly smaller graphs and can be colored"
                " one at a time without interaction",
            ),
        ),
    )


def _no333f() -> Configuration:
    return Configuration(
        config_id="no333f",
        kind="structural",
        pattern=None,
        cases=(
            StructuralCase(
                "two edges shared with a single 3-face force a degree-2"
                " vertex on a 3-face",
                cites=("no2v3f",),
                patch=_triangle(),
                patch_check="match",
            ),
            StructuralCase(
                "two distinct non-adjacent 3-faces leave a 5-cycle around"
                " the three faces",
                patch=_three_fans_patch(),
                patch_check="five_cycle",
            ),
            StructuralCase(
                "two distinct adjacent 3-faces force a 3-vertex on two"
                " 3-faces",
                cites=("no3v_33f",),
                patch=_k4(),
                patch_check="match",
            ),
        ),
    )


def _no34f() -> Configuration:
    return Configuration(
        config_id="no34f",
        kind="structural",
        pattern=None,
        cases=(
            StructuralCase(
                "two edges shared with the same 4-face force a degree-2"
                " vertex on a 3-face",
                cites=("no2v3f",),
                patch=_tri_in_quad_patch(),
                patch_check="match",
            ),
            StructuralCase(
                "a single shared edge leaves a 5-cycle around the two faces",
                patch=_tri_beside_quad_patch(),
                patch_check="five_cycle",
            ),
        ),
    )


_BUILDERS = {
    "conn": _conn,
    "no1v": _no1v,
    "no2v3f": _no2v3f,
    "no2v4f": _no2v4f,
    "no22v": _no22v,
    "no23v": _no23v,
    "no33v": _no33v,
    "no242v": _no242v,
    "no243v": _no243v,
    "no2v_3f": _no2v_3f,
    "no3v_33f": _no3v_33f,
    "no333f": _no333f,
    "no34f": _no34f,
    "no3v_44f": _no3v_44f,
    "no3v3f3f": _no3v3f3f,
    "no3v3f_3f": _no3v3f_3f,
    "no3v_3f3v": _no3v_3f3v,
    "no3v_m3f3f": _no3v_m3f3f,
    "no2v__m3f3f": _no2v__m3f3f,
}


@lru_cache(maxsize=None)
def get_configuration(config_id: str) -> Configuration:
    from .errors import UnknownConfig

    if config_id not in _BUILDERS:
        raise UnknownConfig(config_id)
    return _BUILDERS[config_id]()


def catalog() -> list[Configuration]:
    return [get_configuration(c) for c in CATALOG_ORDER]
