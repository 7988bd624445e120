"""Detect catalog configurations inside a concrete plane graph.

Each configuration gets a small handwritten detector plus a predicate that
re-validates a candidate embedding against the host.  Degree requirements
follow the forbidden structures' statements, with derived degrees (for
example the degree-4 middle of a 2-2 path) required exactly; the degenerate
variants those requirements exclude are owned by earlier entries in the
catalog scan order, so the union over the order stays exhaustive.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .catalog import CATALOG_ORDER
from .errors import UnknownConfig
from .plane_graph import PlaneGraph


@dataclass(frozen=True, order=True)
class MatchEmbedding:
    config_id: str
    roles: tuple[tuple[str, int], ...]  # role name -> host vertex, sorted by name
    faces: tuple[int, ...]  # witness face indices

    def role(self, name: str) -> int:
        return dict(self.roles)[name]


def _emb(config_id: str, faces: tuple[int, ...] = (), **roles: int) -> MatchEmbedding:
    return MatchEmbedding(config_id, tuple(sorted(roles.items())), faces)


def _face_indices(g: PlaneGraph, length: int) -> list[int]:
    return [i for i, f in enumerate(g.faces) if len(f) == length]


def _distinct_faces_at(g: PlaneGraph, v: int) -> list[int]:
    return sorted(set(g.faces_at(v)))


def _triangles_flanking(g: PlaneGraph, u: int, w: int) -> Optional[tuple[int, int]]:
    """The two distinct 3-faces on the sides of edge uw, if both exist."""
    h = g.half_edge(u, w)
    fa, fb = g.face_of[h], g.face_of[g.twin[h]]
    if fa != fb and g.face_length(fa) == 3 and g.face_length(fb) == 3:
        return tuple(sorted((fa, fb)))
    return None


# -- detectors ---------------------------------------------------------------


def _find_conn(g: PlaneGraph) -> Iterator[MatchEmbedding]:
    if not g.is_connected():
        yield _emb("conn")


def _find_no1v(g: PlaneGraph) -> Iterator[MatchEmbedding]:
    for v in range(g.vertex_count):
        if g.degree(v) == 1:
            yield _emb("no1v", leaf=v)


def _deg2_on_face(g: PlaneGraph, length: int, config_id: str) -> Iterator[MatchEmbedding]:
    for fi in _face_indices(g, length):
        for v in sorted(g.face_vertex_set(fi)):
            if g.degree(v) == 2:
                yield _emb(config_id, faces=(fi,), deg2=v)


def _find_no2v3f(g: PlaneGraph) -> Iterator[MatchEmbedding]:
    yield from _deg2_on_face(g, 3, "no2v3f")


def _find_no2v4f(g: PlaneGraph) -> Iterator[MatchEmbedding]:
    yield from _deg2_on_face(g, 4, "no2v4f")


def _find_no22v(g: PlaneGraph) -> Iterator[MatchEmbedding]:
    for u, v in g.edges():
        if g.degree(u) == 2 and g.degree(v) == 2:
            yield _emb("no22v", deg2_a=u, deg2_b=v)


def _find_no23v(g: PlaneGraph) -> Iterator[MatchEmbedding]:
    for u, v in g.edges():
        for a, b in ((u, v), (v, u)):
            if g.degree(a) == 2 and g.degree(b) == 3:
                yield _emb("no23v", deg2=a, deg3=b)


def _find_no33v(g: PlaneGraph) -> Iterator[MatchEmbedding]:
    for u, v in g.edges():
        if g.degree(u) == 3 and g.degree(v) == 3:
            yield _emb("no33v", deg3_a=u, deg3_b=v)


def _find_no242v(g: PlaneGraph) -> Iterator[MatchEmbedding]:
    for mid in range(g.vertex_count):
        if g.degree(mid) != 4:
            continue
        nbrs = sorted(u for u in g.neighbors(mid) if g.degree(u) == 2)
        for i, u in enumerate(nbrs):
            for w in nbrs[i + 1 :]:
                if not g.has_edge(u, w):
                    yield _emb("no242v", deg2_a=u, middle=mid, deg2_b=w)


def _find_no243v(g: PlaneGraph) -> Iterator[MatchEmbedding]:
    for mid in range(g.vertex_count):
        if g.degree(mid) != 4:
            continue
        for u in sorted(g.neighbors(mid)):
            if g.degree(u) != 2:
                continue
            for w in sorted(g.neighbors(mid)):
                if g.degree(w) == 3 and not g.has_edge(u, w):
                    yield _emb("no243v", deg2=u, middle=mid, deg3=w)


def _find_no2v_3f(g: PlaneGraph) -> Iterator[MatchEmbedding]:
    for fi in _face_indices(g, 3):
        on_face = g.face_vertex_set(fi)
        for anchor in sorted(on_face):
            if g.degree(anchor) != 4:
                continue
            for u in sorted(g.neighbors(anchor)):
                if g.degree(u) == 2 and u not in on_face:
                    yield _emb("no2v_3f", faces=(fi,), deg2=u, anchor=anchor)


def _two_faces_at_vertex(
    g: PlaneGraph, length: int, config_id: str
) -> Iterator[MatchEmbedding]:
    for v in range(g.vertex_count):
        if g.degree(v) != 3:
            continue
        here = [fi for fi in _distinct_faces_at(g, v) if g.face_length(fi) == length]
        for i, fa in enumerate(here):
            for fb in here[i + 1 :]:
                shared = [
                    e
                    for e in g.face_edge_set(fa) & g.face_edge_set(fb)
                    if v in e
                ]
                if not shared:
                    continue
                (end,) = sorted(shared[0] - {v})
                yield _emb(config_id, faces=(fa, fb), deg3=v, shared_end=end)


def _find_no3v_33f(g: PlaneGraph) -> Iterator[MatchEmbedding]:
    yield from _two_faces_at_vertex(g, 3, "no3v_33f")


def _find_no3v_44f(g: PlaneGraph) -> Iterator[MatchEmbedding]:
    yield from _two_faces_at_vertex(g, 4, "no3v_44f")


def _find_no333f(g: PlaneGraph) -> Iterator[MatchEmbedding]:
    for fi in _face_indices(g, 3):
        partners = []
        for h in g.faces[fi]:
            fj = g.opposite_face(h)
            if fj != fi and g.face_length(fj) == 3:
                partners.append(fj)
        if len(partners) >= 2:
            yield _emb("no333f", faces=(fi,) + tuple(sorted(partners)))


def _find_no34f(g: PlaneGraph) -> Iterator[MatchEmbedding]:
    for fi in _face_indices(g, 3):
        for h in g.faces[fi]:
            fj = g.opposite_face(h)
            if g.face_length(fj) == 4:
                u, v = sorted((g.origin[h], g.target[h]))
                yield _emb("no34f", faces=(fi, fj), shared_u=u, shared_v=v)


def _find_no3v3f3f(g: PlaneGraph) -> Iterator[MatchEmbedding]:
    for v in range(g.vertex_count):
        if g.degree(v) != 3:
            continue
        for fi in _distinct_faces_at(g, v):
            if g.face_length(fi) != 3:
                continue
            for h in g.faces[fi]:
                a, b = g.origin[h], g.target[h]
                if v in (a, b):
                    continue  # only the edge of the 3-face opposite v
                fj = g.opposite_face(h)
                if (
                    fj != fi
                    and g.face_length(fj) == 3
                    and v not in g.face_vertex_set(fj)
                ):
                    yield _emb(
                        "no3v3f3f",
                        faces=(fi, fj),
                        deg3=v,
                        shared_a=min(a, b),
                        shared_b=max(a, b),
                    )


def _find_no3v3f_3f(g: PlaneGraph) -> Iterator[MatchEmbedding]:
    three_faces = _face_indices(g, 3)
    for v in range(g.vertex_count):
        if g.degree(v) != 3:
            continue
        for fi in _distinct_faces_at(g, v):
            if g.face_length(fi) != 3:
                continue
            for pivot in sorted(g.face_vertex_set(fi) - {v}):
                for fj in three_faces:
                    if fj == fi:
                        continue
                    if g.face_vertex_set(fi) & g.face_vertex_set(fj) == {pivot}:
                        yield _emb(
                            "no3v3f_3f", faces=(fi, fj), deg3=v, pivot=pivot
                        )


def _find_no3v_3f3v(g: PlaneGraph) -> Iterator[MatchEmbedding]:
    for fi in _face_indices(g, 3):
        on_face = g.face_vertex_set(fi)
        for anchor in sorted(on_face):
            if g.degree(anchor) != 4:
                continue
            for w in sorted(on_face - {anchor}):
                if g.degree(w) != 3:
                    continue
                for v in sorted(g.neighbors(anchor)):
                    if g.degree(v) == 3 and v not in on_face:
                        yield _emb(
                            "no3v_3f3v",
                            faces=(fi,),
                            deg3_off=v,
                            anchor=anchor,
                            deg3_on=w,
                        )


def _shared_triangle_edges(g: PlaneGraph) -> Iterator[tuple[int, int, tuple[int, int]]]:
    for u, w in g.edges():
        flank = _triangles_flanking(g, u, w)
        if flank is not None:
            yield u, w, flank


def _find_no3v_m3f3f(g: PlaneGraph) -> Iterator[MatchEmbedding]:
    for u, w, (fa, fb) in _shared_triangle_edges(g):
        blocked = g.face_vertex_set(fa) | g.face_vertex_set(fb)
        for near, far in ((u, w), (w, u)):
            for v in sorted(g.neighbors(near)):
                if g.degree(v) == 3 and v not in blocked:
                    yield _emb(
                        "no3v_m3f3f",
                        faces=(fa, fb),
                        deg3=v,
                        near_end=near,
                        far_end=far,
                    )


def _find_no2v__m3f3f(g: PlaneGraph) -> Iterator[MatchEmbedding]:
    for u, w, (fa, fb) in _shared_triangle_edges(g):
        blocked = g.face_vertex_set(fa) | g.face_vertex_set(fb)
        for near, far in ((u, w), (w, u)):
            for mid in sorted(g.neighbors(near)):
                if g.degree(mid) != 4 or mid in blocked:
                    continue
                for d2 in sorted(g.neighbors(mid)):
                    if g.degree(d2) == 2 and d2 not in blocked:
                        yield _emb(
                            "no2v__m3f3f",
                            faces=(fa, fb),
                            deg2=d2,
                            middle=mid,
                            near_end=near,
                            far_end=far,
                        )


_DETECTORS: dict[str, Callable[[PlaneGraph], Iterator[MatchEmbedding]]] = {
    "conn": _find_conn,
    "no1v": _find_no1v,
    "no2v3f": _find_no2v3f,
    "no2v4f": _find_no2v4f,
    "no22v": _find_no22v,
    "no23v": _find_no23v,
    "no33v": _find_no33v,
    "no242v": _find_no242v,
    "no243v": _find_no243v,
    "no2v_3f": _find_no2v_3f,
    "no3v_33f": _find_no3v_33f,
    "no333f": _find_no333f,
    "no34f": _find_no34f,
    "no3v_44f": _find_no3v_44f,
    "no3v3f3f": _find_no3v3f3f,
    "no3v3f_3f": _find_no3v3f_3f,
    "no3v_3f3v": _find_no3v_3f3v,
    "no3v_m3f3f": _find_no3v_m3f3f,
    "no2v__m3f3f": _find_no2v__m3f3f,
}


# -- validation --------------------------------------------------------------


def validate_embedding(g: PlaneGraph, emb: MatchEmbedding) -> bool:
    """Re-check every constraint of a reported embedding against the host."""
    roles = dict(emb.roles)
    faces = emb.faces
    face_set = lambda i: g.face_vertex_set(faces[i])  # noqa: E731
    cid = emb.config_id
    try:
        if cid == "conn":
            return not g.is_connected()
        if cid == "no1v":
            return g.degree(roles["leaf"]) == 1
        if cid in ("no2v3f", "no2v4f"):
            want = 3 if cid == "no2v3f" else 4
            return (
                g.degree(roles["deg2"]) == 2
                and g.face_length(faces[0]) == want
                and roles["deg2"] in face_set(0)
            )
        if cid == "no22v":
            a, b = roles["deg2_a"], roles["deg2_b"]
            return a < b and g.degree(a) == 2 and g.degree(b) == 2 and g.has_edge(a, b)
        if cid == "no23v":
            a, b = roles["deg2"], roles["deg3"]
            return g.degree(a) == 2 and g.degree(b) == 3 and g.has_edge(a, b)
        if cid == "no33v":
            a, b = roles["deg3_a"], roles["deg3_b"]
            return a < b and g.degree(a) == 3 and g.degree(b) == 3 and g.has_edge(a, b)
        if cid == "no242v":
            a, m, b = roles["deg2_a"], roles["middle"], roles["deg2_b"]
            return (
                a < b
                and g.degree(a) == 2
                and g.degree(b) == 2
                and g.degree(m) == 4
                and g.has_edge(a, m)
                and g.has_edge(m, b)
                and not g.has_edge(a, b)
            )
        if cid == "no243v":
            a, m, b = roles["deg2"], roles["middle"], roles["deg3"]
            return (
                g.degree(a) == 2
                and g.degree(b) == 3
                and g.degree(m) == 4
                and g.has_edge(a, m)
                and g.has_edge(m, b)
                and not g.has_edge(a, b)
            )
        if cid == "no2v_3f":
            u, anchor = roles["deg2"], roles["anchor"]
            return (
                g.degree(u) == 2
                and g.degree(anchor) == 4
                and g.has_edge(u, anchor)
                and g.face_length(faces[0]) == 3
                and anchor in face_set(0)
                and u not in face_set(0)
            )
        if cid in ("no3v_33f", "no3v_44f"):
            want = 3 if cid == "no3v_33f" else 4
            v, end = roles["deg3"], roles["shared_end"]
            fa, fb = faces
            shared = frozenset((v, end))
            return (
                g.degree(v) == 3
                and fa != fb
                and g.face_length(fa) == want
                and g.face_length(fb) == want
                and all(v in face_set(i) for i in (0, 1))
                and shared in g.face_edge_set(fa)
                and shared in g.face_edge_set(fb)
            )
        if cid == "no333f":
            fi = faces[0]
            if g.face_length(fi) != 3:
                return False
            partners = [
                g.opposite_face(h)
                for h in g.faces[fi]
                if g.opposite_face(h) != fi
                and g.face_length(g.opposite_face(h)) == 3
            ]
            return len(partners) >= 2 and faces == (fi,) + tuple(sorted(partners))
        if cid == "no34f":
            fi, fj = faces
            shared = frozenset((roles["shared_u"], roles["shared_v"]))
            return (
                g.face_length(fi) == 3
                and g.face_length(fj) == 4
                and shared in g.face_edge_set(fi)
                and shared in g.face_edge_set(fj)
            )
        if cid == "no3v3f3f":
            v, a, b = roles["deg3"], roles["shared_a"], roles["shared_b"]
            fi, fj = faces
            shared = frozenset((a, b))
            return (
                a < b
                and g.degree(v) == 3
                and fi != fj
                and g.face_length(fi) == 3
                and g.face_length(fj) == 3
                and v in face_set(0)
                and v not in face_set(1)
                and shared in g.face_edge_set(fi)
                and shared in g.face_edge_set(fj)
            )
        if cid == "no3v3f_3f":
            v, pivot = roles["deg3"], roles["pivot"]
            fi, fj = faces
            return (
                g.degree(v) == 3
                and fi != fj
                and g.face_length(fi) == 3
                and g.face_length(fj) == 3
                and v in face_set(0)
                and pivot != v
                and face_set(0) & face_set(1) == {pivot}
            )
        if cid == "no3v_3f3v":
            v, anchor, w = roles["deg3_off"], roles["anchor"], roles["deg3_on"]
            return (
                g.degree(v) == 3
                and g.degree(anchor) == 4
                and g.degree(w) == 3
                and g.has_edge(v, anchor)
                and g.face_length(faces[0]) == 3
                and anchor in face_set(0)
                and w in face_set(0)
                and w != anchor
                and v not in face_set(0)
            )
        if cid in ("no3v_m3f3f", "no2v__m3f3f"):
            near, far = roles["near_end"], roles["far_end"]
            fa, fb = faces
            shared = frozenset((near, far))
            blocked = face_set(0) | face_set(1)
            base = (
                fa != fb
                and fa < fb
                and g.face_length(fa) == 3
                and g.face_length(fb) == 3
                and shared in g.face_edge_set(fa)
                and shared in g.face_edge_set(fb)
            )
            if cid == "no3v_m3f3f":
                v = roles["deg3"]
                return (
                    base
                    and g.degree(v) == 3
                    and g.has_edge(v, near)
                    and v not in blocked
                )
            d2, mid = roles["deg2"], roles["middle"]
            return (
                base
                and g.degree(d2) == 2
                and g.degree(mid) == 4
                and g.has_edge(near, mid)
                and g.has_edge(mid, d2)
                and mid not in blocked
                and d2 not in blocked
            )
    except KeyError:
        return False
    raise UnknownConfig(cid)


# -- public API --------------------------------------------------------------


def find_configuration(g: PlaneGraph, config_id: str) -> list[MatchEmbedding]:
    """All embeddings of one configuration, canonically ordered."""
    if config_id not in _DETECTORS:
        raise UnknownConfig(config_id)
    matches = sorted(set(_DETECTORS[config_id](g)))
    for emb in matches:
        assert validate_embedding(g, emb), f"unsound match {emb}"
    return matches


def find_any_reducible(g: PlaneGraph) -> Optional[MatchEmbedding]:
    """First match over the fixed catalog order, or None."""
    for config_id in CATALOG_ORDER:
        matches = find_configuration(g, config_id)
        if matches:
            return matches[0]
    return None
