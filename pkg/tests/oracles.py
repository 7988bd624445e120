"""Independent brute-force oracles the tests compare the package against.

Everything here recomputes results the slow, obviously-correct way:
exhaustive permutations for cycles and matches, explicit list enumeration
for choosability, and unpruned rotation products for planarity.
"""

import itertools

from planecharge.choosability import ListAssignment, l_coloring
from planecharge.matcher import MatchEmbedding
from planecharge.plane_graph import build_from_rotation


def naive_has_cycle(adjacency, k):
    n = len(adjacency)
    for perm in itertools.permutations(range(n), k):
        if all(perm[(i + 1) % k] in adjacency[perm[i]] for i in range(k)):
            return True
    return False


def naive_f_choosable(graph, demands):
    """Enumerate every explicit assignment from a universe of size sum(f)."""
    universe = range(sum(demands))
    for lists in itertools.product(
        *[itertools.combinations(universe, f) for f in demands]
    ):
        if l_coloring(graph, ListAssignment.from_lists(lists)) is None:
            return False
    return True


def naive_planar_embedding_exists(adjacency):
    """Try every rotation system outright (no pinning, no pruning)."""
    n = len(adjacency)
    edge_count = sum(len(s) for s in adjacency) // 2
    if edge_count == 0:
        return n <= 1
    target = edge_count - n + 2
    per_vertex = []
    for v in range(n):
        nbrs = sorted(adjacency[v])
        per_vertex.append(
            [(nbrs[0],) + rest for rest in itertools.permutations(nbrs[1:])]
        )
    for rotations in itertools.product(*per_vertex):
        g = build_from_rotation([list(r) for r in rotations])
        if g.face_count == target:
            return True
    return False


# -- brute-force configuration matching ---------------------------------------


def _verts(g, fi):
    return g.face_vertex_set(fi)


def _has_shared_edge(g, fa, fb, edge):
    return edge in g.face_edge_set(fa) and edge in g.face_edge_set(fb)


def _face_partner_count(g, fi):
    count = 0
    for fj in range(g.face_count):
        if fj == fi or g.face_length(fj) != 3:
            continue
        count += len(g.face_edge_set(fi) & g.face_edge_set(fj))
    return count


def brute_force_matches(g, config_id):
    n = g.vertex_count
    faces = range(g.face_count)
    deg = g.degree
    adj = g.has_edge
    out = set()

    def emb(faces_=(), **roles):
        out.add(MatchEmbedding(config_id, tuple(sorted(roles.items())), faces_))

    if config_id == "conn":
        if not g.is_connected():
            emb()
    elif config_id == "no1v":
        for (v,) in itertools.permutations(range(n), 1):
            if deg(v) == 1:
                emb(leaf=v)
    elif config_id in ("no2v3f", "no2v4f"):
        want = 3 if config_id == "no2v3f" else 4
        for (v,) in itertools.permutations(range(n), 1):
            for fi in faces:
                if deg(v) == 2 and g.face_length(fi) == want and v in _verts(g, fi):
                    emb(faces_=(fi,), deg2=v)
    elif config_id == "no22v":
        for a, b in itertools.permutations(range(n), 2):
            if a < b and deg(a) == 2 and deg(b) == 2 and adj(a, b):
                emb(deg2_a=a, deg2_b=b)
    elif config_id == "no23v":
        for a, b in itertools.permutations(range(n), 2):
            if deg(a) == 2 and deg(b) == 3 and adj(a, b):
                emb(deg2=a, deg3=b)
    elif config_id == "no33v":
        for a, b in itertools.permutations(range(n), 2):
            if a < b and deg(a) == 3 and deg(b) == 3 and adj(a, b):
                emb(deg3_a=a, deg3_b=b)
    elif config_id == "no242v":
        for a, m, b in itertools.permutations(range(n), 3):
            if (
                a < b
                and deg(a) == 2
                and deg(b) == 2
                and deg(m) == 4
                and adj(a, m)
                and adj(m, b)
                and not adj(a, b)
            ):
                emb(deg2_a=a, middle=m, deg2_b=b)
    elif config_id == "no243v":
        for a, m, b in itertools.permutations(range(n), 3):
            if (
                deg(a) == 2
                and deg(b) == 3
                and deg(m) == 4
                and adj(a, m)
                and adj(m, b)
                and not adj(a, b)
            ):
                emb(deg2=a, middle=m, deg3=b)
    elif config_id == "no2v_3f":
        for u, anchor in itertools.permutations(range(n), 2):
            for fi in faces:
                if (
                    deg(u) == 2
                    and deg(anchor) == 4
                    and adj(u, anchor)
                    and g.face_length(fi) == 3
                    and anchor in _verts(g, fi)
                    and u not in _verts(g, fi)
                ):
                    emb(faces_=(fi,), deg2=u, anchor=anchor)
    elif config_id in ("no3v_33f", "no3v_44f"):
        want = 3 if config_id == "no3v_33f" else 4
        for v, end in itertools.permutations(range(n), 2):
            for fa, fb in itertools.combinations(faces, 2):
                if (
                    deg(v) == 3
                    and g.face_length(fa) == want
                    and g.face_length(fb) == want
                    and v in _verts(g, fa)
                    and v in _verts(g, fb)
                    and _has_shared_edge(g, fa, fb, frozenset((v, end)))
                ):
                    emb(faces_=(fa, fb), deg3=v, shared_end=end)
    elif config_id == "no333f":
        for fi in faces:
            if g.face_length(fi) != 3 or _face_partner_count(g, fi) < 2:
                continue
            partners = []
            for fj in faces:
                if fj != fi and g.face_length(fj) == 3:
                    partners.extend(
                        [fj] * len(g.face_edge_set(fi) & g.face_edge_set(fj))
                    )
            emb(faces_=(fi,) + tuple(sorted(partners)))
    elif config_id == "no34f":
        for u, v in itertools.permutations(range(n), 2):
            if u >= v:
                continue
            for fi in faces:
                for fj in faces:
                    if (
                        g.face_length(fi) == 3
                        and g.face_length(fj) == 4
                        and _has_shared_edge(g, fi, fj, frozenset((u, v)))
                    ):
                        emb(faces_=(fi, fj), shared_u=u, shared_v=v)
    elif config_id == "no3v3f3f":
        for v, a, b in itertools.permutations(range(n), 3):
            if a >= b:
                continue
            for fi in faces:
                for fj in faces:
                    if (
                        fi != fj
                        and deg(v) == 3
                        and g.face_length(fi) == 3
                        and g.face_length(fj) == 3
                        and v in _verts(g, fi)
                        and v not in _verts(g, fj)
                        and _has_shared_edge(g, fi, fj, frozenset((a, b)))
                    ):
                        emb(faces_=(fi, fj), deg3=v, shared_a=a, shared_b=b)
    elif config_id == "no3v3f_3f":
        for v, pivot in itertools.permutations(range(n), 2):
            for fi in faces:
                for fj in faces:
                    if (
                        fi != fj
                        and deg(v) == 3
                        and g.face_length(fi) == 3
                        and g.face_length(fj) == 3
                        and v in _verts(g, fi)
                        and _verts(g, fi) & _verts(g, fj) == {pivot}
                    ):
                        emb(faces_=(fi, fj), deg3=v, pivot=pivot)
    elif config_id == "no3v_3f3v":
        for v, anchor, w in itertools.permutations(range(n), 3):
            for fi in faces:
                if (
                    deg(v) == 3
                    and deg(anchor) == 4
                    and deg(w) == 3
                    and adj(v, anchor)
                    and g.face_length(fi) == 3
                    and anchor in _verts(g, fi)
                    and w in _verts(g, fi)
                    and v not in _verts(g, fi)
                ):
                    emb(faces_=(fi,), deg3_off=v, anchor=anchor, deg3_on=w)
    elif config_id == "no3v_m3f3f":
        for v, near, far in itertools.permutations(range(n), 3):
            for fa, fb in itertools.combinations(faces, 2):
                blocked = _verts(g, fa) | _verts(g, fb)
                if (
                    deg(v) == 3
                    and g.face_length(fa) == 3
                    and g.face_length(fb) == 3
                    and _has_shared_edge(g, fa, fb, frozenset((near, far)))
                    and adj(v, near)
                    and v not in blocked
                ):
                    emb(faces_=(fa, fb), deg3=v, near_end=near, far_end=far)
    elif config_id == "no2v__m3f3f":
        for d2, mid, near, far in itertools.permutations(range(n), 4):
            for fa, fb in itertools.combinations(faces, 2):
                blocked = _verts(g, fa) | _verts(g, fb)
                if (
                    deg(d2) == 2
                    and deg(mid) == 4
                    and g.face_length(fa) == 3
                    and g.face_length(fb) == 3
                    and _has_shared_edge(g, fa, fb, frozenset((near, far)))
                    and adj(near, mid)
                    and adj(mid, d2)
                    and mid not in blocked
                    and d2 not in blocked
                ):
                    emb(faces_=(fa, fb), deg2=d2, middle=mid, near_end=near, far_end=far)
    else:
        raise ValueError(config_id)
    return out
