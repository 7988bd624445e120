import random

import pytest

from planecharge.catalog import (
    CATALOG_ORDER,
    REDUCIBLE_IDS,
    STRUCTURAL_IDS,
    catalog,
    get_configuration,
)
from planecharge.choosability import DemandFunction, is_f_choosable, clique_f_choosable
from planecharge.errors import OverlappingRoles, UnknownConfig, UnknownEdgeInY
from planecharge.plane_graph import build_from_rotation
from planecharge.reducibility import (
    f_values,
    generic_instance,
    verify_catalog,
    verify_configuration,
    verify_reduction,
)
from planecharge.square import SimpleGraph, as_simple, induced_subgraph, square

EXPECTED_F = {
    "no1v": [8],
    "no2v3f": [6],
    "no2v4f": [5],
    "no22v": [7, 7],
    "no23v": [6, 3],
    "no33v": [2, 2],
    "no242v": [6, 2, 6],
    "no243v": [6, 1, 2],
    "no2v_3f": [1, 5],
    "no3v_33f": [4],
    "no3v_44f": [2],
    "no3v3f3f": [2, 2],
    "no3v3f_3f": [3, 2],
    "no3v_3f3v": [1, 3],
    "no3v_m3f3f": [2, 1],
    "no2v__m3f3f": [1, 2, 3, 6],
}


def test_catalog_shape():
    assert len(CATALOG_ORDER) == 19
    assert len(REDUCIBLE_IDS) == 16
    assert set(STRUCTURAL_IDS) == {"conn", "no333f", "no34f"}
    assert CATALOG_ORDER[0] == "conn"
    with pytest.raises(UnknownConfig):
        get_configuration("nope")


@pytest.mark.parametrize("config_id", REDUCIBLE_IDS)
def test_expected_f_values(config_id):
    report = verify_configuration(config_id)
    assert sorted(report.computed_f.values()) == sorted(EXPECTED_F[config_id])
    assert report.f_matches_expected
    assert report.passed


@pytest.mark.parametrize("config_id", REDUCIBLE_IDS)
def test_induced_square_nearly_complete(config_id):
    report = verify_configuration(config_id)
    n = report.induced_square.vertex_count
    missing = n * (n - 1) // 2 - report.induced_square.edge_count
    assert missing == (1 if config_id == "no2v__m3f3f" else 0)


@pytest.mark.parametrize("config_id", REDUCIBLE_IDS)
def test_clique_criterion_agrees_where_complete(config_id):
    report = verify_configuration(config_id)
    if report.induced_square.is_complete():
        f = list(report.computed_f.values())
        assert clique_f_choosable(f) == report.choosable


def test_structural_entries_have_no_instance():
    for config_id in STRUCTURAL_IDS:
        with pytest.raises(ValueError):
            generic_instance(config_id)


def test_verify_catalog_all_pass():
    results = verify_catalog()
    assert [r.config_id for r in results] == list(CATALOG_ORDER)
    assert all(r.passed for r in results)
    kinds = {r.config_id: r.kind for r in results}
    assert sum(1 for k in kinds.values() if k == "reducible") == 16
    assert sum(1 for k in kinds.values() if k == "structural") == 3


def test_perturbed_expectation_fails():
    config = get_configuration("no2v4f")
    wrong = {v: f + 1 for v, f in config.expected_f_by_vertex().items()}
    report = verify_reduction(
        config.pattern,
        config.removed,
        config.recolored,
        config.dropped_edges,
        expected_f=wrong,
    )
    assert report.f_matches_expected is False
    assert not report.passed


def test_condition1_fails_without_removed_edges():
    config = get_configuration("no1v")
    report = verify_reduction(
        config.pattern, config.removed, config.recolored, y=[]
    )
    assert not report.condition1_ok


def test_condition2_fails_on_broken_path():
    # u - x - w with x removed: u,w lose their square edge but sit outside
    # the removed/recolored core
    g = SimpleGraph(3, [(0, 1), (1, 2)])
    report = verify_reduction(
        g, x={1}, r=set(), y=[frozenset((0, 1)), frozenset((1, 2))]
    )
    assert report.condition1_ok
    assert not report.condition2_ok


def test_smaller_ok_requires_removal():
    g = SimpleGraph(2, [(0, 1)])
    report = verify_reduction(g, x=set(), r={0}, y=[])
    assert not report.smaller_ok


def test_role_validation():
    g = SimpleGraph(3, [(0, 1), (1, 2)])
    with pytest.raises(OverlappingRoles):
        f_values(g, {0}, {0})
    with pytest.raises(UnknownEdgeInY):
        verify_reduction(g, set(), {0}, y=[frozenset((0, 2))])


def test_f_values_match_direct_count():
    config = get_configuration("no23v")
    fv = f_values(config.pattern, config.removed, config.recolored)
    assert fv == verify_configuration(config).computed_f


@pytest.mark.parametrize("config_id", REDUCIBLE_IDS)
def test_f_values_against_bfs_distances(config_id):
    """Independent oracle for the demand formula: recount the outside
    vertices within distance two using plain breadth-first distances."""
    config = get_configuration(config_id)
    g = as_simple(config.pattern)
    core = config.core()
    adj = [g.adjacency(v) for v in range(g.vertex_count)]
    got = f_values(g, config.removed, config.recolored)
    for v in core:
        outsiders = sum(
            1
            for u in range(g.vertex_count)
            if u != v
            and u not in core
            and rand_distance(adj, v, u) is not None
            and rand_distance(adj, v, u) <= 2
        )
        assert got[v] == 12 - outsiders


def rand_distance(adj, a, b):
    seen = {a: 0}
    frontier = [a]
    while frontier:
        nxt = []
        for u in frontier:
            for v in adj[u]:
                if v not in seen:
                    seen[v] = seen[u] + 1
                    nxt.append(v)
        frontier = nxt
    return seen.get(b)


def _distances_from_core(g, core):
    adj = [g.adjacency(v) for v in range(g.vertex_count)]
    return {
        v: min(rand_distance(adj, v, c) for c in core)
        for v in range(g.vertex_count)
    }


@pytest.mark.parametrize("config_id", REDUCIBLE_IDS)
def test_padding_extension_changes_nothing(config_id):
    """New vertices at distance 3 or more never move any demand value."""
    rng = random.Random(hash(config_id) & 0xFFFF)
    config = get_configuration(config_id)
    g = as_simple(config.pattern)
    core = config.core()
    base = f_values(g, config.removed, config.recolored)
    dist = _distances_from_core(g, core)
    anchors = [v for v, d in dist.items() if d >= 2]
    for _ in range(5):
        extended_edges = g.edges()
        n = g.vertex_count
        for _ in range(rng.randrange(1, 4)):
            extended_edges = extended_edges + [(rng.choice(anchors), n)]
            n += 1
        extended = SimpleGraph(n, extended_edges)
        assert f_values(extended, config.removed, config.recolored) == base


@pytest.mark.parametrize("config_id", REDUCIBLE_IDS)
def test_overlap_identification_never_lowers_f(config_id):
    """Merging two outside vertices (keeping degrees legal) only raises f."""
    rng = random.Random(hash(config_id) & 0xFFFF)
    config = get_configuration(config_id)
    g = as_simple(config.pattern)
    core = config.core()
    base = f_values(g, config.removed, config.recolored)
    outside = sorted(set(range(g.vertex_count)) - core)
    legal = [
        (u, w)
        for u in outside
        for w in outside
        if u < w
        and not g.has_edge(u, w)
        and len(g.adjacency(u) | g.adjacency(w)) <= 4
    ]
    rng.shuffle(legal)
    for u, w in legal[:8]:
        relabel = {
            v: (u if v == w else v) for v in range(g.vertex_count)
        }
        merged_edges = {
            (min(relabel[a], relabel[b]), max(relabel[a], relabel[b]))
            for a, b in g.edges()
        }
        # compress ids to 0..n-2
        kept = sorted(set(relabel.values()))
        index = {v: i for i, v in enumerate(kept)}
        merged = SimpleGraph(
            len(kept), [(index[a], index[b]) for a, b in merged_edges]
        )
        new_x = {index[v] for v in config.removed}
        new_r = {index[v] for v in config.recolored}
        merged_f = f_values(merged, new_x, new_r)
        for v in core:
            assert merged_f[index[v]] >= base[v], (u, w, v)


def test_catalog_entry_fields():
    for config in catalog():
        if config.kind == "reducible":
            assert config.removed | config.recolored
            assert config.removed or config.dropped_edges
            assert not (config.removed & config.recolored)
            for v in config.removed:
                for u in config.pattern.neighbors(v):
                    assert frozenset((v, u)) in config.dropped_edges
            if config.expected_f is not None:
                assert all(0 <= f <= 12 for f in config.expected_f.values())
        else:
            assert config.pattern is None
            assert config.cases
