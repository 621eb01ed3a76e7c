import networkx as nx
import pytest
from networkx.algorithms import isomorphism as iso

from conftest import grid
from oracles import to_networkx
from rcrnet.analysis import degree_distribution
from rcrnet.topology import NetworkParams, NodeCoord, Variant, build, parse_coord
from rcrnet.symmetry import (
    NodeMapping,
    compose,
    find_automorphism,
    is_automorphism,
    is_vertex_transitive,
    ring_shift,
    theorem9_applicable,
    theorem9_transform,
)

RCR2 = Variant.RCR_II


def nx_vertex_transitive(g, preserve_kinds=True):
    """Pin node 0 in one copy and node v in the other; ask networkx for an isomorphism."""
    G = to_networkx(g)
    edge_match = iso.categorical_edge_match("kind", None) if preserve_kinds else None
    for v in range(1, g.n_nodes):
        A, B = G.copy(), G.copy()
        nx.set_node_attributes(A, {u: u == 0 for u in A}, "root")
        nx.set_node_attributes(B, {u: u == v for u in B}, "root")
        gm = iso.GraphMatcher(A, B, node_match=iso.categorical_node_match("root", False),
                              edge_match=edge_match)
        if not gm.is_isomorphic():
            return False
    return True


def test_applicability_condition():
    assert theorem9_applicable(NetworkParams(2, 3, 1, RCR2))
    assert theorem9_applicable(NetworkParams(1, 1, 0, RCR2))
    assert not theorem9_applicable(NetworkParams(3, 3, 1, RCR2))
    assert not theorem9_applicable(NetworkParams(2, 3, 1))


def test_identity_origin():
    p = NetworkParams(2, 3, 1, RCR2)
    m = theorem9_transform(p, NodeCoord((0, 0, 0), 0))
    assert m.perm == tuple(range(p.n_nodes))


def test_origin_with_zero_cube_is_ring_shift():
    p = NetworkParams(2, 4, 2, RCR2)
    for beta in range(4):
        m = theorem9_transform(p, NodeCoord((0,) * 4, beta))
        # beta*k = 2*beta; bits rotate by multiples of 2 within m=4
        if (beta * 2) % 4 == 0:
            assert m == ring_shift(p, beta)


def test_hand_derived_image():
    p = NetworkParams(2, 3, 1, RCR2)
    g = build(p)
    m = theorem9_transform(p, parse_coord("011;2", p))
    # beta*k = 4, so bit t moves to (t - 1) mod 3: 101 -> 110, then xor 011 -> 101
    assert g.coord(m(g.node(parse_coord("101;1", p)))) == parse_coord("101;0", p)
    assert m(0) == g.node(parse_coord("011;2", p))


@pytest.mark.parametrize(
    "params", [p for p in grid(variants=(RCR2,), max_nodes=512) if theorem9_applicable(p)]
)
def test_every_relabeling_is_an_automorphism(params):
    g = build(params)
    for v in range(g.n_nodes):
        m = theorem9_transform(params, g.coord(v))
        assert m(0) == v
        assert is_automorphism(g, m)


def test_composition_of_relabelings_is_an_automorphism():
    p = NetworkParams(2, 3, 1, RCR2)
    g = build(p)
    maps = [theorem9_transform(p, g.coord(v)) for v in (1, 7, 13, 23)]
    for a in maps:
        for b in maps:
            assert is_automorphism(g, compose(a, b))


def test_ring_shift_breaks_rcr():
    g = build(NetworkParams(2, 3, 2))
    assert not is_automorphism(g, ring_shift(g.params, 1))
    assert is_automorphism(g, ring_shift(g.params, 0))


def test_wrong_variant_rejected():
    p = NetworkParams(2, 3, 1)
    with pytest.raises(ValueError, match="RCR-II"):
        theorem9_transform(p, NodeCoord((0, 0, 0), 0))


def test_mapping_must_be_bijection():
    p = NetworkParams(1, 1, 0)
    with pytest.raises(ValueError, match="permutation"):
        NodeMapping(p, (0, 0))
    with pytest.raises(ValueError):
        compose(NodeMapping(p, (1, 0)), NodeMapping(NetworkParams(1, 1, 1), (0, 1, 2, 3)))


def test_mapping_table():
    m = NodeMapping(NetworkParams(1, 1, 0), (1, 0))
    assert m.table() == "0 1\n1 0\n"


@pytest.mark.parametrize(
    "params, expected, method",
    [
        (NetworkParams(2, 3, 1, RCR2), True, "relabeling"),
        (NetworkParams(2, 3, 2), False, "invariant"),
        (NetworkParams(2, 3, 1), False, "invariant"),
        (NetworkParams(3, 3, 1), False, "invariant"),
        (NetworkParams(3, 3, 1, RCR2), True, "search"),
    ],
)
def test_vertex_transitivity_examples(params, expected, method):
    verdict = is_vertex_transitive(build(params))
    assert verdict.vertex_transitive is expected
    assert verdict.method == method
    assert (verdict.witness is None) is expected


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_hypercubes_are_vertex_transitive(k):
    verdict = is_vertex_transitive(build(NetworkParams(k, 1, 0)))
    assert verdict.vertex_transitive


def test_rcr2_3_3_1_transitive_agrees_with_networkx():
    g = build(NetworkParams(3, 3, 1, RCR2))
    assert not theorem9_applicable(g.params)
    verdict = is_vertex_transitive(g)
    assert verdict.vertex_transitive
    assert len(verdict.automorphisms) == 48
    for v, m in enumerate(verdict.automorphisms):
        assert m(0) == v and is_automorphism(g, m)
    assert nx_vertex_transitive(g)


@pytest.mark.parametrize(
    "params",
    [
        NetworkParams(1, 3, 1, RCR2),
        NetworkParams(2, 4, 1, RCR2),
        NetworkParams(2, 3, 2),
        NetworkParams(2, 2, 1),
        NetworkParams(1, 4, 1),
    ],
)
def test_verdict_agrees_with_networkx(params):
    g = build(params)
    assert is_vertex_transitive(g).vertex_transitive == nx_vertex_transitive(g)


def test_witness_has_no_automorphism():
    g = build(NetworkParams(1, 3, 1, RCR2))
    verdict = is_vertex_transitive(g)
    assert verdict.vertex_transitive is False
    s, t = verdict.witness
    assert find_automorphism(g, s, t) is None


@pytest.mark.parametrize("params", list(grid(max_nodes=64)))
def test_transitive_implies_uniform_degree(params):
    g = build(params)
    verdict = is_vertex_transitive(g)
    if verdict.vertex_transitive:
        assert len(degree_distribution(g).histogram) == 1
    if theorem9_applicable(params):
        assert verdict.vertex_transitive


def test_size_cap_gives_undetermined_verdict():
    verdict = is_vertex_transitive(build(NetworkParams(2, 5, 7)), node_cap=64)
    assert verdict.vertex_transitive is None
    assert verdict.as_dict()["vertex_transitive"] == "not determined (size cap)"
    assert verdict.method == "skipped: size"


def test_kind_blind_mode():
    g = build(NetworkParams(2, 2, 0))
    # RCR(2,2,0) is a 3-cube in disguise; dropping kinds cannot lose transitivity
    assert is_vertex_transitive(g, preserve_kinds=False).vertex_transitive
    assert nx.is_isomorphic(to_networkx(g), nx.hypercube_graph(3))
