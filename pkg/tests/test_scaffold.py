import pytest

from graphpres.builtins import (binary_icosahedral_action, dihedral_cycle_action,
                                dodecahedron_action, simplex_action)
from graphpres.graphs import ActionedGraph, Graph, OrientedEdge
from graphpres.perms import Perm
from graphpres.scaffold import (DisconnectedGraphError, Scaffolding,
                                build_regular_scaffolding, build_spanning_tree,
                                validate_regularity)


def triangle_with_midpoints():
    """Two vertex orbits: triangle corners 0,1,2 and edge midpoints 3,4,5."""
    graph = Graph(6, [(0, 3), (3, 1), (1, 4), (4, 2), (2, 5), (5, 0)])
    # S3 permuting the corners, with the induced action on midpoints
    # midpoint 3 lies on {0,1}, 4 on {1,2}, 5 on {2,0}
    def lift(corner_perm):
        mids = {frozenset({0, 1}): 3, frozenset({1, 2}): 4, frozenset({2, 0}): 5}
        images = list(corner_perm.images)
        for pair, m in mids.items():
            target = frozenset(corner_perm(x) for x in pair)
            images.append(mids[target])
        return Perm(images[:3] + images[3:])
    a = lift(Perm.transposition(3, 0, 1))
    b = lift(Perm.transposition(3, 1, 2))
    return ActionedGraph.from_generators(graph, {"a": a, "b": b})


def test_spanning_tree_transitive():
    inp = dodecahedron_action()
    v, tree = build_spanning_tree(inp.ag)
    assert v == (0,) and tree == ()


def test_spanning_tree_trivial_group_path():
    graph = Graph(3, [(0, 1), (1, 2)])
    ag = ActionedGraph.from_generators(graph, {"e": Perm.identity(3)})
    v, tree = build_spanning_tree(ag)
    assert v == (0, 1, 2)
    assert tree == ((0, 1), (1, 2))


def test_spanning_tree_two_orbits():
    ag = triangle_with_midpoints()
    v, tree = build_spanning_tree(ag)
    assert v == (0, 3)
    assert tree == ((0, 3),)


def test_spanning_tree_needs_connected():
    graph = Graph(4, [(0, 1), (2, 3)])
    ag = ActionedGraph.from_generators(graph, {"e": Perm.identity(4)})
    with pytest.raises(DisconnectedGraphError):
        build_spanning_tree(ag)


def test_simplex_scaffolding_matches_hand_data():
    inp = simplex_action(4)
    sc = inp.sc
    assert sc.base_vertices == (0,)
    assert sc.edge_reps[0] == (OrientedEdge(0, 1),)
    e = OrientedEdge(0, 1)
    # the flip of the base edge
    p = inp.ag.action[sc.s[e]]
    assert p(0) == 1 and p(1) == 0 and p(2) == 2 and p(3) == 3
    # conjugated labels: s of (0,i) is the transposition (0 i)
    for i in (2, 3):
        q = inp.ag.action[sc.s[OrientedEdge(0, i)]]
        assert q(0) == i and q(i) == 0
        assert all(q(x) == x for x in range(4) if x not in (0, i))
    assert len(sc.transversals[e]) == 3


def test_dodecahedron_scaffolding_matches_hand_data():
    inp = dodecahedron_action()
    sc, ag = inp.sc, inp.ag
    e = OrientedEdge(0, 1)
    assert sc.pair_reps == (e,)
    assert len(sc.transversals[e]) == 3
    h = ag.generator_labels["h"]
    s1 = ag.generator_labels["s1"]
    assert sc.s[e] == s1
    assert set(sc.transversals[e]) == set(ag.stabilizer(0))
    # propagation by conjugation: s of h(e) is h s1 h^-1
    e3 = ag.apply_edge(h, e)
    assert sc.s[e3] == ag.group.conjugate(h, s1)


def test_double_cover_scaffolding():
    bi = binary_icosahedral_action()
    sc, ag = bi.input.sc, bi.input.ag
    e = OrientedEdge(0, 1)
    assert set(sc.transversals[e]) != set(ag.stabilizer(0))  # proper transversal
    assert len(sc.transversals[e]) == 3
    assert ag.group.product(sc.s[e], sc.s[e]) == bi.named["c"]


def test_regularity_of_all_builtins():
    inputs = [simplex_action(3), simplex_action(5), dodecahedron_action(),
              binary_icosahedral_action().input, dihedral_cycle_action(6)]
    for inp in inputs:
        assert validate_regularity(inp.sc, inp.ag) is None


def test_regularity_of_two_orbit_action():
    ag = triangle_with_midpoints()
    sc = build_regular_scaffolding(ag)
    assert validate_regularity(sc, ag) is None
    assert sc.base_vertices == (0, 3)
    # tree edges are representatives with the identity label
    for e in sc.oriented_tree_edges():
        assert sc.s[e] == 0


def test_regularity_violation_iii_detected():
    inp = dodecahedron_action()
    sc = inp.sc
    h = inp.ag.generator_labels["h"]
    e = OrientedEdge(0, 1)
    d = inp.ag.apply_edge(h, e)
    broken = dict(sc.s)
    broken[d] = inp.ag.group.product(sc.s[d], sc.s[d])  # not u s_e u^-1 any more
    mutated = Scaffolding(sc.base_vertices, sc.tree_edges, sc.edge_reps, sc.pair_reps,
                          sc.transversals, broken, sc.v_of, sc.iota, sc.rep_decomposition)
    violation = validate_regularity(mutated, inp.ag)
    assert violation is not None


def test_regularity_violation_i_detected():
    inp = dodecahedron_action()
    sc = inp.sc
    e = OrientedEdge(0, 1)
    h = inp.ag.generator_labels["h"]
    # replace the flip with another carrier of the far endpoint (not an inversion)
    other = next(i for i in range(inp.ag.group.order)
                 if inp.ag.apply(i, 0) == 1 and inp.ag.apply(i, 1) != 0)
    broken = dict(sc.s)
    broken[e] = other
    mutated = Scaffolding(sc.base_vertices, sc.tree_edges, sc.edge_reps, sc.pair_reps,
                          sc.transversals, broken, sc.v_of, sc.iota, sc.rep_decomposition)
    violation = validate_regularity(mutated, inp.ag)
    assert violation is not None and violation.condition in ("i", "iii")


def test_scaffolding_determinism():
    a = build_regular_scaffolding(dodecahedron_action().ag)
    b = build_regular_scaffolding(dodecahedron_action().ag)
    assert a.s == b.s and a.pair_reps == b.pair_reps and a.transversals == b.transversals


def test_counting_invariants():
    for inp in (simplex_action(5), dodecahedron_action(), dihedral_cycle_action(8)):
        sc, ag = inp.sc, inp.ag
        total_edges = sum(len(ag.graph.oriented_edges_at(v)) for v in sc.base_vertices)
        assert len(sc.s) == total_edges
        assert sum(len(sc.transversals[r]) for r in sc.all_reps) == total_edges
        # the pairing representatives meet each pairing orbit exactly once
        seen = set()
        for r in sc.pair_reps:
            assert r not in seen
            seen.add(r)
            seen.add(sc.iota[r])
        assert seen == set(sc.all_reps)


def test_scaffolding_json_golden_snapshot():
    import json

    from graphpres.scaffold import scaffolding_to_json
    sc = dodecahedron_action().sc
    data = scaffolding_to_json(sc)
    assert data["base_vertices"] == [0]
    assert data["pair_reps"] == [[0, 1]]
    assert len(data["s"]) == 3
    json.dumps(data)  # plain data, serializable
    assert scaffolding_to_json(dodecahedron_action().sc) == data  # stable


def test_transversal_identity_k_property():
    # with the conjugation rule, s_{u(e)}^-1 u s_e collapses back to u
    for inp in (simplex_action(5), dodecahedron_action(),
                binary_icosahedral_action().input):
        sc, ag = inp.sc, inp.ag
        group = ag.group
        for e in sc.all_reps:
            for u in sc.transversals[e]:
                d = ag.apply_edge(u, e)
                k = group.word_product((group.inverse(sc.s[d]), u, sc.s[e]))
                assert k == u
