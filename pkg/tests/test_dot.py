from graphpres.builtins import dodecahedron_action, truncated_dodecahedron
from graphpres.dot import (cayley_underlying_graph, export_cayley_dot,
                           export_graph_dot, graph_isomorphic)
from graphpres.graphs import Graph
from graphpres.perms import Perm, generate_closure


def test_cyclic_three_cayley_digraph():
    table = generate_closure([Perm.from_cycle(3, [0, 1, 2])])
    text = export_cayley_dot(table, {"a": table.gen_indices[0]})
    lines = [line.strip() for line in text.splitlines()]
    arrows = [line for line in lines if "->" in line]
    assert len(arrows) == 3
    assert all("dir=none" not in line for line in arrows)
    assert text == export_cayley_dot(table, {"a": table.gen_indices[0]})  # stable


def test_symmetric_three_all_undirected():
    table = generate_closure([Perm.transposition(3, 0, 1), Perm.transposition(3, 1, 2)])
    gens = {"a": table.gen_indices[0], "b": table.gen_indices[1]}
    text = export_cayley_dot(table, gens)
    arrows = [line for line in text.splitlines() if "->" in line]
    assert len(arrows) == 6  # 6 vertices * 2 involutions / 2
    assert all("dir=none" in line for line in arrows)
    graph = cayley_underlying_graph(table, gens)
    assert graph.vertex_count == 6 and len(graph.edges) == 6


def test_non_generating_set_gives_subgroup_diagram():
    table = generate_closure([Perm.transposition(4, 0, 1), Perm.transposition(4, 1, 2),
                              Perm.transposition(4, 2, 3)])
    sub = cayley_underlying_graph(table, {"a": table.gen_indices[0]})
    assert sub.vertex_count == 2


def test_export_graph_dot_shape():
    g = Graph(3, [(0, 1), (1, 2)])
    text = export_graph_dot(g)
    assert "0 -- 1;" in text and "1 -- 2;" in text


def test_cayley_diagram_of_rotations_is_the_truncation():
    inp = dodecahedron_action()
    table = inp.ag.group
    h = inp.ag.generator_labels["h"]
    gens = {"s1": inp.ag.generator_labels["s1"], "h": h, "h^-1": table.inverse(h)}
    cayley = cayley_underlying_graph(table, gens)
    Y = truncated_dodecahedron()
    assert cayley.vertex_count == 60 and len(cayley.edges) == 90
    assert graph_isomorphic(cayley, Y.graph)
    # explicit witness: the element sending the base flag around
    base = Y.flag_index[(Y.model.labels["v"], Y.model.labels["w1"])]
    witness = {a: Y.flag_action[a](base) for a in range(60)}
    assert len(set(witness.values())) == 60
    assert all(Y.graph.has_edge(witness[u], witness[w]) for u, w in cayley.edges)


def test_graph_isomorphic_negative_cases():
    Y = truncated_dodecahedron()
    prism = Graph(60, [(i, (i + 1) % 30) for i in range(30)]
                  + [(30 + i, 30 + (i + 1) % 30) for i in range(30)]
                  + [(i, 30 + i) for i in range(30)])
    assert not graph_isomorphic(prism, Y.graph)
    assert not graph_isomorphic(Graph(2, []), Graph(2, [(0, 1)]))
    assert graph_isomorphic(Graph(4, [(0, 1), (2, 3)]),
                            Graph(4, [(0, 2), (1, 3)]))
