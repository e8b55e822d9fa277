import pytest

from graphpres.builtins import (binary_icosahedral_action, dihedral_cycle_action,
                                dodecahedron_action, simplex_action,
                                standard_symmetric_presentation)
from graphpres.coset import todd_coxeter
from graphpres.derive import (DerivationInputError, StabilizerData,
                              auto_derivation_input, close_pseudo_loops,
                              coxeter_substitution, derive_presentation,
                              derived_from_json, derived_to_json,
                              presentation_matches, PatternMismatchError,
                              validate_input)
from graphpres.graphs import ActionedGraph, Graph, find_inversion
from graphpres.perms import Perm
from graphpres.words import Presentation, evaluate_word_in_G


def two_orbit_path_action():
    graph = Graph(3, [(0, 1), (1, 2)])
    swap = Perm([2, 1, 0])
    return ActionedGraph.from_generators(graph, {"m": swap})


def test_validate_input_catches_bad_stabilizer_presentation():
    inp = dodecahedron_action()
    wrong = Presentation.from_strings(["h"], [[("h", 1)] * 4])  # order 4, not 3
    inp.stabilizers[0] = StabilizerData(wrong, inp.stabilizers[0].gen_elements)
    with pytest.raises(DerivationInputError):
        validate_input(inp)


def test_validate_input_catches_non_generating_edge_set():
    bi = binary_icosahedral_action()
    inp = bi.input
    inp.subgroup_gens[inp.sc.pair_reps[0]] = ()
    with pytest.raises(DerivationInputError):
        validate_input(inp)


def test_close_pseudo_loops_passthrough():
    inp = dodecahedron_action()
    loops = close_pseudo_loops(inp.loops, inp.ag, inp.sc)
    assert loops == inp.loops


def test_close_pseudo_loops_prefixes_tree_path():
    ag = two_orbit_path_action()
    inp = auto_derivation_input(ag)
    assert inp.sc.base_vertices == (0, 1)
    closed = close_pseudo_loops([(0, 1)], ag, inp.sc)
    assert closed == ((1, 0, 1),)
    with pytest.raises(DerivationInputError):
        close_pseudo_loops([(0, 2)], ag, inp.sc)  # 2 is not a base vertex


def test_derived_orders_match_groups():
    cases = [(simplex_action(3), 6), (simplex_action(4), 24), (simplex_action(5), 120),
             (dodecahedron_action(), 60), (binary_icosahedral_action().input, 120),
             (dihedral_cycle_action(6), 12)]
    for inp, order in cases:
        derived = derive_presentation(inp)
        assert todd_coxeter(derived.presentation).n == order == inp.ag.group.order


def test_relator_count_discipline():
    inp = simplex_action(5)
    d = derive_presentation(inp)
    invertible = sum(1 for e in inp.sc.pair_reps if find_inversion(inp.ag, e) is not None)
    assert d.families["edge_loop"] == invertible == 1
    assert d.families["edge"] == sum(len(v) for v in inp.subgroup_gens.values()) == 2
    assert d.families["loop"] == len(inp.loops) == 1
    assert d.families["tree"] == 0
    assert len(d.presentation.relators) == sum(d.families.values())


def test_tree_relator_count_multi_orbit():
    ag = two_orbit_path_action()
    inp = auto_derivation_input(ag)
    d = derive_presentation(inp)
    oriented_tree = set(inp.sc.oriented_tree_edges())
    expected = len(oriented_tree & set(inp.sc.pair_reps))
    assert d.families["tree"] == expected == 1


def test_every_relator_evaluates_to_identity():
    inputs = [simplex_action(4), dodecahedron_action(),
              binary_icosahedral_action().input, dihedral_cycle_action(9)]
    for inp in inputs:
        d = derive_presentation(inp)
        group = inp.ag.group
        for rel in d.presentation.relators:
            acc = 0
            for i, s in rel:
                elem = d.gen_elements[d.presentation.generators[i]]
                if s < 0:
                    elem = group.inverse(elem)
                acc = group.product(acc, elem)
            assert acc == 0


def test_simplex_matches_standard_presentation():
    for n in (3, 4, 5):
        inp = simplex_action(n)
        d = derive_presentation(inp)
        assert presentation_matches(d, standard_symmetric_presentation(n), inp.ag)


def test_dodecahedron_matches_golden_presentation():
    inp = dodecahedron_action()
    d = derive_presentation(inp)
    target = Presentation.from_strings(
        ["g", "h"], [[("g", 1)] * 2, [("h", 1)] * 3, [("g", 1), ("h", 1)] * 5])
    assert presentation_matches(d, target, inp.ag)
    # and not a weaker one
    weaker = Presentation.from_strings(
        ["g", "h"], [[("g", 1)] * 2, [("h", 1)] * 3, [("g", 1), ("h", 1)] * 4])
    assert not presentation_matches(d, weaker, inp.ag)


def test_dihedral_golden_shape():
    for n in (3, 8):
        inp = dihedral_cycle_action(n)
        d = derive_presentation(inp)
        target = Presentation.from_strings(
            ["g", "m"], [[("m", 1)] * 2, [("g", 1)] * 2, [("g", 1), ("m", 1)] * n])
        assert presentation_matches(d, target, inp.ag)


def test_coxeter_substitution_from_derived():
    bi = binary_icosahedral_action()
    d = derive_presentation(bi.input)
    stz = coxeter_substitution(d.renamed())
    assert stz.generators == ("s", "t", "z")
    assert todd_coxeter(stz).n == 120


def test_coxeter_substitution_rejects_wrong_pattern():
    with pytest.raises(PatternMismatchError):
        coxeter_substitution(Presentation.from_strings(
            ["a", "b"], [[("a", 1)] * 2, [("b", 1)] * 3, [("a", 1), ("b", 1)] * 3]))
    with pytest.raises(PatternMismatchError):
        coxeter_substitution(Presentation.from_strings(["a"], [[("a", 1)] * 5]))


def test_derived_json_round_trip():
    inp = simplex_action(4)
    d = derive_presentation(inp)
    data = derived_to_json(d)
    back = derived_from_json(data)
    assert back.presentation == d.presentation
    assert back.edge_gens == d.edge_gens
    assert back.gen_elements == d.gen_elements
    assert derived_to_json(back) == data


def test_random_dihedral_instances_sound(rng):
    for _ in range(12):
        n = rng.randint(3, 24)
        inp = dihedral_cycle_action(n)
        d = derive_presentation(inp)
        for word in d.relator_words:
            assert evaluate_word_in_G(word.free_reduce(inp.ag), inp.ag, inp.sc) == 0
        assert todd_coxeter(d.presentation).n == 2 * n
