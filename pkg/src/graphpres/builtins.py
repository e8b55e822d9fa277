"""Built-in actions: simplex skeletons, dodecahedron rotations, the binary
icosahedral double cover, the truncated dodecahedron, and dihedral cycles.

Each constructor returns a ready DerivationInput (validated action, regular
scaffolding, loop set, stabilizer presentations, edge-stabilizer generators)
plus whatever exact data the example carries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .derive import DerivationInput, StabilizerData
from .golden import GoldenNum, GoldenQuat, QUAT_C, Vec3, quat_mul
from .graphs import ActionedGraph, Graph, OrientedEdge
from .perms import FiniteGroupTable, Perm, perm_compose
from .polyhedra import DodecahedronModel, dodecahedron_model, icosian_group
from .scaffold import build_regular_scaffolding
from .words import Presentation


def _standard_sym_relators(names: list[str]) -> list[list[tuple[str, int]]]:
    """Relators of the symmetric-group presentation on adjacent swaps:
    squares, braid words as (x y)^3, and commutators for distant pairs."""
    rels = []
    for i, x in enumerate(names):
        rels.append([(x, 1), (x, 1)])
        for j in range(i + 1, len(names)):
            y = names[j]
            if j == i + 1:
                rels.append([(x, 1), (y, 1)] * 3)
            else:
                rels.append([(x, 1), (y, 1), (x, -1), (y, -1)])
    return rels


def simplex_action(n: int) -> DerivationInput:
    """The symmetric group on n points acting on the complete graph."""
    if n < 3:
        raise ValueError("need n >= 3")
    graph = Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    gens = {f"x{i}": Perm.transposition(n, i - 1, i) for i in range(1, n)}
    ag = ActionedGraph.from_generators(graph, gens)
    sc = build_regular_scaffolding(ag)

    # stabilizer of vertex 0: the symmetric group on {1..n-1} on adjacent swaps
    stab_names = [f"s{i}" for i in range(2, n)]
    pres = Presentation.from_strings(stab_names, _standard_sym_relators(stab_names))
    gen_elements = {f"s{i}": ag.group.index[Perm.transposition(n, i - 1, i)]
                    for i in range(2, n)}
    stabilizers = {0: StabilizerData(pres, gen_elements)}

    subgroup_gens = {}
    (e0,) = sc.pair_reps
    h_e = tuple(gen_elements[f"s{i}"] for i in range(3, n))
    if h_e:
        subgroup_gens = {e0: h_e}
    return DerivationInput(ag, sc, ((0, 1, 2, 0),), stabilizers, subgroup_gens,
                           {"g[0]": "s1"}, f"simplex:{n}")


def standard_symmetric_presentation(n: int) -> Presentation:
    """The adjacent-swap presentation of the symmetric group on n points."""
    names = [f"s{i}" for i in range(1, n)]
    return Presentation.from_strings(names, _standard_sym_relators(names))


def dihedral_cycle_action(n: int) -> DerivationInput:
    """The dihedral group of order 2n on the n-cycle."""
    if n < 3:
        raise ValueError("need n >= 3")
    graph = Graph(n, [(i, (i + 1) % n) for i in range(n)])
    rot = Perm([(i + 1) % n for i in range(n)])
    mirror = Perm([(n - i) % n for i in range(n)])
    ag = ActionedGraph.from_generators(graph, {"r": rot, "m": mirror})
    sc = build_regular_scaffolding(ag)
    m_idx = ag.generator_labels["m"]
    stabilizers = {0: StabilizerData(
        Presentation.from_strings(["m"], [[("m", 1), ("m", 1)]]), {"m": m_idx})}
    loop = tuple(range(n)) + (0,)
    return DerivationInput(ag, sc, (loop,), stabilizers, {},
                           {"g[0]": "g"}, f"dihedral:{n}")


def dodecahedron_action() -> DerivationInput:
    """The order-60 rotation group on the dodecahedron's vertex graph."""
    model = dodecahedron_model()
    ag = ActionedGraph.from_generators(model.graph, {"h": model.h_perm,
                                                     "s1": model.s1_perm})
    sc = build_regular_scaffolding(ag)
    h_idx = ag.generator_labels["h"]
    stabilizers = {0: StabilizerData(
        Presentation.from_strings(["h"], [[("h", 1)] * 3]), {"h": h_idx})}
    return DerivationInput(ag, sc, (model.base_loop,), stabilizers, {},
                           {"g[0]": "g"}, "dodecahedron")


@dataclass(frozen=True)
class BinaryIcosahedral:
    input: DerivationInput
    quats: tuple[GoldenQuat, ...]         # element index -> quaternion
    named: dict[str, int]                 # h, s1, c, f


def binary_icosahedral_action() -> BinaryIcosahedral:
    """The order-120 double cover acting on the dodecahedron through its
    quotient; carried by the left-regular permutations of its 120 exact
    quaternions."""
    model = dodecahedron_model()
    quats = icosian_group(model)
    index = {q: i for i, q in enumerate(quats)}
    # left-regular permutations and vertex action of the two generators,
    # propagated over the group instead of 120^2 quaternion products
    gen_data = [(index[q], Perm(index[quat_mul(q, r)] for r in quats), perm)
                for q, perm in ((model.h_quat, model.h_perm),
                                (model.s1_quat, model.s1_perm))]
    carrier: list[Perm | None] = [None] * len(quats)
    action: list[Perm | None] = [None] * len(quats)
    carrier[0] = Perm.identity(len(quats))
    action[0] = Perm.identity(model.graph.vertex_count)
    frontier = [0]
    while frontier:
        nxt = []
        for i in frontier:
            for g, left_reg, act in gen_data:
                j = carrier[i](g)  # index of quats[i] * generator
                if carrier[j] is None:
                    carrier[j] = perm_compose(carrier[i], left_reg)
                    action[j] = perm_compose(action[i], act)
                    nxt.append(j)
        frontier = nxt
    assert all(p is not None for p in carrier)
    table = FiniteGroupTable(carrier)  # type: ignore[arg-type]
    named = {"h": index[model.h_quat], "s1": index[model.s1_quat],
             "c": index[QUAT_C], "f": index[model.f_quat]}
    ag = ActionedGraph(model.graph, table, action,
                       {"h": named["h"], "s1": named["s1"]})
    sc = build_regular_scaffolding(ag)
    stabilizers = {0: StabilizerData(
        Presentation.from_strings(["h"], [[("h", 1)] * 6]), {"h": named["h"]})}
    (e0,) = sc.pair_reps
    subgroup_gens = {e0: (named["c"],)}
    inp = DerivationInput(ag, sc, (model.base_loop,), stabilizers, subgroup_gens,
                          {"g[0]": "g", "h": "r"}, "binary-icosahedral")
    return BinaryIcosahedral(inp, tuple(quats), named)


@dataclass(frozen=True)
class TruncatedDodecahedron:
    """The corner-truncated dodecahedron graph with its free rotation action.

    Vertices of Y are corner flags (vertex, neighbor) of the dodecahedron,
    numbered by sorted flag; `t_map` sends each oriented edge of Y to the
    unique rotation carrying its origin flag to its target flag.
    """

    graph: Graph
    flags: tuple[tuple[int, int], ...]
    flag_index: dict[tuple[int, int], int]
    coords: tuple[Vec3, ...]
    pentagon_edges: frozenset[tuple[int, int]]
    triangle_edges: frozenset[tuple[int, int]]
    faces: tuple[tuple[int, ...], ...]          # 32 clockwise boundary cycles
    group: FiniteGroupTable                      # the 60 rotations (vertex perms)
    flag_action: tuple[Perm, ...]                # the same elements on flags
    t_map: dict[OrientedEdge, int]
    model: DodecahedronModel

    def edge_kind(self, e: OrientedEdge) -> str:
        key = (min(e), max(e))
        return "pentagon" if key in self.pentagon_edges else "triangle"


def truncated_dodecahedron() -> TruncatedDodecahedron:
    model = dodecahedron_model()
    X = model.graph
    flags = sorted((v, w) for v in range(X.vertex_count) for w in X.neighbors(v))
    flag_index = {fl: i for i, fl in enumerate(flags)}

    quarter = GoldenNum(Fraction(1, 4))
    coords = []
    for v, w in flags:
        p, q = model.coords[v], model.coords[w]
        coords.append(tuple(a + (b - a) * quarter for a, b in zip(p, q)))

    pentagon, triangle = set(), set()
    edges = []
    for v, w in flags:
        i = flag_index[(v, w)]
        j = flag_index[(w, v)]
        if i < j:
            edges.append((i, j))
            pentagon.add((i, j))
        for w2 in X.neighbors(v):
            if w2 == w:
                continue
            k = flag_index[(v, w2)]
            if i < k:
                edges.append((i, k))
                triangle.add((i, k))
    graph = Graph(60, edges)

    group = ActionedGraph.from_generators(model.graph,
                                          {"h": model.h_perm, "s1": model.s1_perm}).group
    flag_action = tuple(Perm(flag_index[(p(v), p(w))] for v, w in flags)
                        for p in group.elements)

    faces: list[tuple[int, ...]] = []
    for v in range(X.vertex_count):
        cyc = tuple(flag_index[(v, w)] for w in X.neighbors(v))
        faces.append(_orient_cycle_clockwise(cyc, coords))
    for face in model.faces:  # already clockwise vertex cycles of X
        cyc = []
        for a, b in zip(face, face[1:] + face[:1]):
            cyc.append(flag_index[(a, b)])
            cyc.append(flag_index[(b, a)])
        faces.append(_orient_cycle_clockwise(tuple(cyc), coords))
    assert len(faces) == 32

    # free transitive action: element reaching each flag from the base flag
    base = flag_index[(model.labels["v"], model.labels["w1"])]
    reach = {base: 0}
    frontier = [base]
    while frontier:
        nxt = []
        for fl in frontier:
            for g in group.gen_indices:
                img = flag_action[g](fl)
                if img not in reach:
                    reach[img] = group.product(g, reach[fl])
                    nxt.append(img)
        frontier = nxt
    assert len(reach) == 60

    t_map: dict[OrientedEdge, int] = {}
    for i, j in edges:
        gi, gj = reach[i], reach[j]
        t_map[OrientedEdge(i, j)] = group.product(gj, group.inverse(gi))
        t_map[OrientedEdge(j, i)] = group.product(gi, group.inverse(gj))

    return TruncatedDodecahedron(graph, tuple(flags), flag_index, tuple(coords),
                                 frozenset(pentagon), frozenset(triangle),
                                 tuple(faces), group, flag_action, t_map, model)


def _orient_cycle_clockwise(cycle: tuple[int, ...], coords: list[Vec3]) -> tuple[int, ...]:
    from .golden import cross, dot
    pts = [coords[i] for i in cycle]
    center = tuple(sum((p[k] for p in pts), GoldenNum(0)) * GoldenNum(Fraction(1, len(pts)))
                   for k in range(3))
    u = tuple(a - b for a, b in zip(pts[0], center))
    w = tuple(a - b for a, b in zip(pts[1], center))
    sign = dot(cross(u, w), center).sign()  # type: ignore[arg-type]
    assert sign != 0
    if sign > 0:
        cycle = (cycle[0],) + tuple(reversed(cycle[1:]))
    return cycle


BUILTIN_NAMES = ("simplex:<n>", "dodecahedron", "binary-icosahedral",
                 "dihedral:<n>", "truncated-dodecahedron")


def load_builtin(name: str) -> DerivationInput:
    """Derivation input for a builtin name such as `simplex:4`."""
    if name.startswith("simplex:"):
        return simplex_action(int(name.split(":", 1)[1]))
    if name.startswith("dihedral:"):
        return dihedral_cycle_action(int(name.split(":", 1)[1]))
    if name == "dodecahedron":
        return dodecahedron_action()
    if name == "binary-icosahedral":
        return binary_icosahedral_action().input
    if name == "truncated-dodecahedron":
        raise KeyError("truncated-dodecahedron is a graph-only builtin; "
                       "use export-graph")
    raise KeyError(f"unknown builtin {name!r}")
