"""Dual graph of the special fiber over K_2 and the Frobenius action on it.

Vertices are pairs ``(cluster_id, l)`` with ``l`` in ``Z/d`` for the
cluster's component count d.  A child cluster of size a meets its parent in
r = gcd(n, a) points Q_0..Q_{r-1}; Q_i lies on component i mod d on both
sides.  When s_max is not a component, its two children are glued directly.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

from sympy import Matrix, Poly, cyclotomic_poly, symbols

from .arith import dlog_mu, euler_phi
from .clusters import ClusterPicture
from .errors import ConsistencyError
from .fiber import ComponentFamily

Vertex = tuple[int, int]


@dataclass(frozen=True)
class Edge:
    tail: Vertex
    head: Vertex
    index: int
    pair: tuple[int, int]
    r: int


@dataclass
class DualGraph:
    vertices: list[Vertex]
    edges: list[Edge]
    frobenius_vertex_perm: list[int] = field(default_factory=list)
    frobenius_edge_perm: list[int] = field(default_factory=list)

    def vertex_index(self) -> dict[Vertex, int]:
        return {v: k for k, v in enumerate(self.vertices)}

    def adjacency(self) -> dict[Vertex, list[tuple[int, Vertex]]]:
        adj: dict[Vertex, list[tuple[int, Vertex]]] = {v: [] for v in self.vertices}
        for k, e in enumerate(self.edges):
            adj[e.tail].append((k, e.head))
            adj[e.head].append((k, e.tail))
        return adj

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        adj = self.adjacency()
        seen = {self.vertices[0]}
        todo = [self.vertices[0]]
        while todo:
            v = todo.pop()
            for _, w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        return len(seen) == len(self.vertices)


@dataclass
class H1Action:
    betti: int
    tree_edges: list[int]
    cycle_basis: list[dict[int, int]]
    frobenius_matrix: list[list[int]]
    order: int
    charpoly: list[int]
    eigenvalue_multiplicities: dict[int, int]

    def to_dict(self) -> dict:
        return {
            "betti": self.betti,
            "cycle_basis": [{str(k): v for k, v in sorted(c.items())} for c in self.cycle_basis],
            "matrix": self.frobenius_matrix,
            "order": self.order,
            "charpoly": self.charpoly,
            "eigenvalue_multiplicities": {str(k): v for k, v in sorted(self.eigenvalue_multiplicities.items())},
        }


def _gluing_pairs(picture: ClusterPicture) -> list[tuple[int, int]]:
    """(parent, child) cluster pairs whose components meet."""
    pairs = []
    if picture.smax_in_image:
        for s in picture:
            if not s.is_max:
                pairs.append((s.parent_id, s.id))
    else:
        # s_max has two children; a singleton child is just a point on the other one
        top = picture.smax.child_ids
        assert picture.num_children(picture.smax) == 2 and top
        if len(top) == 2:
            pairs.append((min(top), max(top)))
        for s in picture:
            if not s.is_max and s.parent_id != picture.smax_id:
                pairs.append((s.parent_id, s.id))
    return pairs


def build_dual_graph(picture: ClusterPicture, families: dict[int, ComponentFamily]) -> DualGraph:
    n = picture.input.n
    vertices = [(cid, l) for cid in sorted(families) for l in range(families[cid].d)]
    edges = []
    for a, b in _gluing_pairs(picture):
        r = math.gcd(n, picture.clusters[b].size)
        da, db = families[a].d, families[b].d
        for i in range(r):
            edges.append(Edge(tail=(a, i % da), head=(b, i % db), index=i, pair=(a, b), r=r))
    graph = DualGraph(vertices=vertices, edges=edges)
    if not graph.is_connected():
        raise ConsistencyError("dual graph is disconnected", {"pairs": _gluing_pairs(picture)})
    return graph


def betti(graph: DualGraph) -> int:
    return len(graph.edges) - len(graph.vertices) + 1


def rank_formula(picture: ClusterPicture) -> int:
    """Toric rank read off the cluster picture alone.

    Sum of gcd(n, |s|) over non-maximal proper clusters, minus the sum of
    gcd(n, child sizes) over all proper clusters, plus one.
    """
    n = picture.input.n
    points = sum(math.gcd(n, s.size) for s in picture if not s.is_max)
    comps = sum(math.gcd(n, *picture.children_sizes(s)) for s in picture)
    return points - comps + 1


def _edge_shift(pair: tuple[int, int], r: int, families: dict[int, ComponentFamily], p: int) -> int:
    # the points over a node are the r-th roots of the child's residue constant
    return dlog_mu(families[pair[1]].c_residue, r, p)


def _permutations(graph, vertex_shift, edge_shift):
    vidx = graph.vertex_index()
    ncomp: dict[int, int] = {}
    for cid, _ in graph.vertices:
        ncomp[cid] = ncomp.get(cid, 0) + 1
    vperm = [vidx[(cid, (l + vertex_shift[cid]) % ncomp[cid])] for cid, l in graph.vertices]

    eidx = {(e.pair, e.index): k for k, e in enumerate(graph.edges)}
    eperm = []
    for e in graph.edges:
        k = edge_shift[e.pair]
        image = graph.edges[eidx[(e.pair, (e.index + k) % e.r)]]
        ends = {graph.vertices[vperm[vidx[e.tail]]], graph.vertices[vperm[vidx[e.head]]]}
        if ends != {image.tail, image.head}:
            raise ConsistencyError(
                "inconsistent root-of-unity normalization",
                {"edge": (e.pair, e.index), "shift": k},
            )
        eperm.append(eidx[(e.pair, (e.index + k) % e.r)])
    return vperm, eperm


def frobenius_on_graph(graph: DualGraph, families: dict[int, ComponentFamily], p: int):
    """Permutations of vertices and edges induced by Frobenius of F_p."""
    vshift = {cid: f.frobenius_vertex_shift for cid, f in families.items()}
    eshift = {}
    for e in graph.edges:
        if e.pair not in eshift:
            eshift[e.pair] = _edge_shift(e.pair, e.r, families, p)
    vperm, eperm = _permutations(graph, vshift, eshift)
    graph.frobenius_vertex_perm = vperm
    graph.frobenius_edge_perm = eperm
    return vperm, eperm


def inertia_on_graph(graph: DualGraph, families: dict[int, ComponentFamily]):
    """Permutations induced by a generator of Gal(K_2/K) via lift-act-reduce.

    The generator multiplies p^(1/n) by zeta_n, hence y_t = y / p^(e_t/n) by
    zeta_n^(-e_t): component l moves to l + e_t (mod d) and the node point
    Q_i to Q_(i + e_t) (mod r).
    """
    vshift = {cid: f.e_t for cid, f in families.items()}
    eshift = {}
    for e in graph.edges:
        ea, eb = families[e.pair[0]].e_t, families[e.pair[1]].e_t
        if (ea - eb) % e.r:
            raise ConsistencyError("content valuations disagree across a node", {"pair": e.pair})
        eshift[e.pair] = eb % e.r
    return _permutations(graph, vshift, eshift)


def _spanning_tree(graph: DualGraph, root: Vertex) -> tuple[dict[Vertex, tuple[int, Vertex] | None], list[int]]:
    adj = graph.adjacency()
    up: dict[Vertex, tuple[int, Vertex] | None] = {root: None}
    tree = []
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for k, w in adj[v]:
            if w not in up:
                up[w] = (k, v)
                tree.append(k)
                queue.append(w)
    return up, tree


def _path_to_root(v: Vertex, up, graph: DualGraph) -> dict[int, int]:
    """Signed edge vector of the tree path from v up to the root."""
    out: dict[int, int] = {}
    while up[v] is not None:
        k, w = up[v]
        e = graph.edges[k]
        out[k] = out.get(k, 0) + (1 if e.tail == v else -1)
        v = w
    return out


def _add(acc: dict[int, int], vec: dict[int, int], sign: int = 1) -> None:
    for k, c in vec.items():
        acc[k] = acc.get(k, 0) + sign * c
        if acc[k] == 0:
            del acc[k]


def cycle_basis(graph: DualGraph):
    """Fundamental cycles of a BFS spanning tree, as signed edge vectors.

    Returns (tree edge ids, non-tree edge ids, cycles); cycle j contains its
    own non-tree edge with coefficient +1 and no other non-tree edge.
    """
    root = (0, 0) if (0, 0) in graph.vertex_index() else min(graph.vertices)
    up, tree = _spanning_tree(graph, root)
    tree_set = set(tree)
    chords = [k for k in range(len(graph.edges)) if k not in tree_set]
    cycles = []
    for k in chords:
        e = graph.edges[k]
        c = {k: 1}
        _add(c, _path_to_root(e.head, up, graph))
        _add(c, _path_to_root(e.tail, up, graph), -1)
        cycles.append(c)
    return tree, chords, cycles


def push_cycle(graph: DualGraph, cycle: dict[int, int], vperm: list[int], eperm: list[int]) -> dict[int, int]:
    """Image of an oriented cycle under a graph automorphism."""
    vidx = graph.vertex_index()
    out: dict[int, int] = {}
    for k, c in cycle.items():
        e, img = graph.edges[k], graph.edges[eperm[k]]
        tail = graph.vertices[vperm[vidx[e.tail]]]
        sign = 1 if tail == img.tail else -1
        _add(out, {eperm[k]: sign * c})
    return out


def _matrix_order(m: Matrix, bound: int) -> int:
    ident = Matrix.eye(m.rows)
    power = m
    for k in range(1, bound + 1):
        if power == ident:
            return k
        power = power * m
    raise ConsistencyError("H1 action does not have the expected finite order", {"bound": bound})


def cyclotomic_multiplicities(charpoly: Poly, order: int) -> dict[int, int]:
    """Exponent of each cyclotomic factor Phi_k (k | order) in the polynomial."""
    x = charpoly.gens[0]
    rest = charpoly
    mult: dict[int, int] = {}
    for k in range(1, order + 1):
        if order % k:
            continue
        phi = Poly(cyclotomic_poly(k, x), x)
        while True:
            q, r = rest.div(phi)
            if not r.is_zero:
                break
            rest = q
            mult[k] = mult.get(k, 0) + 1
    if rest.degree() != 0:
        raise ConsistencyError("characteristic polynomial is not a product of cyclotomic factors")
    return mult


def _lcm_cycle_lengths(perm: list[int]) -> int:
    seen, out = set(), 1
    for start in range(len(perm)):
        if start in seen:
            continue
        length, k = 0, start
        while k not in seen:
            seen.add(k)
            k = perm[k]
            length += 1
        out = math.lcm(out, length)
    return out


def h1_action(graph: DualGraph, vperm: list[int], eperm: list[int]) -> H1Action:
    """Matrix of a graph automorphism on H1 in the fundamental-cycle basis."""
    tree, chords, cycles = cycle_basis(graph)
    col_of = {k: j for j, k in enumerate(chords)}
    b = len(chords)
    rows = [[0] * b for _ in range(b)]
    for j, c in enumerate(cycles):
        image = push_cycle(graph, c, vperm, eperm)
        for k, coeff in image.items():
            if k in col_of:
                rows[col_of[k]][j] = coeff
    x = symbols("x")
    if b == 0:
        return H1Action(0, tree, [], [], 1, [1], {})
    m = Matrix(rows)
    order = _matrix_order(m, _lcm_cycle_lengths(eperm))
    cp = m.charpoly(x)
    cp = Poly(cp.as_expr(), x)
    mult = cyclotomic_multiplicities(cp, order)
    if sum(euler_phi(k) * c for k, c in mult.items()) != b:
        raise ConsistencyError("cyclotomic degrees do not add up to the Betti number")
    return H1Action(
        betti=b,
        tree_edges=tree,
        cycle_basis=cycles,
        frobenius_matrix=rows,
        order=order,
        charpoly=[int(c) for c in cp.all_coeffs()],
        eigenvalue_multiplicities=mult,
    )


def h1_frobenius(graph: DualGraph) -> H1Action:
    return h1_action(graph, graph.frobenius_vertex_perm, graph.frobenius_edge_perm)


def perm_orbits(perm: list[int]) -> list[list[int]]:
    seen, orbits = set(), []
    for start in range(len(perm)):
        if start in seen:
            continue
        orbit, k = [], start
        while k not in seen:
            seen.add(k)
            orbit.append(k)
            k = perm[k]
        orbits.append(orbit)
    return orbits


_PALETTE = ["lightblue", "lightpink", "palegreen", "khaki", "plum", "lightsalmon", "lightcyan", "wheat"]


def _vname(v: Vertex) -> str:
    return f"s{v[0]}:{v[1]}"


def to_dot(graph: DualGraph, families: dict[int, ComponentFamily], color_orbits: bool = False) -> str:
    """Graphviz source; with ``color_orbits`` vertices/edges are colored by Frobenius orbit."""
    vcolor, ecolor = {}, {}
    if color_orbits:
        for k, orb in enumerate(o for o in perm_orbits(graph.frobenius_vertex_perm)):
            for v in orb:
                vcolor[v] = _PALETTE[k % len(_PALETTE)] if len(orb) > 1 else "white"
        for k, orb in enumerate(perm_orbits(graph.frobenius_edge_perm)):
            for e in orb:
                ecolor[e] = f"/set19/{k % 9 + 1}" if len(orb) > 1 else "black"
    name = "frobenius_orbits" if color_orbits else "dual_graph"
    lines = [f"graph {name} {{"]
    for k, v in enumerate(graph.vertices):
        label = f"{_vname(v)} g={families[v[0]].genus_each}"
        style = f', style=filled, fillcolor="{vcolor[k]}"' if color_orbits else ""
        lines.append(f'  "{_vname(v)}" [label="{label}"{style}];')
    for k, e in enumerate(graph.edges):
        style = f', color="{ecolor[k]}"' if color_orbits else ""
        lines.append(f'  "{_vname(e.tail)}" -- "{_vname(e.head)}" [label="{e.index}"{style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_record(graph: DualGraph) -> dict:
    return {
        "vertices": [list(v) for v in graph.vertices],
        "edges": [
            {"tail": list(e.tail), "head": list(e.head), "index": e.index, "pair": list(e.pair)}
            for e in graph.edges
        ],
        "num_vertices": len(graph.vertices),
        "num_edges": len(graph.edges),
        "betti": betti(graph),
        "frobenius_vertex_perm": graph.frobenius_vertex_perm,
        "frobenius_edge_perm": graph.frobenius_edge_perm,
    }
