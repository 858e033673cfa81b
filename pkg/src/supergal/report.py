"""Assemble the Galois-representation summary of y^n = f(x).

Over K_2 = K(p^(1/n)) the Tate module splits into the abelian parts of the
special-fiber components and a toric part of rank b_1 of the dual graph, on
which inertia acts through b_1 unipotent 2x2 blocks and Frobenius through its
permutation of the graph.  Over K, ramified twists appear on the d-new
abelian parts of a component exactly when d does not divide its content
valuation e_t.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .arith import divisors, euler_phi
from .clusters import (
    DEFAULT_MAX_ROOTS,
    ClusterPicture,
    CurveInput,
    build_cluster_picture,
    cluster_records,
)
from .errors import ConsistencyError, PreconditionError
from .fiber import ComponentFamily, component_genus, num_irreducible, reduce_all
from .graph import (
    DualGraph,
    H1Action,
    betti,
    build_dual_graph,
    frobenius_on_graph,
    graph_record,
    h1_frobenius,
    inertia_on_graph,
    rank_formula,
)
from .triples import DEFAULT_MAX_POINTS, branch_points, cross_check

OUT_OF_SCOPE = "requires point counting; out of scope"


def curve_genus(n: int, deg_f: int, strict: bool = True) -> int:
    """Genus of y^n = f(x) with f separable of degree deg_f.

    With ``strict`` a genus-0 curve raises PreconditionError; otherwise 0 is
    returned.
    """
    g = ((deg_f - 1) * (n - 1) + 1 - math.gcd(n, deg_f)) // 2
    if g <= 0:
        if strict:
            raise PreconditionError(f"curve has genus 0 (n = {n}, deg f = {deg_f})")
        return 0
    return g


def _new_parts(genus_of: dict[int, int]) -> dict[int, int]:
    new: dict[int, int] = {}
    for d in sorted(genus_of):
        new[d] = genus_of[d] - sum(new[e] for e in new if d % e == 0 and e < d)
    return new


def dnew_genera(n: int, deg_f: int) -> dict[int, tuple[int, int]]:
    """For each d | n: (genus of y^d = f(x), genus of its d-new part)."""
    g = {d: (0 if d == 1 else curve_genus(d, deg_f, strict=False)) for d in divisors(n)}
    new = _new_parts(g)
    return {d: (g[d], new[d]) for d in g}


@dataclass(frozen=True)
class TwistCharacter:
    d: int
    ramified: bool
    order: int
    description: str

    def to_dict(self) -> dict:
        return {"d": self.d, "ramified": self.ramified, "order": self.order, "description": self.description}


@dataclass
class DnewRow:
    divisor: int
    genus_d: int
    genus_d_new: int
    character: TwistCharacter
    multiplicity: int

    @property
    def inertia_exponents(self) -> list[int]:
        """Exponents i of chi^i in one copy of the inertia representation."""
        if not self.character.ramified or self.genus_d_new == 0:
            return []
        return [i for i in range(1, self.divisor + 1) if math.gcd(i, self.divisor) == 1]

    def to_dict(self) -> dict:
        if self.genus_d_new == 0:
            inertia = "zero-dimensional"
        elif self.character.ramified:
            inertia = f"{self.multiplicity} x (" + " + ".join(f"chi^{i}" for i in self.inertia_exponents) + ")"
        else:
            inertia = "trivial"
        return {
            "divisor": self.divisor,
            "genus_d": self.genus_d,
            "genus_d_new": self.genus_d_new,
            "twist": self.character.to_dict(),
            "multiplicity": self.multiplicity,
            "inertia": inertia,
            "frobenius": OUT_OF_SCOPE,
        }


def inertia_characters(family: ComponentFamily, n: int, p: int | None = None) -> list[DnewRow]:
    """d-new decomposition of one component family and its inertia characters.

    For each d | n, d > 1, with y^d = f_t of positive genus: the genus of
    that cover (all its components), the d-new genus, and the character of
    K(p^(e_t/d))/K, ramified iff d does not divide e_t.  On a ramified
    d-new part inertia acts as ``multiplicity`` copies of the sum of chi^i
    over i prime to d, with multiplicity = 2 g_new(d) / phi(d).
    """
    mults = family.children_mults
    cover = {1: 0}
    for d in divisors(n)[1:]:
        cover[d] = num_irreducible(d, mults) * component_genus(d, mults)
    new = _new_parts(cover)
    prime = "p" if p is None else str(p)

    rows = []
    for d in divisors(n)[1:]:
        if cover[d] == 0:
            continue
        ramified = family.e_t % d != 0
        order = d // math.gcd(d, family.e_t)
        if 2 * new[d] % euler_phi(d):
            raise ConsistencyError(
                f"d-new genus {new[d]} not compatible with phi({d})",
                {"cluster": family.cluster_id, "d": d},
            )
        if ramified:
            desc = f"K({prime}^(1/{order}))/K, ramified of order {order}"
        else:
            desc = f"unramified ({d} | e_t = {family.e_t})"
        rows.append(DnewRow(
            divisor=d,
            genus_d=cover[d],
            genus_d_new=new[d],
            character=TwistCharacter(d=d, ramified=ramified, order=order if ramified else 1, description=desc),
            multiplicity=2 * new[d] // euler_phi(d),
        ))
    return rows


@dataclass
class GaloisReport:
    input: CurveInput
    picture: ClusterPicture
    families: dict[int, ComponentFamily]
    graph: DualGraph
    curve_genus: int
    abelian_genus_sum: int
    toric_rank: int
    rank_formula: int
    h1_action: H1Action
    inertia_K2: int
    dnew: dict[int, tuple[int, int]]
    dnew_rows: dict[int, list[DnewRow]]
    inertia_over_K: dict
    checks: dict[str, str] = field(default_factory=dict)

    @property
    def twist_characters(self) -> list[tuple[int, TwistCharacter]]:
        """(cluster id, character) for every ramified twist."""
        return [
            (cid, row.character)
            for cid, rows in self.dnew_rows.items()
            for row in rows
            if row.character.ramified
        ]

    def to_dict(self) -> dict:
        per_cluster = []
        for cid, fam in self.families.items():
            rec = fam.to_dict()
            rec["dnew_rows"] = [row.to_dict() for row in self.dnew_rows[cid]]
            per_cluster.append(rec)
        return {
            "input": self.input.to_dict(),
            "clusters": cluster_records(self.picture),
            "components": per_cluster,
            "dual_graph": graph_record(self.graph),
            "galois": {
                "curve_genus": self.curve_genus,
                "toric_rank": self.toric_rank,
                "abelian_genus_sum": self.abelian_genus_sum,
                "inertia_K2_blocks": self.inertia_K2,
                "h1_frobenius": self.h1_action.to_dict(),
                "dnew": [
                    {"d": d, "genus": g, "genus_new": gn} for d, (g, gn) in sorted(self.dnew.items())
                ],
                "twist_characters": [
                    {"cluster": cid, **ch.to_dict()} for cid, ch in self.twist_characters
                ],
                "toric_inertia_over_K": self.inertia_over_K,
                "abelian_frobenius": OUT_OF_SCOPE,
            },
            "checks": dict(self.checks),
        }


def _descent(graph: DualGraph, families: dict[int, ComponentFamily]) -> dict:
    vperm, eperm = inertia_on_graph(graph, families)
    trivial = vperm == list(range(len(vperm))) and eperm == list(range(len(eperm)))
    return {
        "graph_action_trivial": trivial,
        "status": "SAME_AS_K2" if trivial else "UNDETERMINED",
        "vertex_perm": vperm,
        "edge_perm": eperm,
    }


def assemble_report(
    curve: CurveInput,
    max_roots: int | None = DEFAULT_MAX_ROOTS,
    oracle: bool = False,
    max_points: int | None = DEFAULT_MAX_POINTS,
) -> GaloisReport:
    """Run clusters -> fibers -> graph -> characters and cross-check the result."""
    picture = build_cluster_picture(curve, max_roots)
    families = reduce_all(picture)
    graph = build_dual_graph(picture, families)
    frobenius_on_graph(graph, families, curve.p)
    action = h1_frobenius(graph)

    genus = curve_genus(curve.n, curve.degree)
    abelian = sum(f.abelian_genus for f in families.values())
    toric = betti(graph)
    formula = rank_formula(picture)
    checks = {}

    diagnostics = {
        "input": curve.to_dict(),
        "families": {cid: f.to_dict() for cid, f in families.items()},
        "vertices": len(graph.vertices),
        "edges": len(graph.edges),
    }
    if abelian + toric != genus:
        raise ConsistencyError(
            f"conservation failed: {abelian} + {toric} != {genus}", diagnostics
        )
    checks["conservation"] = "PASS"
    if formula != toric:
        raise ConsistencyError(f"rank formula {formula} != graph Betti number {toric}", diagnostics)
    checks["rank_formula"] = "PASS"

    if oracle:
        if max_points is not None and len(branch_points(curve)) > max_points:
            checks["oracle"] = "SKIPPED"
        else:
            ok, message = cross_check(picture, max_points)
            checks["oracle"] = "PASS" if ok else f"FAIL: {message}"
    else:
        checks["oracle"] = "SKIPPED"

    dnew_rows = {cid: inertia_characters(f, curve.n, curve.p) for cid, f in families.items()}
    for cid, rows in dnew_rows.items():
        fam = families[cid]
        if sum(r.genus_d_new for r in rows) != fam.abelian_genus:
            raise ConsistencyError(f"d-new genera of cluster {cid} do not add up", diagnostics)

    return GaloisReport(
        input=curve,
        picture=picture,
        families=families,
        graph=graph,
        curve_genus=genus,
        abelian_genus_sum=abelian,
        toric_rank=toric,
        rank_formula=formula,
        h1_action=action,
        inertia_K2=toric,
        dnew=dnew_genera(curve.n, curve.degree),
        dnew_rows=dnew_rows,
        inertia_over_K=_descent(graph, families),
        checks=checks,
    )
