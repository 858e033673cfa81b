"""Reduction of the cover over each cluster's component of the stable line.

Over the chart x = p^mu * x_t + center of a cluster s the reduced equation is

    y_t^n = c_t * prod_i (x_t - alpha_i)^(a_i)

with one factor per child of s (a_i = child size, alpha_i its reduced
position) and c_t the residue of the unit part of the constant.  It splits
into d = gcd(n, a_1, ..., a_N) irreducible components indexed by l in Z/d.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Sequence

from .arith import dlog_mu, residue, unit_residue
from .clusters import Cluster, ClusterPicture, content_valuation
from .errors import ConsistencyError


@dataclass(frozen=True)
class ComponentFamily:
    cluster_id: int
    center: Fraction
    scale_mu: int
    n: int
    children_mults: tuple[int, ...]
    reduced_roots: tuple[int, ...]
    d: int
    e_t: int
    c_residue: int
    genus_each: int
    frobenius_vertex_shift: int

    @property
    def definition_field_degree(self) -> int:
        """Degree of the residue extension over which each component is defined."""
        return self.d // math.gcd(self.d, self.frobenius_vertex_shift)

    @property
    def abelian_genus(self) -> int:
        return self.d * self.genus_each

    def equation(self) -> str:
        factors = []
        for alpha, a in zip(self.reduced_roots, self.children_mults):
            base = "x" if alpha == 0 else f"(x - {alpha})"
            factors.append(base if a == 1 else f"{base}^{a}")
        return f"y^{self.n} = {self.c_residue}*" + "*".join(factors)

    def to_dict(self) -> dict:
        return {
            "cluster": self.cluster_id,
            "equation": {
                "n": self.n,
                "constant_mod_p": self.c_residue,
                "roots": [[alpha, a] for alpha, a in zip(self.reduced_roots, self.children_mults)],
                "text": self.equation(),
            },
            "d": self.d,
            "genus_each": self.genus_each,
            "e_t": self.e_t,
            "frobenius_shift": self.frobenius_vertex_shift,
            "definition_field_degree": self.definition_field_degree,
        }


def num_irreducible(n: int, mults: Sequence[int]) -> int:
    return reduce(math.gcd, mults, n)


def component_genus(n: int, mults: Sequence[int]) -> int:
    """Genus of each irreducible component of y^n = c * prod (x - alpha_i)^(a_i).

    Riemann-Hurwitz for the degree n/d cover of the line, where infinity
    ramifies unless n divides the total degree.
    """
    N = len(mults)
    d = num_irreducible(n, mults)
    g = Fraction(n * (N - 2) - sum(math.gcd(n, a) for a in mults), 2 * d) + 1
    total = sum(mults)
    if total % n:
        g += Fraction(n - math.gcd(n, total), 2 * d)
    if g.denominator != 1 or g < 0:
        raise ConsistencyError(
            f"genus formula gave {g} for n = {n}, multiplicities {list(mults)}",
            {"n": n, "mults": list(mults)},
        )
    return int(g)


def reduce_component(s: Cluster, picture: ClusterPicture) -> ComponentFamily:
    """Reduced equation, component count and genus over the cluster s."""
    curve = picture.input
    p, n, roots = curve.p, curve.n, curve.roots
    center = roots[s.center]
    mu = s.depth
    scale = Fraction(p) ** mu

    kids = picture.children(s)
    mults, alphas = [], []
    for kid in kids:
        alpha = residue((roots[min(kid)] - center) / scale, p)
        # any member of the child reduces to the same point
        assert all(residue((roots[i] - center) / scale, p) == alpha for i in kid)
        mults.append(len(kid))
        alphas.append(alpha)
    if len(set(alphas)) != len(alphas):
        raise ConsistencyError(
            f"reduced roots collide on cluster {s.id}", {"cluster": s.id, "alphas": alphas}
        )

    c = unit_residue(curve.leading_coefficient, p)
    for i, beta in enumerate(roots):
        if i not in s.members:
            c = c * unit_residue(center - beta, p) % p

    d = num_irreducible(n, mults)
    return ComponentFamily(
        cluster_id=s.id,
        center=center,
        scale_mu=mu,
        n=n,
        children_mults=tuple(mults),
        reduced_roots=tuple(alphas),
        d=d,
        e_t=content_valuation(s, picture),
        c_residue=c,
        genus_each=component_genus(n, mults),
        frobenius_vertex_shift=dlog_mu(c, d, p),
    )


def vertex_frobenius_shift(family: ComponentFamily, p: int) -> int:
    """Frobenius sends component l of the family to component l + shift (mod d)."""
    return dlog_mu(family.c_residue, family.d, p)


def reduce_all(picture: ClusterPicture) -> dict[int, ComponentFamily]:
    """Component families for every cluster in the image of the triple map."""
    return {s.id: reduce_component(s, picture) for s in picture.image_clusters()}


__all__ = [
    "ComponentFamily", "num_irreducible", "component_genus", "reduce_component",
    "vertex_frobenius_shift", "reduce_all",
]
