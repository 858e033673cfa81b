"""Cluster pictures of the root set of f.

A proper cluster is a set of at least two roots cut out by a p-adic disc.
The clusters form a rooted tree under inclusion with ``s_max`` (all roots)
at the top; cluster ids are assigned in preorder with children visited in
order of their smallest root index, so ``s_max`` always has id 0.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .arith import check_prime, parse_rational, vp
from .errors import PreconditionError

DEFAULT_MAX_ROOTS = 64


@dataclass(frozen=True)
class CurveInput:
    """The curve y^n = c * prod(x - r) over Q_p with all roots r rational."""

    p: int
    n: int
    roots: tuple[Fraction, ...]
    leading_coefficient: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "roots", tuple(Fraction(r) for r in self.roots))
        object.__setattr__(self, "leading_coefficient", Fraction(self.leading_coefficient))

    @classmethod
    def from_dict(cls, data: dict) -> "CurveInput":
        try:
            p, n, roots = data["p"], data["n"], data["roots"]
        except KeyError as exc:
            raise PreconditionError(f"missing field {exc.args[0]!r} in curve input") from None
        lc = parse_rational(data.get("leading_coefficient", "1"))
        return cls(p=p, n=n, roots=tuple(parse_rational(r) for r in roots), leading_coefficient=lc)

    @classmethod
    def from_json(cls, text: str) -> "CurveInput":
        return cls.from_dict(json.loads(text))

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "leading_coefficient": str(self.leading_coefficient),
            "roots": [str(r) for r in self.roots],
        }

    @property
    def degree(self) -> int:
        return len(self.roots)

    @property
    def has_infinity(self) -> bool:
        """Whether infinity is a branch point of x: C -> P^1."""
        return self.degree % self.n != 0

    def validate(self, max_roots: int | None = DEFAULT_MAX_ROOTS) -> None:
        """Raise PreconditionError naming the first violated hypothesis."""
        from .report import curve_genus

        check_prime(self.p)
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 2:
            raise PreconditionError(f"n = {self.n!r} must be an integer >= 2")
        if self.n % self.p == 0:
            raise PreconditionError(f"residual characteristic divides n (p = {self.p} | n = {self.n})")
        if (self.p - 1) % self.n:
            raise PreconditionError(
                f"zeta_n not in K: n = {self.n} does not divide p - 1 = {self.p - 1}"
            )
        if self.leading_coefficient == 0:
            raise PreconditionError("leading coefficient must be nonzero")
        if len(set(self.roots)) != len(self.roots):
            raise PreconditionError("polynomial not separable (repeated root)")
        if max_roots is not None and self.degree > max_roots:
            raise PreconditionError(f"{self.degree} roots exceeds the limit of {max_roots}")
        if self.degree < 1 or curve_genus(self.n, self.degree, strict=False) <= 0:
            raise PreconditionError(
                f"curve has genus 0 (n = {self.n}, deg f = {self.degree}); need at least 3 branch points"
            )


@dataclass(frozen=True)
class Cluster:
    id: int
    members: frozenset[int]
    depth: int
    parent_id: int | None
    child_ids: tuple[int, ...]
    leaf_indices: tuple[int, ...]
    relative_depth: int | None

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def center(self) -> int:
        """Index of the canonical center (smallest member root index)."""
        return min(self.members)

    @property
    def is_max(self) -> bool:
        return self.parent_id is None


@dataclass
class ClusterPicture:
    input: CurveInput
    clusters: dict[int, Cluster]
    smax_id: int = 0
    _chains: dict[int, tuple[int, ...]] = field(default_factory=dict, repr=False)

    @property
    def smax(self) -> Cluster:
        return self.clusters[self.smax_id]

    @property
    def has_infinity(self) -> bool:
        return self.input.has_infinity

    @property
    def smax_in_image(self) -> bool:
        """Whether s_max corresponds to a component of the stable marked line."""
        return self.has_infinity or self.num_children(self.smax) >= 3

    def __iter__(self):
        return iter(self.clusters.values())

    def __len__(self):
        return len(self.clusters)

    def num_children(self, s: Cluster) -> int:
        return len(s.child_ids) + len(s.leaf_indices)

    def children(self, s: Cluster) -> list[frozenset[int]]:
        """Member sets of the children of s (singletons included), by smallest index."""
        kids = [self.clusters[c].members for c in s.child_ids]
        kids += [frozenset([i]) for i in s.leaf_indices]
        return sorted(kids, key=min)

    def children_sizes(self, s: Cluster) -> list[int]:
        return [len(c) for c in self.children(s)]

    def in_image(self, s: Cluster) -> bool:
        return not s.is_max or self.smax_in_image

    def image_clusters(self) -> list[Cluster]:
        return [s for s in self if self.in_image(s)]

    def chain(self, root_index: int) -> tuple[int, ...]:
        """Ids of the proper clusters containing a root, innermost first."""
        return self._chains[root_index]

    def find(self, members: Iterable[int]) -> Cluster | None:
        members = frozenset(members)
        for s in self:
            if s.members == members:
                return s
        return None


def build_cluster_picture(curve: CurveInput, max_roots: int | None = DEFAULT_MAX_ROOTS) -> ClusterPicture:
    """All proper clusters of the roots, arranged as a tree."""
    curve.validate(max_roots)
    roots, p = curve.roots, curve.p
    m = len(roots)
    val = [[vp(roots[i] - roots[j], p) for j in range(m)] for i in range(m)]

    # every proper cluster is D(a, v(a - b)) for some pair in it
    found: dict[frozenset[int], int] = {}
    for i in range(m):
        for j in range(i + 1, m):
            mu = val[i][j]
            disc = frozenset(k for k in range(m) if val[i][k] >= mu)
            found.setdefault(disc, mu)

    sets = sorted(found, key=len)
    parent: dict[frozenset[int], frozenset[int] | None] = {}
    for idx, s in enumerate(sets):
        parent[s] = next((t for t in sets[idx + 1:] if s < t), None)
    top = sets[-1]
    assert len(top) == m and parent[top] is None

    kids: dict[frozenset[int], list[frozenset[int]]] = {s: [] for s in sets}
    for s, t in parent.items():
        if t is not None:
            kids[t].append(s)

    order: list[frozenset[int]] = []
    stack = [top]
    while stack:
        s = stack.pop()
        order.append(s)
        stack.extend(sorted(kids[s], key=min, reverse=True))
    ids = {s: k for k, s in enumerate(order)}

    clusters: dict[int, Cluster] = {}
    for s in order:
        t = parent[s]
        covered = set().union(*kids[s]) if kids[s] else set()
        clusters[ids[s]] = Cluster(
            id=ids[s],
            members=s,
            depth=found[s],
            parent_id=None if t is None else ids[t],
            child_ids=tuple(ids[c] for c in sorted(kids[s], key=min)),
            leaf_indices=tuple(sorted(s - covered)),
            relative_depth=None if t is None else found[s] - found[t],
        )

    chains = {}
    for i in range(m):
        containing = [clusters[ids[s]] for s in order if i in s]
        chains[i] = tuple(c.id for c in sorted(containing, key=lambda c: c.size))
    return ClusterPicture(input=curve, clusters=clusters, smax_id=0, _chains=chains)


def _members(x, picture: ClusterPicture) -> frozenset[int]:
    if isinstance(x, Cluster):
        return x.members
    if isinstance(x, int) and 0 <= x < picture.input.degree:
        return frozenset([x])
    raise TypeError(f"expected a Cluster or a root index, got {x!r}")


def wedge(a, b, picture: ClusterPicture) -> Cluster:
    """Smallest proper cluster containing both arguments (clusters or root indices)."""
    union = _members(a, picture) | _members(b, picture)
    for cid in picture.chain(min(union)):
        s = picture.clusters[cid]
        if union <= s.members:
            return s
    raise AssertionError("unreachable: s_max contains everything")


def content_valuation(s: Cluster, picture: ClusterPicture) -> int:
    """Valuation of the content of f rewritten in the chart of s.

    Equals v(c) plus the sum over all roots r of the depth of r ^ s.
    """
    curve = picture.input
    total = vp(curve.leading_coefficient, curve.p)
    for i in range(curve.degree):
        total += wedge(i, s, picture).depth
    return total


def relative_depths(picture: ClusterPicture) -> dict[int, int]:
    """Weighted-picture labels: absolute depth for s_max, relative depth otherwise."""
    return {s.id: s.depth if s.is_max else s.relative_depth for s in picture}


def _leaf_order(picture: ClusterPicture) -> list[int]:
    out: list[int] = []

    def visit(s: Cluster):
        kids = sorted(
            [("c", picture.clusters[c]) for c in s.child_ids] + [("r", i) for i in s.leaf_indices],
            key=lambda kv: kv[1].center if kv[0] == "c" else kv[1],
        )
        for kind, obj in kids:
            if kind == "c":
                visit(obj)
            else:
                out.append(obj)

    visit(picture.smax)
    return out


def to_latex(picture: ClusterPicture, root_labels: Sequence[str] | None = None) -> str:
    """Source for the ``clusterpictures`` LaTeX macros, with weighted subscripts.

    Roots are laid out in tree order; the gap before a root grows with the
    number of clusters closed since the previous one.  ``root_labels`` are
    placed above the roots if given.
    """
    order = _leaf_order(picture)
    weights = relative_depths(picture)
    node = {i: f"r{k + 1}" for k, i in enumerate(order)}
    lines = [r"\clusterpicture"]
    prev = None
    for k, i in enumerate(order):
        if prev is None:
            gap = "1"
        else:
            closed = sum(1 for cid in picture.chain(prev) if i not in picture.clusters[cid].members)
            gap = "" if closed == 0 else str(1 + 2 * closed)
        label = f"[{root_labels[i]}]" if root_labels else ""
        anchor = "first" if prev is None else node[prev]
        sep = ";" if k < len(order) - 1 else ""
        lines.append(f"  \\Root{label} {{{gap}}} {{{anchor}}} {{{node[i]}}}{sep}")
        prev = i

    def cname(s: Cluster) -> str:
        return f"c{s.id}"

    # innermost clusters first so that every referenced name exists
    for s in sorted(picture, key=lambda c: c.size):
        parts = [f"({node[i]})" for i in order if i in s.leaf_indices]
        subs = [picture.clusters[c] for c in s.child_ids]
        parts += [f"({cname(c)})" for c in subs] + [f"({cname(c)}n)" for c in subs]
        name = r"s_{\text{max}}" if s.is_max else rf"\mathfrak s_{{{s.id}}}"
        lines.append(f"  \\ClusterLDName {cname(s)}[][{weights[s.id]}][{name}] = {''.join(parts)};")
    lines.append(r"\endclusterpicture")
    return "\n".join(lines) + "\n"


def cluster_records(picture: ClusterPicture) -> list[dict]:
    """JSON-ready description of every proper cluster."""
    weights = relative_depths(picture)
    out = []
    for s in picture:
        out.append({
            "id": s.id,
            "members": sorted(s.members),
            "roots": [str(picture.input.roots[i]) for i in sorted(s.members)],
            "depth": s.depth,
            "relative_depth": weights[s.id],
            "parent": s.parent_id,
            "children": list(s.child_ids),
            "singleton_children": list(s.leaf_indices),
            "in_image": picture.in_image(s),
            "content_valuation": content_valuation(s, picture),
        })
    return out


__all__ = [
    "DEFAULT_MAX_ROOTS", "CurveInput", "Cluster", "ClusterPicture", "build_cluster_picture",
    "wedge", "content_valuation", "relative_depths", "to_latex", "cluster_records",
]
