"""Brute-force oracle over triples of branch points.

Works directly from the root values: every triple of distinct points of S
(the roots, plus infinity when it is a branch point) is put in ordered form
v(a - c) = v(b - c) <= v(a - b), triples are grouped by the equivalence
"same radius and a1 = a2 mod p^radius", and each class is sent to the
cluster D(a, radius).  Only meant for small inputs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .arith import INF, NEG_INF, vp
from .clusters import Cluster, ClusterPicture, CurveInput
from .errors import ConsistencyError, PreconditionError

DEFAULT_MAX_POINTS = 16


class _Infinity:
    __slots__ = ()

    def __repr__(self):
        return "oo"


INFINITY = _Infinity()


def _val(x, y, p: int):
    if x is INFINITY or y is INFINITY:
        return NEG_INF
    return vp(Fraction(x) - Fraction(y), p)


def _ordered(t, v):
    for a, b, c in itertools.permutations(t):
        vab, vac, vbc = v(a, b), v(a, c), v(b, c)
        if vac == vbc <= vab:
            return (a, b, c)
    raise AssertionError(f"no ordered form for {t!r}")


def _equivalent(t1, t2, v) -> bool:
    mu = v(t1[0], t1[1])
    return mu == v(t2[0], t2[1]) and v(t1[0], t2[0]) >= mu


def order_triple(t, p: int):
    """A permutation (a, b, c) of t with v(a - c) = v(b - c) <= v(a - b)."""
    return _ordered(t, lambda x, y: _val(x, y, p))


def radius(t, p: int):
    a, b, _ = t
    return _val(a, b, p)


def equivalent(t1, t2, p: int) -> bool:
    return _equivalent(t1, t2, lambda x, y: _val(x, y, p))


def phi(t, picture: ClusterPicture) -> Cluster:
    """The cluster D(a, radius) of an ordered triple."""
    curve = picture.input
    mu = radius(t, curve.p)
    members = frozenset(i for i, r in enumerate(curve.roots) if vp(r - t[0], curve.p) >= mu)
    s = picture.find(members)
    if s is None:
        raise ConsistencyError(f"disc of {t!r} is not a stored cluster", {"members": sorted(members)})
    return s


def branch_points(curve: CurveInput) -> list:
    pts: list = list(curve.roots)
    if curve.has_infinity:
        pts.append(INFINITY)
    return pts


@dataclass
class TripleClass:
    representative: tuple
    radius: int
    size: int
    cluster_id: int


def enumerate_classes(picture: ClusterPicture, max_points: int | None = DEFAULT_MAX_POINTS) -> list[TripleClass]:
    """Equivalence classes of triples and the cluster each one maps to."""
    curve = picture.input
    p = curve.p
    pts = branch_points(curve)
    if max_points is not None and len(pts) > max_points:
        raise PreconditionError(f"triple oracle limited to {max_points} branch points, got {len(pts)}")

    # work with point indices and a table of pairwise valuations
    table = [[_val(x, y, p) if i != j else INF for j, y in enumerate(pts)] for i, x in enumerate(pts)]

    def v(i, j):
        return table[i][j]

    reps: list[tuple[int, int, int]] = []
    sizes: list[int] = []
    for t in itertools.combinations(range(len(pts)), 3):
        ordered = _ordered(t, v)
        for k, rep in enumerate(reps):
            if _equivalent(ordered, rep, v):
                sizes[k] += 1
                break
        else:
            reps.append(ordered)
            sizes.append(1)

    classes = []
    for rep, size in zip(reps, sizes):
        triple = tuple(pts[i] for i in rep)
        classes.append(TripleClass(
            representative=triple, radius=v(rep[0], rep[1]), size=size, cluster_id=phi(triple, picture).id
        ))
    return classes


def cross_check(picture: ClusterPicture, max_points: int | None = DEFAULT_MAX_POINTS) -> tuple[bool, str]:
    """Compare the triple classes with the cluster tree; (ok, first discrepancy)."""
    classes = enumerate_classes(picture, max_points)
    images = [c.cluster_id for c in classes]
    if len(set(images)) != len(images):
        return False, f"two triple classes map to the same cluster: {images}"
    expected = {s.id for s in picture.image_clusters()}
    if set(images) != expected:
        return False, f"image of triple classes {sorted(images)} != clusters in image {sorted(expected)}"
    for c in classes:
        s = picture.clusters[c.cluster_id]
        if c.radius != s.depth:
            return False, f"class {c.representative!r} has radius {c.radius} but cluster {s.id} depth {s.depth}"
    if picture.has_infinity:
        for c in classes:
            if c.representative[2] is not INFINITY and not _has_infinity_rep(c, picture):
                return False, f"class {c.representative!r} has no representative ending in infinity"
    return True, "PASS"


def _has_infinity_rep(c: TripleClass, picture: ClusterPicture) -> bool:
    a, b, _ = c.representative
    return order_triple((a, b, INFINITY), picture.input.p)[2] is INFINITY and equivalent(
        (a, b, INFINITY), c.representative, picture.input.p
    )
