import itertools

from instances import example_one, two_clusters
from supergal import build_cluster_picture, cross_check, enumerate_classes
from supergal.triples import INFINITY, equivalent, order_triple, radius


def table_one(p):
    """The 36 pairs (a, b) with their radii, as tabulated for the first example."""
    q = p * p
    s1 = [0, q, p, p + q, 2 * p, 2 * p + q]
    s5 = [1, 1 + p, 1 + 2 * p]
    rows = {(a, b): 0 for a in s1 for b in s5}
    rows.update({(a, b): 1 for a, b in itertools.combinations(s1, 2) if (b - a) % q})
    rows.update({(0, q): 2, (p, p + q): 2, (2 * p, 2 * p + q): 2})
    rows.update({(a, b): 1 for a, b in itertools.combinations(s5, 2)})
    return rows


def test_table_one_radii():
    for p in (7, 13):
        rows = table_one(p)
        assert len(rows) == 36
        for (a, b), r in rows.items():
            t = order_triple((a, b, INFINITY), p)
            assert t[2] is INFINITY
            assert radius(t, p) == r


def test_example_one_six_classes():
    for p in (7, 13):
        pic = build_cluster_picture(example_one(p))
        classes = enumerate_classes(pic)
        assert len(classes) == 6
        assert sorted(c.cluster_id for c in classes) == list(range(6))
        assert sum(c.size for c in classes) == 120  # C(10, 3), infinity included
        assert cross_check(pic) == (True, "PASS")


def test_equivalence_examples():
    p = 7
    assert equivalent((0, 7, INFINITY), (0, 14, INFINITY), p)
    assert not equivalent((0, 49, INFINITY), (7, 56, INFINITY), p)
    assert equivalent((1, 8, INFINITY), (8, 15, INFINITY), p)


def test_two_top_clusters_bijection():
    pic = build_cluster_picture(two_clusters(7))
    classes = enumerate_classes(pic)
    assert sorted(c.cluster_id for c in classes) == sorted(s.id for s in pic if not s.is_max)
    assert cross_check(pic)[0]


def test_ordered_form_property():
    roots = example_one(7).roots
    for t in itertools.combinations(list(roots) + [INFINITY], 3):
        a, b, c = order_triple(t, 7)
        assert sorted(map(id, (a, b, c))) == sorted(map(id, t))
