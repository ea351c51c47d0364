"""
tests for nmpoly.newton
"""
from fractions import Fraction

import pytest

from nmpoly import error
from nmpoly import newton
from nmpoly.newton import Point, Polygon, Decoration, DecoratedPolygon

F = Fraction


def P(x, y):
    return Point(x, y)


def hull(*points):
    return newton.staircase_hull([P(*p) for p in points])


def test_staircase_hull_drops_dominated_points():
    assert hull((0, 1), (1, 0), (1, 1)).vertices == (P(0, 1), P(1, 0))


def test_staircase_hull_singleton():
    half = F(-1, 2)
    assert hull((half, half)).vertices == (P(half, half),)


def test_staircase_hull_collinear_middle_point_is_not_a_vertex():
    assert hull((-1, 1), (0, 0), (1, -1)).vertices == (P(-1, 1), P(1, -1))


def test_staircase_hull_removes_points_above_the_boundary():
    p = hull((0, 3), (1, 2), (2, 0), (1, 1))
    assert p.vertices == (P(0, 3), P(1, 1), P(2, 0))
    assert p.is_valid()


def test_staircase_hull_empty():
    with pytest.raises(error.PolygonError) as exc:
        newton.staircase_hull([])
    assert exc.value.tag == 'EMPTY_HULL'


def test_contains():
    p = hull((0, 2), (2, 0))
    assert newton.contains(p, P(1, 1))
    assert newton.contains(p, P(5, 0))
    assert newton.contains(p, P(0, 7))
    assert not newton.contains(p, P(F(1, 2), F(1, 2)))
    assert not newton.contains(p, P(-1, 5))
    assert not newton.contains(Polygon(), P(0, 0))


def test_minkowski_translation():
    p1 = hull((F(-1, 2), F(-1, 2)))
    p2 = hull((F(-1, 3), F(-1, 3)))
    assert newton.minkowski(p1, p2).vertices == (P(F(-5, 6), F(-5, 6)),)


def test_minkowski_collinear_sum():
    p = hull((0, 1), (1, 0))
    assert newton.minkowski(p, p).vertices == (P(0, 2), P(2, 0))


def test_minkowski_dominated_sum():
    p1 = hull((0, 2), (1, 0))
    p2 = hull((0, 1), (2, 0))
    assert newton.minkowski(p1, p2).vertices == \
        (P(0, 3), P(1, 1), P(3, 0))


def test_minkowski_with_empty():
    assert newton.minkowski(Polygon(), hull((0, 0))).is_empty()


def test_decompose_vertex():
    p1 = hull((0, 1), (1, 0))
    p2 = hull((0, 0))
    assert newton.decompose_vertex(p1, p2, P(0, 1)) == (P(0, 1), P(0, 0))
    half, third = F(-1, 2), F(-1, 3)
    assert newton.decompose_vertex(hull((half, half)), hull((third, third)),
                                   P(F(-5, 6), F(-5, 6))) == \
        (P(half, half), P(third, third))


def test_decompose_non_vertex():
    p = hull((0, 1), (1, 0))
    with pytest.raises(error.PolygonError) as exc:
        newton.decompose_vertex(p, p, P(F(1, 2), F(1, 2)))
    assert exc.value.tag == 'NOT_A_VERTEX'
    with pytest.raises(error.PolygonError):
        newton.decompose_vertex(p, p, P(1, 1))


def test_uniqueness_violation_is_an_assertion():
    assert issubclass(error.UniquenessViolation, AssertionError)


def decorated(items):
    candidates = dict((P(*p), Decoration(c, k)) for (p, c, k) in items)
    return newton.decorated_hull(candidates)


def test_decorated_minkowski_translation_case():
    half = F(-1, 2)
    d1 = decorated([((half, half), -0.5, 0)])
    d2 = decorated([((0, 0), 2, 3)])
    got = newton.decorated_minkowski(d1, d2)
    assert got.items() == [(P(half, half), Decoration(-1, 3))]


def test_decorated_minkowski_singleton_square():
    half = F(-1, 2)
    d = decorated([((half, half), -0.5, 0)])
    got = newton.decorated_minkowski(d, d)
    assert got.items() == [(P(-1, -1), Decoration(0.25, 0))]


def test_decorated_minkowski_two_vertices():
    d1 = decorated([((0, 1), 2, 0), ((1, 0), 3, 1)])
    d2 = decorated([((0, 0), 5, 2)])
    got = newton.decorated_minkowski(d1, d2)
    assert got.items() == [(P(0, 1), Decoration(10, 2)),
                           (P(1, 0), Decoration(15, 3))]


def test_decorations_must_match_vertices():
    with pytest.raises(error.PolygonError) as exc:
        DecoratedPolygon(hull((0, 0)), {P(1, 1): Decoration(1, 0)})
    assert exc.value.tag == 'DECORATION_MISMATCH'


def test_translate():
    assert newton.translate(hull((-1, -1)), P(1, 1)).vertices == \
        (P(0, 0),)
    p = hull((0, 1), (1, 0))
    assert newton.translate(p, P(0, 0)) == p
    half = F(-1, 2)
    d = decorated([((half, half), 1, 0)])
    assert newton.translate(d, P(1, 1)).items() == \
        [(P(F(1, 2), F(1, 2)), Decoration(1, 0))]


def test_compare_reports_deviation():
    d1 = decorated([((0, 0), 1.0, 0)])
    d2 = decorated([((0, 0), 1.0 + 1e-6, 0)])
    (equal, dev) = d1.compare(d2)
    assert not equal
    assert abs(dev - 1e-6) < 1e-9
    assert d1.compare(d2, rtol=1e-5)[0]
    d3 = decorated([((0, 0), 1.0, 1)])
    assert d1.compare(d3) == (False, float('inf'))
    d4 = decorated([((0, 1), 1.0, 0)])
    assert d1.compare(d4) == (False, float('inf'))
