"""Quadrant-generated polygons in the rational plane

A polygon is the convex hull of finitely many quadrants p + R+^2.  It is
stored as the vertex list of its lower staircase boundary, sorted by
strictly increasing x (and so strictly decreasing y).
"""

import collections

from . import error
from .expansion import checked, rat_str, rel_close

DECORATION_RTOL = 1e-9

class Point(collections.namedtuple('Point', ['x', 'y'])):
    __slots__ = ()

    def __new__(cls, x, y):
        return super(Point, cls).__new__(cls, checked(x), checked(y))

    def __add__(self, other):
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        return Point(self.x - other.x, self.y - other.y)

    def dominates(self, other):
        return self.x >= other.x and self.y >= other.y

    def __str__(self):
        return '(%s,%s)' % (rat_str(self.x), rat_str(self.y))

def _cross(o, a, b):
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)

class Polygon(object):
    __slots__ = ('vertices',)

    def __init__(self, vertices=()):
        self.vertices = tuple(vertices)

    def __repr__(self):
        return 'Polygon([%s])' % ', '.join([str(v) for v in self.vertices])

    def __iter__(self):
        return iter(self.vertices)

    def __len__(self):
        return len(self.vertices)

    def __eq__(self, other):
        return isinstance(other, Polygon) and self.vertices == other.vertices

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.vertices)

    def is_empty(self):
        return len(self.vertices) == 0

    def is_vertex(self, p):
        return p in self.vertices

    def is_valid(self):
        """Check the staircase invariants."""
        vs = self.vertices
        for i in range(1, len(vs)):
            if not (vs[i].x > vs[i-1].x and vs[i].y < vs[i-1].y):
                return False
        for i in range(2, len(vs)):
            if _cross(vs[i-2], vs[i-1], vs[i]) <= 0:
                return False
        return True

def staircase_hull(points):
    """Return the Polygon bounding the union of the quadrants p + R+^2.

    A point on the open segment between two hull points is not a
    vertex."""
    points = set(points)
    if not points:
        raise error.PolygonError('EMPTY_HULL')
    # pareto-minimal points, x increasing and y decreasing
    pareto = []
    for p in sorted(points):
        if not pareto or p.y < pareto[-1].y:
            pareto.append(p)
    hull = []
    for p in pareto:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)
    return Polygon(hull)

def contains(polygon, q):
    """True iff `q` lies in the region bounded by `polygon`."""
    vs = polygon.vertices
    if not vs:
        return False
    if q.x < vs[0].x or q.y < vs[-1].y:
        return False
    if q.x >= vs[-1].x:
        return True
    for i in range(len(vs) - 1):
        a, b = vs[i], vs[i+1]
        if a.x <= q.x < b.x:
            y = a.y + (b.y - a.y) * (q.x - a.x) / (b.x - a.x)
            return q.y >= y
    return False

def minkowski(p1, p2):
    if p1.is_empty() or p2.is_empty():
        return Polygon()
    return staircase_hull([v1 + v2 for v1 in p1 for v2 in p2])

def _decompose(p1, p2, total, v):
    if not total.is_vertex(v):
        raise error.PolygonError('NOT_A_VERTEX', (str(v),))
    found = [(v1, v2) for v1 in p1 for v2 in p2 if v1 + v2 == v]
    if len(found) != 1:
        raise error.UniquenessViolation('NOT_UNIQUE', (str(v), len(found)))
    return found[0]

def decompose_vertex(p1, p2, v):
    """Return the unique (v1, v2), vertices of p1 and p2, with
    v1 + v2 = v, for a vertex v of the Minkowski sum."""
    return _decompose(p1, p2, minkowski(p1, p2), v)

### decorations

class Decoration(object):
    """The monomial coefficient * u^degree"""

    __slots__ = ('coefficient', 'degree')

    def __init__(self, coefficient, degree):
        self.coefficient = complex(coefficient)
        self.degree = int(degree)

    def __repr__(self):
        return 'Decoration(%r, %d)' % (self.coefficient, self.degree)

    def __str__(self):
        return '%.17g,%.17g u^%d' % (self.coefficient.real,
                                     self.coefficient.imag, self.degree)

    def __mul__(self, other):
        return Decoration(self.coefficient * other.coefficient,
                          self.degree + other.degree)

    def deviation(self, other):
        a, b = self.coefficient, other.coefficient
        return abs(a - b) / max(abs(a), abs(b))

    def matches(self, other, rtol=DECORATION_RTOL):
        return (self.degree == other.degree and
                rel_close(self.coefficient, other.coefficient, rtol))

    def __eq__(self, other):
        return isinstance(other, Decoration) and self.matches(other)

    def __ne__(self, other):
        return not self.__eq__(other)

    __hash__ = None

class DecoratedPolygon(object):
    __slots__ = ('polygon', 'decorations')

    def __init__(self, polygon, decorations):
        if set(decorations) != set(polygon.vertices):
            raise error.PolygonError(
                'DECORATION_MISMATCH',
                (', '.join([str(p) for p in sorted(decorations)]),
                 ', '.join([str(p) for p in polygon.vertices])))
        self.polygon = polygon
        self.decorations = dict(decorations)

    def __repr__(self):
        return 'DecoratedPolygon([%s])' % ', '.join(
            ['%s: %s' % (v, self.decorations[v]) for v in self.vertices])

    @property
    def vertices(self):
        return self.polygon.vertices

    def __len__(self):
        return len(self.polygon)

    def is_empty(self):
        return self.polygon.is_empty()

    def items(self):
        return [(v, self.decorations[v]) for v in self.polygon.vertices]

    def compare(self, other, rtol=DECORATION_RTOL):
        """Return (equal, max relative coefficient deviation).

        The deviation is infinite when the vertex sets or a degree
        differ."""
        if self.polygon != other.polygon:
            return (False, float('inf'))
        dev = 0.0
        equal = True
        for v in self.polygon.vertices:
            d1 = self.decorations[v]
            d2 = other.decorations[v]
            if d1.degree != d2.degree:
                return (False, float('inf'))
            dev = max(dev, d1.deviation(d2))
            if not d1.matches(d2, rtol):
                equal = False
        return (equal, dev)

    def __eq__(self, other):
        return isinstance(other, DecoratedPolygon) and self.compare(other)[0]

    def __ne__(self, other):
        return not self.__eq__(other)

    __hash__ = None

def decorated_hull(candidates):
    """Build a DecoratedPolygon from a map point -> Decoration; only the
    decorations of hull vertices are kept."""
    if not candidates:
        return DecoratedPolygon(Polygon(), {})
    polygon = staircase_hull(candidates.keys())
    return DecoratedPolygon(polygon, dict((v, candidates[v])
                                          for v in polygon.vertices))

def decorated_minkowski(d1, d2):
    """Minkowski sum; each vertex carries the product of the decorations
    of its unique decomposition."""
    total = minkowski(d1.polygon, d2.polygon)
    decorations = {}
    for v in total:
        v1, v2 = _decompose(d1.polygon, d2.polygon, total, v)
        decorations[v] = d1.decorations[v1] * d2.decorations[v2]
    return DecoratedPolygon(total, decorations)

def translate(p, delta):
    """Shift a Polygon or a DecoratedPolygon by `delta`."""
    if isinstance(p, DecoratedPolygon):
        return DecoratedPolygon(translate(p.polygon, delta),
                                dict((v + delta, d)
                                     for (v, d) in p.decorations.items()))
    return Polygon([v + delta for v in p.vertices])
