"""SVG rendering of decorated polygons

Axes, the staircase boundary, vertex dots and decoration labels, on a
viewport covering the vertices plus one unit of margin.
"""

from lxml import etree

from .. import util

SVG_NS = 'http://www.w3.org/2000/svg'
SCALE = 100
COLORS = ['#1f77b4', '#d62728', '#2ca02c', '#9467bd']

def _tag(name):
    return '{%s}%s' % (SVG_NS, name)

def _label(d):
    c = d.coefficient
    if c.imag == 0:
        s = '%.4g' % c.real
    else:
        s = '(%.4g%+.4gi)' % (c.real, c.imag)
    return u'%s·u^%d' % (s, d.degree)

def _bounds(polygons):
    xs = [float(v.x) for (_l, dp) in polygons for v in dp.vertices]
    ys = [float(v.y) for (_l, dp) in polygons for v in dp.vertices]
    if not xs:
        return (-1.0, 1.0, -1.0, 1.0)
    return (min(xs) - 1, max(xs) + 1, min(ys) - 1, max(ys) + 1)

def render(polygons):
    """`polygons` is a list of (label, DecoratedPolygon)."""
    (xmin, xmax, ymin, ymax) = _bounds(polygons)
    width = (xmax - xmin) * SCALE
    height = (ymax - ymin) * SCALE

    def px(x):
        return '%.2f' % ((float(x) - xmin) * SCALE)

    def py(y):
        return '%.2f' % ((ymax - float(y)) * SCALE)

    root = etree.Element(_tag('svg'), nsmap={None: SVG_NS})
    root.set('width', '%.0f' % width)
    root.set('height', '%.0f' % height)
    root.set('viewBox', '0 0 %.2f %.2f' % (width, height))

    axes = etree.SubElement(root, _tag('g'),
                            {'stroke': '#999999', 'stroke-width': '1'})
    if xmin <= 0 <= xmax:
        etree.SubElement(axes, _tag('line'), x1=px(0), y1=py(ymin),
                         x2=px(0), y2=py(ymax))
    if ymin <= 0 <= ymax:
        etree.SubElement(axes, _tag('line'), x1=px(xmin), y1=py(0),
                         x2=px(xmax), y2=py(0))

    for i, (label, dp) in enumerate(polygons):
        color = COLORS[i % len(COLORS)]
        g = etree.SubElement(root, _tag('g'),
                             {'fill': color, 'stroke': color})
        legend = etree.SubElement(g, _tag('text'), x='5',
                                  y=str(15 * (i + 1)), stroke='none')
        legend.text = label
        vs = dp.vertices
        if not vs:
            continue
        points = [(vs[0].x, ymax)]
        points.extend([(v.x, v.y) for v in vs])
        points.append((xmax, vs[-1].y))
        etree.SubElement(g, _tag('polyline'), fill='none',
                         points=' '.join(['%s,%s' % (px(x), py(y))
                                          for (x, y) in points]))
        for v, d in dp.items():
            etree.SubElement(g, _tag('circle'), cx=px(v.x), cy=py(v.y),
                             r='4')
            text = etree.SubElement(g, _tag('text'), x=px(v.x), y=py(v.y),
                                    dx='6', dy='-6', stroke='none')
            text.text = '%s %s' % (util.format_point(v), _label(d))
    return root

def emit(polygons, path):
    tree = etree.ElementTree(render(polygons))
    tree.write(path, pretty_print=True, xml_declaration=True,
               encoding='UTF-8')
