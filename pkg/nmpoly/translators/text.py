"""Text output

The expansion format is the one read by the parser, so that every
printed expansion reparses to an equal one.
"""

from .. import util
from ..expansion import rat_str

def expansion_lines(e):
    lines = ['side=%s' % e.side]
    for x, poly in e.items():
        coefs = ' '.join(['%d:%s' % (k, util.format_complex(c))
                          for (k, c) in poly.items()])
        lines.append('r=%s m1=%d m2=%d : %s' % (rat_str(x.r), x.m1, x.m2,
                                               coefs))
    return lines

def polygon_lines(dp):
    return ['%s : %s' % (util.format_point(v), util.format_decoration(d))
            for (v, d) in dp.items()]

def table_lines(table):
    return ['r=%s m1=%d m2=%d k=%d c=%s C=%s' % (
        rat_str(key.r), key.m1, key.m2, key.k,
        util.format_complex(c_raw), util.format_complex(c_norm))
            for (key, (c_raw, c_norm)) in table.items()]

def report_lines(report):
    lines = ['# lhs: hat polygon of the combination']
    lines.extend(polygon_lines(report.lhs))
    lines.append('# rhs: Minkowski sum of the hat polygons + (1,1)')
    lines.extend(polygon_lines(report.rhs))
    lines.append('verdict: %s (max deviation %s)' % (
        verdict_str(report.verdict),
        util.format_number(report.max_deviation)))
    return lines

def verdict_str(ok):
    if ok:
        return 'PASS'
    return 'FAIL'

def _cell(x):
    if x is None:
        return '-'
    if isinstance(x, complex):
        if x.imag == 0:
            return '%.10g' % x.real
        return '%.10g%+.10gj' % (x.real, x.imag)
    if isinstance(x, float):
        return '%.10g' % x
    return str(x)

def rows_lines(name, rows):
    lines = ['# suite %s' % name,
             '# case | numeric | predicted | relative error | result']
    for row in rows:
        lines.append(' | '.join([row.case, _cell(row.numeric),
                                 _cell(row.predicted), _cell(row.relerr),
                                 verdict_str(row.ok)]))
    failed = len([row for row in rows if not row.ok])
    lines.append('# %s: %d cases, %d failed' % (name, len(rows), failed))
    return lines

def emit(lines, fd):
    for line in lines:
        fd.write(line + '\n')
