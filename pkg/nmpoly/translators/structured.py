"""JSON output, field for field the text format

Non-finite numbers are written as null.
"""

import json
import math

from ..expansion import rat_str

def _real(x):
    if math.isfinite(x):
        return x
    return None

def _complex(c):
    return {'re': _real(c.real), 'im': _real(c.imag)}

def expansion_to_json(e):
    return {
        'side': e.side,
        'terms': [{'r': rat_str(x.r), 'm1': x.m1, 'm2': x.m2,
                   'coefficients': [dict(k=k, **_complex(c))
                                    for (k, c) in poly.items()]}
                  for (x, poly) in e.items()],
    }

def polygon_to_json(dp):
    return [{'vertex': [rat_str(v.x), rat_str(v.y)],
             'coefficient': _complex(d.coefficient),
             'degree': d.degree}
            for (v, d) in dp.items()]

def table_to_json(table):
    return [{'r': rat_str(key.r), 'm1': key.m1, 'm2': key.m2, 'k': key.k,
             'c': _complex(c_raw), 'C': _complex(c_norm)}
            for (key, (c_raw, c_norm)) in table.items()]

def report_to_json(report):
    return {'lhs': polygon_to_json(report.lhs),
            'rhs': polygon_to_json(report.rhs),
            'verdict': report.verdict,
            'max_deviation': _real(report.max_deviation)}

def _value(x):
    if isinstance(x, complex):
        return _complex(x)
    if isinstance(x, float):
        return _real(x)
    return x

def rows_to_json(name, rows):
    return {'suite': name,
            'rows': [{'case': row.case,
                      'numeric': _value(row.numeric),
                      'predicted': _value(row.predicted),
                      'relative_error': _value(row.relerr),
                      'pass': row.ok} for row in rows],
            'failed': len([row for row in rows if not row.ok])}

def emit(obj, fd):
    json.dump(obj, fd, indent=2, allow_nan=False)
    fd.write('\n')
