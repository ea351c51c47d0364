import os
import sys

from .expansion import rat_str

def format_number(x):
    """17 significant digits; reparses to the same double.  Zero is
    printed without sign."""
    if x == 0:
        x = 0.0
    return '%.17g' % x

def format_complex(c):
    c = complex(c)
    return '%s,%s' % (format_number(c.real), format_number(c.imag))

def format_point(p):
    return '(%s,%s)' % (rat_str(p.x), rat_str(p.y))

def format_decoration(d):
    return '%s u^%d' % (format_complex(d.coefficient), d.degree)

def thread_count(default=1):
    """Oracle parallelism cap from NEWTON_MELLIN_THREADS."""
    value = os.getenv('NEWTON_MELLIN_THREADS')
    if value is None:
        return default
    try:
        return max(1, int(value))
    except ValueError:
        return default

files_read = {}

def report_file_read(filename, extra=None):
    realpath = os.path.realpath(filename)
    read = "READ" if realpath in files_read else "read"
    extra = (" " + extra) if extra else ""
    sys.stderr.write("# %s %s%s\n" % (read, filename, extra))
    files_read[realpath] = True
