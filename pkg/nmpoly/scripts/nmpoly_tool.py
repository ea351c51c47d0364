"""The nmpoly front end

    nmpoly [options] <verb> [args...]

Verbs are provided by plugins; the builtin ones are polygon, mellin,
fourier, ts, verify and demo.  Exit status is 0 on success, 1 when a
verification failed and 2 on input errors.
"""

import io
import optparse
import os
import sys

import nmpoly
from nmpoly import plugin
from nmpoly import error
from nmpoly import context

def run():
    usage = """%prog [options] <verb> [args...]

Verbs:
  polygon <file>...      decorated polygon of the transform (--tilde: of
                         the expansion itself)
  mellin <file>...       Mellin coefficient table
  fourier <file>...      forward transform (--inverse: inverse transform)
  ts <file1> <file2>     Thom-Sebastiani combination and polygon check
  verify <suite>         run a verification suite
  demo monomial <a> <b>  x^a + y^b end to end, with a convolution check"""

    plugindirs = []
    # check for --plugindir
    idx = 1
    while '--plugindir' in sys.argv[idx:]:
        idx = idx + sys.argv[idx:].index('--plugindir')
        plugindirs.append(sys.argv[idx + 1])
        idx = idx + 1
    plugin.init(plugindirs)

    verbs = {}
    for p in plugin.plugins:
        p.add_verb(verbs)

    optlist = [
        # use capitalized versions of std options help and version
        optparse.make_option("-h", "--help",
                             action="help",
                             help="Show this help message and exit"),
        optparse.make_option("-v", "--version",
                             action="version",
                             help="Show version number and exit"),
        optparse.make_option("-V", "--verbose",
                             action="store_true"),
        optparse.make_option("-e", "--list-errors",
                             dest="list_errors",
                             action="store_true",
                             help="Print a listing of all error and warning "
                             "codes and exit."),
        optparse.make_option("--print-error-code",
                             dest="print_error_code",
                             action="store_true",
                             help="On errors, print the error code instead "
                             "of the error message."),
        optparse.make_option("-o", "--output",
                             dest="outfile",
                             help="Write the output to OUTFILE instead "
                             "of stdout."),
        optparse.make_option("--json",
                             dest="json",
                             action="store_true",
                             help="Write structured (JSON) output."),
        optparse.make_option("--svg",
                             dest="svg",
                             metavar="PATH",
                             help="Also render the polygons as SVG to PATH."),
        optparse.make_option("--plugindir",
                             dest="plugindir",
                             help="Load nmpoly plugins from PLUGINDIR"),
        ]

    optparser = optparse.OptionParser(usage, add_help_option=False)
    optparser.version = '%prog ' + nmpoly.__version__
    optparser.add_options(optlist)

    for p in plugin.plugins:
        p.add_opts(optparser)

    (o, args) = optparser.parse_args()

    if o.list_errors:
        for tag in sorted(error.error_codes):
            (level, fmt) = error.error_codes[tag]
            if error.is_warning(level):
                s = "warning"
            else:
                s = "error"
            print("Error:   %s" % tag)
            print("Message: %s: %s" % (s, fmt))
            print("")
        sys.exit(0)

    if not args:
        optparser.print_usage(sys.stderr)
        sys.exit(2)
    verb = args[0]
    if verb not in verbs:
        sys.stderr.write("%s: unknown verb \"%s\", expected one of %s\n"
                         % (optparser.get_prog_name(), verb,
                            ', '.join(sorted(verbs))))
        sys.exit(2)

    ctx = context.Context(o)
    for p in plugin.plugins:
        p.setup_ctx(ctx)

    if o.outfile is not None:
        fd = io.open(o.outfile, "w+", encoding="utf-8")
    else:
        fd = sys.stdout

    status = 0
    try:
        status = verbs[verb].emit(ctx, args[1:], fd)
    except error.EmitError as e:
        print_errors(ctx, o)
        if e.msg != "":
            sys.stderr.write("%s: %s\n" % (verb, e.msg))
        status = e.exit_code
    except error.NmpolyError as e:
        print_errors(ctx, o)
        if o.print_error_code:
            sys.stderr.write("%s: error: %s\n" % (verb, e.tag))
        else:
            sys.stderr.write("%s: error: %s\n" % (verb, e))
        status = 2
    else:
        print_errors(ctx, o)

    if o.outfile is not None:
        fd.close()
        if status == 2:
            os.remove(o.outfile)
    sys.exit(status)

def print_errors(ctx, o):
    for (epos, etag, eargs) in ctx.errors:
        elevel = error.err_level(etag)
        if error.is_warning(elevel):
            kind = "warning"
        else:
            kind = "error"
        if o.print_error_code:
            sys.stderr.write(str(epos) + ': %s: %s\n' % (kind, etag))
        else:
            sys.stderr.write(str(epos) + ': %s: ' % kind +
                             error.err_to_str(etag, eargs) + '\n')

if __name__ == '__main__':
    run()
