"""Verification suites plugin

`verify <suite>` runs one suite from nmpoly.suites and prints a row per
case; any failed case gives exit status 1.
"""

import optparse

from nmpoly import plugin
from nmpoly import error
from nmpoly import oracle
from nmpoly import suites
from nmpoly.translators import text, structured

def nmpoly_plugin_init():
    plugin.register_plugin(VerifyPlugin())

class VerifyPlugin(plugin.NmpolyPlugin):
    def __init__(self):
        plugin.NmpolyPlugin.__init__(self, 'verify')

    def add_verb(self, verbs):
        verbs['verify'] = self

    def add_opts(self, optparser):
        optlist = [
            optparse.make_option("--tol",
                                 dest="tol",
                                 type="float",
                                 help="Relative tolerance, overrides the "
                                 "suite default"),
            optparse.make_option("--sigma",
                                 dest="sigma",
                                 type="float",
                                 default=oracle.DEFAULT_SIGMA,
                                 help="|sigma| for the hat suite "
                                 "(default %default)"),
            optparse.make_option("--cutoff-inner",
                                 dest="cutoff_inner",
                                 type="float",
                                 default=0.5,
                                 help="Plateau radius of the cutoff "
                                 "(default %default)"),
            optparse.make_option("--cutoff-outer",
                                 dest="cutoff_outer",
                                 type="float",
                                 default=1.0,
                                 help="Support radius of the cutoff "
                                 "(default %default)"),
            optparse.make_option("--seed",
                                 dest="seed",
                                 type="int",
                                 default=0,
                                 help="Seed of the random property suites "
                                 "(default %default)"),
            optparse.make_option("--count",
                                 dest="count",
                                 type="int",
                                 help="Number of random cases, overrides "
                                 "the suite default"),
            ]
        g = optparser.add_option_group("Verify specific options")
        g.add_options(optlist)

    def emit(self, ctx, args, fd):
        self.check_arity('verify', args, 1, 'a suite name')
        name = args[0]
        if name not in suites.suites:
            raise error.EmitError(error.err_to_str(
                'UNKNOWN_SUITE', (name, ', '.join(suites.suites.keys()))), 2)
        try:
            params = suite_params(ctx.opts)
        except error.OracleError as e:
            raise error.EmitError(str(e), 2)
        rows = suites.run_suite(name, params, ctx.threads, ctx.opts.verbose)
        if ctx.opts.json:
            structured.emit(structured.rows_to_json(name, rows), fd)
        else:
            text.emit(text.rows_lines(name, rows), fd)
        if suites.failures(rows):
            return 1
        return 0

def suite_params(opts):
    params = suites.SuiteParams(tol=opts.tol, sigma=opts.sigma,
                                cutoff_inner=opts.cutoff_inner,
                                cutoff_outer=opts.cutoff_outer,
                                seed=opts.seed, count=opts.count)
    # validates the radii
    params.cutoff()
    return params
