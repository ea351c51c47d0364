"""End-to-end demonstration plugin

`demo monomial <a> <b>` combines the fiber integrals of x^a and y^b
symbolically, prints the ts output, and cross-checks the combination
against the numerical convolution of the two fiber densities.
"""

from nmpoly import plugin
from nmpoly import error
from nmpoly import expansion
from nmpoly import oracle
from nmpoly import suites
from nmpoly.plugins import ts
from nmpoly.plugins.verify import suite_params
from nmpoly.translators import text, structured

def nmpoly_plugin_init():
    plugin.register_plugin(DemoPlugin())

class DemoPlugin(plugin.NmpolyPlugin):
    def __init__(self):
        plugin.NmpolyPlugin.__init__(self, 'demo')

    def add_verb(self, verbs):
        verbs['demo'] = self

    def emit(self, ctx, args, fd):
        self.check_arity('demo', args, 3, '"monomial <a> <b>"')
        if args[0] != 'monomial':
            raise error.EmitError(error.err_to_str(
                'SYNTAX_ERROR', ('monomial', args[0])), 2)
        try:
            germs = [oracle.MonomialGerm(int(a)) for a in args[1:]]
            params = suite_params(ctx.opts)
        except ValueError:
            raise error.EmitError(error.err_to_str(
                'BAD_GERM', (' '.join(args[1:]),)), 2)
        except error.OracleError as e:
            raise error.EmitError(str(e), 2)
        (e1, e2) = [oracle.monomial_expansion(g) for g in germs]
        refs = ['x^%d' % germs[0].exponent, 'y^%d' % germs[1].exponent]
        (combined, report) = ts.run_ts(ctx, refs, e1, e2)
        rows = cross_check(germs[0].exponent, germs[1].exponent, combined,
                           params)
        if ctx.opts.json:
            obj = ts.ts_json(combined, report)
            obj['inputs'] = [structured.expansion_to_json(e1),
                             structured.expansion_to_json(e2)]
            obj['convolution'] = structured.rows_to_json('convolution',
                                                         rows)
            structured.emit(obj, fd)
        else:
            lines = []
            for ref, e in zip(refs, (e1, e2)):
                lines.append('# fiber integral of %s' % ref)
                lines.extend(text.expansion_lines(e))
            lines.extend(ts.ts_lines(combined, report))
            lines.extend(text.rows_lines('convolution', rows))
            text.emit(lines, fd)
        if report.verdict and not suites.failures(rows):
            return 0
        return 1

def cross_check(a, b, combined, params):
    """Rows comparing the convolution of the fiber densities with the
    symbolic combination: the log coefficient, the power law, or the
    continuity of a smooth result."""
    tol = params.tolerance(0.05)
    cutoff = params.cutoff()
    if combined.is_empty():
        return [suites.ts_smooth_case(a, b, cutoff, tol)]
    x = expansion.Exponent(0, 0, 0)
    if combined.get(x).degree() >= 1:
        return [suites.ts_log_case(a, b, cutoff, tol)]
    return suites.ts_power_cases(a, b, cutoff, tol)
