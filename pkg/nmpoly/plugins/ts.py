"""Thom-Sebastiani plugin

Combines two fiber-class expansions and checks the decorated polygon
relation between the inputs and the combination.
"""

from nmpoly import plugin
from nmpoly import fourier
from nmpoly.translators import text, structured, svg

def nmpoly_plugin_init():
    plugin.register_plugin(TsPlugin())

class TsPlugin(plugin.NmpolyPlugin):
    def __init__(self):
        plugin.NmpolyPlugin.__init__(self, 'ts')

    def add_verb(self, verbs):
        verbs['ts'] = self

    def emit(self, ctx, args, fd):
        self.check_arity('ts', args, 2, 'exactly two expansion files')
        (e1, e2) = self.read_inputs(ctx, 'ts', args)
        (combined, report) = run_ts(ctx, args, e1, e2)
        return emit_ts(ctx, combined, report, fd)

def run_ts(ctx, refs, e1, e2):
    """Returns (combined expansion, TheoremReport); writes the SVG
    figure when asked."""
    combined = fourier.thom_sebastiani(e1, e2)
    report = fourier.theorem_check(e1, e2)
    if ctx.opts.svg is not None:
        svg.emit([(refs[0], fourier.hat_polygon(e1)),
                  (refs[1], fourier.hat_polygon(e2)),
                  ('combination', fourier.hat_polygon(combined))],
                 ctx.opts.svg)
    return (combined, report)

def ts_lines(combined, report):
    lines = ['# combination']
    lines.extend(text.expansion_lines(combined))
    lines.extend(text.report_lines(report))
    return lines

def ts_json(combined, report):
    return {'combination': structured.expansion_to_json(combined),
            'report': structured.report_to_json(report)}

def emit_ts(ctx, combined, report, fd):
    if ctx.opts.json:
        structured.emit(ts_json(combined, report), fd)
    else:
        text.emit(ts_lines(combined, report), fd)
    if report.verdict:
        return 0
    return 1
