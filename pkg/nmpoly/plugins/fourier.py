"""Local Fourier transform plugin

The output is in the expansion format, so it can be fed back with
--inverse.
"""

import optparse

from nmpoly import plugin
from nmpoly import fourier
from nmpoly.translators import text, structured

def nmpoly_plugin_init():
    plugin.register_plugin(FourierPlugin())

class FourierPlugin(plugin.NmpolyPlugin):
    def __init__(self):
        plugin.NmpolyPlugin.__init__(self, 'fourier')

    def add_verb(self, verbs):
        verbs['fourier'] = self

    def add_opts(self, optparser):
        optlist = [
            optparse.make_option("--inverse",
                                 dest="inverse",
                                 action="store_true",
                                 help="Apply the inverse transform to "
                                 "expansions at infinity"),
            ]
        g = optparser.add_option_group("Fourier specific options")
        g.add_options(optlist)

    def emit(self, ctx, args, fd):
        expansions = self.read_inputs(ctx, 'fourier', args)
        if ctx.opts.inverse:
            results = [fourier.inverse(e) for e in expansions]
        else:
            results = [fourier.forward(e) for e in expansions]
        if ctx.opts.json:
            structured.emit([{'input': ref,
                              'expansion': structured.expansion_to_json(e)}
                             for (ref, e) in zip(args, results)], fd)
            return 0
        lines = []
        for ref, e in zip(args, results):
            if len(results) > 1:
                lines.append('# %s' % ref)
            lines.extend(text.expansion_lines(e))
        text.emit(lines, fd)
        return 0
