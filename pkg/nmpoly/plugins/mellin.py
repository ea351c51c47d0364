"""Mellin coefficient table output plugin"""

from nmpoly import plugin
from nmpoly import mellin
from nmpoly.translators import text, structured

def nmpoly_plugin_init():
    plugin.register_plugin(MellinPlugin())

class MellinPlugin(plugin.NmpolyPlugin):
    def __init__(self):
        plugin.NmpolyPlugin.__init__(self, 'mellin')

    def add_verb(self, verbs):
        verbs['mellin'] = self

    def emit(self, ctx, args, fd):
        expansions = self.read_inputs(ctx, 'mellin', args)
        tables = [(ref, mellin.mellin_coefficients(e))
                  for (ref, e) in zip(args, expansions)]
        if ctx.opts.json:
            structured.emit([{'input': ref,
                              'table': structured.table_to_json(t)}
                             for (ref, t) in tables], fd)
            return 0
        lines = []
        for ref, t in tables:
            if len(tables) > 1:
                lines.append('# %s' % ref)
            lines.extend(text.table_lines(t))
        text.emit(lines, fd)
        return 0
