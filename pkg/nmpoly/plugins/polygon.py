"""Decorated Newton polygon output plugin

Prints the hat polygon of each input, or with --tilde the polygon read
directly off the expansion.
"""

import optparse

from nmpoly import plugin
from nmpoly import fourier
from nmpoly.translators import text, structured, svg

def nmpoly_plugin_init():
    plugin.register_plugin(PolygonPlugin())

class PolygonPlugin(plugin.NmpolyPlugin):
    def __init__(self):
        plugin.NmpolyPlugin.__init__(self, 'polygon')

    def add_verb(self, verbs):
        verbs['polygon'] = self

    def add_opts(self, optparser):
        optlist = [
            optparse.make_option("--tilde",
                                 dest="tilde",
                                 action="store_true",
                                 help="Print the decorated Newton polygon "
                                 "of the expansion itself instead of the "
                                 "transformed one"),
            ]
        g = optparser.add_option_group("Polygon specific options")
        g.add_options(optlist)

    def emit(self, ctx, args, fd):
        expansions = self.read_inputs(ctx, 'polygon', args)
        polygons = []
        for ref, e in zip(args, expansions):
            if ctx.opts.tilde:
                polygons.append((ref, fourier.tilde_polygon(e)))
            else:
                polygons.append((ref, fourier.hat_polygon(e)))
        emit_polygons(ctx, polygons, fd)
        return 0

def emit_polygons(ctx, polygons, fd):
    if ctx.opts.svg is not None:
        svg.emit(polygons, ctx.opts.svg)
    if ctx.opts.json:
        structured.emit([{'input': ref,
                          'polygon': structured.polygon_to_json(dp)}
                         for (ref, dp) in polygons], fd)
        return
    lines = []
    for ref, dp in polygons:
        if len(polygons) > 1:
            lines.append('# %s' % ref)
        lines.extend(text.polygon_lines(dp))
    text.emit(lines, fd)
