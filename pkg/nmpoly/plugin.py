"""nmpoly plugin handling"""

import os
import sys

from . import error

plugins = []
"""List of registered NmpolyPlugin instances"""

def init(plugindirs=None):
    """Initialize the plugin framework"""
    if plugindirs is None:
        plugindirs = []

    # initialize the builtin plugins
    from .plugins import polygon, mellin, fourier, ts, verify, demo
    polygon.nmpoly_plugin_init()
    mellin.nmpoly_plugin_init()
    fourier.nmpoly_plugin_init()
    ts.nmpoly_plugin_init()
    verify.nmpoly_plugin_init()
    demo.nmpoly_plugin_init()

    # add paths from env
    pluginpath = os.getenv('NMPOLY_PLUGINPATH')
    if pluginpath is not None:
        plugindirs.extend(pluginpath.split(os.pathsep))

    syspath = sys.path
    for plugindir in plugindirs:
        sys.path = [plugindir] + syspath
        try:
            fnames = os.listdir(plugindir)
        except OSError:
            continue
        modnames = []
        for fname in sorted(fnames):
            if (fname.startswith(".#") or
                fname.startswith("__init__.py")):
                pass
            elif fname.endswith(".py"):
                modname = fname[:-3]
                if modname not in modnames:
                    modnames.append(modname)
        for modname in modnames:
            pluginmod = __import__(modname)
            try:
                pluginmod.nmpoly_plugin_init()
            except AttributeError as s:
                raise AttributeError(pluginmod.__file__ + ': ' + str(s))
        sys.path = syspath

def register_plugin(plugin):
    """Call this to register an nmpoly plugin. See class NmpolyPlugin
    for more info.
    """
    plugins.append(plugin)

class NmpolyPlugin(object):
    """Abstract base class for nmpoly plugins

    A plugin is a module in the plugins directory of the nmpoly
    installation, or in the dynamic pluginpath.

    Such a module must export a function 'nmpoly_plugin_init()', which
    may call nmpoly.plugin.register_plugin() with an instance of a class
    derived from this class as argument.

    Each plugin provides one or more verbs of the nmpoly program.
    """

    def __init__(self, name=None):
        self.name = name

    ## nmpoly front-end program methods

    def add_verb(self, verbs):
        """Add a verb to the nmpoly program.

        `verbs` is a dict which maps the verb name string to a plugin
        instance.
        """
        return

    def add_opts(self, optparser):
        """Add command line options to the nmpoly program.

        Override this method and add the plugin related options as an
        option group.
        """
        return

    ## library methods

    def setup_ctx(self, ctx):
        """Modify the Context at setup time.  Called for all plugins."""
        return

    def emit(self, ctx, args, fd):
        """Run the verb and produce its output.

        `args` are the positional arguments after the verb, `fd` is a
        file-like object open for writing.  Returns the exit status: 0
        on success, 1 when a verification failed.

        Raise error.EmitError on failure.
        """
        return 0

    ## helpers for emit()

    def check_arity(self, verb, args, count, what):
        if len(args) != count:
            raise error.EmitError(error.err_to_str('BAD_ARITY',
                                                   (verb, what)), 2)

    def read_inputs(self, ctx, verb, filenames):
        """Parse all input files; a parse error fails the verb with exit
        code 2 after the diagnostics are printed."""
        if not filenames:
            raise error.EmitError(error.err_to_str(
                'BAD_ARITY', (verb, 'at least one expansion file')), 2)
        expansions = ctx.read_files(filenames)
        if expansions is None or ctx.has_errors():
            raise error.EmitError('', 2)
        return expansions
