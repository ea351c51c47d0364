"""A run context"""

import io

from . import error
from . import exp_parser
from . import util

class Context(object):
    """Class which encapsulates a run: options, errors and the loaded
    expansions"""

    def __init__(self, opts=None):
        self.opts = opts
        self.errors = []
        self.expansions = {}
        """dict of ref:Expansion for every successfully parsed input"""

        self.threads = util.thread_count()
        """oracle parallelism cap, from NEWTON_MELLIN_THREADS"""

    def add_expansion(self, ref, text):
        """Parse an expansion text and add it to the context.

        `ref` identifies the source of the text in error messages.

        Returns the Expansion on success, and None on error."""
        p = exp_parser.ExpansionParser()
        e = p.parse(self, ref, text)
        if e is not None:
            self.expansions[ref] = e
        return e

    def read_file(self, filename):
        try:
            with io.open(filename, 'r', encoding='utf-8') as fd:
                text = fd.read()
            if self.opts is not None and self.opts.verbose:
                util.report_file_read(filename)
        except (IOError, OSError, UnicodeDecodeError) as ex:
            pos = error.Position(filename)
            error.err_add(self.errors, pos, 'READ_ERROR', str(ex))
            return None
        return self.add_expansion(filename, text)

    def read_files(self, filenames):
        """Read all files; returns the expansions, or None if any
        failed."""
        result = [self.read_file(f) for f in filenames]
        if None in result:
            return None
        return result

    def has_errors(self):
        for _pos, tag, _args in self.errors:
            if error.is_error(error.err_level(tag)):
                return True
        return False
