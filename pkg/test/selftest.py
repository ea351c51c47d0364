#!/usr/bin/env python

# check that some internal data structures are consistent

import sys
import glob
import subprocess

from nmpoly import error
from nmpoly import plugin


def oscmd(cmd):
    p = subprocess.Popen(cmd, stdout=subprocess.PIPE, stderr=subprocess.PIPE)
    p.wait()
    out = p.stdout.read().decode('utf-8').rstrip('\n')
    err = p.stderr.read().decode('utf-8').rstrip('\n')
    retcode = p.returncode
    return retcode, out, err


def chk_error_codes():
    found_error = False
    retcode, out, err = oscmd(['nmpoly', '--list-errors'])
    if retcode:
        sys.stderr.write('Cannot list errors from nmpoly\n')
        if err:
            for line in err.split('\n'):
                sys.stderr.write('[nmpoly] %s\n' % line)
        found_error = True
        listed_codes = set()
    else:
        listed_codes = set(line.strip().split()[-1] for line in out.split('\n')
                           if line.startswith('Error:'))
        for code in error.error_codes:
            if code not in listed_codes:
                sys.stderr.write('Error code: %s not listed by nmpoly\n'
                                 % code)
                found_error = True

    files = glob.glob("../nmpoly/*.py") + glob.glob("../nmpoly/*/*.py")
    all_codes = sorted(set(error.error_codes) | listed_codes)
    for code in all_codes:
        retcode, out, _ = oscmd(['grep', '-e', r'\b%s\b' % code, '--'] + files)
        # the definition plus at least one use
        if retcode or out.count('\n') == 0:
            sys.stderr.write("Error code: %s not used\n" % code)
            found_error = True
    return found_error


def chk_verbs():
    found_error = False
    plugin.init([])
    verbs = {}
    for p in plugin.plugins:
        p.add_verb(verbs)
    retcode, out, _ = oscmd(['nmpoly', '--help'])
    if retcode:
        sys.stderr.write('Cannot get usage from nmpoly\n')
        return True
    documented = set(line.split()[0] for line in out.split('\n')
                     if line.startswith('  ') and line.strip()
                     and not line.strip().startswith('-'))
    for verb in sorted(verbs):
        if verb not in documented:
            sys.stderr.write("Verb %s not in the usage text\n" % verb)
            found_error = True
    return found_error


def main():
    return any([
        chk_error_codes(),
        chk_verbs(),
    ])

sys.exit(main())
