#!/usr/bin/env python
# -*- coding: utf-8 -*-
# pylint: disable=redefined-outer-name
"""
tests for the nmpoly verbs and the nmpoly front end
"""
import io
import json
import os
import subprocess
import sys

import pytest
from lxml import etree

from nmpoly import error
from nmpoly import oracle
from nmpoly import plugin
from nmpoly.context import Context
from nmpoly.plugins import polygon, mellin, fourier, ts, verify, demo

TOP = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
NMPOLY = os.path.join(TOP, 'bin', 'nmpoly')

QUADRATIC = 'side=zero\n# x^2\nr=-1/2 m1=0 m2=0 : 0:0.5,0\n'
CUBIC = 'side=zero\nr=-2/3 m1=0 m2=0 : 0:0.33333333333333331,0\n'

DEFAULT_OPTIONS = {
    'verbose': False,
    'list_errors': False,
    'print_error_code': False,
    'json': False,
    'svg': None,
    'tilde': False,
    'inverse': False,
    'tol': None,
    'sigma': oracle.DEFAULT_SIGMA,
    'cutoff_inner': 0.5,
    'cutoff_outer': 1.0,
    'seed': 0,
    'count': None,
}
"""Default options for nmpoly command line"""


class objectify(object):
    """Utility for providing object access syntax (.attr) to dicts"""

    def __init__(self, *args, **kwargs):
        for entry in args:
            self.__dict__.update(entry)

        self.__dict__.update(kwargs)

    def __getattr__(self, _):
        return None

    def __setattr__(self, attr, value):
        self.__dict__[attr] = value


def create_context(*options, **kwargs):
    """Generates an nmpoly context

    Arguments:
        *options: list of dicts, with options to be passed to context.
        **kwargs: similar to ``options`` but have a higher precedence.

    Returns:
        nmpoly.Context: Context object for ``nmpoly`` usage
    """

    opts = objectify(DEFAULT_OPTIONS, *options, **kwargs)
    return Context(opts)


@pytest.fixture
def files(tmp_path):
    def write(name, content):
        path = tmp_path / name
        path.write_text(content)
        return str(path)
    return write


def emit(p, ctx, args):
    fd = io.StringIO()
    status = p.emit(ctx, args, fd)
    return (status, fd.getvalue())


def test_polygon(files):
    f = files('f.exp', QUADRATIC)
    (status, out) = emit(polygon.PolygonPlugin(), create_context(), [f])
    assert status == 0
    assert out == '(-1/2,-1/2) : 0.5,0 u^0\n'


def test_polygon_tilde(files):
    f = files('f.exp', 'side=infinity\nr=-1/2 m1=1 m2=1 : 0:-0.5,0\n')
    (status, out) = emit(polygon.PolygonPlugin(), create_context(tilde=True),
                         [f])
    assert status == 0
    assert out == '(1/2,1/2) : -0.5,0 u^0\n'


def test_polygon_svg(files, tmp_path):
    f = files('f.exp', 'side=zero\nr=-1/2 m1=0 m2=1 : 0:1,0\n'
              'r=-1/3 m1=2 m2=0 : 1:0,1\n')
    path = str(tmp_path / 'p.svg')
    emit(polygon.PolygonPlugin(), create_context(svg=path), [f])
    root = etree.parse(path).getroot()
    assert root.tag == '{http://www.w3.org/2000/svg}svg'
    circles = root.findall('.//{http://www.w3.org/2000/svg}circle')
    assert len(circles) == 2


def test_polygon_json(files):
    f = files('f.exp', QUADRATIC)
    (_status, out) = emit(polygon.PolygonPlugin(), create_context(json=True),
                          [f])
    obj = json.loads(out)
    assert obj[0]['polygon'] == [{'vertex': ['-1/2', '-1/2'],
                                  'coefficient': {'re': 0.5, 'im': 0.0},
                                  'degree': 0}]


def test_polygon_input_error(files):
    f = files('bad.exp', 'side=zero\nr=3/2 m1=0 m2=0 : 0:1,zz\n')
    ctx = create_context()
    with pytest.raises(error.EmitError) as exc:
        emit(polygon.PolygonPlugin(), ctx, [f])
    assert exc.value.exit_code == 2
    assert [(pos.line, tag) for (pos, tag, _a) in ctx.errors] == \
        [(2, 'BAD_COEFFICIENT')]


def test_mellin_table(files):
    f = files('f.exp', 'side=zero\nr=-1/3 m1=1 m2=0 : 1:3,0\n')
    (status, out) = emit(mellin.MellinPlugin(), create_context(), [f])
    assert status == 0
    assert out == 'r=-1/3 m1=1 m2=0 k=1 c=-1.5,0 C=3,0\n'


def test_fourier_forward_and_inverse(files):
    f = files('f.exp', QUADRATIC)
    (_status, out) = emit(fourier.FourierPlugin(), create_context(), [f])
    lines = out.splitlines()
    assert lines[0] == 'side=infinity'
    assert lines[1].startswith('r=-1/2 m1=1 m2=1 : 0:0.')
    g = files('g.exp', out)
    (_status, back) = emit(fourier.FourierPlugin(),
                           create_context(inverse=True), [g])
    ctx = create_context()
    e = ctx.add_expansion('back', back)
    assert abs(e.items()[0][1].coefficient(0) - 0.5) < 1e-14


def test_ts(files):
    f = files('f.exp', QUADRATIC)
    (status, out) = emit(ts.TsPlugin(), create_context(), [f, f])
    assert status == 0
    lines = out.splitlines()
    assert lines[:3] == ['# combination', 'side=zero',
                         'r=0/1 m1=0 m2=0 : 1:-0.5,0']
    assert lines[-1].startswith('verdict: PASS')


def test_ts_svg_has_three_polygons(files, tmp_path):
    f = files('f.exp', QUADRATIC)
    g = files('g.exp', CUBIC)
    path = str(tmp_path / 'ts.svg')
    emit(ts.TsPlugin(), create_context(svg=path), [f, g])
    root = etree.parse(path).getroot()
    groups = root.findall('{http://www.w3.org/2000/svg}g')
    # axes and one group per polygon
    assert len(groups) == 4


def test_ts_arity(files):
    f = files('f.exp', QUADRATIC)
    with pytest.raises(error.EmitError) as exc:
        emit(ts.TsPlugin(), create_context(), [f])
    assert exc.value.exit_code == 2
    assert 'expects exactly two' in exc.value.msg


def test_verify(files):
    ctx = create_context(count=5)
    (status, out) = emit(verify.VerifyPlugin(), ctx, ['roundtrip'])
    assert status == 0
    assert out.splitlines()[-1] == '# roundtrip: 10 cases, 0 failed'


def test_verify_failure_exits_one():
    ctx = create_context(tol=1e-30)
    (status, _out) = emit(verify.VerifyPlugin(), ctx, ['gamma'])
    assert status == 1


def test_verify_unknown_suite():
    with pytest.raises(error.EmitError) as exc:
        emit(verify.VerifyPlugin(), create_context(), ['nosuch'])
    assert exc.value.exit_code == 2
    assert 'unknown suite "nosuch"' in exc.value.msg


def test_verify_bad_cutoff():
    ctx = create_context(cutoff_inner=2.0)
    with pytest.raises(error.EmitError) as exc:
        emit(verify.VerifyPlugin(), ctx, ['hat'])
    assert exc.value.exit_code == 2


def test_demo_arguments():
    p = demo.DemoPlugin()
    for args in [['monomial', '2'], ['binomial', '2', '2'],
                 ['monomial', '2', 'x'], ['monomial', '0', '2'],
                 ['monomial', '5', '2']]:
        with pytest.raises(error.EmitError) as exc:
            emit(p, create_context(), args)
        assert exc.value.exit_code == 2


def test_demo_smooth_combination():
    (status, out) = emit(demo.DemoPlugin(), create_context(),
                         ['monomial', '2', '1'])
    assert status == 0
    assert 'x^2+y^1 continuous' in out


def run_nmpoly(*args):
    p = subprocess.Popen([sys.executable, NMPOLY] + list(args),
                         stdout=subprocess.PIPE, stderr=subprocess.PIPE)
    (out, err) = p.communicate()
    return (p.returncode, out.decode('utf-8'), err.decode('utf-8'))


def test_front_end_ts(files):
    f = files('f.exp', QUADRATIC)
    (status, out, _err) = run_nmpoly('ts', f, f)
    assert status == 0
    assert 'r=0/1 m1=0 m2=0 : 1:-0.5,0' in out
    assert 'verdict: PASS' in out


def test_front_end_parse_error(files):
    f = files('bad.exp', 'side=zero\nr=3/2 m1=0 m2=0 : 0:1,zz\n')
    (status, _out, err) = run_nmpoly('polygon', f)
    assert status == 2
    assert '%s:2: error: bad coefficient' % f in err


def test_front_end_library_error(files):
    f = files('f.exp', 'side=zero\nr=-1/2 m1=0 m2=-1 : 0:1,0\n')
    (status, _out, err) = run_nmpoly('--print-error-code', 'polygon', f)
    assert status == 2
    assert 'NOT_FIBER_CLASS' in err


def test_front_end_usage_errors():
    assert run_nmpoly()[0] == 2
    assert run_nmpoly('frobnicate')[0] == 2
    assert run_nmpoly('verify')[0] == 2


def test_front_end_output_file(files, tmp_path):
    f = files('f.exp', QUADRATIC)
    out = str(tmp_path / 'out.txt')
    (status, stdout, _err) = run_nmpoly('-o', out, 'mellin', f)
    assert status == 0
    assert stdout == ''
    with io.open(out, encoding='utf-8') as fd:
        assert fd.read() == 'r=-1/2 m1=0 m2=0 k=0 c=0.5,0 C=0.5,0\n'


def test_front_end_verbose(files):
    f = files('f.exp', QUADRATIC)
    (_status, _out, err) = run_nmpoly('-V', 'polygon', f)
    assert '# read %s' % f in err


def test_front_end_plugindir(files):
    f = files('f.exp', 'side=zero\nr=0 m1=0 m2=0 : 2:1,0\n'
              'r=-1/2 m1=0 m2=0 : 0:1,0\n')
    plugindir = os.path.join(TOP, 'test', 'plugins')
    (status, out, _err) = run_nmpoly('--plugindir', plugindir, 'terms', f)
    assert status == 0
    assert out == '%s: 2 terms, log degree 2\n' % f


def test_list_errors():
    (status, out, _err) = run_nmpoly('--list-errors')
    assert status == 0
    listed = [line.split()[-1] for line in out.splitlines()
              if line.startswith('Error:')]
    assert sorted(listed) == sorted(error.error_codes)


def test_builtin_verbs_are_registered():
    plugin.init([])
    verbs = {}
    for p in plugin.plugins:
        p.add_verb(verbs)
    assert set(['polygon', 'mellin', 'fourier', 'ts', 'verify', 'demo']) \
        <= set(verbs)
    assert isinstance(verbs['ts'], ts.TsPlugin)
