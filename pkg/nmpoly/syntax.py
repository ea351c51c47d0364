"""Description of the expansion text format."""

import re

### Regular expressions

integer_ = r"[+-]?[0-9]+"
rational = integer_ + r"(/[0-9]+)?"
number = r"[+-]?([0-9]+\.?[0-9]*|\.[0-9]+)([eE][+-]?[0-9]+)?"

re_integer = re.compile("^" + integer_ + "$")
re_rational = re.compile("^" + rational + "$")
re_number = re.compile("^" + number + "$")

re_comment = re.compile(r"^\s*(#.*)?$")
re_side = re.compile(r"^\s*side\s*=\s*(?P<side>\S*)\s*$")
re_term = re.compile(r"^\s*r=(?P<r>\S+)\s+m1=(?P<m1>\S+)\s+m2=(?P<m2>\S+)"
                     r"\s*:(?P<coefs>.*)$")
re_coef = re.compile(r"^(?P<k>[0-9]+):(?P<re>[^,]+),(?P<im>[^,]+)$")

term_format = "r=<p/q> m1=<int> m2=<int> : <k>:<re>,<im> ..."
