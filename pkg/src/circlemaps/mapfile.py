"""Plain-text formats for liftings and partitions.

Map files hold ``degree <int>`` once and one ``anchor <x> <y>`` per line;
partition files hold ``interval <label> <a> <b>`` lines.  Rationals are
written ``a/b`` or as integers, and ``#`` starts a comment.
"""
from fractions import Fraction

from .markov import Partition
from .plmap import LiftError, PLLift, as_rational, format_rational


class FormatError(ValueError):
    def __init__(self, line, reason):
        super().__init__("line %d: %s" % (line, reason) if line else reason)
        self.line = line
        self.reason = reason


def _statements(text):
    for number, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].split()
        if body:
            yield number, body[0], body[1:]


def _rational(number, token):
    try:
        return as_rational(token)
    except (ValueError, TypeError, ZeroDivisionError):
        raise FormatError(number, "not a rational: %r" % token) from None


def parse_map(text):
    degree = None
    anchors = []
    last = 0
    for number, word, args in _statements(text):
        last = number
        if word == "degree":
            if len(args) != 1:
                raise FormatError(number, "expected 'degree <int>'")
            if degree is not None:
                raise FormatError(number, "degree given twice")
            value = _rational(number, args[0])
            if value.denominator != 1:
                raise FormatError(number, "degree must be an integer")
            degree = int(value)
        elif word == "anchor":
            if len(args) != 2:
                raise FormatError(number, "expected 'anchor <x> <y>'")
            x, y = (_rational(number, a) for a in args)
            if anchors and x <= anchors[-1][0]:
                raise FormatError(number, "anchor x must increase strictly")
            anchors.append((x, y))
        else:
            raise FormatError(number, "unknown statement %r" % word)
    if degree is None:
        raise FormatError(last, "missing 'degree' line")
    if len(anchors) < 2:
        raise FormatError(last, "need at least two anchors")
    try:
        return PLLift(anchors, degree)
    except LiftError as exc:
        raise FormatError(last, str(exc)) from None


def dump_map(F, comment=None):
    lines = []
    if comment:
        lines.extend("# " + c for c in comment.splitlines())
    lines.append("degree %d" % F.degree)
    lines.extend("anchor %s %s" % (format_rational(x), format_rational(y)) for x, y in F.anchors)
    return "\n".join(lines) + "\n"


def parse_partition(text):
    items = []
    last = 0
    for number, word, args in _statements(text):
        last = number
        if word != "interval" or len(args) != 3:
            raise FormatError(number, "expected 'interval <label> <a> <b>'")
        a, b = (_rational(number, v) for v in args[1:])
        if not a < b:
            raise FormatError(number, "interval %s is degenerate" % args[0])
        items.append((args[0], a, b))
    if not items:
        raise FormatError(last, "no intervals")
    try:
        return Partition.from_labelled(items)
    except ValueError as exc:
        raise FormatError(last, str(exc)) from None


def dump_partition(P):
    return "".join("interval %s %s %s\n" % (lab, format_rational(a), format_rational(b))
                   for lab, (a, b) in zip(P.labels, P.intervals))


def read_map(path):
    with open(path) as fh:
        return parse_map(fh.read())


def read_partition(path):
    with open(path) as fh:
        return parse_partition(fh.read())
