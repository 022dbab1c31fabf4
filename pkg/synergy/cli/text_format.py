"""Text forms of point files and certificates.

Point files hold one `x y` pair per line. Blank lines separate sequences
and `#` starts a comment. Certificates hold one argument per line:

    DOM  i a     <- j b c ; ...
    MAX  i a b   <- j b c ; ...
    ELIM i a j b <- k c d e ; ...
    CONV i a b   <- k c d e ; ...

All indices are 1-based; d is a witness pivot. Output blocks are the MAX
(or CONV) subjects, in file order.
"""
from collections import defaultdict

import pyparsing as pp

from synergy.geom_core import BlockRef, ParseError, Point, PreconditionError
from synergy.hull.certificate import HullArgument, HullArgumentKind, HullCertificate
from synergy.maxima.certificate import ArgumentKind, MaximaArgument, MaximaCertificate

_COORD = pp.pyparsing_common.signed_integer
_INDEX = pp.Word(pp.nums).set_parse_action(lambda t: int(t[0])).set_name("index")
_ARROW = pp.Suppress("<-")

_POINT = _COORD("x") + _COORD("y")


def _blocks(width):
    return pp.Group(pp.Optional(pp.DelimitedList(pp.Group(_INDEX * width), delim=";")))("witnesses")


def _argument(keyword, anchors, width):
    return pp.Keyword(keyword)("kind") + pp.Group(_INDEX * anchors)("head") + _ARROW + _blocks(width)


_MAXIMA_LINE = _argument("DOM", 2, 3) | _argument("MAX", 3, 3)
_HULL_LINE = _argument("ELIM", 4, 4) | _argument("CONV", 3, 4)


def _content(line):
    return line.split("#", 1)[0]


def _parse_line(expr, text, number):
    try:
        return expr.parse_string(text, parse_all=True)
    except pp.ParseException as exc:
        raise ParseError(exc.msg, line=number, column=exc.col) from exc


def parse_points(text):
    """Parse a point file into a list of sequences (lists of Point).

    Raises:
        ParseError: a line is not two integers, or a coordinate is out of bounds.
    """
    seqs, current = [], []
    for number, line in enumerate(text.splitlines(), start=1):
        # a blank line closes the current sequence
        if not line.strip():
            if current:
                seqs.append(current)
                current = []
            continue
        content = _content(line)
        if not content.strip():
        # comment-only lines do not break a sequence
            continue
        parsed = _parse_line(_POINT, content, number)
        try:
            current.append(Point(parsed["x"], parsed["y"]))
        except PreconditionError as exc:
            raise ParseError(str(exc), line=number, column=1) from exc
    if current:
        seqs.append(current)
    return seqs


def format_points(seqs):
    """Inverse of parse_points; empty sequences are skipped."""
    blocks = ["".join(f"{p.x} {p.y}\n" for p in seq) for seq in seqs if seq]
    return "\n".join(blocks)


def _argument_lines(text, expr):
    for number, line in enumerate(text.splitlines(), start=1):
        content = _content(line)
        if content.strip():
            yield _parse_line(expr, content, number)


def parse_maxima_certificate(text):
    arguments = []
    for parsed in _argument_lines(text, _MAXIMA_LINE):
        head = list(parsed["head"])
        witnesses = tuple(BlockRef(*block) for block in parsed["witnesses"].as_list())
        if parsed["kind"] == "DOM":
            i, a = head
            arguments.append(MaximaArgument(ArgumentKind.DOMINATION, BlockRef(i, a, a), witnesses))
        else:
            arguments.append(MaximaArgument(ArgumentKind.MAXIMALITY, BlockRef(*head), witnesses))
    outputs = tuple(arg.subject for arg in arguments if arg.kind is ArgumentKind.MAXIMALITY)
    return MaximaCertificate(tuple(arguments), outputs)


def parse_hull_certificate(text):
    arguments = []
    for parsed in _argument_lines(text, _HULL_LINE):
        head = list(parsed["head"])
        witnesses = tuple(BlockRef(k, c, e, pivot=d) for k, c, d, e in parsed["witnesses"].as_list())
        if parsed["kind"] == "ELIM":
            i, a, j, b = head
            arguments.append(HullArgument(HullArgumentKind.ELIMINATOR, ((i, a), (j, b)), witnesses))
        else:
            i, a, b = head
            arguments.append(HullArgument(HullArgumentKind.CONVEX, ((i, a), (i, b)), witnesses))
    outputs = tuple(arg.subject for arg in arguments if arg.kind is HullArgumentKind.CONVEX)
    return HullCertificate(tuple(arguments), outputs)


def _output_order(cert, is_subject):
    """Other arguments first, then subject arguments in output block order."""
    pending = defaultdict(list)
    for arg in cert.arguments:
        if is_subject(arg):
            pending[arg.subject.span].append(arg)
    ordered = [arg for arg in cert.arguments if not is_subject(arg)]
    for ref in cert.output_blocks:
        if pending[ref.span]:
            ordered.append(pending[ref.span].pop(0))
    ordered += [arg for args in pending.values() for arg in args]
    return ordered


def _join(head, blocks):
    if not blocks:
        return f"{head} <-"
    return f"{head} <- " + " ; ".join(" ".join(map(str, block)) for block in blocks)


def format_maxima_certificate(cert):
    lines = []
    for arg in _output_order(cert, lambda arg: arg.kind is ArgumentKind.MAXIMALITY):
        s = arg.subject
        head = f"DOM {s.seq} {s.lo}" if arg.kind is ArgumentKind.DOMINATION else f"MAX {s.seq} {s.lo} {s.hi}"
        lines.append(_join(head, [(w.seq, w.lo, w.hi) for w in arg.witnesses]))
    return "".join(line + "\n" for line in lines)


def format_hull_certificate(cert):
    lines = []
    for arg in _output_order(cert, lambda arg: arg.kind is HullArgumentKind.CONVEX):
        (i, a), (j, b) = arg.anchors
        head = f"ELIM {i} {a} {j} {b}" if arg.kind is HullArgumentKind.ELIMINATOR else f"CONV {i} {a} {b}"
        lines.append(_join(head, [(w.seq, w.lo, w.pivot, w.hi) for w in arg.witnesses]))
    return "".join(line + "\n" for line in lines)
