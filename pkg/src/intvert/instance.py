"""Plain-text instance files.

Format::

    # optional comment lines start with '#'
    m n
    a_11 ... a_1n b_1
    ...
    a_m1 ... a_mn b_m

Blank lines are ignored.  Integers have arbitrary precision.
"""

import hashlib

from .errors import InstanceParseError
from .polyhedron import Polyhedron


def _ints(tokens, lineno):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        bad = next(t for t in tokens if not _is_int(t))
        raise InstanceParseError(f"not an integer: {bad!r}", lineno) from None


def _is_int(t):
    try:
        int(t)
    except ValueError:
        return False
    return True


def parse_instance(text, strict=True):
    header = None
    A, b = [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if header is None:
            if len(tokens) != 2:
                raise InstanceParseError("header must be 'm n'", lineno)
            m, n = _ints(tokens, lineno)
            if m < 1 or n < 1:
                raise InstanceParseError("m and n must be positive", lineno)
            header = (m, n)
            continue
        m, n = header
        if len(A) == m:
            raise InstanceParseError(f"more than the declared {m} constraint rows", lineno)
        if len(tokens) != n + 1:
            raise InstanceParseError(f"expected {n + 1} integers, found {len(tokens)}", lineno)
        vals = _ints(tokens, lineno)
        A.append(vals[:n])
        b.append(vals[n])
    if header is None:
        raise InstanceParseError("missing 'm n' header")
    if len(A) != header[0]:
        raise InstanceParseError(f"declared {header[0]} rows, found {len(A)}")
    return Polyhedron(A, b, strict=strict)


def read_instance(path, strict=True):
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read(), strict=strict)


def format_instance(P, comment=None):
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"{P.m} {P.n}")
    for row, bi in zip(P.a, P.b):
        lines.append(" ".join(str(x) for x in (*row, bi)))
    return "\n".join(lines) + "\n"


def instance_hash(data):
    """sha256 hex digest of instance bytes (or text)."""
    if isinstance(data, str):
        data = data.encode("utf-8")
    return hashlib.sha256(data).hexdigest()
