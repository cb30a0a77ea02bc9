"""Permutations of {0, ..., n-1} and a plain text exchange format for generating sets."""

import re


class PermError(ValueError):
    """Raised for malformed permutation input."""


def _check_image(img):
    n = len(img)
    seen = [False] * n
    for x in img:
        if not isinstance(x, int) or not 0 <= x < n or seen[x]:
            raise PermError("not a permutation of 0..%d: %r" % (n - 1, img))
        seen[x] = True


class Perm:
    """A permutation stored as the tuple of images of 0..n-1.

    Products compose left to right: (p * q)(x) == q(p(x)).
    """

    __slots__ = ("img",)

    def __init__(self, img):
        img = tuple(img)
        _check_image(img)
        self.img = img

    @classmethod
    def _raw(cls, img):
        # internal constructor, img must already be a valid tuple
        p = object.__new__(cls)
        p.img = img
        return p

    @classmethod
    def identity(cls, n):
        return cls._raw(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n, cycles):
        img = list(range(n))
        for cyc in cycles:
            cyc = list(cyc)
            if len(set(cyc)) != len(cyc):
                raise PermError("repeated point in cycle %r" % (cyc,))
            for pt in cyc:
                if not isinstance(pt, int) or not 0 <= pt < n:
                    raise PermError("point %r out of range for degree %d" % (pt, n))
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                if img[a] != a:
                    raise PermError("point %d appears in two cycles" % a)
                img[a] = b
        return cls(img)

    @property
    def degree(self):
        return len(self.img)

    def __call__(self, x):
        return self.img[x]

    def __mul__(self, other):
        if not isinstance(other, Perm):
            return NotImplemented
        if len(self.img) != len(other.img):
            raise PermError("degree mismatch: %d vs %d" % (len(self.img), len(other.img)))
        q = other.img
        return Perm._raw(tuple(q[x] for x in self.img))

    def inverse(self):
        out = [0] * len(self.img)
        for i, x in enumerate(self.img):
            out[x] = i
        return Perm._raw(tuple(out))

    def __pow__(self, k):
        n = len(self.img)
        if k < 0:
            return self.inverse() ** (-k)
        result = Perm.identity(n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_identity(self):
        return all(i == x for i, x in enumerate(self.img))

    def cycles(self, include_fixed=False):
        """Disjoint cycle decomposition, each cycle starting at its smallest point."""
        seen = [False] * len(self.img)
        out = []
        for start in range(len(self.img)):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            x = self.img[start]
            while x != start:
                cyc.append(x)
                seen[x] = True
                x = self.img[x]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def order(self):
        from math import lcm

        return lcm(1, *(len(c) for c in self.cycles()))

    def __eq__(self, other):
        return isinstance(other, Perm) and self.img == other.img

    def __hash__(self):
        return hash(self.img)

    def __repr__(self):
        cyc = self.cycles()
        if not cyc:
            return "Perm.identity(%d)" % len(self.img)
        body = "".join("(%s)" % " ".join(map(str, c)) for c in cyc)
        return "Perm[%d: %s]" % (len(self.img), body)


_CYCLE_RE = re.compile(r"\(\s*([0-9]+(?:[\s,]+[0-9]+)*)\s*\)")


def parse_perm(text, degree):
    """Parse cycle notation '(0 1 2)(3 4)' or an image list '[1,2,0,4,3]'.

    Image lists may omit the brackets; 'id' and '()' denote the identity.
    """
    text = text.strip()
    if text in ("id", "()", ""):
        return Perm.identity(degree)
    if text.startswith("[") and text.endswith("]"):
        text = text[1:-1].strip()
        if not text:
            raise PermError("empty image list")
    elif text.startswith("("):
        rest = _CYCLE_RE.sub("", text)
        if rest.strip():
            raise PermError("unparsed text in cycle expression: %r" % rest.strip())
        cycles = [
            tuple(int(t) for t in re.split(r"[\s,]+", m.group(1)))
            for m in _CYCLE_RE.finditer(text)
        ]
        return Perm.from_cycles(degree, cycles)
    parts = [p for p in re.split(r"[\s,]+", text) if p]
    try:
        img = [int(p) for p in parts]
    except ValueError:
        raise PermError("cannot parse permutation: %r" % text) from None
    if len(img) != degree:
        raise PermError("image list has length %d, expected %d" % (len(img), degree))
    return Perm(img)


def parse_group_text(text):
    """Parse the group exchange format.

    Line 1: 'degree <t>'.  Every following nonempty line is one generator,
    in cycle or image-list notation.  '#' starts a comment.

    Returns (degree, [Perm, ...]).
    """
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise PermError("empty group description")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "degree":
        raise PermError("first line must be 'degree <t>', got %r" % lines[0])
    try:
        degree = int(head[1])
    except ValueError:
        raise PermError("bad degree %r" % head[1]) from None
    if degree <= 0:
        raise PermError("degree must be positive")
    gens = [parse_perm(line, degree) for line in lines[1:]]
    return degree, gens


def format_group_text(degree, gens, comment=None):
    """Inverse of parse_group_text; writes each generator as an image list."""
    out = []
    if comment:
        for line in comment.splitlines():
            out.append("# " + line)
    out.append("degree %d" % degree)
    for g in gens:
        out.append("[" + ",".join(map(str, g.img)) + "]")
    return "\n".join(out) + "\n"
