"""Generated permutation groups with deterministic stabilizer chains.

Internally permutations are plain image tuples; Perm objects appear only at
the API boundary. Products compose left to right: (p*q)[x] = q[p[x]].
"""

from dataclasses import dataclass

from .perm import Perm


def _mul(p, q):
    return tuple(map(q.__getitem__, p))


def _inv(p):
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


class _Level:
    __slots__ = ("beta", "gens", "orbit")

    def __init__(self, beta, ident):
        self.beta = beta
        self.gens = []
        # orbit maps point -> u with beta^u = point; insertion order is the
        # discovery order, which downstream iteration relies on for determinism
        self.orbit = {beta: ident}


class _ChainBuilder:
    """Incremental Schreier-Sims.

    Generators are fed one at a time; after each feed the chain is strongly
    generated for the group generated so far. When known_order is supplied
    the build stops as soon as the product of orbit sizes reaches it (the
    product can never exceed the order of the generated group).
    """

    def __init__(self, degree, known_order=None):
        self.degree = degree
        self.known_order = known_order
        self.ident = tuple(range(degree))
        self.levels = []

    def order(self):
        o = 1
        for lv in self.levels:
            o *= len(lv.orbit)
        return o

    def complete(self):
        return self.known_order is not None and self.order() == self.known_order

    def _gens_at(self, i):
        # strong generators fixing the first i base points = those stored at
        # levels >= i (a generator sits at the level where sifting stuck)
        out = []
        for lv in self.levels[i:]:
            out.extend(lv.gens)
        return out

    def sift(self, g):
        """Reduce g by the transversals; returns (residue, stuck_level)."""
        for i, lv in enumerate(self.levels):
            img = g[lv.beta]
            if img != lv.beta:
                u = lv.orbit.get(img)
                if u is None:
                    return g, i
                g = _mul(g, _inv(u))
        return g, len(self.levels)

    def feed(self, g):
        """Add one generator; returns True once known_order is reached."""
        if g != self.ident and not self.complete():
            r, j = self.sift(g)
            if r != self.ident:
                self._insert(r, j)
                self._close(j)
        return self.complete()

    def _insert(self, r, j):
        if j == len(self.levels):
            beta = next(x for x in range(self.degree) if r[x] != x)
            self.levels.append(_Level(beta, self.ident))
        self.levels[j].gens.append(r)
        for i in range(j + 1):
            self._extend_orbit(i, r)

    def _extend_orbit(self, i, s):
        lv = self.levels[i]
        orbit = lv.orbit
        fresh = []
        for a in list(orbit):
            b = s[a]
            if b not in orbit:
                orbit[b] = _mul(orbit[a], s)
                fresh.append(b)
        gens = self._gens_at(i)
        k = 0
        while k < len(fresh):
            a = fresh[k]
            k += 1
            ua = orbit[a]
            for g in gens:
                b = g[a]
                if b not in orbit:
                    orbit[b] = _mul(ua, g)
                    fresh.append(b)

    def _close(self, start):
        # levels deeper than `start` are already verified; re-verify downward
        i = min(start, len(self.levels) - 1)
        while i >= 0:
            if self.complete():
                return
            stuck = self._verify_level(i)
            if stuck is None:
                i -= 1
            else:
                i = stuck

    def _verify_level(self, i):
        lv = self.levels[i]
        gens = self._gens_at(i)
        ident = self.ident
        for a in list(lv.orbit):
            ua = lv.orbit[a]
            for s in gens:
                h = _mul(_mul(ua, s), _inv(lv.orbit[s[a]]))
                if h == ident:
                    continue
                r, j = self.sift(h)
                if r != ident:
                    self._insert(r, j)
                    return j
        return None


@dataclass(frozen=True)
class StabilizerChainRecord:
    """Orders along an iterated point stabilizer chain: |G|, |G_p1|, ..."""

    points: tuple
    orders: tuple

    @property
    def is_irredundant(self):
        return all(a > b for a, b in zip(self.orders, self.orders[1:]))

    @property
    def is_base(self):
        return self.orders[-1] == 1


class PermGroup:
    """The group generated by a list of Perm, all of one degree."""

    def __init__(self, degree, gens=()):
        gens = list(gens)
        for g in gens:
            if not isinstance(g, Perm):
                raise TypeError("generators must be Perm instances")
            if g.degree != degree:
                raise ValueError(
                    "generator degree %d != group degree %d" % (g.degree, degree)
                )
        if degree < 1:
            raise ValueError("degree must be positive")
        seen = set()
        kept = []
        for g in gens:
            if not g.is_identity() and g.img not in seen:
                seen.add(g.img)
                kept.append(g)
        self.degree = degree
        self.gens = tuple(kept)
        self._raw = tuple(g.img for g in kept)
        self._ident = tuple(range(degree))
        self._builder = None
        self._order = None
        self._orbit_cache = {}
        self._orbits = None
        self._elements = None
        self._block_cache = None

    @classmethod
    def _from_builder(cls, degree, builder):
        gens = [Perm._raw(g) for g in builder._gens_at(0)]
        G = cls(degree, gens)
        G._builder = builder
        G._order = builder.order()
        return G

    def _chain(self):
        if self._builder is None:
            b = _ChainBuilder(self.degree)
            for g in self._raw:
                b.feed(g)
            self._builder = b
        return self._builder

    @property
    def order(self):
        if self._order is None:
            self._order = self._chain().order()
        return self._order

    def is_trivial(self):
        return not self._raw

    def __contains__(self, p):
        if not isinstance(p, Perm) or p.degree != self.degree:
            return False
        r, _ = self._chain().sift(p.img)
        return r == self._ident

    def base(self):
        return tuple(lv.beta for lv in self._chain().levels)

    def strong_gens(self):
        return tuple(Perm._raw(g) for g in self._chain()._gens_at(0))

    def _orbit_raw(self, pt):
        """Orbit of pt under the group generators: point -> u with pt^u = x."""
        if not 0 <= pt < self.degree:
            raise ValueError("point %r out of range" % (pt,))
        cached = self._orbit_cache.get(pt)
        if cached is not None:
            return cached
        orbit = {pt: self._ident}
        queue = [pt]
        k = 0
        while k < len(queue):
            a = queue[k]
            k += 1
            ua = orbit[a]
            for g in self._raw:
                b = g[a]
                if b not in orbit:
                    orbit[b] = _mul(ua, g)
                    queue.append(b)
        self._orbit_cache[pt] = orbit
        return orbit

    def orbit(self, pt):
        return tuple(sorted(self._orbit_raw(pt)))

    def transversal(self, pt):
        return {b: Perm._raw(u) for b, u in self._orbit_raw(pt).items()}

    def orbits(self):
        """All orbits as sorted tuples, listed by smallest element."""
        if self._orbits is None:
            seen = set()
            out = []
            for pt in range(self.degree):
                if pt not in seen:
                    orb = self.orbit(pt)
                    seen.update(orb)
                    out.append(orb)
            self._orbits = tuple(out)
        return self._orbits

    def is_transitive(self):
        return len(self._orbit_raw(0)) == self.degree

    def stabilizer(self, pt):
        """Point stabilizer as a generated group (Schreier generators)."""
        orb = self._orbit_raw(pt)
        if len(orb) == 1:
            return self
        sub_order = self.order // len(orb)
        if sub_order == 1:
            return PermGroup(self.degree, [])
        builder = _ChainBuilder(self.degree, known_order=sub_order)
        done = False
        for a in sorted(orb):
            ua = orb[a]
            for s in self._raw:
                h = _mul(_mul(ua, s), _inv(orb[s[a]]))
                if builder.feed(h):
                    done = True
                    break
            if done:
                break
        if builder.order() != sub_order:
            raise RuntimeError("stabilizer chain did not reach expected order")
        return PermGroup._from_builder(self.degree, builder)

    def pointwise_stabilizer(self, points):
        H = self
        seen = set()
        for p in points:
            if p in seen:
                continue
            seen.add(p)
            H = H.stabilizer(p)
        return H

    def chain_orders(self, points):
        points = tuple(points)
        H = self
        orders = [self.order]
        for p in points:
            H = H.stabilizer(p)
            orders.append(H.order)
        return StabilizerChainRecord(points, tuple(orders))

    def fixed_points(self):
        """Points fixed by every generator."""
        out = []
        for x in range(self.degree):
            if all(g[x] == x for g in self._raw):
                out.append(x)
        return tuple(out)

    def _elements_raw(self, cap=None):
        if self._elements is None:
            if cap is not None and self.order > cap:
                raise ValueError("order %d exceeds cap %d" % (self.order, cap))
            seen = {self._ident: 0}
            listing = [self._ident]
            k = 0
            while k < len(listing):
                p = listing[k]
                k += 1
                for g in self._raw:
                    q = _mul(p, g)
                    if q not in seen:
                        seen[q] = len(listing)
                        listing.append(q)
            self._elements = (listing, seen)
        return self._elements

    def elements(self, cap=None):
        return [Perm._raw(p) for p in self._elements_raw(cap)[0]]

    def minimal_block(self, a, b):
        """Classes of the finest block system merging points a and b."""
        parent = list(range(self.degree))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        queue = [(a, b)]
        while queue:
            x, y = queue.pop()
            rx, ry = find(x), find(y)
            if rx == ry:
                continue
            if rx > ry:
                rx, ry = ry, rx
            parent[ry] = rx
            for g in self._raw:
                queue.append((g[x], g[y]))
        classes = {}
        for x in range(self.degree):
            classes.setdefault(find(x), []).append(x)
        return tuple(tuple(c) for c in sorted(classes.values()))

    def nontrivial_block_system(self):
        """A proper nontrivial block system, or None (cached)."""
        if self._block_cache is None:
            found = ()
            if self.is_transitive() and self.degree > 1:
                for b in range(1, self.degree):
                    blocks = self.minimal_block(0, b)
                    if 1 < len(blocks) < self.degree:
                        found = blocks
                        break
            self._block_cache = (found,)
        return self._block_cache[0] or None

    def is_primitive(self):
        if self.degree == 1:
            return True
        return self.is_transitive() and self.nontrivial_block_system() is None

    def derived_subgroup(self):
        """Commutator subgroup, via normal closure of generator commutators."""
        build = _ChainBuilder(self.degree)
        raw = self._raw
        for g in raw:
            gi = _inv(g)
            for h in raw:
                c = _mul(_mul(gi, _inv(h)), _mul(g, h))
                build.feed(c)
        while True:
            added = False
            for d in build._gens_at(0):
                for g in raw:
                    c = _mul(_mul(_inv(g), d), g)
                    r, _ = build.sift(c)
                    if r != build.ident:
                        build.feed(c)
                        added = True
            if not added:
                break
        if not build.levels:
            return PermGroup(self.degree, [])
        return PermGroup._from_builder(self.degree, build)

    def is_subgroup_of(self, other):
        return self.degree == other.degree and all(g in other for g in self.gens)

    def same_group_as(self, other):
        return self.order == other.order and self.is_subgroup_of(other)

    def __repr__(self):
        return "PermGroup(degree=%d, gens=%d)" % (self.degree, len(self.gens))
