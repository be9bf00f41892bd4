"""Permutations and permutation groups with a Schreier-Sims stabilizer chain.

Permutations act on the right: ``p * q`` means "apply ``p``, then ``q``", so
``(p * q)(x) == q(p(x))``. This matches the exponent notation ``x^(pq)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import PreconditionError

Images = tuple[int, ...]


def _mul(p: Images, q: Images) -> Images:
    return tuple([q[i] for i in p])


def _inv(p: Images) -> Images:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


class Permutation:
    """Immutable permutation of ``{0, ..., n-1}`` stored as an image array."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def _raw(cls, images: Images) -> Permutation:
        p = object.__new__(cls)
        p.images = images
        p._hash = hash(images)
        return p

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls._raw(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        images = list(range(n))
        for cyc in cycles:
            for i, x in enumerate(cyc):
                images[x] = cyc[(i + 1) % len(cyc)]
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: Permutation) -> Permutation:
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        return Permutation._raw(_mul(self.images, other.images))

    def __pow__(self, k: int) -> Permutation:
        if k < 0:
            return self.inverse() ** (-k)
        out = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> Permutation:
        return Permutation._raw(_inv(self.images))

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for i in range(self.degree):
            if i in seen or self.images[i] == i:
                continue
            cyc = [i]
            seen.add(i)
            j = self.images[i]
            while j != i:
                seen.add(j)
                cyc.append(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if not self.is_identity() else 1

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __lt__(self, other: Permutation) -> bool:
        return self.images < other.images

    def __hash__(self):
        return self._hash

    def __str__(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    def __repr__(self):
        return f"Permutation({str(self)}, degree={self.degree})"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``p`` followed by ``q``."""
    return p * q


def inverse(p: Permutation) -> Permutation:
    return p.inverse()


def identity(n: int) -> Permutation:
    return Permutation.identity(n)


@dataclass
class _Level:
    base: int
    gens: list[Images] = field(default_factory=list)
    # point -> u with base^u == point
    trans: dict[int, Images] = field(default_factory=dict)
    checked: set = field(default_factory=set)

    def extend_orbit(self):
        queue = list(self.trans)
        i = 0
        while i < len(queue):
            pt = queue[i]
            i += 1
            u = self.trans[pt]
            for g in self.gens:
                img = g[pt]
                if img not in self.trans:
                    self.trans[img] = _mul(u, g)
                    queue.append(img)


def _sift(levels: list[_Level], h: Images, start: int = 0) -> tuple[Images, int]:
    for j in range(start, len(levels)):
        lev = levels[j]
        pt = h[lev.base]
        u = lev.trans.get(pt)
        if u is None:
            return h, j
        h = _mul(h, _inv(u))
    return h, len(levels)


def _first_moved(p: Images) -> int:
    for i, x in enumerate(p):
        if i != x:
            return i
    raise ValueError("identity has no moved point")


def _schreier_sims(degree: int, gens: list[Images], base_prefix: Sequence[int] = ()) -> list[_Level]:
    ident = tuple(range(degree))
    gens = [g for g in dict.fromkeys(gens) if g != ident]
    base = list(base_prefix)
    for g in gens:
        if all(g[b] == b for b in base):
            base.append(_first_moved(g))
    levels = []
    for i, b in enumerate(base):
        lev = _Level(b)
        lev.gens = [g for g in gens if all(g[c] == c for c in base[:i])]
        lev.trans = {b: ident}
        lev.extend_orbit()
        levels.append(lev)

    i = len(levels) - 1
    while i >= 0:
        lev = levels[i]
        restart = None
        for beta in list(lev.trans):
            u_beta = lev.trans[beta]
            for s_idx, s in enumerate(lev.gens):
                key = (beta, s_idx)
                if key in lev.checked:
                    continue
                lev.checked.add(key)
                img = s[beta]
                h = _mul(_mul(u_beta, s), _inv(lev.trans[img]))
                if h == ident:
                    continue
                r, j = _sift(levels, h, i + 1)
                if r == ident:
                    continue
                if j == len(levels):
                    nl = _Level(_first_moved(r))
                    nl.trans = {nl.base: ident}
                    levels.append(nl)
                for l in range(i + 1, j + 1):
                    levels[l].gens.append(r)
                    levels[l].extend_orbit()
                restart = j
                break
            if restart is not None:
                break
        if restart is not None:
            i = restart
        else:
            i -= 1
    return levels


class PermGroup:
    """A permutation group given by generators; the stabilizer chain is built on demand.

    Base points are taken in a fixed order (an optional prefix, then the first
    moved point of each generator that fixes the base so far), so chains and
    reports are reproducible.
    """

    def __init__(self, degree: int, generators: Iterable[Permutation] = (), base_prefix: Sequence[int] = ()):
        self.degree = degree
        gens = []
        for g in generators:
            if g.degree != degree:
                raise ValueError(f"generator of degree {g.degree} in group of degree {degree}")
            gens.append(g)
        self.generators: tuple[Permutation, ...] = tuple(gens)
        self._base_prefix = tuple(base_prefix)
        self._levels: list[_Level] | None = None

    @property
    def chain(self) -> list[_Level]:
        if self._levels is None:
            self._levels = _schreier_sims(self.degree, [g.images for g in self.generators], self._base_prefix)
        return self._levels

    @property
    def base(self) -> list[int]:
        return [lev.base for lev in self.chain]

    def order(self) -> int:
        return math.prod(len(lev.trans) for lev in self.chain)

    def __len__(self):
        return self.order()

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise ValueError(f"degree mismatch: {p.degree} vs {self.degree}")
        r, j = _sift(self.chain, p.images)
        return j == len(self.chain) and r == tuple(range(self.degree))

    __contains__ = contains

    def orbit(self, point: int) -> list[int]:
        seen = {point}
        queue = [point]
        for x in queue:
            for g in self.generators:
                y = g.images[x]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return sorted(seen)

    def orbits(self) -> list[list[int]]:
        """Orbit partition, each orbit sorted, orbits ordered by least point."""
        out = []
        seen = set()
        for x in range(self.degree):
            if x not in seen:
                orb = self.orbit(x)
                seen.update(orb)
                out.append(orb)
        return out

    def is_transitive(self) -> bool:
        return len(self.orbits()) <= 1

    def is_semiregular(self) -> bool:
        n = self.order()
        return all(len(orb) == n for orb in self.orbits())

    def point_stabilizer(self, point: int) -> PermGroup:
        if not 0 <= point < self.degree:
            raise PreconditionError(f"point {point} out of range for degree {self.degree}")
        levels = _schreier_sims(self.degree, [g.images for g in self.generators], (point,))
        gens = levels[1].gens if len(levels) > 1 else []
        stab = PermGroup(self.degree, [Permutation._raw(g) for g in gens])
        stab._levels = levels[1:]
        return stab

    def elements(self) -> list[Permutation]:
        """Every element, by walking the transversals. Only for small groups."""
        elems = [tuple(range(self.degree))]
        for lev in reversed(self.chain):
            elems = [_mul(e, u) for u in lev.trans.values() for e in elems]
        return sorted(Permutation._raw(e) for e in elems)

    def random_element(self, rng) -> Permutation:
        e = tuple(range(self.degree))
        for lev in reversed(self.chain):
            u = lev.trans[rng.choice(sorted(lev.trans))]
            e = _mul(e, u)
        return Permutation._raw(e)

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, ngens={len(self.generators)})"


def group_order(G: PermGroup) -> int:
    return G.order()


def contains(G: PermGroup, p: Permutation) -> bool:
    return G.contains(p)


def orbits(G: PermGroup) -> list[list[int]]:
    return G.orbits()


def is_semiregular(G: PermGroup) -> bool:
    return G.is_semiregular()


def point_stabilizer(G: PermGroup, point: int) -> PermGroup:
    return G.point_stabilizer(point)


def is_normal_subgroup(H: PermGroup, G: PermGroup) -> bool:
    """Whether ``H`` is normal in ``G``; ``H`` must be a subgroup of ``G``.

    Conjugating each generator of ``H`` by each generator of ``G`` is enough.
    """
    if H.degree != G.degree:
        raise PreconditionError("degree mismatch")
    for h in H.generators:
        if not G.contains(h):
            raise PreconditionError(f"{h} is not in the larger group")
    for g in G.generators:
        g_inv = g.inverse()
        for h in H.generators:
            if not H.contains(g_inv * h * g):
                return False
    return True
