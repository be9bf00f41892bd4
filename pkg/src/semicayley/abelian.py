"""Finite abelian groups as explicit direct products of cyclic groups.

Elements are tuples of residues, one coordinate per stored factor, written
additively. The stored factor order is kept as given so that named generators
such as ``a=(1,0)``, ``b=(0,1)`` in ``Z4xZ2`` line up with the factors; the
invariant-factor form is only used to decide isomorphism.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .errors import InvalidElementError, InvalidGroupError, ResourceLimitError

Element = tuple[int, ...]

DEFAULT_AUT_CAP = 100_000


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def invariant_factors(factors: Iterable[int]) -> tuple[int, ...]:
    """Invariant factors ``(d1, ..., dr)`` with ``d1 | d2 | ... | dr``."""
    by_prime: dict[int, list[int]] = {}
    for f in factors:
        for p, k in _factorize(f).items():
            by_prime.setdefault(p, []).append(p**k)
    width = max((len(v) for v in by_prime.values()), default=0)
    out = [1] * width
    for powers in by_prime.values():
        powers.sort(reverse=True)
        for i, q in enumerate(powers):
            out[width - 1 - i] *= q
    return tuple(out)


@dataclass(frozen=True, eq=False)
class AbelianGroup:
    """``Z_{n1} x ... x Z_{nr}`` with elements stored as coordinate tuples.

    Equality and hashing follow the invariant-factor form, so ``Z4xZ2`` and
    ``Z2xZ4`` compare equal even though their coordinates differ.
    """

    factors: tuple[int, ...]

    def __post_init__(self):
        for f in self.factors:
            if not isinstance(f, int) or f < 2:
                raise InvalidGroupError(f"cyclic factor must be an integer >= 2, got {f!r}")

    @property
    def order(self) -> int:
        return math.prod(self.factors)

    @property
    def rank(self) -> int:
        return len(self.factors)

    @cached_property
    def canonical(self) -> tuple[int, ...]:
        return invariant_factors(self.factors)

    def __eq__(self, other):
        if not isinstance(other, AbelianGroup):
            return NotImplemented
        return self.canonical == other.canonical

    def __hash__(self):
        return hash(self.canonical)

    @property
    def name(self) -> str:
        if not self.factors:
            return "Z1"
        return "x".join(f"Z{f}" for f in self.factors)

    def __repr__(self):
        return f"AbelianGroup({self.name})"

    @cached_property
    def elements(self) -> tuple[Element, ...]:
        """All elements in lexicographic coordinate order."""
        return tuple(itertools.product(*(range(f) for f in self.factors)))

    def index(self, x: Element) -> int:
        """Position of ``x`` in :attr:`elements` (mixed-radix value)."""
        idx = 0
        for c, f in zip(x, self.factors):
            idx = idx * f + c
        return idx

    @property
    def identity(self) -> Element:
        return (0,) * self.rank

    @property
    def generators(self) -> tuple[Element, ...]:
        """Standard generators, one per factor."""
        return tuple(
            tuple(1 if j == i else 0 for j in range(self.rank)) for i in range(self.rank)
        )

    def check(self, x: Sequence[int]) -> Element:
        x = tuple(x)
        if len(x) != self.rank:
            raise InvalidElementError(f"{x} has {len(x)} coordinates, {self.name} needs {self.rank}")
        for c, f in zip(x, self.factors):
            if not isinstance(c, int) or not 0 <= c < f:
                raise InvalidElementError(f"{x} is not an element of {self.name}")
        return x

    def add(self, x: Element, y: Element) -> Element:
        return tuple((a + b) % f for a, b, f in zip(x, y, self.factors))

    def neg(self, x: Element) -> Element:
        return tuple((-a) % f for a, f in zip(x, self.factors))

    def sub(self, x: Element, y: Element) -> Element:
        return tuple((a - b) % f for a, b, f in zip(x, y, self.factors))

    def mul(self, k: int, x: Element) -> Element:
        return tuple((k * a) % f for a, f in zip(x, self.factors))

    def elem_order(self, x: Element) -> int:
        x = self.check(x)
        o = 1
        for c, f in zip(x, self.factors):
            o = math.lcm(o, f // math.gcd(c, f))
        return o

    def generated_subgroup(self, gens: Iterable[Element]) -> frozenset[Element]:
        """Element set of the subgroup generated by ``gens``."""
        gens = [self.check(g) for g in gens]
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.add(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(seen)

    def format_element(self, x: Element) -> str:
        return "(" + ",".join(str(c) for c in x) + ")"


def make_group(factors: Sequence[int]) -> AbelianGroup:
    """Build ``Z_{f1} x ... x Z_{fr}``; factors keep the given order."""
    factors = tuple(factors)
    for f in factors:
        if not isinstance(f, int) or isinstance(f, bool) or f < 2:
            raise InvalidGroupError(f"cyclic factor must be an integer >= 2, got {f!r}")
    return AbelianGroup(factors)


# Convenience module-level wrappers mirroring the group methods.
def elem_add(G: AbelianGroup, x: Element, y: Element) -> Element:
    return G.add(G.check(x), G.check(y))


def elem_neg(G: AbelianGroup, x: Element) -> Element:
    return G.neg(G.check(x))


def elem_order(G: AbelianGroup, x: Element) -> int:
    return G.elem_order(x)


def generated_subgroup(G: AbelianGroup, gens: Iterable[Element]) -> frozenset[Element]:
    return G.generated_subgroup(gens)


@dataclass(frozen=True)
class GroupAutomorphism:
    """An automorphism given by the images of the standard generators."""

    group: AbelianGroup
    images: tuple[Element, ...]
    _table: tuple[int, ...] | None = field(default=None, repr=False, compare=False)

    def __call__(self, x: Element) -> Element:
        G = self.group
        out = G.identity
        for c, img in zip(x, self.images):
            out = G.add(out, G.mul(c, img))
        return out

    @cached_property
    def table(self) -> tuple[int, ...]:
        """Action on element indices: ``table[i]`` is the index of ``sigma(elements[i])``."""
        if self._table is not None:
            return self._table
        G = self.group
        return tuple(G.index(self(x)) for x in G.elements)


def enumerate_automorphisms(G: AbelianGroup, cap: int = DEFAULT_AUT_CAP) -> list[GroupAutomorphism]:
    """All automorphisms of ``G``, in lexicographic order of generator images.

    Backtracks over images of the standard generators. A generator of order
    ``n_i`` must go to an element of order exactly ``n_i``, and each partial
    assignment must be injective on the subgroup generated so far. ``cap``
    bounds the number of partial assignments alive at any layer. Every result
    is checked to be a bijection.
    """
    return [
        GroupAutomorphism(G, tuple(G.elements[i] for i in images), _table=table)
        for images, table in _automorphism_tables(G.factors, cap)
    ]


@lru_cache(maxsize=64)
def _automorphism_tables(factors: tuple[int, ...], cap: int):
    G = AbelianGroup(factors)
    elems = G.elements
    size = G.order
    add = [[G.index(G.add(x, y)) for y in elems] for x in elems]
    order = [G.elem_order(x) for x in elems]

    def multiples(g: int, n: int) -> list[int]:
        out = [0]
        for _ in range(n - 1):
            out.append(add[out[-1]][g])
        return out

    # a partial assignment carries the image list of <e_1..e_i> in lex order
    layer: list[tuple[tuple[int, ...], list[int]]] = [((), [0])]
    for n_i in factors:
        cands = [g for g in range(size) if order[g] == n_i]
        nxt = []
        for images, span in layer:
            span_set = set(span)
            for g in cands:
                mult = multiples(g, n_i)
                if any(m in span_set for m in mult[1:]):
                    continue
                # <span> and <g> meet trivially, so the sum has full size
                new_span = [add[p][m] for p in span for m in mult]
                nxt.append((images + (g,), new_span))
                if len(nxt) > cap:
                    raise ResourceLimitError(
                        f"automorphism enumeration of {G.name} exceeds {cap} partial assignments"
                    )
        layer = nxt

    out = []
    for images, table in layer:
        if len(set(table)) != size:
            raise AssertionError(f"non-bijective automorphism candidate {images} in {G.name}")
        out.append((images, tuple(table)))
    return tuple(out)


def _partitions(k: int) -> list[tuple[int, ...]]:
    """Integer partitions of ``k`` in descending-part form, largest first."""
    out = []

    def rec(rest, cap, acc):
        if rest == 0:
            out.append(tuple(acc))
            return
        for part in range(min(rest, cap), 0, -1):
            rec(rest - part, part, acc + [part])

    rec(k, k, [])
    return out


def enumerate_abelian_groups(n: int) -> list[AbelianGroup]:
    """One group per isomorphism class of abelian groups of order ``n``.

    Each group is returned with its invariant factors in descending order
    (``Z4xZ2`` rather than ``Z2xZ4``), cyclic group first.
    """
    if n < 1:
        raise InvalidGroupError(f"group order must be >= 1, got {n}")
    primes = sorted(_factorize(n).items())
    choices = [[[p**e for e in part] for part in _partitions(k)] for p, k in primes]
    groups = []
    for combo in itertools.product(*choices):
        factors = [f for powers in combo for f in powers]
        inv = invariant_factors(factors)
        groups.append(AbelianGroup(tuple(sorted(inv, reverse=True))))
    groups.sort(key=lambda g: (len(g.factors), tuple(-f for f in g.factors)))
    return groups
