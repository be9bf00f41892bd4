"""Normality of one-matching semi-Cayley graphs over abelian groups.

For ``SC(G; R, L, {0})`` this module builds the translation group ``R_G``,
the side-preserving lifts ``X`` and side-swapping lifts ``Y`` of group
automorphisms, decides normality of ``R_G`` in the full automorphism group,
and matches a connection spec against the eight exceptional families of
non-normal graphs with ``|R|, |L| <= 2``.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Callable, Mapping, Sequence

from .abelian import AbelianGroup, Element, enumerate_automorphisms
from .autsearch import automorphism_group, is_arc_transitive, is_edge_transitive
from .errors import PreconditionError, SemiCayleyError
from .graphs import ConnectionSpec, Graph, build_sc_graph
from .perm import Permutation, PermGroup, is_normal_subgroup

# (n, k) pairs of the generalized Petersen family with non-normal SC realisations
EXCEPTIONAL_GP = ((5, 2), (8, 3), (10, 2), (10, 3), (12, 5), (24, 5))

NORMALIZER_ENUMERATION_LIMIT = 2000


class ConsistencyError(SemiCayleyError):
    """Two independent routes to the same quantity disagreed."""


def translation(spec: ConnectionSpec, g: Element) -> Permutation:
    """``rho_g``: ``(x, i) -> (x + g, i)`` on the SC vertex indexing."""
    G = spec.group
    n = G.order
    side = [G.index(G.add(x, g)) for x in G.elements]
    return Permutation(side + [n + i for i in side])


def build_RG(spec: ConnectionSpec) -> PermGroup:
    G = spec.group
    return PermGroup(2 * G.order, [translation(spec, e) for e in G.generators])


def _lift(table: Sequence[int], swap: bool) -> Permutation:
    n = len(table)
    if swap:
        return Permutation([n + t for t in table] + list(table))
    return Permutation(list(table) + [n + t for t in table])


def _image(G: AbelianGroup, table: Sequence[int], part) -> frozenset[Element]:
    return frozenset(G.elements[table[G.index(x)]] for x in part)


def _lifts(spec: ConnectionSpec, graph: Graph | None = None):
    G = spec.group
    graph = graph or build_sc_graph(spec)
    X, Y = [], []
    for sigma in enumerate_automorphisms(G):
        R_img = _image(G, sigma.table, spec.R)
        L_img = _image(G, sigma.table, spec.L)
        if R_img == spec.R and L_img == spec.L:
            X.append(_lift(sigma.table, swap=False))
        if R_img == spec.L and L_img == spec.R:
            Y.append(_lift(sigma.table, swap=True))
    for p in X + Y:
        if not graph.is_automorphism(p.images):
            raise ConsistencyError(f"lift {p} is not an automorphism of {spec}")
    return X, Y


def compute_X(spec: ConnectionSpec) -> list[Permutation]:
    """Lifts ``phi_sigma`` of automorphisms with ``R^sigma = R`` and ``L^sigma = L``."""
    return _lifts(spec)[0]


def compute_Y(spec: ConnectionSpec) -> list[Permutation]:
    """Lifts ``psi_sigma`` of automorphisms with ``R^sigma = L`` and ``L^sigma = R``."""
    return _lifts(spec)[1]


def aut_GRL(spec: ConnectionSpec) -> PermGroup:
    """The group ``X u Y``; raises if it is not closed."""
    X, Y = _lifts(spec)
    group = PermGroup(2 * spec.group.order, X + Y)
    if group.order() != len(X) + len(Y):
        raise ConsistencyError(f"X u Y has {len(X) + len(Y)} elements but generates {group.order()}")
    return group


def _require_theorem_hypotheses(spec: ConnectionSpec):
    if not spec.one_matching:
        raise PreconditionError(f"{spec} is not one-matching")
    if not spec.connected:
        raise PreconditionError(f"{spec} is disconnected")


def is_normal_sc(spec: ConnectionSpec, aut: PermGroup | None = None) -> bool:
    """Whether ``R_G`` is normal in ``Aut(SC(G; R, L, {0}))``.

    Decided by conjugating generators, then cross-checked against the order
    identity ``|Aut| = |G| * |X u Y|`` that holds exactly when ``R_G`` is normal.
    """
    _require_theorem_hypotheses(spec)
    graph = build_sc_graph(spec)
    aut = aut or automorphism_group(graph)
    normal = is_normal_subgroup(build_RG(spec), aut)
    X, Y = _lifts(spec, graph)
    by_order = aut.order() == spec.group.order * (len(X) + len(Y))
    if normal != by_order:
        raise ConsistencyError(
            f"{spec}: conjugation says normal={normal} but |Aut|={aut.order()}, "
            f"|G|*|X u Y|={spec.group.order * (len(X) + len(Y))}"
        )
    return normal


def normalizer_order(spec: ConnectionSpec, aut: PermGroup, limit: int = NORMALIZER_ENUMERATION_LIMIT):
    """Order of the normalizer of ``R_G`` in ``aut`` by listing ``aut``.

    Returns None when ``|aut|`` exceeds ``limit``.
    """
    if aut.order() > limit:
        return None
    RG = build_RG(spec)
    count = 0
    for a in aut.elements():
        a_inv = a.inverse()
        if all(RG.contains(a_inv * r * a) for r in RG.generators):
            count += 1
    return count


def is_color_preserving(G: AbelianGroup, a: Element, b: Element, sigma) -> bool:
    """Whether ``sigma`` maps ``x+a`` to ``sigma(x)+-a`` and ``x+b`` to ``sigma(x)+-b`` for every x.

    ``sigma`` may be a mapping on elements, a callable, or a table on element
    indices.
    """
    f = _as_function(G, sigma)
    for x in G.elements:
        fx = f(x)
        for s in (a, b):
            if f(G.add(x, s)) not in (G.add(fx, s), G.sub(fx, s)):
                return False
    return True


def _as_function(G: AbelianGroup, sigma) -> Callable[[Element], Element]:
    if isinstance(sigma, Mapping):
        return sigma.__getitem__
    if callable(sigma):
        return sigma
    table = list(sigma)
    return lambda x: G.elements[table[G.index(x)]]


def is_group_automorphism(G: AbelianGroup, sigma) -> bool:
    f = _as_function(G, sigma)
    if len({f(x) for x in G.elements}) != G.order:
        return False
    return all(f(G.add(x, y)) == G.add(f(x), f(y)) for x in G.elements for y in G.elements)


# --- exceptional families -------------------------------------------------


def _pair_generators(G: AbelianGroup, part) -> list[Element]:
    """Elements ``a`` with ``part == {a, -a}`` and ``a != -a``."""
    if len(part) != 2:
        return []
    out = []
    for a in sorted(part):
        if G.neg(a) in part and G.neg(a) != a:
            out.append(a)
    return out


def _is_direct(G: AbelianGroup, gens: Sequence[Element]) -> bool:
    """``G`` is the internal direct product of the cyclic groups ``<g>``."""
    prod = 1
    for g in gens:
        prod *= G.elem_order(g)
    return prod == G.order and len(G.generated_subgroup(gens)) == G.order


def _fmt(G, **elems) -> dict[str, str]:
    return {k: G.format_element(v) for k, v in elems.items()}


def _case1(G, R, L):
    if len(R) == 1 and len(L) == 1:
        (a,), (b,) = R, L
        return _fmt(G, a=a, b=b)


def _case2(G, R, L):
    if len(R) == 2 and len(L) == 2 and len(R & L) == 1:
        (b,) = R & L
        (a,) = R - L
        (c,) = L - R
        return _fmt(G, a=a, b=b, c=c)


def _case3(G, R, L):
    if R == L:
        for a in _pair_generators(G, R):
            if G.elem_order(a) == 4:
                return _fmt(G, a=a)


def _case4(G, R, L):
    if len(R) != 2 or any(G.elem_order(x) != 2 for x in R):
        return None
    a, b = sorted(R)
    for c in _pair_generators(G, L):
        if G.elem_order(c) == 4 and _is_direct(G, (a, b, c)):
            return _fmt(G, a=a, b=b, c=c)


def _involutions(G):
    return [x for x in G.elements if G.elem_order(x) == 2]


def _case5(G, R, L):
    for a in _pair_generators(G, R):
        if G.elem_order(a) != 4:
            continue
        for b in sorted(L):
            if G.elem_order(b) == 2 and L == {b, G.add(b, G.mul(2, a))} and _is_direct(G, (a, b)):
                return _fmt(G, a=a, b=b)


def _case6(G, R, L):
    for a in _pair_generators(G, R):
        n = G.elem_order(a)
        if n != G.order:
            continue
        for nn, k in EXCEPTIONAL_GP:
            if nn == n and L == {G.mul(k, a), G.mul(-k, a)}:
                return {**_fmt(G, a=a), "n": str(n), "k": str(k)}


def _case7(G, R, L):
    for a in _pair_generators(G, R):
        if G.elem_order(a) != 10:
            continue
        for b in _involutions(G):
            if not _is_direct(G, (a, b)):
                continue
            for m in (3, 2):
                if L == {G.add(G.mul(m, a), b), G.add(G.mul(-m, a), b)}:
                    return {**_fmt(G, a=a, b=b), "m": str(m)}


def _case8(G, R, L):
    for a in _pair_generators(G, R):
        if G.elem_order(a) != 4:
            continue
        for b in _involutions(G):
            if _is_direct(G, (a, b)) and L == {G.add(a, b), G.add(G.neg(a), b)}:
                return _fmt(G, a=a, b=b)


CASES = (_case1, _case2, _case3, _case4, _case5, _case6, _case7, _case8)


@dataclass(frozen=True)
class CaseMatch:
    """All exceptional families a spec falls into, with one witness per match."""

    cases: tuple[int, ...]
    witnesses: tuple[dict, ...] = field(default=(), compare=False)

    @property
    def case(self) -> int | None:
        return self.cases[0] if self.cases else None

    @property
    def label(self) -> str:
        return f"case{self.case}" if self.cases else "none"


def classify_theorem1(spec: ConnectionSpec) -> CaseMatch:
    """Match ``spec`` against the eight non-normal families, trying both orientations.

    Generators ``a, b, c`` are searched for inside ``G`` rather than read from
    the coordinates, so the match is independent of the presentation.
    """
    _require_theorem_hypotheses(spec)
    if len(spec.R) > 2 or len(spec.L) > 2:
        raise PreconditionError(f"{spec} has |R| or |L| above 2")
    G = spec.group
    cases, witnesses = [], []
    for number, pred in enumerate(CASES, start=1):
        for orient, (R, L) in (("R,L", (spec.R, spec.L)), ("L,R", (spec.L, spec.R))):
            w = pred(G, R, L)
            if w is not None:
                cases.append(number)
                witnesses.append({"case": number, "orientation": orient, **w})
                break
    return CaseMatch(tuple(cases), tuple(witnesses))


# --- verdicts -------------------------------------------------------------


@dataclass
class Verdict:
    group: str
    R: str
    L: str
    group_order: int
    connected: bool
    aut_order: int
    normal: bool
    vertex_transitive: bool
    edge_transitive: bool
    arc_transitive: bool
    x_size: int
    y_size: int
    stabilizer_order: int
    normalizer_order: int | None
    lifts_in_aut: bool
    theorem_case: str
    matched_cases: list[int]
    witness: dict | None
    error: str | None = None

    def to_dict(self) -> dict:
        return asdict(self)

    @property
    def discrepancy(self) -> bool:
        """Classifier and computed normality disagree (connected instances only)."""
        if not self.connected or self.error:
            return False
        return (self.theorem_case == "none") != self.normal


def evaluate(spec: ConnectionSpec, check_normalizer: bool = True) -> Verdict:
    """Compute every field of the :class:`Verdict` for one spec.

    Disconnected specs get automorphism data and a direct normality test but
    no classification, since the family list only covers connected graphs.
    """
    graph = build_sc_graph(spec)
    aut = automorphism_group(graph)
    X, Y = _lifts(spec, graph)
    n = spec.group.order
    if spec.connected:
        normal = is_normal_sc(spec, aut)
        match = classify_theorem1(spec) if max(len(spec.R), len(spec.L)) <= 2 else None
    else:
        normal = is_normal_subgroup(build_RG(spec), aut)
        match = None
    orbits = aut.orbits()
    vt = len(orbits) == 1
    if check_normalizer:
        norm_order = normalizer_order(spec, aut)
        if norm_order is not None and spec.connected and norm_order != n * (len(X) + len(Y)):
            raise ConsistencyError(f"{spec}: |N(R_G)|={norm_order} but |G|*|X u Y|={n * (len(X) + len(Y))}")
    else:
        norm_order = None
    return Verdict(
        group=spec.group.name,
        R=spec.format_set(spec.R),
        L=spec.format_set(spec.L),
        group_order=n,
        connected=spec.connected,
        aut_order=aut.order(),
        normal=normal,
        vertex_transitive=vt,
        edge_transitive=is_edge_transitive(graph, aut),
        arc_transitive=is_arc_transitive(graph, aut),
        x_size=len(X),
        y_size=len(Y),
        stabilizer_order=aut.point_stabilizer(0).order(),
        normalizer_order=norm_order,
        lifts_in_aut=all(aut.contains(p) for p in X + Y),
        theorem_case=match.label if match else ("none" if spec.connected else "n/a"),
        matched_cases=list(match.cases) if match else [],
        witness=match.witnesses[0] if match and match.cases else None,
    )
