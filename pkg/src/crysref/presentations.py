"""Finite presentations for the crystallographic reflection families.

Covers the reflection presentations of the two non-genuine families
(types A and C, with the x-relation and extra order relation), the
genuine families encoded as diagram data, and the braid presentations of
the relevant configuration spaces.  Relators are stored explicitly as
words; the diagram is metadata, never the source of truth.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Optional, Sequence

from .snf import smith_normal_form
from .words import Word, parse_word


class Lace(Enum):
    NONE = "none"
    SIMPLE = "simple"      # braid relation sts = tst
    DOUBLE = "double"      # quartic stst = tsts
    TRIPLE = "triple"      # sextic ststst = tststs
    X = "x"                # the exchange relation of the non-genuine families
    INFINITY = "infinity"  # drawn edge, no relation

    @property
    def braid_length(self) -> int | None:
        return {Lace.SIMPLE: 3, Lace.DOUBLE: 4, Lace.TRIPLE: 6}.get(self)


@dataclass(frozen=True)
class CoxeterLikeDiagram:
    nodes: tuple[tuple[str, int | None], ...]      # (name, order label)
    edges: tuple[tuple[int, int, Lace], ...]       # 0-based node pairs

    def __post_init__(self) -> None:
        x_count = sum(1 for _, _, l in self.edges if l is Lace.X)
        if x_count > 1:
            raise ValueError("at most one x-lace per diagram")


@dataclass(frozen=True)
class Presentation:
    generator_names: tuple[str, ...]
    generator_orders: tuple[int | None, ...]       # None = infinite
    relators: tuple[Word, ...]
    extra_order_relation: Optional[tuple[Word, int]] = None
    diagram: Optional[CoxeterLikeDiagram] = None
    x_relator_index: Optional[int] = None

    def __post_init__(self) -> None:
        k = len(self.generator_names)
        if len(self.generator_orders) != k:
            raise ValueError("orders/names length mismatch")
        for r in self.relators:
            if r.max_index() >= k:
                raise ValueError(f"relator {r!r} uses undeclared generator")

    @property
    def num_generators(self) -> int:
        return len(self.generator_names)

    def word(self, text: str) -> Word:
        return parse_word(text, self.generator_names)


# ---------------------------------------------------------------------
# relator building blocks


def braid_relator(i: int, j: int, m: int) -> Word:
    """prod(i,j; m) * prod(j,i; m)^-1, the length-m braid relation."""
    lhs = [(i, 1) if k % 2 == 0 else (j, 1) for k in range(m)]
    rhs = [(j, 1) if k % 2 == 0 else (i, 1) for k in range(m)]
    return Word(lhs) * Word(rhs).inverse()


def comm_relator(i: int, j: int) -> Word:
    return Word([(i, 1), (j, 1), (i, -1), (j, -1)])


def power_relator(i: int, e: int) -> Word:
    return Word([(i, 1)] * e)


# ---------------------------------------------------------------------
# non-genuine reflection presentations

GROUP_FAMILIES = (
    "A_alpha", "C_alpha",
    "G311", "G411", "G412", "G421", "G422", "G611", "G621", "G631",
)


class RankOutOfRange(ValueError):
    pass


class UnsupportedFamily(ValueError):
    pass


def _a1_presentation() -> Presentation:
    names = ("s1", "s2", "s3")
    rels = [power_relator(i, 2) for i in range(3)]
    base = Word([(0, 1), (1, 1), (2, 1)])
    rels.append(base ** 2)
    diagram = CoxeterLikeDiagram(
        nodes=tuple((n, 2) for n in names),
        edges=((0, 1, Lace.INFINITY), (0, 2, Lace.INFINITY), (1, 2, Lace.INFINITY)),
    )
    return Presentation(names, (2, 2, 2), tuple(rels), (base, 2), diagram)


def _c_presentation(n: int) -> Presentation:
    if n == 1:
        return _a1_presentation()
    k = n + 2
    names = tuple(f"s{i}" for i in range(1, k + 1))
    rels: list[Word] = [power_relator(i, 2) for i in range(k)]
    edges: list[tuple[int, int, Lace]] = []
    # chain s2 .. sn (0-based 1..n-1): simple laces
    for i in range(1, n - 1):
        rels.append(braid_relator(i, i + 1, 3))
        edges.append((i, i + 1, Lace.SIMPLE))
    # quartic laces s1=s2, sn=s(n+1), sn=s(n+2)
    for i, j in ((0, 1), (n - 1, n), (n - 1, n + 1)):
        rels.append(braid_relator(i, j, 4))
        edges.append((i, j, Lace.DOUBLE))
    # commutations inside the chain
    for i in range(n):
        for j in range(i + 2, n):
            rels.append(comm_relator(i, j))
    # the two affine generators commute with s1 .. s(n-1)
    for extra in (n, n + 1):
        for j in range(n - 1):
            rels.append(comm_relator(extra, j))
    # x-relation: sn s(n+1) sn^-1 s(n+2) = s(n+2) sn s(n+1) sn^-1
    a, b, c = n - 1, n, n + 1
    w1 = Word([(a, 1), (b, 1), (a, -1), (c, 1)])
    w2 = Word([(c, 1), (a, 1), (b, 1), (a, -1)])
    x_index = len(rels)
    rels.append(w1 * w2.inverse())
    edges.append((n, n + 1, Lace.X))
    # extra order relation (s1 ... s(n+2) sn ... s2)^2
    base = Word([(i, 1) for i in range(k)] + [(i, 1) for i in range(n - 1, 0, -1)])
    rels.append(base ** 2)
    diagram = CoxeterLikeDiagram(tuple((nm, 2) for nm in names), tuple(edges))
    return Presentation(names, (2,) * k, tuple(rels), (base, 2), diagram, x_index)


def _a_presentation(n: int) -> Presentation:
    if n == 2:
        return _a1_presentation()
    k = n + 1
    names = tuple(f"s{i}" for i in range(1, k + 1))
    rels: list[Word] = [power_relator(i, 2) for i in range(k)]
    edges: list[tuple[int, int, Lace]] = []
    # chain s1 .. s(n-1)
    for i in range(n - 2):
        rels.append(braid_relator(i, i + 1, 3))
        edges.append((i, i + 1, Lace.SIMPLE))
    for i in range(n - 1):
        for j in range(i + 2, n - 1):
            rels.append(comm_relator(i, j))
    # both affine generators braid with the chain ends, commute with the rest
    for extra in (n - 1, n):
        for j in (0, n - 2):
            rels.append(braid_relator(extra, j, 3))
            edges.append((min(extra, j), max(extra, j), Lace.SIMPLE))
        for j in range(1, n - 3 + 1):
            rels.append(comm_relator(extra, j))
    # x-relation: s(n+1) s(n-1) ... s1 sn s1^-1
    #           = s(n-1) sn^-1 s(n-1)^-1 ... s1^-1 s(n+1)^-1
    lhs = Word(
        [(n, 1)] + [(i, 1) for i in range(n - 2, -1, -1)] + [(n - 1, 1), (0, -1)]
    )
    rhs = Word(
        [(n - 2, 1), (n - 1, -1)]
        + [(i, -1) for i in range(n - 2, -1, -1)]
        + [(n, -1)]
    )
    x_index = len(rels)
    rels.append(lhs * rhs.inverse())
    edges.append((n - 1, n, Lace.X))
    # extra order relation (s1 ... s(n+1) s(n-1) ... s2)^2
    base = Word([(i, 1) for i in range(k)] + [(i, 1) for i in range(n - 2, 0, -1)])
    rels.append(base ** 2)
    diagram = CoxeterLikeDiagram(tuple((nm, 2) for nm in names), tuple(edges))
    return Presentation(names, (2,) * k, tuple(rels), (base, 2), diagram, x_index)


# ---------------------------------------------------------------------
# genuine families (diagram data; matrix representations exist only for
# the d-cyclic label-1 towers)

# per family: order of the first node, order of the top affine node, and
# the exponent of the extra order relation
_G_D1N = {"G311": (3, 3, 3), "G411": (4, 4, 4), "G611": (6, 2, 6)}


def _g_d1n_presentation(family: str, n: int) -> Presentation:
    d0, dtop, e = _G_D1N[family]
    k = n + 1
    names = tuple(f"s{i}" for i in range(1, k + 1))
    orders = (d0,) + (2,) * (n - 1) + (dtop,)
    rels: list[Word] = [power_relator(i, o) for i, o in enumerate(orders)]
    edges: list[tuple[int, int, Lace]] = []
    if n == 1:
        edges.append((0, 1, Lace.INFINITY))
    else:
        rels.append(braid_relator(0, 1, 4))
        edges.append((0, 1, Lace.DOUBLE))
        for i in range(1, n - 1):
            rels.append(braid_relator(i, i + 1, 3))
            edges.append((i, i + 1, Lace.SIMPLE))
        rels.append(braid_relator(n - 1, n, 4))
        edges.append((n - 1, n, Lace.DOUBLE))
        for i in range(k):
            for j in range(i + 2, k):
                rels.append(comm_relator(i, j))
    # extra order relation (s1 ... s(n+1) sn ... s2)^e
    base = Word([(i, 1) for i in range(k)] + [(i, 1) for i in range(n - 1, 0, -1)])
    rels.append(base ** e)
    diagram = CoxeterLikeDiagram(
        tuple(zip(names, orders)), tuple(edges)
    )
    return Presentation(names, orders, tuple(rels), (base, e), diagram)


def _chain_with_tail_pair(
    names: Sequence[str],
    orders: Sequence[int],
    chain_end: int,
    tail: tuple[int, int],
    tail_lace: Lace,
    head_lace: Lace,
    base: Word,
    e: int,
) -> Presentation:
    """Chain s1..s_chain_end with a pair of extra nodes hanging off its end."""
    rels: list[Word] = [power_relator(i, o) for i, o in enumerate(orders)]
    edges: list[tuple[int, int, Lace]] = []
    if head_lace.braid_length and chain_end >= 2:
        rels.append(braid_relator(0, 1, head_lace.braid_length))
        edges.append((0, 1, head_lace))
    for i in range(1, chain_end - 1):
        rels.append(braid_relator(i, i + 1, 3))
        edges.append((i, i + 1, Lace.SIMPLE))
    for t in tail:
        rels.append(braid_relator(chain_end - 1, t, tail_lace.braid_length or 3))
        edges.append((chain_end - 1, t, tail_lace))
    k = len(names)
    attached = {frozenset((i, j)) for i, j, _ in edges}
    for i in range(k):
        for j in range(i + 1, k):
            if frozenset((i, j)) not in attached:
                rels.append(comm_relator(i, j))
    rels.append(base ** e)
    diagram = CoxeterLikeDiagram(tuple(zip(names, orders)), tuple(edges))
    return Presentation(tuple(names), tuple(orders), tuple(rels), (base, e), diagram)


def _updown_base(k: int, down_to: int, skip: int | None = None) -> Word:
    """s1 .. sk then back down to s_{down_to} (1-based), optionally
    skipping one ascending index."""
    asc = [i for i in range(k) if i != skip]
    desc = list(range(k - 2, down_to - 2, -1))
    return Word([(i, 1) for i in asc] + [(i, 1) for i in desc])


def _g412_presentation(n: int) -> Presentation:
    if n < 2:
        raise RankOutOfRange("[G(4,1,n)]_2 needs n >= 2")
    if n == 2:
        names = ("s1", "s2", "s3")
        orders = (4, 2, 2)
        base = Word([(0, 1), (1, 1), (2, 1)])
        return _chain_with_tail_pair(
            names, orders, 1, (1, 2), Lace.DOUBLE, Lace.DOUBLE, base, 4
        )
    k = n + 1
    names = tuple(f"s{i}" for i in range(1, k + 1))
    orders = (4,) + (2,) * n
    # (s1 ... s(n+1) s(n-1) ... s2)^4
    base = Word(
        [(i, 1) for i in range(k)] + [(i, 1) for i in range(n - 2, 0, -1)]
    )
    return _chain_with_tail_pair(
        names, orders, n - 1, (n - 1, n), Lace.DOUBLE, Lace.DOUBLE, base, 4
    )


def _g421_presentation(n: int) -> Presentation:
    if n < 2:
        raise RankOutOfRange("[G(4,2,n)]_1 needs n >= 2")
    if n == 2:
        # the exceptional star on five involutions
        names = tuple(f"s{i}" for i in range(1, 6))
        orders = (2,) * 5
        rels: list[Word] = [power_relator(i, 2) for i in range(5)]
        edges: list[tuple[int, int, Lace]] = []
        for leaf in (0, 2, 3, 4):
            rels.append(braid_relator(1, leaf, 3))
            edges.append((min(1, leaf), max(1, leaf), Lace.SIMPLE))
        for i, j in ((0, 2), (0, 3), (0, 4), (2, 3), (2, 4), (3, 4)):
            rels.append(comm_relator(i, j))
        base = Word([(1, 1), (0, 1), (2, 1), (3, 1), (4, 1)])
        rels.append(base ** 2)
        diagram = CoxeterLikeDiagram(tuple(zip(names, orders)), tuple(edges))
        return Presentation(names, orders, tuple(rels), (base, 2), diagram)
    if n == 3:
        names = tuple(f"s{i}" for i in range(1, 6))
        orders = (2,) * 5
        rels = [power_relator(i, 2) for i in range(5)]
        edges = [(0, 1, Lace.SIMPLE), (1, 2, Lace.SIMPLE), (0, 2, Lace.SIMPLE)]
        for i, j, _ in edges:
            rels.append(braid_relator(i, j, 3))
        for t in (3, 4):
            rels.append(braid_relator(2, t, 4))
            edges.append((2, t, Lace.DOUBLE))
        for i, j in ((0, 3), (0, 4), (1, 3), (1, 4), (3, 4)):
            rels.append(comm_relator(i, j))
        base = Word([(i, 1) for i in range(5)])
        rels.append(base ** 4)
        diagram = CoxeterLikeDiagram(tuple(zip(names, orders)), tuple(edges))
        return Presentation(names, orders, tuple(rels), (base, 4), diagram)
    k = n + 2
    names = tuple(f"s{i}" for i in range(1, k + 1))
    orders = (2,) * k
    rels = [power_relator(i, 2) for i in range(k)]
    edges = [(0, 1, Lace.SIMPLE), (1, 2, Lace.SIMPLE), (0, 2, Lace.SIMPLE)]
    for i, j, _ in edges:
        rels.append(braid_relator(i, j, 3))
    for i in range(2, n - 1):
        rels.append(braid_relator(i, i + 1, 3))
        edges.append((i, i + 1, Lace.SIMPLE))
    for t in (n, n + 1):
        rels.append(braid_relator(n - 1, t, 4))
        edges.append((n - 1, t, Lace.DOUBLE))
    attached = {frozenset((i, j)) for i, j, _ in edges}
    for i in range(k):
        for j in range(i + 1, k):
            if frozenset((i, j)) not in attached:
                rels.append(comm_relator(i, j))
    # (s1 ... s(n+2) sn ... s4)^4
    base = Word(
        [(i, 1) for i in range(k)] + [(i, 1) for i in range(n - 1, 2, -1)]
    )
    rels.append(base ** 4)
    diagram = CoxeterLikeDiagram(tuple(zip(names, orders)), tuple(edges))
    return Presentation(names, orders, tuple(rels), (base, 4), diagram)


def _g422_presentation(n: int) -> Presentation:
    if n == 2:
        names = tuple(f"s{i}" for i in range(1, 5))
        orders = (2,) * 4
        base = Word([(i, 1) for i in range(4)])
        return _chain_with_tail_pair(
            names, orders, 2, (2, 3), Lace.DOUBLE, Lace.SIMPLE, base, 4
        )
    if n < 4:
        raise RankOutOfRange("[G(4,2,n)]_2 is encoded for n = 2 and n >= 4")
    k = n + 2
    names = tuple(f"s{i}" for i in range(1, k + 1))
    orders = (2,) * k
    # (s1 ... s(n+2) s(n+1) ... s4)^4
    base = Word(
        [(i, 1) for i in range(k)] + [(i, 1) for i in range(k - 2, 2, -1)]
    )
    return _chain_with_tail_pair(
        names, orders, n, (n, n + 1), Lace.DOUBLE, Lace.SIMPLE, base, 4
    )


def _g621_presentation(n: int) -> Presentation:
    if n < 2:
        raise RankOutOfRange("[G(6,2,n)] needs n >= 2")
    if n == 2:
        names = ("s1", "s2", "s3")
        orders = (3, 2, 2)
        base = Word([(0, 1), (1, 1), (2, 1)])
        return _chain_with_tail_pair(
            names, orders, 1, (1, 2), Lace.DOUBLE, Lace.DOUBLE, base, 6
        )
    k = n + 1
    names = tuple(f"s{i}" for i in range(1, k + 1))
    orders = (3,) + (2,) * n
    base = Word(
        [(i, 1) for i in range(k)] + [(i, 1) for i in range(n - 2, 0, -1)]
    )
    return _chain_with_tail_pair(
        names, orders, n - 1, (n - 1, n), Lace.DOUBLE, Lace.DOUBLE, base, 6
    )


def _g631_presentation(n: int) -> Presentation:
    if n < 2:
        raise RankOutOfRange("[G(6,3,n)] needs n >= 2")
    k = n + 2
    names = tuple(f"s{i}" for i in range(1, k + 1))
    orders = (2,) * k
    # (s2 ... s(n+2) s(n+1) ... s4)^6
    asc = [(i, 1) for i in range(1, k)]
    desc = [(i, 1) for i in range(k - 2, 2, -1)]
    base = Word(asc + desc)
    return _chain_with_tail_pair(
        names, orders, n, (n, n + 1), Lace.DOUBLE, Lace.SIMPLE, base, 6
    )


def build_group_presentation(family: str, n: int) -> Presentation:
    """Reflection presentation of the given family at rank n."""
    if n < 1:
        raise RankOutOfRange(f"rank must be positive, got {n}")
    if family == "C_alpha":
        return _c_presentation(n)
    if family == "A_alpha":
        if n < 2:
            raise RankOutOfRange("type A needs n >= 2")
        return _a_presentation(n)
    if family in _G_D1N:
        return _g_d1n_presentation(family, n)
    if family == "G412":
        return _g412_presentation(n)
    if family == "G421":
        return _g421_presentation(n)
    if family == "G422":
        return _g422_presentation(n)
    if family == "G621":
        return _g621_presentation(n)
    if family == "G631":
        return _g631_presentation(n)
    raise UnsupportedFamily(family)


# ---------------------------------------------------------------------
# braid presentations of the configuration spaces

BRAID_SPACES = ("PuncturedSphere4", "TorusSpecial", "FreeRank3")


def punctured_sphere_braid(holes: int, n: int) -> Presentation:
    """Surface braid group of n points on the sphere with the given number
    of punctures, with the closedness relation."""
    if n < 1:
        raise RankOutOfRange("need n >= 1 strands")
    m = holes
    names = tuple(f"u{i}" for i in range(1, m + 1)) + tuple(
        f"t{i}" for i in range(1, n)
    )
    k = len(names)
    u = list(range(m))
    t = list(range(m, k))
    rels: list[Word] = []
    # closedness: u1 ... um t1 ... t(n-1) t(n-1) ... t1 = 1
    rels.append(Word([(i, 1) for i in u] + [(i, 1) for i in t] + [(i, 1) for i in reversed(t)]))
    for a in range(n - 1):
        for b in range(a + 2, n - 1):
            rels.append(comm_relator(t[a], t[b]))
    for a in range(n - 2):
        rels.append(braid_relator(t[a], t[a + 1], 3))
    for ui in u:
        for b in range(1, n - 1):
            rels.append(comm_relator(ui, t[b]))
        if n >= 2:
            rels.append(braid_relator(ui, t[0], 4))
    if n >= 2:
        for a in range(m):
            for b in range(a + 1, m):
                # u_a t1^-1 u_b t1 = t1^-1 u_b t1 u_a
                conj = Word([(t[0], -1), (u[b], 1), (t[0], 1)])
                lhs = Word([(u[a], 1)]) * conj
                rhs = conj * Word([(u[a], 1)])
                rels.append(lhs * rhs.inverse())
    return Presentation(names, (None,) * k, tuple(rels))


def special_torus_braid(n: int) -> Presentation:
    """Braid group of special unordered configurations of n points on the
    torus (product of the points is the unit)."""
    if n < 2:
        raise RankOutOfRange("the toric presentation needs n >= 2")
    names = tuple(f"r{i}" for i in range(n)) + tuple(f"t{i}" for i in range(1, n))
    k = len(names)
    r = list(range(n))
    t = list(range(n, k))
    rels: list[Word] = []
    for a in range(n):
        for b in range(a + 1, n):
            if (a - b) % n in (1, n - 1):
                rels.append(braid_relator(r[a], r[b], 3))
            else:
                rels.append(comm_relator(r[a], r[b]))
    for a in range(n - 1):
        for b in range(a + 1, n - 1):
            rels.append(comm_relator(t[a], t[b]))
    # r_i vs t_j: no relation when j = i (the deleted same-index
    # pushrelations); commutation unless j = i ± 1 mod n
    for a in range(n):
        for b in range(1, n):
            if (a - b) % n in (0, 1, n - 1):
                continue
            rels.append(comm_relator(r[a], t[b - 1]))
    # pushrelations r_i t_(i+1) r_i = r_(i+1) t_i r_(i+1) = t_i t_(i+1)
    for i in range(1, n - 1):
        tt = Word([(t[i - 1], 1), (t[i], 1)])
        rels.append(Word([(r[i], 1), (t[i], 1), (r[i], 1)]) * tt.inverse())
        rels.append(Word([(r[i + 1], 1), (t[i - 1], 1), (r[i + 1], 1)]) * tt.inverse())
    # special pushrelations r0 t_i r0 = t_i (t1 ... t(n-1))^-1, i = 1, n-1
    tprod = Word([(j, 1) for j in t])
    for i in {1, n - 1}:
        lhs = Word([(r[0], 1), (t[i - 1], 1), (r[0], 1)])
        rhs = Word([(t[i - 1], 1)]) * tprod.inverse()
        rels.append(lhs * rhs.inverse())
    return Presentation(names, (None,) * k, tuple(rels))


def build_braid_presentation(space: str, n: int) -> Presentation:
    if space == "PuncturedSphere4":
        if n < 2:
            raise RankOutOfRange("the four-punctured sphere space needs n >= 2")
        return punctured_sphere_braid(4, n)
    if space == "TorusSpecial":
        if n < 2:
            raise RankOutOfRange("the toric space needs n >= 2")
        return special_torus_braid(n)
    if space == "FreeRank3":
        if n != 1:
            raise RankOutOfRange("the free rank-3 case is the n = 1 braid group")
        return Presentation(("u1", "u2", "u3"), (None,) * 3, ())
    raise UnsupportedFamily(space)


# ---------------------------------------------------------------------
# Artin groups, abelianization, rendering


def _is_order_relator(w: Word) -> bool:
    ls = w.cyclic_reduce().letters
    return bool(ls) and all((g, e) == ls[0] for g, e in ls)


def artinize(p: Presentation) -> Presentation:
    """Delete all order relations (including the extra one) and forget
    finite orders; braid, commutation and x relators survive unchanged."""
    extra = p.extra_order_relation
    expanded = None if extra is None else (extra[0] ** extra[1]).cyclic_normal_form()
    kept = []
    x_index = None
    for i, r in enumerate(p.relators):
        if _is_order_relator(r):
            continue
        if expanded is not None and r.cyclic_normal_form() == expanded:
            continue
        if i == p.x_relator_index:
            x_index = len(kept)
        kept.append(r)
    diagram = p.diagram
    if diagram is not None:
        diagram = replace(
            diagram, nodes=tuple((nm, None) for nm, _ in diagram.nodes)
        )
    return Presentation(
        p.generator_names, (None,) * p.num_generators, tuple(kept), None,
        diagram, x_index
    )


def abelianize(p: Presentation) -> list[int]:
    """Elementary divisors of the relator exponent-sum matrix.

    Divisors different from 1 in divisibility order, with a trailing 0
    per free factor.
    """
    k = p.num_generators
    rows = [r.exponent_sums(k) for r in p.relators]
    if not rows:
        return [0] * k
    diag = smith_normal_form(rows, k)
    finite = [d for d in diag if d not in (0, 1)]
    zeros = [0] * (k - sum(1 for d in diag if d != 0))
    return finite + zeros


_LACE_STYLE = {
    Lace.SIMPLE: ("", ""),
    Lace.DOUBLE: ('label="4"', ""),
    Lace.TRIPLE: ('label="6"', ""),
    Lace.X: ('label="x"', "style=dashed"),
    Lace.INFINITY: ('label="∞"', "style=dotted"),
    Lace.NONE: ("", "style=invis"),
}


def diagram_to_dot(d: CoxeterLikeDiagram) -> str:
    lines = ["graph coxeterlike {"]
    for name, order in d.nodes:
        label = name if order in (None, 2) else f"{name} ({order})"
        lines.append(f'  "{name}" [label="{label}"];')
    for i, j, lace in sorted(d.edges, key=lambda e: (e[0], e[1])):
        a, b = d.nodes[i][0], d.nodes[j][0]
        attrs = " ".join(x for x in _LACE_STYLE[lace] if x)
        lines.append(f'  "{a}" -- "{b}"' + (f" [{attrs}];" if attrs else ";"))
    lines.append("}")
    return "\n".join(lines)


# ---------------------------------------------------------------------
# text serialization


def presentation_to_text(p: Presentation) -> str:
    lines = ["gens: " + " ".join(p.generator_names)]
    lines.append(
        "orders: " + " ".join("inf" if o is None else str(o) for o in p.generator_orders)
    )
    for r in p.relators:
        lines.append("rel: " + r.text(p.generator_names))
    return "\n".join(lines) + "\n"


def presentation_from_text(text: str) -> Presentation:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if len(lines) < 2 or not lines[0].startswith("gens:") or not lines[1].startswith("orders:"):
        raise ValueError("expected 'gens:' and 'orders:' header lines")
    names = tuple(lines[0][len("gens:"):].split())
    orders = tuple(
        None if tok == "inf" else int(tok)
        for tok in lines[1][len("orders:"):].split()
    )
    rels = []
    for ln in lines[2:]:
        if not ln.startswith("rel:"):
            raise ValueError(f"unexpected line {ln!r}")
        rels.append(parse_word(ln[len("rel:"):], names))
    return Presentation(names, orders, tuple(rels))
