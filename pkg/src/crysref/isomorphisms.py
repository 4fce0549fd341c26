"""Explicit mutually inverse maps between the Artin groups of the
reflection presentations and the braid groups of their configuration
spaces, for the two formal families."""

from __future__ import annotations

from dataclasses import dataclass

from .presentations import (
    Presentation,
    RankOutOfRange,
    UnsupportedFamily,
    artinize,
    build_braid_presentation,
    build_group_presentation,
)
from .prover import GeneratorMap
from .words import Word


def braid_space_for(family: str, n: int) -> tuple[str, int]:
    """Which configuration-space braid presentation matches the Artin
    group of the given family at rank n."""
    if family == "C_alpha":
        return ("FreeRank3", 1) if n == 1 else ("PuncturedSphere4", n)
    if family == "A_alpha":
        if n < 2:
            raise RankOutOfRange("type A needs n >= 2")
        return ("FreeRank3", 1) if n == 2 else ("TorusSpecial", n)
    raise UnsupportedFamily(f"no braid model wired for {family}")


@dataclass(frozen=True)
class BraidIsomorphism:
    """fwd: braid-space generators -> Artin generators; bwd the inverse."""

    braid: Presentation
    artin: Presentation
    fwd: GeneratorMap
    bwd: GeneratorMap


def _pos(*idxs: int) -> Word:
    return Word([(i, 1) for i in idxs])


def braid_isomorphism(family: str, n: int) -> BraidIsomorphism:
    space, m = braid_space_for(family, n)
    braid = build_braid_presentation(space, m)
    artin = artinize(build_group_presentation(family, n))
    if space == "FreeRank3":
        idmap = tuple(Word.gen(i) for i in range(3))
        fwd = GeneratorMap(braid.generator_names, artin.generator_names, idmap)
        bwd = GeneratorMap(artin.generator_names, braid.generator_names, idmap)
        return BraidIsomorphism(braid, artin, fwd, bwd)
    if family == "C_alpha":
        return _c_isomorphism(braid, artin, n)
    return _a_isomorphism(braid, artin, n)


def _c_isomorphism(braid: Presentation, artin: Presentation, n: int) -> BraidIsomorphism:
    # Artin generators s1..s(n+2) are 0-based 0..n+1
    s_mid = _pos(*range(1, n))                     # s2 ... sn
    full = _pos(*(list(range(n + 2)) + list(range(n - 1, 0, -1))))
    fwd_images = (
        full.inverse(),                            # u1
        Word.gen(0),                               # u2
        s_mid * Word.gen(n) * s_mid.inverse(),     # u3
        s_mid * Word.gen(n + 1) * s_mid.inverse(), # u4
    ) + tuple(Word.gen(i + 1) for i in range(n - 1))
    fwd = GeneratorMap(braid.generator_names, artin.generator_names, fwd_images)
    # braid generators: u1..u4 = 0..3, t1..t(n-1) = 4..n+2
    t_prod = _pos(*range(4, n + 3))                # t1 ... t(n-1)
    bwd_images = (
        (Word.gen(1),)
        + tuple(Word.gen(4 + i) for i in range(n - 1))
        + (
            t_prod.inverse() * Word.gen(2) * t_prod,
            t_prod.inverse() * Word.gen(3) * t_prod,
        )
    )
    bwd = GeneratorMap(artin.generator_names, braid.generator_names, bwd_images)
    return BraidIsomorphism(braid, artin, fwd, bwd)


def _a_isomorphism(braid: Presentation, artin: Presentation, n: int) -> BraidIsomorphism:
    # Artin generators s1..s(n+1) = 0..n; braid r0..r(n-1) = 0..n-1,
    # t1..t(n-1) = n..2n-2
    sn1 = Word.gen(n)
    fwd_r = (Word.gen(n - 1),) + tuple(Word.gen(i - 1) for i in range(1, n))
    fwd_t = []
    # t1 = (s(n-1)...s2)^-1 s(n+1) s(n-1)...s1
    pre = _pos(*range(n - 2, 0, -1))
    fwd_t.append(pre.inverse() * sn1 * _pos(*range(n - 2, -1, -1)))
    # t_i = (s1..s(i-1) s(n-1)..s(i+1))^-1 s(n+1) s1..s(i-1) s(n-1)..s_i
    for i in range(2, n - 1):
        a = _pos(*(list(range(0, i - 1)) + list(range(n - 2, i - 1, -1))))
        b = _pos(*(list(range(0, i - 1)) + list(range(n - 2, i - 2, -1))))
        fwd_t.append(a.inverse() * sn1 * b)
    # t(n-1) = (s1..s(n-2))^-1 s(n+1) s1..s(n-1)
    post = _pos(*range(0, n - 2))
    fwd_t.append(post.inverse() * sn1 * _pos(*range(0, n - 1)))
    fwd = GeneratorMap(
        braid.generator_names, artin.generator_names, fwd_r + tuple(fwd_t)
    )
    # bwd: s_i -> r_i (i < n), s_n -> r0,
    # s(n+1) -> r(n-1)...r2 t1 r1^-1 r2^-1 ... r(n-1)^-1
    conj = _pos(*range(n - 1, 1, -1))
    bwd_images = (
        tuple(Word.gen(i) for i in range(1, n))
        + (
            Word.gen(0),
            conj * Word.gen(n) * Word.gen(1).inverse() * conj.inverse(),
        )
    )
    bwd = GeneratorMap(artin.generator_names, braid.generator_names, bwd_images)
    return BraidIsomorphism(artin=artin, braid=braid, fwd=fwd, bwd=bwd)
