"""Exact degree-two scalar arithmetic for affine reflection matrices.

Two kinds of scalars appear as matrix entries: cyclotomic integers
``Z[zeta_d]`` for ``d`` in {3, 4, 6}, and elements of the formal lattice
``Z + alpha*Z`` where ``alpha`` is treated as a transcendental symbol.
Every value is a pair ``(a, b)`` meaning ``a + b*w`` with ``w`` the
adjoined generator.  In the formal mode a product that would create an
``alpha**2`` term is an error, never a silent truncation: the group
arithmetic in scope provably never produces one, so hitting the error
means a bug upstream.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterator


class RingError(Exception):
    """Base class for scalar arithmetic errors."""


class SpecMismatchError(RingError):
    """Operands belong to different rings."""


class FormalAlphaOverflow(RingError):
    """A product in the formal mode would need an alpha**2 term."""


class NotAUnit(RingError):
    """Inversion was requested for a non-unit."""


class RingMode(Enum):
    CYCLOTOMIC = "cyclotomic"
    FORMAL_ALPHA = "formal_alpha"


# u**2 reduced as  u**2 = P*u + Q, and the printed symbol, per d.
_CYCLO_DATA = {
    3: (-1, -1, "ζ3"),   # u²+u+1 = 0
    4: (0, -1, "i"),     # u²+1 = 0
    6: (1, -1, "ζ6"),    # u²-u+1 = 0
}


@dataclass(frozen=True)
class RingSpec:
    mode: RingMode
    d: int | None = None

    def __post_init__(self) -> None:
        if self.mode is RingMode.CYCLOTOMIC:
            if self.d not in _CYCLO_DATA:
                raise ValueError(f"cyclotomic order must be 3, 4 or 6, got {self.d}")
        elif self.d is not None:
            raise ValueError("formal-alpha mode carries no cyclotomic order")

    @classmethod
    def cyclotomic(cls, d: int) -> "RingSpec":
        return cls(RingMode.CYCLOTOMIC, d)

    @classmethod
    def formal_alpha(cls) -> "RingSpec":
        return cls(RingMode.FORMAL_ALPHA)

    @property
    def minimal_polynomial(self) -> list[int] | None:
        """Coefficients [c0, c1, 1] of the monic minimal polynomial, or None."""
        if self.mode is RingMode.FORMAL_ALPHA:
            return None
        p, q, _ = _CYCLO_DATA[self.d]  # u² = p·u + q  ⟺  u² − p·u − q = 0
        return [-q, -p, 1]

    @property
    def symbol(self) -> str:
        if self.mode is RingMode.FORMAL_ALPHA:
            return "α"
        return _CYCLO_DATA[self.d][2]

    def __repr__(self) -> str:
        if self.mode is RingMode.FORMAL_ALPHA:
            return "RingSpec(FormalAlpha)"
        return f"RingSpec(Cyclotomic d={self.d})"

    # -- element constructors ------------------------------------------

    def el(self, a: int, b: int = 0) -> "RingElement":
        return RingElement(self, a, b)

    def zero(self) -> "RingElement":
        return self.el(0)

    def one(self) -> "RingElement":
        return self.el(1)

    def gen(self) -> "RingElement":
        """The adjoined generator: zeta_d or alpha."""
        return self.el(0, 1)

    @property
    def reduction(self) -> tuple[int, int]:
        """(p, q) with u² = p·u + q; (0, 0) in formal mode where α² never
        arises."""
        if self.mode is RingMode.FORMAL_ALPHA:
            return (0, 0)
        p, q, _ = _CYCLO_DATA[self.d]
        return (p, q)


@dataclass(frozen=True)
class RingElement:
    spec: RingSpec
    a: int
    b: int

    def _check(self, other: "RingElement") -> None:
        if self.spec != other.spec:
            raise SpecMismatchError(f"{self.spec} vs {other.spec}")

    def __add__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        return RingElement(self.spec, self.a + other.a, self.b + other.b)

    def __sub__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        return RingElement(self.spec, self.a - other.a, self.b - other.b)

    def __neg__(self) -> "RingElement":
        return RingElement(self.spec, -self.a, -self.b)

    def __mul__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        a, b, c, d = self.a, self.b, other.a, other.b
        if self.spec.mode is RingMode.FORMAL_ALPHA:
            if b != 0 and d != 0:
                raise FormalAlphaOverflow(
                    f"({self}) * ({other}) would need an α² term"
                )
            return RingElement(self.spec, a * c, a * d + b * c)
        p, q, _ = _CYCLO_DATA[self.spec.d]
        # (a + b·u)(c + d·u) = ac + (ad + bc)·u + bd·u², u² = p·u + q
        return RingElement(self.spec, a * c + b * d * q, a * d + b * c + b * d * p)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_one(self) -> bool:
        return self.a == 1 and self.b == 0

    def is_unit(self) -> bool:
        try:
            self.inverse()
        except NotAUnit:
            return False
        return True

    def inverse(self) -> "RingElement":
        """Multiplicative inverse of a ring unit.

        Solved as a 2x2 integer system: (a + b·u)(x + y·u) = 1.
        """
        if self.spec.mode is RingMode.FORMAL_ALPHA:
            if self.b == 0 and self.a in (1, -1):
                return self
            raise NotAUnit(f"{self} is not a unit of Z+αZ")
        p, q, _ = _CYCLO_DATA[self.spec.d]
        a, b = self.a, self.b
        # [[a, b·q], [b, a + b·p]] @ (x, y) = (1, 0)
        det = a * (a + b * p) - b * (b * q)
        if det not in (1, -1):
            raise NotAUnit(f"{self} is not a unit (norm {det})")
        x = (a + b * p) * det
        y = -b * det
        return RingElement(self.spec, x, y)

    def __pow__(self, k: int) -> "RingElement":
        if k < 0:
            return self.inverse() ** (-k)
        out = self.spec.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __str__(self) -> str:
        w = self.spec.symbol
        if self.b == 0:
            return str(self.a)
        bterm = f"{self.b}*{w}"
        if self.a == 0:
            return bterm
        return f"{self.a}{'+' if self.b > 0 else ''}{bterm}"

    def __repr__(self) -> str:
        return f"<{self} : {self.spec}>"


_INT_RE = re.compile(r"^[+-]?\d+$")
_PAIR_RE = re.compile(
    r"^(?P<a>[+-]?\d+(?=[+-]))?(?P<b>[+-]?\d+)\*(?P<w>α|ζ3|ζ6|i)$"
)


def parse_element(spec: RingSpec, text: str) -> RingElement:
    """Parse the textual rendering produced by ``str`` back bit-exactly."""
    text = text.strip().replace(" ", "")
    if _INT_RE.match(text):
        return RingElement(spec, int(text), 0)
    m = _PAIR_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse ring element {text!r}")
    if m.group("w") != spec.symbol:
        raise ValueError(f"symbol {m.group('w')} does not belong to {spec}")
    a = int(m.group("a")) if m.group("a") is not None else 0
    return RingElement(spec, a, int(m.group("b")))


def all_units(spec: RingSpec) -> Iterator[RingElement]:
    """The finite unit group: ±1 (formal) or ±zeta_d powers (cyclotomic)."""
    if spec.mode is RingMode.FORMAL_ALPHA:
        yield spec.one()
        yield -spec.one()
        return
    seen = set()
    u = spec.one()
    for _ in range(2 * spec.d):
        for v in (u, -u):
            if (v.a, v.b) not in seen:
                seen.add((v.a, v.b))
                yield v
        u = u * spec.gen()
