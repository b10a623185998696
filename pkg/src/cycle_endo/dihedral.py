"""Exact arithmetic in the rotation/reflection group of the n-cycle.

Every element is either the rotation r_k : i -> i + k or the reflection
t_k : i -> k + 1 - i (arithmetic modulo n with representatives 1..n), written
in the normal form g^k respectively h*g^k where g = r_1 and h = t_0.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .core import ContextError, DomainError, MIN_VERTICES, Transformation


@lru_cache(maxsize=None)
def _element_images(n: int, reflected: bool, shift: int) -> tuple[int, ...]:
    if reflected:
        return tuple(((shift - p - 1) % n) + 1 for p in range(n))
    return tuple(((p + shift) % n) + 1 for p in range(n))


_FORM = re.compile(r"^\s*(?:(h)\s*(?:\*\s*)?)?(g(?:\^(-?\d+))?|1)?\s*$")


@dataclass(frozen=True, order=True)
class DihedralElement:
    """Normal form g^shift or h*g^shift; ordering is (n, reflected, shift)."""

    n: int
    reflected: bool
    shift: int

    def __post_init__(self):
        if self.n < MIN_VERTICES:
            raise ContextError(f"dihedral element needs n >= {MIN_VERTICES}, got {self.n}")
        object.__setattr__(self, "shift", self.shift % self.n)

    @classmethod
    def identity(cls, n: int) -> "DihedralElement":
        return cls(n, False, 0)

    @classmethod
    def rotation(cls, n: int, k: int) -> "DihedralElement":
        return cls(n, False, k)

    @classmethod
    def reflection(cls, n: int, k: int) -> "DihedralElement":
        return cls(n, True, k)

    @classmethod
    def g(cls, n: int) -> "DihedralElement":
        return cls(n, False, 1)

    @classmethod
    def h(cls, n: int) -> "DihedralElement":
        return cls(n, True, 0)

    @classmethod
    def parse(cls, text: str, n: int) -> "DihedralElement":
        """Parse "g^k", "h*g^k", and the abbreviations "g", "h", "1"."""
        m = _FORM.match(text)
        if not m or (m.group(1) is None and m.group(2) is None):
            raise DomainError(f"cannot parse dihedral element from {text!r}")
        reflected = m.group(1) is not None
        shift = 0
        if m.group(2) == "g":
            shift = 1
        elif m.group(3) is not None:
            shift = int(m.group(3))
        return cls(n, reflected, shift)

    def apply(self, x: int) -> int:
        if not 1 <= x <= self.n:
            raise DomainError(f"point {x} outside 1..{self.n}")
        if self.reflected:
            return ((self.shift - x) % self.n) + 1
        return ((x - 1 + self.shift) % self.n) + 1

    def images(self) -> tuple[int, ...]:
        return _element_images(self.n, self.reflected, self.shift)

    def transformation(self) -> Transformation:
        return Transformation(self.images())

    def __mul__(self, other: "DihedralElement") -> "DihedralElement":
        if not isinstance(other, DihedralElement):
            return NotImplemented
        if other.n != self.n:
            raise ContextError(f"cannot multiply dihedral elements on {self.n} and {other.n} points")
        if self.reflected:
            if other.reflected:
                return DihedralElement(self.n, False, other.shift - self.shift)
            return DihedralElement(self.n, True, self.shift + other.shift)
        if other.reflected:
            return DihedralElement(self.n, True, other.shift - self.shift)
        return DihedralElement(self.n, False, self.shift + other.shift)

    def inverse(self) -> "DihedralElement":
        if self.reflected:
            return self
        return DihedralElement(self.n, False, -self.shift)

    def __pow__(self, k: int) -> "DihedralElement":
        if self.reflected:
            return DihedralElement(self.n, k % 2 == 1, self.shift) if k % 2 else DihedralElement.identity(self.n)
        return DihedralElement(self.n, False, self.shift * k)

    def __str__(self) -> str:
        return f"h*g^{self.shift}" if self.reflected else f"g^{self.shift}"


def dihedral_product(x: DihedralElement, y: DihedralElement) -> DihedralElement:
    """Right-action product: apply x first, then y."""
    return x * y


def dihedral_inverse(x: DihedralElement) -> DihedralElement:
    return x.inverse()


def recognize(t: Transformation) -> DihedralElement | None:
    """Return the dihedral element equal to `t`, or None, in O(n).

    The images of 1 and 2 pin down the only candidate; one scan confirms it.
    """
    n = t.n
    if n < MIN_VERTICES:
        raise ContextError(f"recognition needs n >= {MIN_VERTICES}, got {n}")
    a1, a2 = t.images[0], t.images[1]
    if (a2 - a1) % n == 1:
        cand = DihedralElement.rotation(n, (a1 - 1) % n)
    elif (a1 - a2) % n == 1:
        cand = DihedralElement.reflection(n, a1 % n)
    else:
        return None
    return cand if cand.images() == t.images else None


def enumerate_dihedral(n: int) -> list[DihedralElement]:
    """All 2n elements: rotations by 0..n-1, then reflections by 0..n-1."""
    if n < MIN_VERTICES:
        raise ContextError(f"dihedral enumeration needs n >= {MIN_VERTICES}, got {n}")
    rots = [DihedralElement(n, False, k) for k in range(n)]
    refls = [DihedralElement(n, True, k) for k in range(n)]
    return rots + refls


@lru_cache(maxsize=None)
def _dihedral_words0(n: int) -> tuple[bytes, ...]:
    """0-based byte words of all 2n elements, in enumeration order."""
    return tuple(bytes(v - 1 for v in e.images()) for e in enumerate_dihedral(n))


@lru_cache(maxsize=None)
def _dihedral_tables0(n: int) -> tuple[bytes, ...]:
    """Padded translate tables of all 2n elements, in enumeration order."""
    from .core import _pad0

    return tuple(_pad0(w) for w in _dihedral_words0(n))
