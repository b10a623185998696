"""Streaming enumeration, closed-form counting, and closure for the five monoids.

Maps that never stretch an edge are exactly the walks: pick the image of
vertex 1 and then n-1 steps, each -1, 0 or +1 (no 0 when edges must map to
edges), subject to the wrap-around pair (n, 1) landing on an edge or a point
as well.  That last condition only constrains the total step sum, so the
stream is generated as (start, step vector) pairs in lexicographic order.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .core import (
    ContextError,
    DomainError,
    MIN_VERTICES,
    MonoidKind,
    ResourceCapError,
    Transformation,
    _pad0,
    is_member,
)
from .dihedral import _dihedral_words0, enumerate_dihedral

DEFAULT_CAP = 1 << 24
CAP_ENV_VAR = "CYCLE_ENDO_CAP"


def resolve_cap(explicit: int | None = None) -> int:
    """Element cap for closures and oracles: argument, else env var, else default."""
    if explicit is not None:
        return explicit
    env = os.environ.get(CAP_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise DomainError(f"{CAP_ENV_VAR} must be an integer, got {env!r}") from None
    return DEFAULT_CAP


@dataclass(frozen=True)
class StepSequence:
    """A start vertex plus n-1 cyclic steps; decodes to a vertex map."""

    start: int
    steps: tuple[int, ...]

    def __post_init__(self):
        n = len(self.steps) + 1
        if n < MIN_VERTICES:
            raise ContextError(f"step sequence needs at least {MIN_VERTICES - 1} steps")
        if not 1 <= self.start <= n:
            raise DomainError(f"start vertex {self.start} outside 1..{n}")
        if any(s not in (-1, 0, 1) for s in self.steps):
            raise DomainError("steps must be -1, 0 or +1")

    @property
    def n(self) -> int:
        return len(self.steps) + 1

    def is_admissible(self, kind: MonoidKind) -> bool:
        """Whether the decoded map lies in End (strict steps) or wEnd."""
        n = self.n
        total = sum(self.steps)
        if kind is MonoidKind.END:
            return 0 not in self.steps and total in (1 - n, -1, 1, n - 1)
        if kind is MonoidKind.WEND:
            return total in (1 - n, -1, 0, 1, n - 1)
        raise DomainError(f"step sequences describe end or wend, not {kind}")

    def decode(self) -> Transformation:
        n = self.n
        images = [self.start]
        for s in self.steps:
            images.append((images[-1] - 1 + s) % n + 1)
        return Transformation(images)


@lru_cache(maxsize=None)
def _offset_vectors0(n: int, strict: bool) -> tuple[bytes, ...]:
    """Cumulative step offsets mod n, one word per admissible step vector.

    Words are emitted in lexicographic order of the step vector with steps
    ordered -1 < 0 < +1, and always begin with offset 0 for vertex 1.
    """
    targets = (1 - n, -1, 1, n - 1) if strict else (1 - n, -1, 0, 1, n - 1)
    choices = (-1, 1) if strict else (-1, 0, 1)
    out: list[bytes] = []
    offsets = [0] * n

    def feasible(total: int, remaining: int) -> bool:
        for t in targets:
            d = t - total
            if -remaining <= d <= remaining and (not strict or (d + remaining) % 2 == 0):
                return True
        return False

    def walk(depth: int, total: int) -> None:
        if depth == n - 1:
            out.append(bytes(o % n for o in offsets))
            return
        remaining = n - 2 - depth
        for step in choices:
            t2 = total + step
            if feasible(t2, remaining):
                offsets[depth + 1] = offsets[depth] + step
                walk(depth + 1, t2)

    walk(0, 0)
    return tuple(out)


@lru_cache(maxsize=None)
def _rotation_tables0(n: int) -> tuple[bytes, ...]:
    """Padded tables adding s mod n, for s = 0..n-1."""
    return tuple(_pad0(bytes((v + s) % n for v in range(n))) for s in range(n))


def _iter_walk0(n: int, strict: bool) -> Iterator[bytes]:
    """0-based words of End (strict) or wEnd in (start, steps) order."""
    vectors = _offset_vectors0(n, strict)
    for table in _rotation_tables0(n):
        for vec in vectors:
            yield vec.translate(table)


def _sorted_special0(kind: MonoidKind, n: int) -> tuple[bytes, ...]:
    """Aut, sEnd and swEnd as sorted word lists; all three are tiny."""
    words = set(_dihedral_words0(n))
    if kind is MonoidKind.AUT:
        return tuple(sorted(words))
    if kind is MonoidKind.SEND:
        if n == 4:
            found = []
            for a in range(4):
                for b in range(4):
                    for c in range(4):
                        for d in range(4):
                            t = Transformation((a + 1, b + 1, c + 1, d + 1))
                            if is_member(t, MonoidKind.SEND):
                                found.append(bytes((a, b, c, d)))
            return tuple(found)
        return tuple(sorted(words))
    # swEnd
    if n == 3:
        out = []
        for a in range(3):
            for b in range(3):
                for c in range(3):
                    out.append(bytes((a, b, c)))
        return tuple(out)
    constants = {bytes((v,) * n) for v in range(n)}
    if n == 4:
        return tuple(sorted(set(_sorted_special0(MonoidKind.SEND, 4)) | constants))
    return tuple(sorted(words | constants))


def _enumerate0(kind: MonoidKind, n: int) -> Iterator[bytes]:
    if n < MIN_VERTICES:
        raise ContextError(f"enumeration needs n >= {MIN_VERTICES}, got {n}")
    if kind is MonoidKind.WEND:
        yield from _iter_walk0(n, strict=False)
    elif kind is MonoidKind.END:
        yield from _iter_walk0(n, strict=True)
    else:
        yield from _sorted_special0(kind, n)


def enumerate_images(kind: MonoidKind, n: int) -> Iterator[tuple[int, ...]]:
    """Stream the monoid as 1-based image tuples, in a fixed documented order."""
    for word in _enumerate0(kind, n):
        yield tuple(v + 1 for v in word)


def enumerate_monoid(kind: MonoidKind, n: int) -> Iterator[Transformation]:
    """Stream the monoid as Transformation objects."""
    for images in enumerate_images(kind, n):
        yield Transformation(images)


def cardinality(kind: MonoidKind, n: int) -> int:
    """Closed-form size of the monoid, without enumerating it."""
    if n < MIN_VERTICES:
        raise ContextError(f"cardinality needs n >= {MIN_VERTICES}, got {n}")
    if kind is MonoidKind.AUT:
        return 2 * n
    if kind is MonoidKind.SEND:
        return 32 if n == 4 else 2 * n
    if kind is MonoidKind.SWEND:
        if n == 3:
            return 27
        if n == 4:
            return 36
        return 3 * n
    if kind is MonoidKind.END:
        if n % 2 == 1:
            return 2 * n
        return 2 * n + n * math.comb(n, n // 2)
    total = 3 * n
    for k in range(1, n // 2 + 1):
        total += 2 * n * math.comb(2 * k - 1, k) * math.comb(n, 2 * k)
    return total


def _closure0(words: Iterable[bytes], n: int, cap: int) -> set[bytes]:
    """All products of nonempty sequences of the given words."""
    gens = [bytes(w) for w in words]
    tables = [_pad0(w) for w in gens]
    elements: set[bytes] = set(gens)
    if len(elements) > cap:
        raise ResourceCapError(f"closure exceeded cap {cap}", needed=len(elements), cap=cap)
    frontier = list(elements)
    while frontier:
        fresh = []
        for word in frontier:
            for table in tables:
                prod = word.translate(table)
                if prod not in elements:
                    elements.add(prod)
                    if len(elements) > cap:
                        raise ResourceCapError(
                            f"closure exceeded cap {cap}", needed=len(elements), cap=cap)
                    fresh.append(prod)
        frontier = fresh
    return elements


def closure(generators: Iterable[Transformation], n: int | None = None,
            cap: int | None = None) -> set[Transformation]:
    """The submonoid-without-identity generated by the given maps.

    The identity only appears if the generators produce it.  Raises
    ResourceCapError beyond the configured element cap.
    """
    gens = list(generators)
    if not gens:
        return set()
    sizes = {t.n for t in gens}
    if len(sizes) != 1:
        raise ContextError(f"generators live on different cycles: {sorted(sizes)}")
    if n is not None and n != gens[0].n:
        raise ContextError(f"generators are on {gens[0].n} points, not {n}")
    n = gens[0].n
    words = _closure0([t.bytes0() for t in gens], n, resolve_cap(cap))
    return {Transformation(v + 1 for v in w) for w in words}
