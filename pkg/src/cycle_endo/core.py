"""Vertex maps of an undirected cycle and the five endomorphism membership tests.

The cycle C_n has vertex set 1..n and edges {i, i+1} with indices read modulo
n, so {n, 1} is an edge.  Maps are total maps of the vertex set and act on the
right: x(a*b) = (xa)b, i.e. a*b applies a first, then b.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MIN_VERTICES = 3


class CycleEndoError(Exception):
    """Base class for errors raised by this package."""


class ContextError(CycleEndoError):
    """Vertex count below 3, or operands living on different cycles."""


class InvariantViolation(CycleEndoError):
    """An internal structural guarantee failed, e.g. a non-arc image."""


class DomainError(CycleEndoError):
    """Arguments outside the mathematical domain of an operation."""


class ResourceCapError(CycleEndoError):
    """An enumeration or closure would exceed the configured element cap."""

    def __init__(self, message: str, needed: int | None = None, cap: int | None = None):
        super().__init__(message)
        self.needed = needed
        self.cap = cap


class MonoidKind(enum.Enum):
    """Which of the five endomorphism monoids of the cycle is meant.

    aut   : adjacency preserved both ways, bijective
    send  : edges preserved and reflected (strict endomorphisms)
    swend : edges preserved or collapsed, and reflected
    end   : edges preserved (graph homomorphisms into the same cycle)
    wend  : edges preserved or collapsed (weak endomorphisms)
    """

    AUT = "aut"
    SEND = "send"
    SWEND = "swend"
    END = "end"
    WEND = "wend"

    @classmethod
    def parse(cls, text: str) -> "MonoidKind":
        try:
            return cls(text.strip().lower())
        except ValueError:
            options = ", ".join(k.value for k in cls)
            raise DomainError(f"unknown monoid kind {text!r}; expected one of {options}") from None

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class CycleContext:
    """The fixed cycle C_n: vertices 1..n, edges {i, i+1 mod n}."""

    n: int

    def __post_init__(self):
        if self.n < MIN_VERTICES:
            raise ContextError(f"a cycle needs at least {MIN_VERTICES} vertices, got {self.n}")

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def is_edge(self, i: int, j: int) -> bool:
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise DomainError(f"vertices must lie in 1..{self.n}, got ({i}, {j})")
        return abs(i - j) in (1, self.n - 1)


# 0-based byte-level helpers shared by the enumeration and rank pipelines.
# A map on 1..n is stored as bytes of length n whose entry at position i-1
# is (image of i) - 1; bytes.translate then composes two maps in C.

_IDENTITY_TABLE = bytes(range(256))


def _pad0(b0: bytes) -> bytes:
    """Extend a 0-based image word to a 256-entry translate table."""
    return b0 + _IDENTITY_TABLE[len(b0):]


def _compose0(a0: bytes, b0_padded: bytes) -> bytes:
    """Right-action composition on 0-based words: apply a0, then the padded b0."""
    return a0.translate(b0_padded)


def _kernel_labels0(img0: Sequence[int]) -> bytes:
    """First-occurrence position labels of a 0-based image word."""
    first: dict[int, int] = {}
    out = bytearray()
    for pos, v in enumerate(img0):
        out.append(first.setdefault(v, pos))
    return bytes(out)


def _labels_refine(fine: Sequence[int], coarse: Sequence[int]) -> bool:
    """True iff the partition behind `fine` refines the one behind `coarse`."""
    seen: dict[int, int] = {}
    for f, c in zip(fine, coarse):
        prev = seen.get(f)
        if prev is None:
            seen[f] = c
        elif prev != c:
            return False
    return True


class Transformation:
    """A total map of {1..n}, stored as its tuple of images.

    Composition is written multiplicatively and acts on the right:
    (a * b).apply(x) == b.apply(a.apply(x)).
    """

    __slots__ = ("images", "_b0")

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if not images:
            raise DomainError("a transformation needs at least one point")
        n = len(images)
        for v in images:
            if not isinstance(v, int) or not 1 <= v <= n:
                raise DomainError(f"image values must be integers in 1..{n}, got {v!r}")
        self.images = images
        self._b0 = None

    @classmethod
    def identity(cls, n: int) -> "Transformation":
        return cls(range(1, n + 1))

    @classmethod
    def constant(cls, n: int, value: int) -> "Transformation":
        return cls((value,) * n)

    @classmethod
    def parse(cls, text: str) -> "Transformation":
        """Parse the line format: n space-separated 1-based images."""
        try:
            parts = [int(tok) for tok in text.split()]
        except ValueError:
            raise DomainError(f"cannot parse transformation from {text!r}") from None
        return cls(parts)

    def to_line(self) -> str:
        return " ".join(str(v) for v in self.images)

    @property
    def n(self) -> int:
        return len(self.images)

    def apply(self, x: int) -> int:
        if not 1 <= x <= self.n:
            raise DomainError(f"point {x} outside 1..{self.n}")
        return self.images[x - 1]

    def bytes0(self) -> bytes:
        """The 0-based byte word used by the fast pipelines."""
        b0 = self._b0
        if b0 is None:
            b0 = bytes(v - 1 for v in self.images)
            self._b0 = b0
        return b0

    def __mul__(self, other: "Transformation") -> "Transformation":
        if not isinstance(other, Transformation):
            return NotImplemented
        if other.n != self.n:
            raise ContextError(f"cannot compose maps on {self.n} and {other.n} points")
        o = other.images
        return Transformation(o[v - 1] for v in self.images)

    def image(self) -> frozenset:
        return frozenset(self.images)

    def rank(self) -> int:
        return len(set(self.images))

    def kernel(self) -> "KernelPartition":
        return KernelPartition.from_images(self.images)

    def is_bijective(self) -> bool:
        return len(set(self.images)) == self.n

    def is_idempotent(self) -> bool:
        imgs = self.images
        return all(imgs[v - 1] == v for v in set(imgs))

    def __eq__(self, other) -> bool:
        return isinstance(other, Transformation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __lt__(self, other: "Transformation") -> bool:
        return self.images < other.images

    def __repr__(self) -> str:
        return f"Transformation({self.images!r})"


@dataclass(frozen=True)
class KernelPartition:
    """Partition of 1..n by equal images, in first-occurrence labelling.

    labels[i-1] is the smallest point with the same image as i, so labels
    determine the partition uniquely and compare cheaply.
    """

    labels: tuple[int, ...]

    def __post_init__(self):
        for i, lab in enumerate(self.labels, start=1):
            if not (1 <= lab <= i and self.labels[lab - 1] == lab):
                raise InvariantViolation(f"bad kernel labels {self.labels!r} at point {i}")

    @classmethod
    def from_images(cls, images: Sequence[int]) -> "KernelPartition":
        first: dict[int, int] = {}
        labels = tuple(first.setdefault(v, pos) for pos, v in enumerate(images, start=1))
        return cls(labels)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def classes(self) -> tuple[tuple[int, ...], ...]:
        """Blocks in order of first occurrence, members ascending."""
        blocks: dict[int, list[int]] = {}
        for i, lab in enumerate(self.labels, start=1):
            blocks.setdefault(lab, []).append(i)
        return tuple(tuple(blocks[lab]) for lab in sorted(blocks))

    @property
    def block_count(self) -> int:
        return len(set(self.labels))


def kernel_contains(fine: KernelPartition, coarse: KernelPartition) -> bool:
    """True iff every pair identified by `fine` is identified by `coarse`."""
    if fine.n != coarse.n:
        raise ContextError(f"kernel partitions on {fine.n} and {coarse.n} points")
    return _labels_refine(fine.labels, coarse.labels)


@dataclass(frozen=True)
class Arc:
    """A nonempty path-connected set of cycle vertices.

    Plain form: the interval [start, end] with start <= end.  Wrapping form:
    [start, n] followed by [1, end], used only when the set crosses the n/1
    boundary and is not the whole cycle, so representations are unique.
    """

    n: int
    start: int
    end: int
    wrap: bool = False

    def __post_init__(self):
        if self.n < MIN_VERTICES:
            raise ContextError(f"arc on a cycle needs n >= {MIN_VERTICES}, got {self.n}")
        if self.wrap:
            if not (1 <= self.end < self.start - 1 <= self.n - 1):
                raise InvariantViolation(
                    f"wrapping arc needs 1 <= end < start-1 <= n-1, got {self}")
        else:
            if not (1 <= self.start <= self.end <= self.n):
                raise InvariantViolation(f"interval arc needs 1 <= start <= end <= n, got {self}")

    @classmethod
    def from_vertices(cls, vertices: Iterable[int], n: int) -> "Arc":
        """Build the arc with the given vertex set, or fail if it is not one."""
        vs = sorted(set(vertices))
        if not vs:
            raise InvariantViolation("an arc cannot be empty")
        if vs[0] < 1 or vs[-1] > n:
            raise DomainError(f"vertices must lie in 1..{n}")
        if vs[-1] - vs[0] + 1 == len(vs):
            return cls(n, vs[0], vs[-1])
        # The complement must then be a single interval strictly inside 1..n.
        missing = sorted(set(range(1, n + 1)) - set(vs))
        if missing[-1] - missing[0] + 1 == len(missing) and missing[0] > 1 and missing[-1] < n:
            return cls(n, missing[-1] + 1, missing[0] - 1, wrap=True)
        raise InvariantViolation(f"vertex set {vs} is not an arc of the {n}-cycle")

    @property
    def size(self) -> int:
        if self.wrap:
            return (self.n - self.start + 1) + self.end
        return self.end - self.start + 1

    def members(self) -> tuple[int, ...]:
        """Vertices in cycle order, starting at `start`."""
        if self.wrap:
            return tuple(range(self.start, self.n + 1)) + tuple(range(1, self.end + 1))
        return tuple(range(self.start, self.end + 1))

    def as_set(self) -> frozenset:
        return frozenset(self.members())

    def __str__(self) -> str:
        if self.wrap:
            return f"[{self.start},{self.n}]+[1,{self.end}]"
        return f"[{self.start},{self.end}]"


def _steps_ok(images: Sequence[int], n: int, allow_equal: bool) -> bool:
    """Check every cyclic neighbor pair lands on an edge (or a point if allowed)."""
    prev = images[-1]
    for v in images:
        d = prev - v
        if d < 0:
            d = -d
        if not (d == 1 or d == n - 1 or (allow_equal and d == 0)):
            return False
        prev = v
    return True


def _edge_reflecting(images: Sequence[int], n: int) -> bool:
    """Check adjacency of image values only ever comes from adjacent points."""
    for i in range(n - 1):
        vi = images[i]
        for j in range(i + 1, n):
            d = vi - images[j]
            if d < 0:
                d = -d
            if (d == 1 or d == n - 1) and not (j - i == 1 or j - i == n - 1):
                return False
    return True


def is_member(t: Transformation, kind: MonoidKind) -> bool:
    """Membership of `t` in the chosen endomorphism monoid of the cycle."""
    n = t.n
    if n < MIN_VERTICES:
        raise ContextError(f"membership needs a cycle with n >= {MIN_VERTICES}, got n = {n}")
    imgs = t.images
    if kind is MonoidKind.WEND:
        return _steps_ok(imgs, n, True)
    if kind is MonoidKind.END:
        return _steps_ok(imgs, n, False)
    if kind is MonoidKind.SWEND:
        return _steps_ok(imgs, n, True) and _edge_reflecting(imgs, n)
    if kind is MonoidKind.SEND:
        return _steps_ok(imgs, n, False) and _edge_reflecting(imgs, n)
    return len(set(imgs)) == n and _steps_ok(imgs, n, False)


def compose(a: Transformation, b: Transformation) -> Transformation:
    """Right-action product: apply a first, then b."""
    return a * b


def image(t: Transformation) -> frozenset:
    return t.image()


def rank(t: Transformation) -> int:
    return t.rank()


def kernel(t: Transformation) -> KernelPartition:
    return t.kernel()


def interval_image(t: Transformation, i: int, j: int) -> Arc:
    """The image of the interval [i, j] under `t`, as an arc.

    For maps that never stretch an edge this is always a genuine arc; a
    non-arc image raises InvariantViolation.
    """
    n = t.n
    if not (1 <= i <= j <= n):
        raise DomainError(f"need 1 <= i <= j <= {n}, got ({i}, {j})")
    return Arc.from_vertices({t.images[x] for x in range(i - 1, j)}, n)


def normalize_image(t: Transformation):
    """Rotate the image of `t` onto the initial interval [1, rank].

    Returns (t * r, r) where r is the rotation doing the job.  Requires the
    image of `t` to be an arc.
    """
    from .dihedral import DihedralElement

    n = t.n
    arc = Arc.from_vertices(t.image(), n)
    rot = DihedralElement.rotation(n, (n - arc.start + 1) % n)
    return t * rot.transformation(), rot
