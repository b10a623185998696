"""Minimum generating sets of the five monoids.

Outside the unit group, generators only matter up to translation by units on
both sides, so the pipeline works on classes of that equivalence: pick one
member per kernel (units never change the kernel when applied on the right),
canonicalize the picks under the two-sided unit action, then sweep the classes
from the highest rank stratum down, dropping every class whose kernel refines
a kernel reachable from an already kept class.  The kept classes together with
the two unit generators form a minimum generating set.
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass

from .core import (
    ContextError,
    InvariantViolation,
    KernelPartition,
    MIN_VERTICES,
    MonoidKind,
    Transformation,
    _kernel_labels0,
    _labels_refine,
    _pad0,
    is_member,
    kernel_contains,
)
from .dihedral import DihedralElement, _dihedral_tables0, _dihedral_words0
from .enumeration import _closure0, _enumerate0, cardinality, resolve_cap


@dataclass(frozen=True)
class SimClass:
    """One class of the two-sided unit-translation equivalence.

    canonical is the lexicographically smallest translate; kernels collects
    the kernels of all left translates, which is everything the domination
    order can see of the class; representative is the member the class was
    built from (it equals canonical unless a seeded transversal chose
    otherwise).
    """

    canonical: Transformation
    rank: int
    kernels: frozenset[KernelPartition]
    representative: Transformation

    @property
    def kernel(self) -> KernelPartition:
        return self.canonical.kernel()


@dataclass(frozen=True)
class RankResult:
    """A verified-size generating set: the kept classes plus the two units."""

    kind: MonoidKind
    n: int
    generating_set: tuple[Transformation, ...]
    rank_value: int
    per_rank_counts: tuple[tuple[int, int], ...]


def _canonical0(word: bytes, sigmas: tuple[bytes, ...], tables: tuple[bytes, ...]) -> bytes:
    """Lexicographically smallest s*word*x over all unit pairs (s, x)."""
    padded = _pad0(word)
    best = None
    for s in sigmas:
        left = s.translate(padded)
        for table in tables:
            cand = left.translate(table)
            if best is None or cand < best:
                best = cand
    return best


def _left_kernel_set(word: bytes, n: int) -> frozenset[KernelPartition]:
    padded = _pad0(word)
    seen = set()
    for s in _dihedral_words0(n):
        seen.add(_kernel_labels0(s.translate(padded)))
    return frozenset(
        KernelPartition(tuple(v + 1 for v in labels)) for labels in seen)


def sim_canonicalize(t: Transformation) -> SimClass:
    """The unit-translation class of `t`, with canonical form and kernel data."""
    n = t.n
    if n < MIN_VERTICES:
        raise ContextError(f"canonicalization needs n >= {MIN_VERTICES}, got {n}")
    word = t.bytes0()
    canon = _canonical0(word, _dihedral_words0(n), _dihedral_tables0(n))
    return SimClass(
        canonical=Transformation(v + 1 for v in canon),
        rank=len(set(canon)),
        kernels=_left_kernel_set(canon, n),
        representative=t,
    )


def _kernel_reps0(kind: MonoidKind, n: int, rng: random.Random | None) -> dict[bytes, bytes]:
    """One non-unit member per kernel: lexicographic minimum, or a uniform
    reservoir pick when `rng` is given."""
    units = set(_dihedral_words0(n))
    reps: dict[bytes, bytes] = {}
    counts: dict[bytes, int] = {}
    for word in _enumerate0(kind, n):
        if word in units:
            continue
        key = _kernel_labels0(word)
        if rng is None:
            cur = reps.get(key)
            if cur is None or word < cur:
                reps[key] = word
        else:
            c = counts.get(key, 0) + 1
            counts[key] = c
            if c == 1 or rng.randrange(c) == 0:
                reps[key] = word
    return reps


def r_transversal(kind: MonoidKind, n: int, seed: int | None = None) -> list[Transformation]:
    """One representative per kernel among the non-unit elements.

    Unseeded, each representative is the lexicographically smallest member of
    its kernel class; with a seed the member is chosen uniformly at random.
    """
    rng = random.Random(seed) if seed is not None else None
    reps = _kernel_reps0(kind, n, rng)
    return [Transformation(v + 1 for v in w) for w in sorted(reps.values())]


def _sim_classes(kind: MonoidKind, n: int, rng: random.Random | None,
                 threads: int = 1) -> list[SimClass]:
    """Unit-translation classes of a kernel transversal, ready for filtering."""
    reps = _kernel_reps0(kind, n, rng)
    words = sorted(reps.values())
    canons = _canonical_many(words, n, threads)
    groups: dict[bytes, list[bytes]] = {}
    for word, canon in zip(words, canons):
        groups.setdefault(canon, []).append(word)
    out = []
    for canon in sorted(groups):
        if rng is None:
            rep_word = canon
        else:
            rep_word = rng.choice(sorted(groups[canon]))
        out.append(SimClass(
            canonical=Transformation(v + 1 for v in canon),
            rank=len(set(canon)),
            kernels=_left_kernel_set(canon, n),
            representative=Transformation(v + 1 for v in rep_word),
        ))
    return out


_POOL_STATE: dict = {}


def _pool_init(n: int) -> None:
    _POOL_STATE["sigmas"] = _dihedral_words0(n)
    _POOL_STATE["tables"] = _dihedral_tables0(n)


def _pool_canon(word: bytes) -> bytes:
    return _canonical0(word, _POOL_STATE["sigmas"], _POOL_STATE["tables"])


def _canonical_many(words: list[bytes], n: int, threads: int) -> list[bytes]:
    if threads > 1 and len(words) >= 4096:
        import multiprocessing

        try:
            ctx = multiprocessing.get_context("fork")
        except ValueError:
            ctx = None
        if ctx is not None:
            with ctx.Pool(threads, initializer=_pool_init, initargs=(n,)) as pool:
                return pool.map(_pool_canon, words, chunksize=512)
    sigmas = _dihedral_words0(n)
    tables = _dihedral_tables0(n)
    return [_canonical0(w, sigmas, tables) for w in words]


def preceq(a: SimClass, b: SimClass) -> bool:
    """Domination: some member of a's class has a kernel below one of b's."""
    if a.canonical.n != b.canonical.n:
        raise ContextError("classes live on different cycles")
    fine = a.kernel
    return any(kernel_contains(fine, k) for k in b.kernels)


def algorithm1(classes, n: int) -> list[SimClass]:
    """Filter classes stratum by stratum, highest rank first.

    A class is dropped as soon as any kept class of strictly higher rank
    dominates it; kept classes are returned in scan order (descending rank,
    then canonical form).  Every kept class is needed in a generating set and
    together they are enough, beyond the two units.
    """
    top = n // 2 + 1
    strata: dict[int, list[SimClass]] = {}
    for c in classes:
        if not 1 <= c.rank <= top:
            raise InvariantViolation(
                f"class of rank {c.rank} outside 1..{top}; units do not belong here")
        strata.setdefault(c.rank, []).append(c)
    kept: list[SimClass] = []
    kept_fines: list[tuple[int, ...]] = []
    for r in range(top, 0, -1):
        stratum = sorted(strata.get(r, ()), key=lambda c: c.canonical.images)
        survivors = []
        for cand in stratum:
            coarse = [k.labels for k in cand.kernels]
            if not any(
                    any(_labels_refine(fine, co) for co in coarse)
                    for fine in kept_fines):
                survivors.append(cand)
        kept.extend(survivors)
        kept_fines.extend(c.kernel.labels for c in survivors)
    return kept


def _pipeline(kind: MonoidKind, n: int, rng, threads: int) -> list[Transformation]:
    classes = _sim_classes(kind, n, rng, threads)
    return [c.representative for c in algorithm1(classes, n)]


def _least_rank3_strict(n: int) -> Transformation:
    best = None
    for word in _enumerate0(MonoidKind.SEND, n):
        if len(set(word)) == 3 and (best is None or word < best):
            best = word
    if best is None:
        raise InvariantViolation(f"no rank-3 strict endomorphism on {n} vertices")
    return Transformation(v + 1 for v in best)


def monoid_rank(kind: MonoidKind, n: int, seed: int | None = None,
                threads: int = 1) -> RankResult:
    """A minimum generating set and its size.

    The seed only varies which member represents each needed class; the
    number of classes, hence the rank, never changes with it.
    """
    if n < MIN_VERTICES:
        raise ContextError(f"rank needs n >= {MIN_VERTICES}, got {n}")
    rng = random.Random(seed) if seed is not None else None
    g = DihedralElement.g(n).transformation()
    h = DihedralElement.h(n).transformation()
    if kind is MonoidKind.AUT:
        extra: list[Transformation] = []
    elif kind is MonoidKind.SEND:
        extra = [_least_rank3_strict(4)] if n == 4 else []
    elif kind is MonoidKind.SWEND:
        if n == 3:
            extra = _pipeline(MonoidKind.WEND, 3, rng, threads)
        elif n == 4:
            extra = [_least_rank3_strict(4), Transformation.constant(4, 1)]
        else:
            extra = [Transformation.constant(n, 1)]
    else:
        extra = _pipeline(kind, n, rng, threads)
    gens = tuple(extra) + (g, h)
    counts = Counter(t.rank() for t in extra)
    return RankResult(
        kind=kind,
        n=n,
        generating_set=gens,
        rank_value=len(extra) + 2,
        per_rank_counts=tuple(sorted(counts.items())),
    )


def verify_generating_set(result: RankResult, cap: int | None = None) -> bool:
    """Check the emitted set generates exactly its monoid (cap-guarded)."""
    if not all(is_member(t, result.kind) for t in result.generating_set):
        return False
    words = _closure0(
        [t.bytes0() for t in result.generating_set], result.n, resolve_cap(cap))
    return len(words) == cardinality(result.kind, result.n)
