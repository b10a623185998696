"""Regularity and Green's relations R, L and D, with checked witnesses.

Everything here concerns the two big monoids (end and wend); the three
group-like kinds are covered trivially by their unit groups.  Each relation
comes in two flavors: a structural test that produces a witness and verifies
it, and a brute-force oracle that searches the enumerated monoid.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import (
    Arc,
    ContextError,
    DomainError,
    InvariantViolation,
    KernelPartition,
    MonoidKind,
    ResourceCapError,
    Transformation,
    _pad0,
    is_member,
)
from .dihedral import DihedralElement, enumerate_dihedral
from .enumeration import _enumerate0, cardinality, resolve_cap


@dataclass(frozen=True)
class FullSublistWitness:
    """An arc of length rank on which the map walks with constant step.

    start is the first vertex of the arc, direction is +1 or -1, and length
    equals the rank, so the walk visits every image value exactly once.
    """

    start: int
    direction: int
    length: int

    def check(self, t: Transformation) -> bool:
        n = t.n
        if self.length != t.rank() or self.direction not in (1, -1):
            return False
        base = t.apply(self.start)
        for s in range(1, self.length):
            pos = (self.start - 1 + s) % n + 1
            want = (base - 1 + s * self.direction) % n + 1
            if t.apply(pos) != want:
                return False
        return True


def full_sublist_witness(t: Transformation) -> FullSublistWitness | None:
    """Search all starts (then +1 before -1) for a constant-step arc."""
    n = t.n
    imgs = t.images
    k = t.rank()
    for start in range(1, n + 1):
        base = imgs[start - 1]
        for u in (1, -1):
            ok = True
            for s in range(1, k):
                if imgs[(start - 1 + s) % n] != (base - 1 + s * u) % n + 1:
                    ok = False
                    break
            if ok:
                return FullSublistWitness(start, u, k)
    return None


def is_regular(t: Transformation, kind: MonoidKind | None = None) -> bool:
    """Regularity of `t` inside end or wend.

    The constant-step criterion does not depend on which of the two monoids
    `t` is taken in, so `kind` is accepted only for interface symmetry.
    """
    return full_sublist_witness(t) is not None


def regular_partner(t: Transformation) -> DihedralElement | None:
    """A unit b with t*b*t == t, read off the constant-step witness."""
    w = full_sublist_witness(t)
    if w is None:
        return None
    n = t.n
    i = w.start
    ia = t.apply(i)
    if w.direction == 1:
        return DihedralElement.rotation(n, (n + i - ia) % n)
    return DihedralElement.reflection(n, (i + ia - 1) % n)


@lru_cache(maxsize=None)
def _monoid_words(kind: MonoidKind, n: int, cap: int):
    """Enumerated monoid as (words, word set, padded tables); cap-guarded."""
    size = cardinality(kind, n)
    if size > cap:
        raise ResourceCapError(
            f"{kind} on {n} vertices has {size} elements, above the cap {cap}",
            needed=size, cap=cap)
    words = tuple(_enumerate0(kind, n))
    tables = tuple(_pad0(w) for w in words)
    return words, frozenset(words), tables


def regular_oracle(t: Transformation, kind: MonoidKind, cap: int | None = None) -> bool:
    """Brute-force regularity: search the whole monoid for b with t*b*t == t."""
    n = t.n
    words, _, tables = _monoid_words(kind, n, resolve_cap(cap))
    t0 = t.bytes0()
    t_table = _pad0(t0)
    for table in tables:
        if t0.translate(table).translate(t_table) == t0:
            return True
    return False


def r_related(a: Transformation, b: Transformation) -> bool:
    """R-equivalence: equal kernels."""
    if a.n != b.n:
        raise ContextError(f"maps on {a.n} and {b.n} points")
    return a.kernel() == b.kernel()


def factor(a: Transformation, b: Transformation) -> DihedralElement:
    """The unit s with a == b*s, for R-related members of wend.

    Raises DomainError when the kernels differ, so no such unit can exist.
    """
    if a.n != b.n:
        raise ContextError(f"maps on {a.n} and {b.n} points")
    if a.kernel() != b.kernel():
        raise DomainError("maps with different kernels never differ by a unit")
    for s in enumerate_dihedral(a.n):
        if b * s.transformation() == a:
            return s
    raise InvariantViolation("equal kernels but no unit factor; inputs are not weak endomorphisms")


def r_classes(kind: MonoidKind, n: int, cap: int | None = None):
    """The monoid grouped by kernel: dict KernelPartition -> sorted members."""
    out: dict[KernelPartition, list[Transformation]] = {}
    words, _, _ = _monoid_words(kind, n, resolve_cap(cap))
    for w in words:
        t = Transformation(v + 1 for v in w)
        out.setdefault(t.kernel(), []).append(t)
    for members in out.values():
        members.sort()
    return out


@lru_cache(maxsize=None)
def _arcs(n: int) -> tuple[Arc, ...]:
    """Every arc of the n-cycle, ordered by start vertex, then by size."""
    arcs: list[Arc] = []
    for start in range(1, n + 1):
        top = n if start == 1 else n - 1
        for size in range(1, top + 1):
            end = start + size - 1
            if end <= n:
                arcs.append(Arc(n, start, end))
            else:
                arcs.append(Arc(n, start, end - n, wrap=True))
    return tuple(arcs)


def _extend_identity_on_arc(arc: Arc, allowed: dict, n: int, strict: bool):
    """Complete the identity on `arc` to a map legal on every cyclic edge.

    Off-arc vertices take values from their `allowed` lists (subsets of the
    arc).  Returns the 1-based image tuple, or None when no completion exists.
    The feasible value sets are swept forward around the complement and a
    concrete choice is read back off the sweep, so a return is never wrong.
    """
    members = arc.members()
    if len(members) == n:
        return tuple(range(1, n + 1))
    first, last = members[0], members[-1]
    comp = []
    v = last % n + 1
    while v != first:
        comp.append(v)
        v = v % n + 1

    def ok(u: int, w: int) -> bool:
        d = (w - u) % n
        return d == 1 or d == n - 1 or (not strict and d == 0)

    layers: list[list[int]] = []
    prev = (last,)
    for z in comp:
        cands = [w for w in allowed.get(z, ()) if any(ok(u, w) for u in prev)]
        if not cands:
            return None
        layers.append(cands)
        prev = tuple(cands)
    final = [w for w in layers[-1] if ok(w, first)]
    if not final:
        return None
    choice = [0] * len(comp)
    choice[-1] = final[0]
    for idx in range(len(comp) - 2, -1, -1):
        nxt = choice[idx + 1]
        choice[idx] = next(w for w in layers[idx] if ok(w, nxt))
    images = list(range(1, n + 1))
    for z, w in zip(comp, choice):
        images[z - 1] = w
    return tuple(images)


@dataclass(frozen=True)
class LWitness:
    """Certificate that a and b generate the same left ideal.

    arc carries the image of a onto itself bijectively under a; sigma matches
    a with b on the arc; eps1 and eps2 are idempotents with images arc*sigma
    and arc, giving the explicit factorizations a = sigma*eps1*b and
    b = sigma^-1*eps2*a.
    """

    arc: Arc
    sigma: DihedralElement
    eps1: Transformation
    eps2: Transformation

    def check(self, a: Transformation, b: Transformation, kind: MonoidKind) -> bool:
        n = a.n
        if self.arc.n != n or self.sigma.n != n or self.eps1.n != n or self.eps2.n != n:
            return False
        members = self.arc.members()
        if {a.apply(x) for x in members} != set(a.image()):
            return False
        if any(a.apply(x) != b.apply(self.sigma.apply(x)) for x in members):
            return False
        moved = frozenset(self.sigma.apply(x) for x in members)
        if self.eps1.image() != moved or self.eps2.image() != self.arc.as_set():
            return False
        if not (self.eps1.is_idempotent() and self.eps2.is_idempotent()):
            return False
        if not (is_member(self.eps1, kind) and is_member(self.eps2, kind)):
            return False
        st = self.sigma.transformation()
        return st * self.eps1 * b == a and self.sigma.inverse().transformation() * self.eps2 * a == b


def l_related(a: Transformation, b: Transformation, kind: MonoidKind):
    """L-equivalence inside end or wend: (True, checked witness) or (False, None).

    All arcs carrying im(a) and all units matching a with b on them are tried;
    for each, idempotent completions are decided exactly, so a False is a
    genuine non-relation and a True always ships a verified certificate.
    """
    if kind not in (MonoidKind.END, MonoidKind.WEND):
        raise DomainError(f"L-relation analysis covers end and wend, not {kind}")
    n = a.n
    if b.n != n:
        raise ContextError(f"maps on {a.n} and {b.n} points")
    img = a.image()
    if img != b.image():
        return False, None
    strict = kind is MonoidKind.END
    a_imgs, b_imgs = a.images, b.images
    units = enumerate_dihedral(n)
    unverified = False
    for arc in _arcs(n):
        members = arc.members()
        if {a_imgs[x - 1] for x in members} != img:
            continue
        arc_set = arc.as_set()
        a_on_arc: dict[int, list[int]] = {}
        for w in members:
            a_on_arc.setdefault(a_imgs[w - 1], []).append(w)
        for sigma in units:
            s_imgs = sigma.images()
            if any(a_imgs[x - 1] != b_imgs[s_imgs[x - 1] - 1] for x in members):
                continue
            allowed2 = {}
            solvable = True
            for z in range(1, n + 1):
                if z in arc_set:
                    continue
                cands = a_on_arc.get(b_imgs[s_imgs[z - 1] - 1], ())
                if not cands:
                    solvable = False
                    break
                allowed2[z] = tuple(cands)
            if not solvable:
                continue
            eps2_images = _extend_identity_on_arc(arc, allowed2, n, strict)
            if eps2_images is None:
                continue
            moved_arc = Arc.from_vertices((s_imgs[x - 1] for x in members), n)
            moved_set = moved_arc.as_set()
            inv_imgs = sigma.inverse().images()
            b_on_moved: dict[int, list[int]] = {}
            for x in moved_arc.members():
                b_on_moved.setdefault(b_imgs[x - 1], []).append(x)
            allowed1 = {}
            solvable = True
            for y in range(1, n + 1):
                if y in moved_set:
                    continue
                cands = b_on_moved.get(a_imgs[inv_imgs[y - 1] - 1], ())
                if not cands:
                    solvable = False
                    break
                allowed1[y] = tuple(cands)
            if not solvable:
                continue
            eps1_images = _extend_identity_on_arc(moved_arc, allowed1, n, strict)
            if eps1_images is None:
                continue
            witness = LWitness(arc, sigma, Transformation(eps1_images), Transformation(eps2_images))
            if witness.check(a, b, kind):
                return True, witness
            unverified = True
    if unverified and l_oracle(a, b, kind):
        raise InvariantViolation(f"no verifiable L-witness found for related {a!r}, {b!r}")
    return False, None


def l_oracle(a: Transformation, b: Transformation, kind: MonoidKind,
             cap: int | None = None) -> bool:
    """Brute-force L-equivalence: search for c, d with c*b == a and d*a == b."""
    n = a.n
    words, _, _ = _monoid_words(kind, n, resolve_cap(cap))
    a0, b0 = a.bytes0(), b.bytes0()
    a_table, b_table = _pad0(a0), _pad0(b0)
    if not any(w.translate(b_table) == a0 for w in words):
        return False
    return any(w.translate(a_table) == b0 for w in words)


def d_related(a: Transformation, b: Transformation, kind: MonoidKind) -> bool:
    """D-equivalence, decided as R followed by L via the 2n unit translates."""
    n = a.n
    for s in enumerate_dihedral(n):
        if l_related(a * s.transformation(), b, kind)[0]:
            return True
    return False


def l_classes(kind: MonoidKind, n: int, cap: int | None = None):
    """The L-classes of the monoid as a list of sorted member lists."""
    words, _, _ = _monoid_words(kind, n, resolve_cap(cap))
    by_image: dict[frozenset, list[Transformation]] = {}
    for w in sorted(words):
        t = Transformation(v + 1 for v in w)
        by_image.setdefault(t.image(), []).append(t)
    classes: list[list[Transformation]] = []
    for key in sorted(by_image, key=sorted):
        reps: list[int] = []
        for t in by_image[key]:
            for ci in reps:
                if l_related(t, classes[ci][0], kind)[0]:
                    classes[ci].append(t)
                    break
            else:
                reps.append(len(classes))
                classes.append([t])
    for members in classes:
        members.sort()
    classes.sort(key=lambda members: members[0].images)
    return classes


def d_classes(kind: MonoidKind, n: int, cap: int | None = None):
    """The D-classes, computed as the join of the R- and L-partitions."""
    words, _, _ = _monoid_words(kind, n, resolve_cap(cap))
    elements = sorted(Transformation(v + 1 for v in w) for w in words)
    index = {t: i for i, t in enumerate(elements)}
    parent = list(range(len(elements)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    groups: dict[KernelPartition, int] = {}
    for t, i in index.items():
        k = t.kernel()
        if k in groups:
            union(groups[k], i)
        else:
            groups[k] = i
    for members in l_classes(kind, n, cap):
        head = index[members[0]]
        for t in members[1:]:
            union(head, index[t])
    blocks: dict[int, list[Transformation]] = {}
    for t, i in index.items():
        blocks.setdefault(find(i), []).append(t)
    out = [sorted(members) for members in blocks.values()]
    out.sort(key=lambda members: members[0].images)
    return out
