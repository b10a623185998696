import itertools
import random

import pytest

from cycle_endo import (
    InvariantViolation,
    MonoidKind,
    ResourceCapError,
    Transformation,
    algorithm1,
    cardinality,
    closure,
    enumerate_dihedral,
    enumerate_monoid,
    is_member,
    monoid_rank,
    preceq,
    r_transversal,
    sim_canonicalize,
    verify_generating_set,
)

AUT = MonoidKind.AUT
SEND = MonoidKind.SEND
END = MonoidKind.END
SWEND = MonoidKind.SWEND
WEND = MonoidKind.WEND

# rank table for n = 3..12, columns aut, send, end, swend, wend
RANKS = {
    3: (2, 2, 2, 3, 3),
    4: (2, 3, 3, 4, 4),
    5: (2, 2, 2, 3, 4),
    6: (2, 2, 3, 3, 6),
    7: (2, 2, 2, 3, 7),
    8: (2, 2, 4, 3, 13),
    9: (2, 2, 2, 3, 20),
    10: (2, 2, 5, 3, 50),
    11: (2, 2, 2, 3, 105),
    12: (2, 2, 10, 3, 272),
}
KIND_COLUMNS = (AUT, SEND, END, SWEND, WEND)

WEND_PROFILES = {
    3: ((2, 1),),
    4: ((2, 1), (3, 1)),
    5: ((3, 2),),
    6: ((3, 3), (4, 1)),
    7: ((3, 3), (4, 2)),
    8: ((3, 3), (4, 7), (5, 1)),
}
END_PROFILES = {4: ((3, 1),), 6: ((4, 1),), 8: ((4, 1), (5, 1))}


def test_sim_canonicalize_example():
    c = sim_canonicalize(Transformation((2, 3, 2, 1, 2)))
    assert c.canonical.images == (1, 1, 2, 1, 5)
    assert c.rank == 3
    assert len(c.kernels) == 5
    assert c.representative == Transformation((2, 3, 2, 1, 2))


def test_sim_canonicalize_constant():
    c = sim_canonicalize(Transformation.constant(5, 3))
    assert c.canonical.images == (1, 1, 1, 1, 1)
    assert c.rank == 1
    assert len(c.kernels) == 1


def test_canonical_is_translation_invariant():
    rng = random.Random(5)
    n = 7
    elems = list(enumerate_monoid(WEND, n))
    units = [s.transformation() for s in enumerate_dihedral(n)]
    for _ in range(60):
        t = rng.choice(elems)
        base = sim_canonicalize(t)
        for u in units:
            for moved in (t * u, u * t, u * t * u):
                assert sim_canonicalize(moved).canonical == base.canonical


def test_transversal_hits_each_kernel_once():
    reps = r_transversal(WEND, 5)
    assert len(reps) == 26
    kernels = {t.kernel() for t in reps}
    assert len(kernels) == 26
    assert all(not t.is_bijective() for t in reps)
    assert len(r_transversal(WEND, 4)) == 10
    assert len(r_transversal(END, 6)) == 10


def test_transversal_covers_all_nonunit_kernels():
    n = 5
    reps = {t.kernel() for t in r_transversal(WEND, n)}
    seen = {t.kernel() for t in enumerate_monoid(WEND, n) if not t.is_bijective()}
    assert reps == seen


def test_transversal_is_deterministic_without_seed():
    assert r_transversal(WEND, 6) == r_transversal(WEND, 6)
    a = r_transversal(WEND, 6, seed=9)
    b = r_transversal(WEND, 6, seed=9)
    assert a == b


def test_preceq_directions():
    const = sim_canonicalize(Transformation.constant(5, 1))
    edge = sim_canonicalize(Transformation((1, 2, 1, 2, 1)))
    assert preceq(edge, const)       # everything lies below the constants
    assert not preceq(const, edge)
    assert preceq(edge, edge)


def test_algorithm1_rejects_units():
    unit = sim_canonicalize(Transformation.identity(6))
    with pytest.raises(InvariantViolation):
        algorithm1([unit], 6)


def test_algorithm1_drops_dominated_classes():
    classes = {sim_canonicalize(t).canonical: sim_canonicalize(t)
               for t in enumerate_monoid(WEND, 5) if not t.is_bijective()}
    kept = algorithm1(list(classes.values()), 5)
    assert len(kept) == 2
    assert sorted(c.rank for c in kept) == [3, 3]
    # anything not kept sits above some kept class of higher rank
    for c in classes.values():
        if c not in kept:
            assert any(preceq(k, c) for k in kept if k.rank > c.rank)


def test_rank_table():
    for n, row in RANKS.items():
        for kind, expected in zip(KIND_COLUMNS, row):
            res = monoid_rank(kind, n)
            assert res.rank_value == expected, (kind, n)
            assert len(res.generating_set) == expected, (kind, n)


def test_rank_profiles():
    for n, profile in WEND_PROFILES.items():
        assert monoid_rank(WEND, n).per_rank_counts == profile
    for n, profile in END_PROFILES.items():
        assert monoid_rank(END, n).per_rank_counts == profile


def test_generating_set_wend5():
    res = monoid_rank(WEND, 5)
    lines = [t.to_line() for t in res.generating_set]
    assert lines == ["1 1 2 1 5", "1 1 2 3 2", "2 3 4 5 1", "5 4 3 2 1"]


def test_generators_are_members():
    for kind in KIND_COLUMNS:
        for n in (3, 4, 5, 6, 7):
            res = monoid_rank(kind, n)
            for t in res.generating_set:
                assert is_member(t, kind), (kind, n, t)


def test_generating_sets_generate():
    for kind in KIND_COLUMNS:
        for n in (3, 4, 5, 6):
            res = monoid_rank(kind, n)
            assert verify_generating_set(res), (kind, n)


def test_generating_set_minimal_small():
    """No generator can be dropped (n = 3, 4, every monoid)."""
    for kind in KIND_COLUMNS:
        for n in (3, 4):
            res = monoid_rank(kind, n)
            want = cardinality(kind, n)
            gens = list(res.generating_set)
            assert len(closure(gens)) == want
            for skip in range(len(gens)):
                rest = gens[:skip] + gens[skip + 1:]
                assert len(closure(rest, n=n)) < want, (kind, n, skip)


def test_rank_is_seed_independent():
    for kind in (END, WEND):
        for n in (6, 7, 8):
            base = monoid_rank(kind, n)
            for seed in (1, 7):
                res = monoid_rank(kind, n, seed=seed)
                assert res.rank_value == base.rank_value
                assert res.per_rank_counts == base.per_rank_counts


def test_seeded_generators_still_generate():
    res = monoid_rank(WEND, 6, seed=42)
    assert verify_generating_set(res)


def test_threads_do_not_change_the_result():
    base = monoid_rank(WEND, 10)
    threaded = monoid_rank(WEND, 10, threads=2)
    assert threaded.rank_value == base.rank_value == 50
    assert threaded.generating_set == base.generating_set
    assert threaded.per_rank_counts == base.per_rank_counts


def test_verify_generating_set_cap():
    res = monoid_rank(WEND, 6)
    with pytest.raises(ResourceCapError):
        verify_generating_set(res, cap=10)


def test_rank_result_fields():
    res = monoid_rank(END, 8)
    assert res.kind is END
    assert res.n == 8
    assert res.rank_value == 4
    assert res.per_rank_counts == ((4, 1), (5, 1))
    assert sum(c for _, c in res.per_rank_counts) == res.rank_value - 2
