import itertools
import math
import random

import pytest

from cycle_endo import (
    ContextError,
    DihedralElement,
    DomainError,
    MonoidKind,
    ResourceCapError,
    StepSequence,
    Transformation,
    cardinality,
    closure,
    enumerate_dihedral,
    enumerate_images,
    enumerate_monoid,
    is_member,
    resolve_cap,
)
from cycle_endo.enumeration import CAP_ENV_VAR, DEFAULT_CAP

AUT = MonoidKind.AUT
SEND = MonoidKind.SEND
END = MonoidKind.END
SWEND = MonoidKind.SWEND
WEND = MonoidKind.WEND

# size table for n = 3..12, columns aut, send, end, swend, wend
SIZES = {
    3: (6, 6, 6, 27, 27),
    4: (8, 32, 32, 36, 84),
    5: (10, 10, 10, 15, 265),
    6: (12, 12, 132, 18, 858),
    7: (14, 14, 14, 21, 2765),
    8: (16, 16, 576, 24, 8872),
    9: (18, 18, 18, 27, 28269),
    10: (20, 20, 2540, 30, 89550),
    11: (22, 22, 22, 33, 282205),
    12: (24, 24, 11112, 36, 885492),
}
KIND_COLUMNS = (AUT, SEND, END, SWEND, WEND)


def all_maps(n):
    for images in itertools.product(range(1, n + 1), repeat=n):
        yield images


def test_step_sequence_decode():
    s = StepSequence(2, (1, 1, -1, 0))
    t = s.decode()
    assert t.images == (2, 3, 4, 3, 3)
    assert StepSequence(5, (1, 1, 1, 1)).decode().images == (5, 1, 2, 3, 4)


def test_step_sequence_admissibility():
    assert StepSequence(1, (1, 1, 1, 1)).is_admissible(WEND)     # sum n-1
    assert StepSequence(1, (1, 1, 1, 1)).is_admissible(END)
    assert not StepSequence(1, (-1, -1, 0, 0)).is_admissible(WEND)  # sum -2
    assert StepSequence(1, (1, -1, 1, -1)).is_admissible(WEND)      # sum 0
    assert not StepSequence(1, (1, -1, 1, -1)).is_admissible(END)   # sum 0 never closes strictly
    assert not StepSequence(1, (1, 0, -1, 1)).is_admissible(END)    # contains a 0 step
    with pytest.raises(DomainError):
        StepSequence(1, (1, 1, 1, 1)).is_admissible(AUT)


def test_step_sequence_validation():
    with pytest.raises(DomainError):
        StepSequence(0, (1, 1))
    with pytest.raises(DomainError):
        StepSequence(1, (2, 0))
    with pytest.raises(ContextError):
        StepSequence(1, (1,))


def test_decoded_sequences_are_members():
    n = 6
    rng = random.Random(2)
    for _ in range(200):
        steps = tuple(rng.choice((-1, 0, 1)) for _ in range(n - 1))
        seq = StepSequence(rng.randrange(1, n + 1), steps)
        t = seq.decode()
        if seq.is_admissible(WEND):
            assert is_member(t, WEND)
        else:
            assert not is_member(t, WEND)


def test_cardinality_table():
    for n, row in SIZES.items():
        for kind, expected in zip(KIND_COLUMNS, row):
            assert cardinality(kind, n) == expected, (kind, n)


def test_cardinality_closed_forms():
    # |wEnd| from the binomial sum, |End| from the middle coefficient
    for n in range(3, 13):
        s = 3 * n + 2 * n * sum(math.comb(2 * k - 1, k) * math.comb(n, 2 * k)
                                for k in range(1, n // 2 + 1))
        assert cardinality(WEND, n) == s
        if n % 2 == 0:
            assert cardinality(END, n) == 2 * n + n * math.comb(n, n // 2)
        else:
            assert cardinality(END, n) == 2 * n


def test_enumeration_matches_brute_force():
    for n in (3, 4, 5):
        pool = list(all_maps(n))
        for kind in MonoidKind:
            expected = {images for images in pool
                        if is_member(Transformation(images), kind)}
            got = list(enumerate_images(kind, n))
            assert len(got) == len(set(got)), (kind, n)
            assert set(got) == expected, (kind, n)


def test_enumeration_counts_match_cardinality():
    for n in range(3, 9):
        for kind in MonoidKind:
            count = sum(1 for _ in enumerate_images(kind, n))
            assert count == cardinality(kind, n), (kind, n)


def test_enumeration_distinct_midrange():
    for kind, n in ((END, 10), (WEND, 9)):
        seen = set(enumerate_images(kind, n))
        assert len(seen) == cardinality(kind, n)


def test_wend_stream_head():
    it = enumerate_images(WEND, 4)
    head = [next(it) for _ in range(3)]
    assert head == [(1, 4, 3, 2), (1, 4, 3, 4), (1, 4, 4, 4)]


def test_stream_grouped_by_start_vertex():
    prev_start = 1
    for images in enumerate_images(WEND, 5):
        assert images[0] >= prev_start
        prev_start = images[0]


def test_special_streams_are_sorted():
    for kind, n in ((AUT, 6), (SEND, 5), (SEND, 4), (SWEND, 4), (SWEND, 7)):
        got = list(enumerate_images(kind, n))
        assert got == sorted(got), (kind, n)


def test_enumerate_monoid_yields_members():
    for kind in MonoidKind:
        for t in enumerate_monoid(kind, 6):
            assert isinstance(t, Transformation)
            assert is_member(t, kind)


def test_end_equals_aut_for_odd_n():
    for n in (5, 7):
        assert set(enumerate_images(END, n)) == set(enumerate_images(AUT, n))


def test_swend_is_units_plus_constants_from_five():
    for n in range(5, 9):
        expected = {x.transformation().images for x in enumerate_dihedral(n)}
        expected |= {(v,) * n for v in range(1, n + 1)}
        assert set(enumerate_images(SWEND, n)) == expected


def test_closure_of_rotation():
    g = DihedralElement.g(4).transformation()
    got = closure([g])
    assert got == {DihedralElement.rotation(4, k).transformation() for k in range(4)}


def test_closure_sizes():
    n = 5
    g = DihedralElement.g(n).transformation()
    h = DihedralElement.h(n).transformation()
    c = Transformation.constant(n, 1)
    assert len(closure([g, h])) == 10
    assert len(closure([g, h, c])) == 15    # dihedral plus the five constants
    assert closure([c]) == {c}
    assert closure([]) == set()


def test_closure_is_idempotent():
    n = 5
    gens = [DihedralElement.g(n).transformation(), Transformation((1, 1, 2, 3, 2))]
    once = closure(gens)
    again = closure(once)
    assert once == again


def test_closure_mixed_sizes_rejected():
    with pytest.raises(ContextError):
        closure([Transformation.identity(4), Transformation.identity(5)])


def test_closure_cap():
    n = 6
    g = DihedralElement.g(n).transformation()
    h = DihedralElement.h(n).transformation()
    with pytest.raises(ResourceCapError) as info:
        closure([g, h], cap=5)
    assert info.value.cap == 5
    assert info.value.needed > 5


def test_resolve_cap_precedence(monkeypatch):
    monkeypatch.delenv(CAP_ENV_VAR, raising=False)
    assert resolve_cap(None) == DEFAULT_CAP
    assert resolve_cap(123) == 123
    monkeypatch.setenv(CAP_ENV_VAR, "456")
    assert resolve_cap(None) == 456
    assert resolve_cap(123) == 123
    monkeypatch.setenv(CAP_ENV_VAR, "not a number")
    with pytest.raises(DomainError):
        resolve_cap(None)
