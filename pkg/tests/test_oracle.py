"""Tests for the brute-force enumeration oracle."""

import random

import pytest

from spmatroids import oracle
from spmatroids.oracle import (
    LabeledMultigraph,
    MatroidSignature,
    check_basis_exchange,
    connected_counts,
    direct_sum,
    dump_catalog,
    enumerate_connected,
    extend,
    is_simple,
    minor_check,
    quasi_counts,
    rank_of_subset,
    signature,
    single_edge,
    single_loop,
    two_cycle,
)

U23 = MatroidSignature(3, 2, (3, 5, 6))  # all 2-subsets of {1,2,3}
U12 = MatroidSignature(2, 1, (1, 2))
U24 = MatroidSignature(
    4, 2, tuple(sorted((1 << a) | (1 << b) for a in range(4) for b in range(a + 1, 4)))
)


def test_signature_base_cases():
    assert signature(two_cycle(1, 2)) == U12
    assert signature(single_loop(1)) == MatroidSignature(1, 0, (0,))
    assert signature(single_edge(1)) == MatroidSignature(1, 1, (1,))
    triangle = LabeledMultigraph(3, ((0, 1, 1), (1, 2, 2), (2, 0, 3)))
    assert signature(triangle) == U23


def test_four_cycle_labelings_all_give_uniform():
    # Any labeling of the 4-cycle induces the uniform rank-3 matroid.
    from itertools import permutations

    all_triples = tuple(sorted(0b1111 & ~(1 << i) for i in range(4)))
    for perm in permutations((1, 2, 3, 4)):
        g = LabeledMultigraph(
            4,
            tuple((i, (i + 1) % 4, perm[i]) for i in range(4)),
        )
        sig = signature(g)
        assert sig == MatroidSignature(4, 3, all_triples)


def test_extend_two_cycle():
    out = extend(two_cycle(1, 2), 3)
    assert len(out) == 6  # 2 parallel + 2 edges x 2 series label assignments
    sigs = {signature(g) for g in out}
    # parallel extensions all give the triple edge, series all give triangles
    assert sigs == {MatroidSignature(3, 1, (1, 2, 4)), U23}


def test_extend_label_reuse_rejected():
    with pytest.raises(ValueError):
        extend(two_cycle(1, 2), 2)


def test_extend_single_edge_terminal():
    assert extend(single_edge(1), 2) == []
    assert extend(single_loop(1), 2) == []


def test_subdivided_triple_edge_bases():
    # triple edge {1,2,3}, subdivide edge 3 into (3, 4): bases 13,14,23,24,34
    g = LabeledMultigraph(
        3, ((0, 1, 1), (0, 1, 2), (0, 2, 3), (2, 1, 4))
    )
    sig = signature(g)
    want = {0b0101, 0b1001, 0b0110, 0b1010, 0b1100}
    assert set(sig.bases) == want
    assert rank_of_subset(sig, 0b0011) == 1  # {1, 2} is a parallel class
    assert not is_simple(sig)


def test_enumerate_small():
    assert connected_counts(1) == ([1, 1], [0, 1])
    assert connected_counts(3) == ([0, 1, 1, 0], [0, 0, 1, 0])
    c4, e4 = connected_counts(4)
    assert c4 == [0, 1, 6, 1, 0]
    assert e4 == [0, 0, 0, 1, 0]
    assert sum(c4) == 8


def test_enumerate_caps():
    with pytest.raises(ValueError):
        enumerate_connected(9)
    with pytest.raises(ValueError):
        enumerate_connected(0)
    with pytest.raises(ValueError):
        quasi_counts(9)


def test_lossless_level_dedup():
    for n in range(2, 6):
        assert enumerate_connected(n) == enumerate_connected(n, dedup_levels=False)


def test_catalog_rank_multiset_duality():
    for n in range(1, 7):
        c_row, _ = connected_counts(n)
        assert c_row == c_row[::-1]


def test_is_simple():
    assert is_simple(U23)
    assert not is_simple(U12)
    assert not is_simple(MatroidSignature(1, 0, (0,)))  # a loop


def test_rank_of_subset():
    assert rank_of_subset(U23, 0b011) == 2
    assert rank_of_subset(U23, 0) == 0
    assert rank_of_subset(U23, 0b111) == 2


def test_quasi_counts():
    assert quasi_counts(0) == ([1], [1])
    assert quasi_counts(2) == ([1, 3, 1], [0, 0, 1])
    a3, s3 = quasi_counts(3)
    assert s3 == [0, 0, 1, 1]
    assert a3 == [1, 7, 7, 1]


def test_minor_check_identity_cases():
    assert not minor_check(U24)
    assert not minor_check(oracle._k4_signature())
    assert minor_check(U23)


def test_minor_check_on_catalog_and_sums():
    for n in range(1, 6):
        for entry in enumerate_connected(n):
            assert minor_check(entry.sig)
    rng = random.Random(5)
    sigs4 = [e.sig for e in enumerate_connected(4)]
    sigs2 = [e.sig for e in enumerate_connected(2)]
    for s1 in rng.sample(sigs4, 4):
        for s2 in sigs2:
            assert minor_check(direct_sum(s1, s2))


def test_minor_check_catches_planted_minor():
    # U24 plus a coloop still contains a U24 minor.
    coloop = MatroidSignature(1, 1, (1,))
    assert not minor_check(direct_sum(U24, coloop))


def test_basis_exchange_spot_checks():
    rng = random.Random(11)
    for n in range(1, 6):
        for entry in enumerate_connected(n):
            assert check_basis_exchange(entry.sig, rng)


def test_basis_exchange_rejects_non_matroid():
    # {1,2} and {3,4} as "bases" violate exchange.
    fake = MatroidSignature(4, 2, (0b0011, 0b1100))
    rng = random.Random(3)
    assert not check_basis_exchange(fake, rng, trials=200)


def test_dump_catalog_format():
    text = dump_catalog(2)
    lines = text.splitlines()
    assert lines[0] == "1 0 0 -"
    assert lines[1] == "1 1 1 1"
    assert lines[2] == "2 1 0 1,2"
    assert len(lines) == 3


def test_direct_sum():
    s = direct_sum(U12, U23)
    assert s.ground_size == 5 and s.rank == 3
    assert len(s.bases) == 2 * 3
