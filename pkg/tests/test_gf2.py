"""Codeword arithmetic, spans, partitions, profiles and code equivalence."""

from __future__ import annotations

from itertools import combinations

import pytest

from conftest import random_covering_basis, random_doubly_even_basis, random_gl, transform_basis
from loopforge.errors import DegenerateBasis, EmptyMeet, NotCovering
from loopforge.gf2 import (
    CodeBasis,
    Codeword,
    brute_force_equivalent,
    canonical_code_signature,
    class_partition,
    codes_equivalent,
    is_doubly_even,
    meet_weight,
    pair_length,
    profile_of,
    span,
    triple_length,
    type_vector,
    weight,
)

V1_R3 = CodeBasis.from_positions(7, [(1, 2, 3, 4), (1, 2, 5, 6), (1, 3, 5, 7)])
V2_R3 = CodeBasis.from_positions(
    13, [range(1, 9), (1, 2, 3, 4, 9, 10, 11, 12), (1, 5, 6, 7, 9, 10, 11, 13)]
)
V5_R3 = CodeBasis.from_positions(
    17,
    [
        range(1, 13),
        tuple(range(1, 9)) + (13, 14, 15, 16),
        (1, 2, 3, 4, 5, 9, 10, 11, 13, 14, 15, 17),
    ],
)
V3_R4 = CodeBasis.from_positions(
    12,
    [range(1, 9), (1, 2, 3, 4, 5, 6, 9, 10), (1, 2, 3, 4, 5, 7, 9, 11), (1,) + tuple(range(6, 13))],
)
V14_R4 = CodeBasis.from_positions(
    13,
    [range(1, 9), (1, 2, 3, 4, 9, 10, 11, 12), (1, 2, 3, 5, 9, 10, 11, 13), (1, 2, 9, 10)],
)


def test_weight_examples():
    assert weight(Codeword.from_positions(7, (1, 2, 3, 4))) == 4
    assert weight(Codeword(5, 0)) == 0
    assert weight(Codeword.from_positions(17, range(1, 13))) == 12


def test_meet_weight_examples():
    a = Codeword.from_positions(7, (1, 2, 3, 4))
    b = Codeword.from_positions(7, (1, 2, 5, 6))
    assert meet_weight([a, b]) == 2
    assert meet_weight([a, a]) == weight(a)
    assert meet_weight(list(V5_R3.generators)) == 5
    with pytest.raises(EmptyMeet):
        meet_weight([])


def test_span_v5_contains_pair_sum():
    words = {w.positions for w in span(V5_R3)}
    assert len(words) == 8
    assert tuple(range(9, 17)) in words  # v1 + v2


def test_span_single_generator():
    basis = CodeBasis.from_positions(5, [(1, 2, 3, 4)])
    assert [w.positions for w in span(basis)] == [(), (1, 2, 3, 4)]


def test_span_matches_subset_xor_oracle():
    # independent oracle: xor over explicit generator subsets
    oracle = set()
    for r in range(4):
        for subset in combinations(range(3), r):
            bits = 0
            for i in subset:
                bits ^= V1_R3.masks[i]
            oracle.add(bits)
    assert {w.bits for w in span(V1_R3)} == oracle
    assert sorted(w.weight for w in span(V1_R3)) == [0, 4, 4, 4, 4, 4, 4, 4]


def test_is_doubly_even():
    assert is_doubly_even(V5_R3)
    assert not is_doubly_even(CodeBasis.from_positions(4, [(1, 2)]))
    both = CodeBasis.from_positions(6, [(1, 2, 3, 4), (3, 4, 5, 6)])
    assert sorted(w.weight for w in span(both)) == [0, 4, 4, 4]
    assert is_doubly_even(both)


def test_class_partition_v1_singletons():
    part = class_partition(V1_R3)
    assert type_vector(part) == (1,) * 7
    assert len(part.nonempty()) == 7


def test_duplicate_generators_rejected():
    # indistinguishable generators are linearly dependent, hence rejected
    with pytest.raises(DegenerateBasis):
        CodeBasis.from_positions(4, [(1, 2, 3, 4), (1, 2, 3, 4)])


def test_single_generator_single_class():
    basis = CodeBasis.from_positions(6, [range(1, 7)])
    part = class_partition(basis)
    assert part.sizes == {(1,): 6}


def test_class_partition_v3_rank4():
    part = class_partition(V3_R4)
    assert type_vector(part) == (1, 1, 1, 1, 1, 1, 1, 1, 4)


def test_class_partition_requires_covering():
    basis = CodeBasis.from_positions(5, [(1, 2, 3, 4)])
    with pytest.raises(NotCovering):
        class_partition(basis)


def test_type_vector_examples():
    assert type_vector(class_partition(V2_R3)) == (1, 1, 1, 1, 3, 3, 3)
    assert type_vector(class_partition(V1_R3)) == (1,) * 7
    assert type_vector(class_partition(V14_R4)) == (1, 1, 1, 1, 1, 1, 2, 2, 3)


def test_lemma_blocks_partition_index_set(rng):
    for _ in range(25):
        basis = random_covering_basis(rng, rng.choice((2, 3, 4)), rng.randrange(6, 15))
        part = class_partition(basis)
        seen = 0
        for _, block in part.blocks:
            assert seen & block.bits == 0  # pairwise disjoint
            seen |= block.bits
        assert seen == (1 << basis.length) - 1  # union is everything
        labels = {}
        for p in range(1, basis.length + 1):
            labels.setdefault(
                tuple(i + 1 for i, m in enumerate(basis.masks) if m >> (p - 1) & 1), []
            ).append(p)
        assert {frozenset(v) for v in labels.values()} == part.as_sets()


def test_partition_is_basis_independent(rng):
    for _ in range(25):
        basis = random_covering_basis(rng, rng.choice((2, 3, 4)), rng.randrange(6, 15))
        g = random_gl(rng, basis.rank)
        assert class_partition(basis).as_sets() == class_partition(transform_basis(basis, g)).as_sets()


def test_inclusion_exclusion_identity(rng):
    for _ in range(25):
        basis = random_covering_basis(rng, rng.choice((3, 4)), rng.randrange(6, 20))
        part = class_partition(basis)
        n = basis.rank
        for i in range(1, n + 1):
            total = sum(c for sigma, c in part.sizes.items() if i in sigma)
            assert total == basis.generators[i - 1].weight
        for i, j in combinations(range(1, n + 1), 2):
            total = sum(c for sigma, c in part.sizes.items() if i in sigma and j in sigma)
            assert total == (basis.generators[i - 1] & basis.generators[j - 1]).weight


def test_weight_xor_identity(rng):
    for _ in range(100):
        m = rng.randrange(1, 30)
        u = Codeword(m, rng.getrandbits(m))
        v = Codeword(m, rng.getrandbits(m))
        assert weight(u ^ v) == weight(u) + weight(v) - 2 * meet_weight([u, v])


def test_profile_lengths():
    profile = profile_of(V2_R3)
    assert profile.singles == (8, 8, 8)
    assert pair_length(1, 2, profile) == 12
    assert triple_length(1, 2, 3, profile) == 13
    with pytest.raises(ValueError):
        pair_length(2, 2, profile)


def test_pair_length_identical_vectors():
    # t_i = t_j = t_ij collapses the union onto either generator
    from loopforge.gf2 import WeightProfile

    profile = WeightProfile(3, singles=(8, 8, 12), pairs=(8, 4, 4), triples=(3,))
    assert pair_length(1, 2, profile) == 8


def test_large_length_codewords():
    # multi-word lengths are free with int bitsets; check m = 1024
    v = Codeword.from_positions(1024, (1, 512, 1024))
    w = Codeword.from_positions(1024, (512, 1000))
    assert weight(v) == 3
    assert (v ^ w).positions == (1, 1000, 1024)
    assert meet_weight([v, w]) == 1


def test_codes_equivalent_under_permutation(rng):
    for _ in range(10):
        basis = random_doubly_even_basis(rng, 3, 10)
        perm = list(range(1, 11))
        rng.shuffle(perm)
        permuted = CodeBasis(
            10,
            tuple(
                Codeword.from_positions(10, [perm[p - 1] for p in g.positions])
                for g in basis.generators
            ),
        )
        assert codes_equivalent(basis, permuted)


def test_codes_equivalent_distinguishes_loops():
    assert not codes_equivalent(V1_R3, V2_R3)


def test_codes_equivalent_ignores_padding():
    small = CodeBasis.from_positions(7, [(1, 2, 3, 4), (1, 2, 5, 6), (1, 3, 5, 7)])
    padded = CodeBasis.from_positions(9, [(1, 2, 3, 4), (1, 2, 5, 6), (1, 3, 5, 7)])
    assert codes_equivalent(small, padded)


def test_codes_equivalent_backed_by_brute_force(rng):
    for _ in range(40):
        m = rng.randrange(6, 9)
        a = random_doubly_even_basis(rng, 2, m)
        b = random_doubly_even_basis(rng, 2, m)
        assert codes_equivalent(a, b) == brute_force_equivalent(a, b)


def test_codes_equivalent_brute_force_rank3(rng):
    for _ in range(10):
        a = random_doubly_even_basis(rng, 3, 7)
        b = random_doubly_even_basis(rng, 3, 7)
        assert codes_equivalent(a, b) == brute_force_equivalent(a, b)


def test_brute_force_confirms_permuted_copies(rng):
    # positive cases: a permuted copy must be found equivalent by both tests
    for _ in range(6):
        a = random_doubly_even_basis(rng, 3, 7)
        perm = list(range(1, 8))
        rng.shuffle(perm)
        b = CodeBasis(
            7,
            tuple(
                Codeword.from_positions(7, [perm[p - 1] for p in g.positions])
                for g in a.generators
            ),
        )
        assert brute_force_equivalent(a, b)
        assert codes_equivalent(a, b)


def test_equal_degree_reduced_pair_is_decided():
    # two same-degree members of one loop's reduced family get a definite verdict
    from loopforge.charvec import CharVector
    from loopforge.search import enumerate_reduced

    by_degree: dict[int, list] = {}
    for rep in enumerate_reduced(CharVector.from_shorthand(3, "000000")):
        by_degree.setdefault(rep.degree, []).append(rep)
    pair = next(reps for reps in by_degree.values() if len(reps) >= 2)
    verdict = codes_equivalent(pair[0].basis, pair[1].basis)
    assert isinstance(verdict, bool)
    if verdict:
        assert pair[0].type == pair[1].type
    assert (canonical_code_signature(pair[0].basis) == canonical_code_signature(pair[1].basis)) == verdict


def test_equivalence_relation_properties(rng):
    bases = [random_doubly_even_basis(rng, 3, rng.randrange(7, 11)) for _ in range(6)]
    for a in bases:
        assert codes_equivalent(a, a)
    for a in bases:
        for b in bases:
            assert codes_equivalent(a, b) == codes_equivalent(b, a)
    for a in bases:
        for b in bases:
            for c in bases:
                if codes_equivalent(a, b) and codes_equivalent(b, c):
                    assert codes_equivalent(a, c)
