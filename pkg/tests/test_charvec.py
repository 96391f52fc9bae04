"""Characteristic vectors: extraction, polarization, GL action, orbits."""

from __future__ import annotations

import pytest

from conftest import random_doubly_even_basis, random_gl, transform_basis
from loopforge.charvec import (
    CharVector,
    GLMatrix,
    LoopClassId,
    RANK3_REPRESENTATIVES,
    RANK4_REPRESENTATIVES,
    alpha_radical,
    canonicalize,
    char_vector_of,
    enumerate_nonassociative,
    eval_alpha,
    eval_beta,
    eval_sigma,
    gl_group,
    gl_transform,
    normalize_rank4,
    representative,
)
from loopforge.errors import (
    AssociativeLoop,
    NotDoublyEven,
    NotInvertible,
    UnsupportedRank,
)
from loopforge.gf2 import CodeBasis

V1_R3 = CodeBasis.from_positions(7, [(1, 2, 3, 4), (1, 2, 5, 6), (1, 3, 5, 7)])
V5_R3 = CodeBasis.from_positions(
    17,
    [
        range(1, 13),
        tuple(range(1, 9)) + (13, 14, 15, 16),
        (1, 2, 3, 4, 5, 9, 10, 11, 13, 14, 15, 17),
    ],
)


def test_char_vector_of_v5():
    assert char_vector_of(V5_R3).shorthand() == "111000"


def test_char_vector_of_v1():
    assert char_vector_of(V1_R3).shorthand() == "111111"


def test_char_vector_disjoint_blocks_rank2():
    basis = CodeBasis.from_positions(16, [range(1, 9), range(9, 17)])
    cv = char_vector_of(basis)
    assert cv.sigma == (0, 0) and cv.beta == (0,) and cv.alpha == ()
    assert not cv.nonassociative


def test_char_vector_requires_doubly_even():
    with pytest.raises(NotDoublyEven):
        char_vector_of(CodeBasis.from_positions(4, [(1, 2)]))


def test_eval_basis_cases():
    cv = char_vector_of(V1_R3)
    for i in range(3):
        assert eval_sigma(cv, 1 << i) == cv.sigma[i]
    assert eval_beta(cv, 1, 2) == cv.beta[0]
    assert eval_alpha(cv, 1, 2, 4) == cv.alpha[0]


def test_eval_sigma_pair_sum_matches_weight_oracle():
    cv = char_vector_of(V1_R3)
    # direct computation: |v1 + v2| of the concrete code
    v12 = V1_R3.generators[0] ^ V1_R3.generators[1]
    assert eval_sigma(cv, 0b011) == (v12.weight // 4) % 2 == 1


def test_eval_alpha_alternating():
    cv = char_vector_of(V1_R3)
    for x in range(8):
        for y in range(8):
            assert eval_alpha(cv, x, x, y) == 0
            assert eval_alpha(cv, x, y, x) == 0
            assert eval_alpha(cv, y, x, x) == 0


def test_polarization_identities_exhaustive():
    for short in ("111111", "000111", "0001111100", "1110110100"):
        n = 3 if len(short) == 6 else 4
        cv = CharVector.from_shorthand(n, short)
        size = 1 << n
        for x in range(size):
            for y in range(size):
                assert eval_sigma(cv, x ^ y) == (
                    eval_sigma(cv, x) ^ eval_sigma(cv, y) ^ eval_beta(cv, x, y)
                )
                for z in range(size):
                    assert eval_beta(cv, x ^ y, z) == (
                        eval_beta(cv, x, z) ^ eval_beta(cv, y, z) ^ eval_alpha(cv, x, y, z)
                    )


def test_alpha_trilinear_exhaustive():
    for short in ("000111", "0110111100"):
        n = 3 if len(short) == 6 else 4
        cv = CharVector.from_shorthand(n, short)
        size = 1 << n
        table = [
            [[eval_alpha(cv, x, y, z) for z in range(size)] for y in range(size)]
            for x in range(size)
        ]
        for x in range(size):
            for y in range(size):
                for z in range(size):
                    for w in range(size):
                        assert table[x ^ y][z][w] == table[x][z][w] ^ table[y][z][w]
        # slot symmetry: alternating over GF(2) implies fully symmetric
        for x in range(size):
            for y in range(size):
                for z in range(size):
                    assert table[x][y][z] == table[y][x][z] == table[y][z][x]


def test_gl_transform_identity_and_swap():
    cv = CharVector.from_shorthand(3, "100000")
    assert gl_transform(cv, GLMatrix.identity(3)) == cv
    swap = GLMatrix(3, (0b010, 0b001, 0b100))
    assert gl_transform(cv, swap).shorthand() == "010000"


def test_gl_transform_matches_weight_oracle(rng):
    for _ in range(60):
        rank = rng.choice((3, 4, 5))
        basis = random_doubly_even_basis(rng, rank, rng.randrange(3 + 2 * rank, 25))
        g = random_gl(rng, rank)
        assert gl_transform(char_vector_of(basis), g) == char_vector_of(
            transform_basis(basis, g)
        )


def test_singular_matrix_rejected():
    with pytest.raises(NotInvertible):
        GLMatrix(3, (0b011, 0b010, 0b001 ^ 0b010 ^ 0b011))


def test_glmatrix_inverse_and_product(rng):
    for n in (3, 4):
        for _ in range(20):
            g = random_gl(rng, n)
            assert (g * g.inverse()).rows == GLMatrix.identity(n).rows
            h = random_gl(rng, n)
            x = rng.getrandbits(n)
            assert (g * h).apply(x) == h.apply(g.apply(x))


def test_gl_transform_is_a_right_action(rng):
    # applying g then h equals applying h * g in one step
    for short in ("000111", "0110111100"):
        n = 3 if len(short) == 6 else 4
        cv = CharVector.from_shorthand(n, short)
        for _ in range(20):
            g = random_gl(rng, n)
            h = random_gl(rng, n)
            assert gl_transform(gl_transform(cv, g), h) == gl_transform(cv, h * g)


def test_gl_group_sizes():
    assert len(gl_group(3)) == 168
    assert len(gl_group(4)) == 20160
    with pytest.raises(UnsupportedRank):
        gl_group(5)


def test_enumerate_counts():
    assert sum(1 for _ in enumerate_nonassociative(3)) == 64
    assert sum(1 for _ in enumerate_nonassociative(4)) == 15360
    with pytest.raises(UnsupportedRank):
        next(enumerate_nonassociative(5))


def test_rank3_orbit_partition():
    seen: dict[int, int] = {}
    for cv in enumerate_nonassociative(3):
        cid, _, _ = canonicalize(cv)
        seen[cid.index] = seen.get(cid.index, 0) + 1
    assert len(seen) == 5
    assert sum(seen.values()) == 64


def test_canonicalize_examples():
    cid, rep, _ = canonicalize(CharVector.from_shorthand(3, "111000"))
    assert str(cid) == "C3_5" and rep.shorthand() == "100000"
    cid, rep, _ = canonicalize(CharVector.from_shorthand(3, "111110"))
    assert str(cid) == "C3_4" and rep.shorthand() == "110000"


def test_representatives_are_fixed_points():
    for rank, table in ((3, RANK3_REPRESENTATIVES), (4, RANK4_REPRESENTATIVES)):
        for index, short in enumerate(table, start=1):
            cv = CharVector.from_shorthand(rank, short)
            cid, rep, witness = canonicalize(cv)
            assert cid == LoopClassId(rank, index)
            assert rep == cv
            assert witness.rows == GLMatrix.identity(rank).rows


def test_canonicalize_constant_on_orbits(rng):
    for short in ("111111", "000000", "0001111100", "0110111100"):
        n = 3 if len(short) == 6 else 4
        cv = CharVector.from_shorthand(n, short)
        for _ in range(15):
            g = random_gl(rng, n)
            moved = gl_transform(cv, g)
            assert canonicalize(moved)[0] == canonicalize(cv)[0]
            # witness sends the moved vector back to the representative
            cid, rep, witness = canonicalize(moved)
            assert gl_transform(moved, witness) == rep


def test_canonicalize_rejects_associative():
    with pytest.raises(AssociativeLoop):
        canonicalize(CharVector(3, (1, 1, 1), (0, 0, 0), (0,)))
    with pytest.raises(UnsupportedRank):
        canonicalize(CharVector(5, (0,) * 5, (0,) * 10, (1,) + (0,) * 9))


def test_loop_class_id_validation():
    assert str(LoopClassId.parse("C4_16")) == "C4_16"
    with pytest.raises(ValueError):
        LoopClassId(3, 6)
    with pytest.raises(ValueError):
        LoopClassId.parse("D3_1")
    with pytest.raises(UnsupportedRank):
        LoopClassId(5, 1)


def test_alpha_radical_rank3():
    cv = CharVector.from_shorthand(3, "111111")
    assert alpha_radical(cv) == frozenset({0})


def test_radical_of_representatives_is_last_generator():
    for short in RANK4_REPRESENTATIVES:
        cv = CharVector.from_shorthand(4, short)
        assert alpha_radical(cv) == frozenset({0, 0b1000})
        normalized, witness = normalize_rank4(cv)
        assert normalized == cv
        assert witness.rows == GLMatrix.identity(4).rows


def test_normalize_recovers_orbit(rng):
    for _ in range(20):
        short = rng.choice(RANK4_REPRESENTATIVES)
        cv = CharVector.from_shorthand(4, short)
        moved = gl_transform(cv, random_gl(rng, 4))
        normalized, witness = normalize_rank4(moved)
        assert normalized.is_normalized
        assert gl_transform(moved, witness) == normalized
        assert canonicalize(normalized)[0] == canonicalize(cv)[0]


def test_normalize_requires_nonassociative():
    with pytest.raises(AssociativeLoop):
        normalize_rank4(CharVector(4, (0,) * 4, (0,) * 6, (0,) * 4))


def test_shorthand_round_trip():
    for short in RANK3_REPRESENTATIVES:
        assert CharVector.from_shorthand(3, short).shorthand() == short
    for short in RANK4_REPRESENTATIVES:
        assert CharVector.from_shorthand(4, short).shorthand() == short
    cv = CharVector(4, (0,) * 4, (0,) * 6, (0, 1, 0, 0))
    assert not cv.is_normalized
    with pytest.raises(ValueError):
        cv.shorthand()
    assert CharVector.from_bits(4, cv.bits()) == cv
