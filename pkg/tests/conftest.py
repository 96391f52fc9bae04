"""Shared helpers: random code generators and tiny GF(2) utilities."""

from __future__ import annotations

import random

import pytest

from loopforge.charvec import GLMatrix
from loopforge.gf2 import CodeBasis, Codeword, gf2_rank


def random_doubly_even_basis(rng: random.Random, rank: int, length: int) -> CodeBasis:
    """Rejection-sample a doubly even basis: weights divisible by 4 and even
    pairwise meets force the whole span doubly even.

    Needs headroom (length >= ~3 + 2*rank) or sampling cannot succeed.
    """
    for _ in range(200):
        gens: list[int] = []
        for _ in range(4000):
            if len(gens) == rank:
                break
            bits = rng.getrandbits(length)
            if bits == 0 or bits.bit_count() % 4:
                continue
            if any((bits & g).bit_count() % 2 for g in gens):
                continue
            if gf2_rank(tuple(gens) + (bits,)) != len(gens) + 1:
                continue
            gens.append(bits)
        if len(gens) == rank:
            return CodeBasis(length, tuple(Codeword(length, b) for b in gens))
    raise RuntimeError(f"no doubly even basis of rank {rank} found at length {length}")


def random_covering_basis(rng: random.Random, rank: int, length: int) -> CodeBasis:
    """Random independent generators whose union is all of I_m."""
    full = (1 << length) - 1
    while True:
        gens = []
        for _ in range(200):
            if len(gens) == rank:
                break
            bits = rng.getrandbits(length)
            if bits == 0:
                continue
            if gf2_rank(tuple(gens) + (bits,)) != len(gens) + 1:
                continue
            gens.append(bits)
        if len(gens) == rank:
            union = 0
            for g in gens:
                union |= g
            if union == full:
                return CodeBasis(length, tuple(Codeword(length, b) for b in gens))


def random_gl(rng: random.Random, n: int) -> GLMatrix:
    while True:
        rows = tuple(rng.getrandbits(n) for _ in range(n))
        if gf2_rank(rows) == n:
            return GLMatrix(n, rows)


def transform_basis(basis: CodeBasis, g: GLMatrix) -> CodeBasis:
    """New generators w_i = xor of the v_j selected by row i of g."""
    masks = basis.masks
    new = []
    for row in g.rows:
        bits = 0
        for j in range(basis.rank):
            if row >> j & 1:
                bits ^= masks[j]
        new.append(Codeword(basis.length, bits))
    return CodeBasis(basis.length, tuple(new))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0DE)
