"""Explicit loops on {+1,-1} x V built from a sign-valued factor set.

The factor set phi on the span of a doubly even code must satisfy

    phi(v, v)   = (-1)^(|v|/4)
    phi(v, w)   = (-1)^(|v & w|/2) * phi(w, v)
    phi(0, v)   = phi(v, 0) = 1
    phi(v+w, u) = phi(v, w+u) * phi(v, w) * phi(w, u) * (-1)^|v & w & u|

Construction is by extension: adding one generator at a time, the values on
(old-span element, new generator) pairs are free choices; everything else
follows from the axioms, walking codewords in coefficient order.  Free
choices default to +1 (any consistent choice gives an isomorphic loop).
The construction never trusts itself: every returned table has been checked
against all four axioms exhaustively.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Mapping

from .charvec import canonicalize, char_vector_of
from .errors import NoFactorSet, NotDoublyEven, UnsupportedRank
from .gf2 import Codeword, CodeBasis, is_doubly_even, span


def _popcount(x: int) -> int:
    return x.bit_count()


@dataclass(frozen=True)
class FactorSet:
    """Sign table over the span of a basis, keyed by coefficient masks."""

    basis: CodeBasis
    codewords: tuple[int, ...]
    signs: tuple[tuple[int, ...], ...]

    def value(self, v: int, w: int) -> int:
        return self.signs[v][w]

    @property
    def size(self) -> int:
        return len(self.codewords)

    def axiom_violations(self) -> list[str]:
        """Exhaustive check of all four axioms; empty list means a valid table."""
        cw = self.codewords
        phi = self.signs
        size = len(cw)
        bad: list[str] = []
        for v in range(size):
            if phi[v][v] != (-1 if (_popcount(cw[v]) // 4) % 2 else 1):
                bad.append(f"square sign wrong at v={v}")
            if phi[0][v] != 1 or phi[v][0] != 1:
                bad.append(f"identity row/column wrong at v={v}")
            for w in range(size):
                twist = -1 if (_popcount(cw[v] & cw[w]) // 2) % 2 else 1
                if phi[v][w] != twist * phi[w][v]:
                    bad.append(f"symmetry twist wrong at ({v},{w})")
                for u in range(size):
                    sign = -1 if _popcount(cw[v] & cw[w] & cw[u]) % 2 else 1
                    if phi[v ^ w][u] != phi[v][w ^ u] * phi[v][w] * phi[w][u] * sign:
                        bad.append(f"cocycle axiom fails at ({v},{w},{u})")
        return bad


def free_seed_slots(rank: int) -> tuple[tuple[int, int], ...]:
    """(old-span mask, generator index) pairs whose phi values are free choices."""
    return tuple((p, j) for j in range(rank) for p in range(1, 1 << j))


def build_factor_set(
    basis: CodeBasis, seeds: Mapping[tuple[int, int], int] | None = None
) -> FactorSet:
    """Construct a factor set on the span of a doubly even basis of rank <= 4.

    ``seeds`` optionally fixes the free choices (+1/-1 per slot from
    ``free_seed_slots``); unspecified slots default to +1.
    """
    n = basis.rank
    if n > 4:
        raise UnsupportedRank("factor sets are built for rank <= 4 (span size <= 16)")
    if not is_doubly_even(basis):
        raise NotDoublyEven("factor sets require a doubly even code")
    cw = tuple(w.bits for w in span(basis))
    size = 1 << n
    phi = [[0] * size for _ in range(size)]
    phi[0][0] = 1
    seeds = dict(seeds or {})
    for j in range(n):
        g = 1 << j
        old = 1 << j  # old span is the masks below g
        vj = cw[g]
        # free choices on (old element, new generator)
        for p in range(old):
            phi[p][g] = 1 if p == 0 else seeds.get((p, j), 1)
        # phi(p+g, g) via the cocycle axiom with w = u = new generator
        phi_gg = -1 if (_popcount(vj) // 4) % 2 else 1
        for p in range(old):
            par = -1 if _popcount(cw[p] & vj) % 2 else 1
            phi[p ^ g][g] = phi[p][g] * phi_gg * par
        # phi(x, w2+g) for old x, w2: cocycle with u = new generator
        for x in range(old):
            for w2 in range(old):
                par = -1 if _popcount(cw[x] & cw[w2] & vj) % 2 else 1
                phi[x][w2 ^ g] = phi[x ^ w2][g] * phi[x][w2] * phi[w2][g] * par
        # phi(w1+g, y) for old y: symmetry twist of the previous block
        for w1 in range(old):
            a = w1 ^ g
            for y in range(old):
                twist = -1 if (_popcount(cw[a] & cw[y]) // 2) % 2 else 1
                phi[a][y] = twist * phi[y][a]
        # phi(w1+g, w2+g): cocycle with u = new generator again
        for w1 in range(old):
            a = w1 ^ g
            for w2 in range(old):
                par = -1 if _popcount(cw[a] & cw[w2] & vj) % 2 else 1
                phi[a][w2 ^ g] = phi[w1 ^ w2 ^ g][g] * phi[a][w2] * phi[w2][g] * par
    fs = FactorSet(basis, cw, tuple(tuple(row) for row in phi))
    bad = fs.axiom_violations()
    if bad:
        raise NoFactorSet(f"{len(bad)} axiom violations, first: {bad[0]}")
    return fs


def iter_factor_sets(basis: CodeBasis) -> Iterator[FactorSet]:
    """Every factor set reachable from the construction's free choices.

    2^(2^n - n - 1) tables; practical for rank <= 3.
    """
    slots = free_seed_slots(basis.rank)
    for values in product((1, -1), repeat=len(slots)):
        yield build_factor_set(basis, dict(zip(slots, values)))


class CodeLoop:
    """Loop on {+1,-1} x V with product (e,v)(d,w) = (e d phi(v,w), v+w).

    Elements are ids 0 .. 2|V|-1: id = mask for (+1, codeword(mask)) and
    id = |V| + mask for (-1, codeword(mask)).  Identity is id 0.
    """

    def __init__(self, factor_set: FactorSet):
        self.factor_set = factor_set
        self.basis = factor_set.basis
        half = factor_set.size
        self.half = half
        self.order = 2 * half
        phi = factor_set.signs
        table = []
        for a in range(self.order):
            sa, va = divmod(a, half)
            row = []
            for b in range(self.order):
                sb, vb = divmod(b, half)
                s = sa ^ sb ^ (1 if phi[va][vb] < 0 else 0)
                row.append(s * half + (va ^ vb))
            table.append(tuple(row))
        self.table: tuple[tuple[int, ...], ...] = tuple(table)
        inv = [0] * self.order
        for a in range(self.order):
            matches = [b for b in range(self.order) if self.table[a][b] == 0]
            assert len(matches) == 1, "inverse must be unique"
            inv[a] = matches[0]
        self.inverses: tuple[int, ...] = tuple(inv)

    # -- element bookkeeping ------------------------------------------------

    @property
    def identity(self) -> int:
        return 0

    @property
    def negative_identity(self) -> int:
        return self.half

    def element_id(self, sign: int, word: Codeword | int) -> int:
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if isinstance(word, Codeword):
            bits = word.bits
            mask = self.factor_set.codewords.index(bits)
        else:
            mask = word
            if not 0 <= mask < self.half:
                raise ValueError("coefficient mask out of range")
        return (0 if sign == 1 else self.half) + mask

    def sign_of(self, a: int) -> int:
        return 1 if a < self.half else -1

    def codeword_of(self, a: int) -> Codeword:
        return Codeword(self.basis.length, self.factor_set.codewords[a % self.half])

    def elements(self) -> range:
        return range(self.order)

    # -- algebra ------------------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def square(self, a: int) -> int:
        return self.table[a][a]

    def commutator(self, a: int, b: int) -> int:
        t = self.table
        return t[t[t[self.inverses[a]][self.inverses[b]]][a]][b]

    def associator(self, a: int, b: int, c: int) -> int:
        t = self.table
        return t[t[t[a][b]][c]][self.inverses[t[a][t[b][c]]]]

    def is_associative(self) -> bool:
        t = self.table
        rng = range(self.order)
        return all(t[t[x][y]][z] == t[x][t[y][z]] for x in rng for y in rng for z in rng)

    def center(self) -> tuple[int, ...]:
        t = self.table
        rng = range(self.order)
        out = []
        for x in rng:
            if any(t[x][y] != t[y][x] for y in rng):
                continue
            if any(
                t[t[x][y]][z] != t[x][t[y][z]]
                or t[t[y][x]][z] != t[y][t[x][z]]
                or t[t[y][z]][x] != t[y][t[z][x]]
                for y in rng
                for z in rng
            ):
                continue
            out.append(x)
        return tuple(out)


def build_loop(basis: CodeBasis) -> CodeLoop:
    """Loop of order 2^(n+1) on the span of a doubly even rank <= 4 basis."""
    return CodeLoop(build_factor_set(basis))


def is_moufang(loop: CodeLoop) -> bool:
    """((x y) x) z == x (y (x z)) over all triples; capped at order 64."""
    if loop.order > 64:
        raise UnsupportedRank("exhaustive identity check is capped at order 64")
    t = loop.table
    rng = range(loop.order)
    for x in rng:
        tx = t[x]
        for y in rng:
            xyx = t[t[x][y]][x]
            row = t[xyx]
            for z in rng:
                if row[z] != tx[t[y][tx[z]]]:
                    return False
    return True


def loops_isomorphic(a: CodeBasis, b: CodeBasis) -> bool:
    """Classification-level isomorphism: equal orbit class ids."""
    ca, _, _ = canonicalize(char_vector_of(a))
    cb, _, _ = canonicalize(char_vector_of(b))
    return ca == cb


def loop_table_csv(loop: CodeLoop) -> str:
    """Multiplication table as CSV; headers name elements +positions/-positions."""

    def label(a: int) -> str:
        sign = "+" if loop.sign_of(a) == 1 else "-"
        return sign + ",".join(str(p) for p in loop.codeword_of(a).positions)

    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    ids = list(loop.elements())
    writer.writerow([""] + [label(b) for b in ids])
    for a in ids:
        writer.writerow([label(a)] + [label(loop.table[a][b]) for b in ids])
    return out.getvalue()
