"""Binary codes as subsets of an index set, using int bitsets.

A codeword over GF(2) of length m is identified with the set of 1-based
positions it occupies; vector addition is symmetric difference.  All values
here are immutable, so they are safe to share between workers.

The position-equivalence machinery (``class_partition``) splits the index
set I_m into blocks of positions that lie in exactly the same generators.
The partition itself does not depend on the choice of basis, only the
subset labels attached to the blocks do; a change of basis acts on labels
linearly, which is what ``codes_equivalent`` exploits.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .errors import DegenerateBasis, EmptyMeet, NotCovering, UnsupportedRank

Sigma = tuple[int, ...]


def _popcount(x: int) -> int:
    return x.bit_count()


@dataclass(frozen=True)
class Codeword:
    """A subset of I_m = {1, ..., m}, stored as an int bitset (bit p-1 = position p)."""

    length: int
    bits: int

    def __post_init__(self) -> None:
        if self.length < 0:
            raise ValueError(f"negative length {self.length}")
        if not 0 <= self.bits < (1 << self.length):
            raise ValueError(f"bits out of range for length {self.length}")

    @classmethod
    def from_positions(cls, length: int, positions: Iterable[int]) -> "Codeword":
        bits = 0
        for p in positions:
            if not 1 <= p <= length:
                raise ValueError(f"position {p} outside 1..{length}")
            bits |= 1 << (p - 1)
        return cls(length, bits)

    @classmethod
    def from_bitstring(cls, text: str) -> "Codeword":
        if set(text) - {"0", "1"}:
            raise ValueError(f"not a bitstring: {text!r}")
        bits = 0
        for i, c in enumerate(text):
            if c == "1":
                bits |= 1 << i
        return cls(len(text), bits)

    @property
    def weight(self) -> int:
        return _popcount(self.bits)

    @property
    def positions(self) -> tuple[int, ...]:
        return tuple(p + 1 for p in range(self.length) if self.bits >> p & 1)

    def bitstring(self) -> str:
        return "".join("1" if self.bits >> p & 1 else "0" for p in range(self.length))

    def contains(self, position: int) -> bool:
        return 1 <= position <= self.length and bool(self.bits >> (position - 1) & 1)

    def _check_length(self, other: "Codeword") -> None:
        if self.length != other.length:
            raise ValueError(f"length mismatch {self.length} != {other.length}")

    def __xor__(self, other: "Codeword") -> "Codeword":
        self._check_length(other)
        return Codeword(self.length, self.bits ^ other.bits)

    __add__ = __xor__  # vector sum = symmetric difference

    def __and__(self, other: "Codeword") -> "Codeword":
        self._check_length(other)
        return Codeword(self.length, self.bits & other.bits)

    def __or__(self, other: "Codeword") -> "Codeword":
        self._check_length(other)
        return Codeword(self.length, self.bits | other.bits)

    def pad(self, length: int) -> "Codeword":
        if length < self.length:
            raise ValueError("cannot shrink a codeword")
        return Codeword(length, self.bits)

    def __repr__(self) -> str:
        return f"Codeword({self.length}, {self.positions})"


def weight(v: Codeword) -> int:
    """Hamming weight |v|."""
    return v.weight


def meet_weight(vs: Sequence[Codeword]) -> int:
    """Cardinality of the intersection of all given codewords."""
    if not vs:
        raise EmptyMeet("meet of an empty collection")
    bits = vs[0].bits
    for v in vs[1:]:
        vs[0]._check_length(v)
        bits &= v.bits
    return _popcount(bits)


def gf2_rank(rows: Sequence[int]) -> int:
    """Rank of int-bitset rows over GF(2)."""
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        cur = row
        while cur:
            low = cur & -cur
            if low in pivots:
                cur ^= pivots[low]
            else:
                pivots[low] = cur
                rank += 1
                break
    return rank


@dataclass(frozen=True)
class CodeBasis:
    """Ordered list of linearly independent generators of a code in GF(2)^m.

    Independence is checked eagerly: a zero generator or a dependent family
    is rejected with ``DegenerateBasis``.
    """

    length: int
    generators: tuple[Codeword, ...]

    def __post_init__(self) -> None:
        if not self.generators:
            raise DegenerateBasis("a basis needs at least one generator")
        for g in self.generators:
            if g.length != self.length:
                raise ValueError(f"generator length {g.length} != ambient length {self.length}")
            if g.bits == 0:
                raise DegenerateBasis("zero generator")
        if gf2_rank(self.masks) != len(self.generators):
            raise DegenerateBasis("generators are linearly dependent over GF(2)")

    @classmethod
    def from_positions(cls, length: int, generators: Iterable[Iterable[int]]) -> "CodeBasis":
        return cls(length, tuple(Codeword.from_positions(length, g) for g in generators))

    @property
    def rank(self) -> int:
        return len(self.generators)

    @property
    def masks(self) -> tuple[int, ...]:
        return tuple(g.bits for g in self.generators)

    @property
    def support(self) -> Codeword:
        bits = 0
        for g in self.generators:
            bits |= g.bits
        return Codeword(self.length, bits)

    @property
    def covers(self) -> bool:
        return self.support.bits == (1 << self.length) - 1

    def __repr__(self) -> str:
        gens = ", ".join(str(g.positions) for g in self.generators)
        return f"CodeBasis(m={self.length}, [{gens}])"


def span(basis: CodeBasis) -> tuple[Codeword, ...]:
    """All 2^n linear combinations, indexed by coefficient mask (bit i-1 = v_i)."""
    n = basis.rank
    masks = basis.masks
    out = [0] * (1 << n)
    for c in range(1, 1 << n):
        low = c & -c
        out[c] = out[c ^ low] ^ masks[low.bit_length() - 1]
    return tuple(Codeword(basis.length, b) for b in out)


def is_doubly_even(basis: CodeBasis) -> bool:
    """True iff every codeword of the span has weight divisible by 4."""
    return all(w.weight % 4 == 0 for w in span(basis))


def class_order(rank: int) -> tuple[Sigma, ...]:
    """Fixed enumeration order of the nonempty subsets of I_n used for labeling.

    Ranks 3 and 4 use the orders the worked assembly examples pin down
    (rank 4: 1234, 123, 124, 134, 12, 13, 14, 1, 234, 23, 24, 2, 34, 3, 4);
    other ranks fall back to a deterministic generic order.
    """
    if rank == 3:
        return ((1, 2, 3), (1, 2), (1, 3), (1,), (2, 3), (2,), (3,))
    if rank == 4:
        return (
            (1, 2, 3, 4),
            (1, 2, 3), (1, 2, 4), (1, 3, 4),
            (1, 2), (1, 3), (1, 4), (1,),
            (2, 3, 4), (2, 3), (2, 4), (2,),
            (3, 4), (3,), (4,),
        )
    sigmas: list[Sigma] = []
    for size in range(rank, 0, -1):
        sigmas.extend(combinations(range(1, rank + 1), size))
    return tuple(sigmas)


def sigma_mask(sigma: Sigma) -> int:
    mask = 0
    for i in sigma:
        mask |= 1 << (i - 1)
    return mask


@dataclass(frozen=True)
class ClassPartition:
    """Blocks of positions indistinguishable by generator membership.

    ``blocks`` holds one entry per nonempty subset sigma of I_n, in
    ``class_order(rank)`` order; empty blocks are kept so cardinalities can
    be read off uniformly.
    """

    length: int
    rank: int
    blocks: tuple[tuple[Sigma, Codeword], ...]

    def block(self, sigma: Sigma) -> Codeword:
        for s, b in self.blocks:
            if s == tuple(sigma):
                return b
        raise KeyError(sigma)

    def size(self, sigma: Sigma) -> int:
        return self.block(sigma).weight

    @property
    def sizes(self) -> dict[Sigma, int]:
        return {s: b.weight for s, b in self.blocks}

    def nonempty(self) -> tuple[tuple[Sigma, Codeword], ...]:
        return tuple((s, b) for s, b in self.blocks if b.bits)

    def as_sets(self) -> frozenset[frozenset[int]]:
        """The unlabeled partition of I_m (basis-independent)."""
        return frozenset(frozenset(b.positions) for _, b in self.blocks if b.bits)


def class_partition(basis: CodeBasis) -> ClassPartition:
    """Split I_m into the blocks v^sigma = (meet of v_i, i in sigma) minus the rest.

    Requires the generators to cover I_m; a non-covering basis is rejected
    rather than silently shrinking the ambient length.
    """
    if not basis.covers:
        missing = Codeword(basis.length, ((1 << basis.length) - 1) ^ basis.support.bits)
        raise NotCovering(f"positions not covered by any generator: {missing.positions}")
    masks = basis.masks
    n = basis.rank
    full = (1 << basis.length) - 1
    blocks = []
    for sigma in class_order(n):
        bits = full
        smask = sigma_mask(sigma)
        for i in range(n):
            if smask >> i & 1:
                bits &= masks[i]
            else:
                bits &= ~masks[i]
        blocks.append((sigma, Codeword(basis.length, bits & full)))
    return ClassPartition(basis.length, n, tuple(blocks))


def type_vector(partition: ClassPartition) -> tuple[int, ...]:
    """Nondecreasing cardinalities of the nonempty blocks."""
    return tuple(sorted(b.weight for _, b in partition.blocks if b.bits))


# ---------------------------------------------------------------------------
# Weight profiles


@dataclass(frozen=True)
class WeightProfile:
    """The weights of all generator meets of a rank-3 or rank-4 basis.

    ``singles``/``pairs``/``triples`` follow lexicographic index order;
    ``quad`` is the four-fold intersection weight (rank 4 only, else None).
    """

    rank: int
    singles: tuple[int, ...]
    pairs: tuple[int, ...]
    triples: tuple[int, ...]
    quad: int | None = None

    def __post_init__(self) -> None:
        if self.rank not in (3, 4):
            raise UnsupportedRank(f"weight profiles support ranks 3 and 4, got {self.rank}")
        n = self.rank
        if len(self.singles) != n or len(self.pairs) != n * (n - 1) // 2:
            raise ValueError("wrong number of weights")
        if len(self.triples) != (1 if n == 3 else 4):
            raise ValueError("wrong number of triple weights")
        if (self.quad is None) != (n == 3):
            raise ValueError("quad weight present iff rank is 4")

    def t(self, *indices: int) -> int:
        """Weight of the meet of the generators with the given 1-based indices."""
        idx = tuple(sorted(set(indices)))
        try:
            table = object.__getattribute__(self, "_lookup")
        except AttributeError:
            n = self.rank
            table = {}
            for i in range(1, n + 1):
                table[(i,)] = self.singles[i - 1]
            for pos, pair in enumerate(combinations(range(1, n + 1), 2)):
                table[pair] = self.pairs[pos]
            for pos, triple in enumerate(combinations(range(1, n + 1), 3)):
                table[triple] = self.triples[pos]
            if n == 4:
                table[(1, 2, 3, 4)] = self.quad
            object.__setattr__(self, "_lookup", table)
        try:
            return table[idx]
        except KeyError:
            raise ValueError(f"bad index set {indices}") from None


def profile_of(basis: CodeBasis) -> WeightProfile:
    n = basis.rank
    if n not in (3, 4):
        raise UnsupportedRank(f"weight profiles support ranks 3 and 4, got {n}")
    masks = basis.masks
    singles = tuple(_popcount(m) for m in masks)
    pairs = tuple(_popcount(masks[i] & masks[j]) for i, j in combinations(range(n), 2))
    triples = tuple(
        _popcount(masks[i] & masks[j] & masks[k]) for i, j, k in combinations(range(n), 3)
    )
    quad = _popcount(masks[0] & masks[1] & masks[2] & masks[3]) if n == 4 else None
    return WeightProfile(n, singles, pairs, triples, quad)


def pair_length(i: int, j: int, profile: WeightProfile) -> int:
    """|v_i + v_j| = |v_i union v_j| by inclusion-exclusion."""
    if i == j:
        raise ValueError("indices must be distinct")
    return profile.t(i) + profile.t(j) - profile.t(i, j)


def triple_length(i: int, j: int, k: int, profile: WeightProfile) -> int:
    """|v_i + v_j + v_k| = |v_i union v_j union v_k|."""
    if len({i, j, k}) != 3:
        raise ValueError("indices must be distinct")
    return (
        profile.t(i) + profile.t(j) + profile.t(k)
        - (profile.t(i, j) + profile.t(i, k) + profile.t(j, k))
        + profile.t(i, j, k)
    )


# ---------------------------------------------------------------------------
# Code equivalence under position permutation


def label_counts(basis: CodeBasis) -> tuple[int, ...]:
    """Number of positions carrying each nonzero generator-membership label.

    Entry tau-1 counts positions p with label mask tau, where bit i-1 of tau
    says p is in generator i.  Uncovered positions (label 0) are ignored, so
    padding positions never affect equivalence.
    """
    n = basis.rank
    masks = basis.masks
    counts = [0] * (1 << n)
    for p in range(basis.length):
        tau = 0
        for i in range(n):
            if masks[i] >> p & 1:
                tau |= 1 << i
        counts[tau] += 1
    return tuple(counts[1:])


@lru_cache(maxsize=None)
def _gl_label_perms(n: int) -> tuple[tuple[int, ...], ...]:
    """For each GL(n,2) element, its action on nonzero label masks.

    A basis change with row masks r_i sends a position's label chi to the
    mask whose bit i is the parity of r_i & chi.
    """
    from .charvec import gl_group  # local import to avoid a module cycle

    perms = []
    for g in gl_group(n):
        rows = g.rows
        perm = tuple(
            sum(((_popcount(rows[i] & tau) & 1) << i) for i in range(n))
            for tau in range(1, 1 << n)
        )
        perms.append(perm)
    return tuple(perms)


def canonical_code_signature(basis: CodeBasis) -> tuple[int, ...]:
    """Lexicographically least label-count vector over all basis relabelings.

    Two codes of equal rank are equivalent under a position bijection iff
    their signatures agree: the unlabeled partition is basis-independent, a
    basis change permutes the labels linearly, and matching labeled block
    sizes yields a block-by-block position matching.
    """
    n = basis.rank
    if n > 4:
        raise UnsupportedRank("code equivalence is implemented for rank <= 4")
    counts = label_counts(basis)
    best = None
    for perm in _gl_label_perms(n):
        sig = tuple(counts[t - 1] for t in perm)
        if best is None or sig < best:
            best = sig
    assert best is not None
    return best


def codes_equivalent(a: CodeBasis, b: CodeBasis) -> bool:
    """True iff some position bijection maps the span of a onto the span of b.

    Ambient lengths may differ when the extra positions are unused.
    """
    if a.rank != b.rank:
        return False
    return canonical_code_signature(a) == canonical_code_signature(b)


def brute_force_equivalent(a: CodeBasis, b: CodeBasis) -> bool:
    """Oracle: search all position bijections directly (tiny lengths only).

    Exponential; exists to back ``codes_equivalent`` in tests.
    """
    from itertools import permutations

    if a.rank != b.rank:
        return False
    sup_a = a.support.positions
    sup_b = b.support.positions
    if len(sup_a) != len(sup_b):
        return False
    span_a = frozenset(w.bits for w in span(a))
    for image in permutations(sup_b):
        mapping = dict(zip(sup_a, image))
        moved = set()
        for w in span_a:
            bits = 0
            for p in Codeword(a.length, w).positions:
                bits |= 1 << (mapping[p] - 1)
            moved.add(bits)
        if moved == {w.bits for w in span(b)}:
            return True
    return False
