"""Exhaustive enumeration of reduced code representations of a loop.

Fixing a normalized characteristic vector pins every meet weight of a
candidate basis modulo a power of two: t_i mod 8, t_ij mod 4, t_ijk mod 2.
Writing the weights in terms of position-class cardinalities x_sigma turns
those congruences into residue constraints on the x's, so the whole reduced
family (all classes of size at most 7, by default) is a finite tree:

  rank 3:  x_123 odd, each x_ij fixed mod 4, each x_i fixed mod 8   (32 leaves)
  rank 4:  x_1234 free, x_ijk fixed mod 2, x_ij mod 4, x_i mod 8    (2^17 leaves)

The walk visits cells in the fixed labeling order (``gf2.class_order``), so
the stream is deterministic.  Assembling a leaf lays out consecutive integer
blocks per cell and takes unions; leaves whose generators come out empty or
dependent are skipped.  Minimal representations are the valid leaves of
least degree, deduplicated by code equivalence.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .charvec import CharVector, LoopClassId, canonicalize
from .errors import (
    AssociativeLoop,
    InfeasibleProfile,
    DegenerateBasis,
    NotReduced,
    UnsupportedRank,
)
from .gf2 import (
    CodeBasis,
    Codeword,
    Sigma,
    WeightProfile,
    canonical_code_signature,
    class_order,
    class_partition,
    type_vector,
)

REDUCED_MAX = 7


@dataclass(frozen=True)
class ResidueSpec:
    """Residues every representation of a loop must satisfy."""

    rank: int
    singles_mod8: tuple[int, ...]
    pairs_mod4: tuple[int, ...]
    triples_mod2: tuple[int, ...]


def congruence_targets(cv: CharVector) -> ResidueSpec:
    """t_i mod 8, t_ij mod 4 and t_ijk mod 2 forced by a characteristic vector."""
    return ResidueSpec(
        cv.rank,
        tuple(4 * b for b in cv.sigma),
        tuple(2 * b for b in cv.beta),
        tuple(cv.alpha),
    )


@dataclass(frozen=True)
class ClassSizes:
    """Cardinalities x_sigma of the position classes, in class_order."""

    rank: int
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.counts) != (1 << self.rank) - 1:
            raise ValueError("one count per nonempty subset required")
        if any(c < 0 for c in self.counts):
            raise ValueError("counts must be nonnegative")

    def __getitem__(self, sigma: Sigma) -> int:
        return self.counts[class_order(self.rank).index(tuple(sigma))]

    @property
    def degree(self) -> int:
        return sum(self.counts)

    def as_dict(self) -> dict[str, int]:
        return {
            "".join(str(i) for i in sigma): c
            for sigma, c in zip(class_order(self.rank), self.counts)
        }


def _mobius_solve(profile: WeightProfile, max_size: int) -> ClassSizes:
    """x_sigma = sum over supersets tau of (-1)^|tau - sigma| t_tau."""
    n = profile.rank
    counts = []
    for sigma in class_order(n):
        rest = [i for i in range(1, n + 1) if i not in sigma]
        x = 0
        for r in range(len(rest) + 1):
            for extra in combinations(rest, r):
                x += (-1) ** r * profile.t(*(sigma + extra))
        if x < 0:
            raise InfeasibleProfile(f"x_{''.join(map(str, sigma))} = {x} < 0")
        if x > max_size:
            raise NotReduced(f"x_{''.join(map(str, sigma))} = {x} > {max_size}")
        counts.append(x)
    return ClassSizes(n, tuple(counts))


def solve_system_rank3(profile: WeightProfile, max_size: int = REDUCED_MAX) -> ClassSizes:
    """Class cardinalities of a rank-3 profile (x_ij = t_ij - t_123, ...)."""
    if profile.rank != 3:
        raise UnsupportedRank("rank-3 solver")
    return _mobius_solve(profile, max_size)


def solve_system_rank4(profile: WeightProfile, max_size: int = REDUCED_MAX) -> ClassSizes:
    """Class cardinalities of a rank-4 profile (14 closed-form differences)."""
    if profile.rank != 4:
        raise UnsupportedRank("rank-4 solver")
    return _mobius_solve(profile, max_size)


def solve_system(profile: WeightProfile, max_size: int = REDUCED_MAX) -> ClassSizes:
    return _mobius_solve(profile, max_size)


@lru_cache(maxsize=8)
def _incidence(n: int) -> dict[Sigma, tuple[int, ...]]:
    """For each index set sigma, the class_order positions of its supersets."""
    order = class_order(n)
    sigmas = [
        s
        for size in range(1, n + 1)
        for s in combinations(range(1, n + 1), size)
    ]
    return {
        s: tuple(p for p, tau in enumerate(order) if set(s) <= set(tau)) for s in sigmas
    }


def profile_from_sizes(sizes: ClassSizes) -> WeightProfile:
    """Meet weights t_sigma = sum of x_tau over tau containing sigma."""
    n = sizes.rank
    inc = _incidence(n)
    counts = sizes.counts

    def t(sigma: Sigma) -> int:
        return sum(counts[p] for p in inc[sigma])

    singles = tuple(t((i,)) for i in range(1, n + 1))
    pairs = tuple(t(p) for p in combinations(range(1, n + 1), 2))
    triples = tuple(t(tr) for tr in combinations(range(1, n + 1), 3))
    quad = t((1, 2, 3, 4)) if n == 4 else None
    return WeightProfile(n, singles, pairs, triples, quad)


def _bounds_ok(rank: int, counts: tuple[int, ...]) -> bool:
    """check_profile_bounds evaluated straight from class counts (hot path)."""
    if rank != 4:
        raise UnsupportedRank("profile bounds apply to rank 4")
    inc = _incidence(rank)

    def t(*sigma: int) -> int:
        return sum(counts[p] for p in inc[tuple(sorted(sigma))])

    q = t(1, 2, 3, 4)
    t123 = t(1, 2, 3)
    for i, j in ((1, 2), (1, 3), (2, 3)):
        if not q <= t(i, j, 4) <= t(i, j) - t123 + q:
            return False
    for i in (1, 2, 3):
        j, k = [a for a in (1, 2, 3) if a != i]
        low = t(i, j, 4) + t(i, k, 4) - q
        high = t(i) - t(i, j) - t(i, k) + t123 + t(i, j, 4) + t(i, k, 4) - q
        if not low <= t(i, 4) <= high:
            return False
    return t(4) >= t(1, 4) + t(2, 4) + t(3, 4) - t(1, 2, 4) - t(1, 3, 4) - t(2, 3, 4) + q


def check_profile_bounds(profile: WeightProfile) -> bool:
    """Feasibility inequalities used as an optional early-pruning predicate.

    Equivalent to requiring nonnegative cardinalities for the classes the
    fourth generator cuts out of a rank-4 profile.
    """
    if profile.rank != 4:
        raise UnsupportedRank("profile bounds apply to rank 4")
    t = profile.t
    q = t(1, 2, 3, 4)
    for i, j in ((1, 2), (1, 3), (2, 3)):
        if not q <= t(i, j, 4) <= t(i, j) - t(1, 2, 3) + q:
            return False
    if not t(1, 2, 4) + t(1, 3, 4) - q <= t(1, 4) <= t(1) - t(1, 2) - t(1, 3) + t(1, 2, 3) + t(1, 2, 4) + t(1, 3, 4) - q:
        return False
    if not t(1, 2, 4) + t(2, 3, 4) - q <= t(2, 4) <= t(2) - t(1, 2) - t(2, 3) + t(1, 2, 3) + t(1, 2, 4) + t(2, 3, 4) - q:
        return False
    if not t(1, 3, 4) + t(2, 3, 4) - q <= t(3, 4) <= t(3) - t(1, 3) - t(2, 3) + t(1, 2, 3) + t(1, 3, 4) + t(2, 3, 4) - q:
        return False
    return t(4) >= t(1, 4) + t(2, 4) + t(3, 4) - t(1, 2, 4) - t(1, 3, 4) - t(2, 3, 4) + q


def assemble_representation(sizes: ClassSizes) -> CodeBasis:
    """Lay out consecutive position blocks per class and take generator unions.

    Blocks follow the fixed labeling order, so equal sizes always rebuild the
    identical basis.  Empty or dependent generators raise DegenerateBasis.
    """
    n = sizes.rank
    length = sizes.degree
    if length == 0:
        raise DegenerateBasis("empty representation")
    gen_bits = [0] * n
    position = 0
    for sigma, count in zip(class_order(n), sizes.counts):
        block = ((1 << count) - 1) << position
        position += count
        for i in sigma:
            gen_bits[i - 1] |= block
    return CodeBasis(length, tuple(Codeword(length, b) for b in gen_bits))


@dataclass(frozen=True)
class ReducedRepresentation:
    """One solved member of the reduced family of a loop."""

    sizes: ClassSizes
    basis: CodeBasis
    degree: int
    type: tuple[int, ...]


def _require_normalized(cv: CharVector) -> None:
    if cv.rank not in (3, 4):
        raise UnsupportedRank(f"representation search covers ranks 3 and 4, got {cv.rank}")
    if not cv.nonassociative:
        raise AssociativeLoop("representation search needs a nonassociative vector")
    if not cv.is_normalized:
        raise ValueError("normalize the vector first (alpha must be 1 / 1000)")


def _walk_class_sizes(cv: CharVector, max_size: int) -> list[tuple[int, ...]]:
    """All count tuples compatible with the congruences, in DFS order."""
    n = cv.rank
    spec = congruence_targets(cv)
    order = class_order(n)
    pair_pos = {p: i for i, p in enumerate(combinations(range(1, n + 1), 2))}
    triple_pos = {t: i for i, t in enumerate(combinations(range(1, n + 1), 3))}
    target = []
    modulus = []
    for sigma in order:
        k = len(sigma)
        if k == 1:
            target.append(spec.singles_mod8[sigma[0] - 1])
            modulus.append(8)
        elif k == 2:
            target.append(spec.pairs_mod4[pair_pos[sigma]])
            modulus.append(4)
        elif k == 3:
            target.append(spec.triples_mod2[triple_pos[sigma]])
            modulus.append(2)
        else:
            target.append(0)
            modulus.append(1)
    # positions of earlier cells whose sigma strictly contains this one
    supersets = [
        [q for q in range(p) if set(order[p]) < set(order[q])] for p in range(len(order))
    ]
    end = len(order)
    values = [0] * end
    out: list[tuple[int, ...]] = []

    def rec(pos: int) -> None:
        if pos == end:
            out.append(tuple(values))
            return
        partial = sum(values[q] for q in supersets[pos])
        first = (target[pos] - partial) % modulus[pos]
        for v in range(first, max_size + 1, modulus[pos]):
            values[pos] = v
            rec(pos + 1)

    rec(0)
    return out


def enumerate_reduced(
    cv: CharVector,
    max_class_size: int = REDUCED_MAX,
    check_bounds: bool = False,
) -> Iterator[ReducedRepresentation]:
    """Every reduced representation with the given characteristic vector.

    Degenerate leaves (empty or dependent generators) are pruned silently.
    ``check_bounds`` additionally filters by ``check_profile_bounds``; it
    never changes the stream, only exercises the predicate.
    """
    _require_normalized(cv)
    if max_class_size < 1:
        raise ValueError("max_class_size must be at least 1")
    from .charvec import char_vector_of

    for counts in _walk_class_sizes(cv, max_class_size):
        sizes = ClassSizes(cv.rank, counts)
        if check_bounds and not _bounds_ok(cv.rank, counts):
            continue
        try:
            basis = assemble_representation(sizes)
        except DegenerateBasis:
            continue
        assert char_vector_of(basis) == cv
        yield ReducedRepresentation(sizes, basis, sizes.degree, type_vector(class_partition(basis)))


@dataclass(frozen=True)
class MinimalReport:
    """Least-degree members of the reduced family, up to code equivalence.

    Minimality is certified within the reduced family only (class sizes at
    most ``max_class_size``); ``scope`` records that bound.
    """

    loop: LoopClassId
    degree: int
    representations: tuple[ReducedRepresentation, ...]
    max_class_size: int

    @property
    def types(self) -> tuple[tuple[int, ...], ...]:
        return tuple(r.type for r in self.representations)

    @property
    def scope(self) -> str:
        return f"reduced(max_class_size={self.max_class_size})"


def minimal_representations(
    cv: CharVector, max_class_size: int = REDUCED_MAX
) -> MinimalReport:
    """Search the reduced family for the least degree and deduplicate."""
    _require_normalized(cv)
    loop_id, _, _ = canonicalize(cv)
    leaves = [
        (sum(counts), counts) for counts in _walk_class_sizes(cv, max_class_size)
    ]
    leaves.sort()
    best: list[ReducedRepresentation] = []
    best_degree: int | None = None
    for degree, counts in leaves:
        if best_degree is not None and degree > best_degree:
            break
        sizes = ClassSizes(cv.rank, counts)
        try:
            basis = assemble_representation(sizes)
        except DegenerateBasis:
            continue
        best_degree = degree
        best.append(
            ReducedRepresentation(sizes, basis, degree, type_vector(class_partition(basis)))
        )
    if best_degree is None:
        raise InfeasibleProfile("no nondegenerate reduced representation exists")
    unique: dict[tuple[int, ...], ReducedRepresentation] = {}
    for rep in best:
        signature = canonical_code_signature(rep.basis)
        unique.setdefault(signature, rep)
    ordered = sorted(
        unique.values(),
        key=lambda r: (r.type, tuple(g.positions for g in r.basis.generators)),
    )
    return MinimalReport(loop_id, best_degree, tuple(ordered), max_class_size)
