"""Lattices as validated positive-definite Gram matrices, plus the canonical
constructions (identity lattices, diagonal forms, the even unimodular rank-8
lattice) and orthogonal sums."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import EmptySum, InvalidEntry, InvalidRank
from .exact import SymMatrix, as_sym_matrix, ldl_decompose


@dataclass(frozen=True)
class Lattice:
    """A positive-definite integer lattice, identified by its Gram matrix.

    Instances are value objects: no ambient coordinates are stored, and two
    lattices with equal Grams compare (and hash) equal.  Construct through
    `from_gram` so positive definiteness is always validated.
    """

    gram: SymMatrix
    rank: int
    det: int

    def __repr__(self):
        return f"Lattice(rank={self.rank}, det={self.det}, gram={[list(r) for r in self.gram.entries]})"


def from_gram(m) -> Lattice:
    """Validate a square integer matrix as a Gram matrix and wrap it.

    Raises NotSymmetric or NotPositiveDefinite when the input fails.
    """
    mat = as_sym_matrix(m)
    ldl = ldl_decompose(mat)
    det = Fraction(1)
    for pivot in ldl.d:
        det *= pivot
    assert det.denominator == 1
    return Lattice(gram=mat, rank=mat.n, det=int(det))


def identity_lattice(n: int) -> Lattice:
    """The rank-n lattice with identity Gram (sum of n squares)."""
    if n < 1:
        raise InvalidRank(f"identity lattice needs rank >= 1, got {n}")
    return from_gram([[1 if i == j else 0 for j in range(n)] for i in range(n)])


def diagonal(*values: int) -> Lattice:
    """Diagonal Gram <v1, ..., vk>; accepts ints or a single iterable."""
    if len(values) == 1 and not isinstance(values[0], int):
        values = tuple(values[0])
    if not values:
        raise InvalidRank("diagonal lattice needs at least one entry")
    if any(v <= 0 for v in values):
        raise InvalidEntry(f"diagonal entries must be positive, got {list(values)}")
    n = len(values)
    return from_gram([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])


@lru_cache(maxsize=1)
def e8() -> Lattice:
    """The even unimodular rank-8 lattice in a fixed root basis.

    Basis: a chain of seven norm-2 vectors (consecutive inner products -1)
    with an eighth attached to chain node 4.  The choice is pinned so every
    downstream example is bit-exact; any other even unimodular rank-8 Gram
    would be isometric to it.
    """
    g = [[0] * 8 for _ in range(8)]
    for i in range(8):
        g[i][i] = 2
    for i in range(6):
        g[i][i + 1] = g[i + 1][i] = -1
    g[4][7] = g[7][4] = -1
    lat = from_gram(g)
    # construction self-checks: unimodular, even, no vectors shorter than 2
    assert lat.det == 1
    assert all(lat.gram[i][i] % 2 == 0 for i in range(8))
    from .shortvec import minimum

    assert minimum(lat) == 2
    return lat


@dataclass(frozen=True)
class OrthoSum:
    """An ordered orthogonal sum of lattices with their coordinate offsets."""

    components: tuple[Lattice, ...]
    offsets: tuple[int, ...]
    lattice: Lattice

    @property
    def rank(self) -> int:
        return self.lattice.rank

    @property
    def gram(self) -> SymMatrix:
        return self.lattice.gram

    @property
    def det(self) -> int:
        return self.lattice.det


def direct_sum(*parts: Lattice) -> OrthoSum:
    """Block-diagonal join of the given lattices, in order."""
    if len(parts) == 1 and not isinstance(parts[0], (Lattice, OrthoSum)):
        parts = tuple(parts[0])
    parts = tuple(p.lattice if isinstance(p, OrthoSum) else p for p in parts)
    if not parts:
        raise EmptySum("direct_sum needs at least one component")
    total = sum(p.rank for p in parts)
    g = [[0] * total for _ in range(total)]
    offsets = []
    at = 0
    for p in parts:
        offsets.append(at)
        for i in range(p.rank):
            for j in range(p.rank):
                g[at + i][at + j] = p.gram[i][j]
        at += p.rank
    return OrthoSum(components=parts, offsets=tuple(offsets), lattice=from_gram(g))


def as_lattice(obj) -> Lattice:
    """Accept a Lattice or an OrthoSum wherever a plain lattice is needed."""
    if isinstance(obj, OrthoSum):
        return obj.lattice
    if isinstance(obj, Lattice):
        return obj
    raise TypeError(f"expected Lattice or OrthoSum, got {type(obj).__name__}")


def is_isometric(l1: Lattice, l2: Lattice) -> bool:
    """Whether two lattices are related by a unimodular change of basis.

    Same rank plus same determinant means any embedding between them has a
    unimodular matrix, so a one-directional embedding search decides it.
    """
    l1, l2 = as_lattice(l1), as_lattice(l2)
    if l1.rank != l2.rank or l1.det != l2.det:
        return False
    if l1.gram == l2.gram:
        return True
    from .embed import Embedding, find_embedding

    return isinstance(find_embedding(l1, l2), Embedding)
