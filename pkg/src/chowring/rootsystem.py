"""Finite root systems built from integer Cartan matrices.

All arithmetic is exact.  A root is an integer coordinate vector in the
simple-root basis, a weight is an integer coordinate vector in the
fundamental-weight basis, and the invariant bilinear form is carried by a
rational symmetrizer.  The closure construction needs nothing beyond the
Cartan matrix, so any finite-type matrix is accepted, not only the named
ones used by the F4 pipeline.

Convention: ``cartan.entries[i][j]`` is the pairing of simple root j
against simple coroot i.  Consequently the expansion of the simple root
``alpha_j`` in fundamental weights is column j of the matrix, and the
simple reflection acts on a weight by subtracting its i-th coordinate
times that column.  The self-check ``s_i(alpha_i) = -alpha_i`` is run at
construction time and guards against feeding a transposed matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

Root = tuple[int, ...]
Weight = tuple[int, ...]

BUILTIN_CARTAN: dict[str, tuple[tuple[int, ...], ...]] = {
    "A1": ((2,),),
    "A2": ((2, -1), (-1, 2)),
    "B2": ((2, -1), (-2, 2)),
    "G2": ((2, -3), (-1, 2)),
    "B3": ((2, -1, 0), (-1, 2, -1), (0, -2, 2)),
    "F4": (
        (2, -1, 0, 0),
        (-1, 2, -1, 0),
        (0, -2, 2, -1),
        (0, 0, -1, 2),
    ),
}


class InfiniteRootSystemError(ValueError):
    """The reflection closure exceeded the height bound."""


@dataclass(frozen=True)
class CartanMatrix:
    """Square integer matrix with 2 on the diagonal and <= 0 off it."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        for row in self.entries:
            if len(row) != n:
                raise ValueError("Cartan matrix must be square")
        for i in range(n):
            if self.entries[i][i] != 2:
                raise ValueError("Cartan matrix diagonal entries must be 2")
            for j in range(n):
                if i != j and self.entries[i][j] > 0:
                    raise ValueError("off-diagonal Cartan entries must be <= 0")
                if (self.entries[i][j] == 0) != (self.entries[j][i] == 0):
                    raise ValueError("zero pattern of a Cartan matrix is symmetric")

    @property
    def rank(self) -> int:
        return len(self.entries)

    @classmethod
    def from_rows(cls, rows) -> "CartanMatrix":
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @classmethod
    def from_name(cls, name: str) -> "CartanMatrix":
        try:
            return cls(BUILTIN_CARTAN[name])
        except KeyError:
            raise ValueError(f"unknown root system type {name!r}; "
                             f"known types: {sorted(BUILTIN_CARTAN)}") from None

    @classmethod
    def from_file(cls, path) -> "CartanMatrix":
        """Read rows of space-separated integers, one matrix row per line."""
        rows = []
        for line in Path(path).read_text().splitlines():
            line = line.strip()
            if line:
                rows.append([int(tok) for tok in line.split()])
        if not rows:
            raise ValueError(f"no matrix rows found in {path}")
        return cls.from_rows(rows)


def _symmetrizer(cartan: CartanMatrix) -> tuple[Fraction, ...]:
    """Positive rationals d with d[i]*C[i][j] == d[j]*C[j][i].

    (alpha_i, alpha_j) = d[i]*C[i][j] is then an invariant symmetric form.
    Computed by walking the Dynkin graph; a non-symmetrizable matrix is
    rejected.
    """
    n = cartan.rank
    c = cartan.entries
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i == j or c[i][j] == 0:
                    continue
                expected = d[i] * c[i][j] / c[j][i]
                if d[j] is None:
                    d[j] = expected
                    stack.append(j)
                elif d[j] != expected:
                    raise ValueError("Cartan matrix is not symmetrizable")
    for i in range(n):
        for j in range(n):
            if d[i] * c[i][j] != d[j] * c[j][i]:
                raise ValueError("Cartan matrix is not symmetrizable")
    return tuple(d)  # type: ignore[arg-type]


class RootSystem:
    """Positive roots, pairings and reflections of a finite-type Cartan matrix.

    Node indices in the public API are 1-based, matching the usual Dynkin
    diagram numbering (F4 nodes 1,2 long and 3,4 short, double edge between
    2 and 3).  Positive roots are ordered by height, then lexicographically.
    """

    def __init__(self, cartan: CartanMatrix, positive_roots: tuple[Root, ...],
                 labels: tuple[str, ...]):
        self.cartan = cartan
        self.rank = cartan.rank
        self.positive_roots = positive_roots
        self.labels = labels
        self._sym = _symmetrizer(cartan)
        self._positive_set = frozenset(positive_roots)
        self._check_reflection_convention()

    # -- construction helpers -------------------------------------------

    def _check_reflection_convention(self) -> None:
        # s_i(alpha_i) = -alpha_i, with alpha_i expanded in the weight basis.
        for i in range(1, self.rank + 1):
            alpha = self.simple_root_weight(i)
            if self.reflect_weight(i, alpha) != tuple(-x for x in alpha):
                raise ValueError(
                    "reflection convention broken: s_i(alpha_i) != -alpha_i "
                    "(transposed Cartan matrix?)")

    # -- roots ------------------------------------------------------------

    def simple_root(self, i: int) -> Root:
        self._check_node(i)
        return tuple(1 if k == i - 1 else 0 for k in range(self.rank))

    def is_positive(self, root: Root) -> bool:
        return all(x >= 0 for x in root) and any(x != 0 for x in root)

    def is_root(self, root: Root) -> bool:
        return root in self._positive_set or \
            tuple(-x for x in root) in self._positive_set

    @staticmethod
    def height(root: Root) -> int:
        return sum(root)

    def reflect_root(self, i: int, root: Root) -> Root:
        """Simple reflection s_i on a root in simple-root coordinates."""
        self._check_node(i)
        c = self.cartan.entries[i - 1]
        pairing = sum(c[j] * root[j] for j in range(self.rank))
        return tuple(root[j] - (pairing if j == i - 1 else 0)
                     for j in range(self.rank))

    @property
    def highest_root(self) -> Root:
        return self.positive_roots[-1]

    # -- bilinear form and coroots ----------------------------------------

    def bilinear(self, a: Root, b: Root) -> Fraction:
        c = self.cartan.entries
        total = Fraction(0)
        for i in range(self.rank):
            if a[i]:
                di = self._sym[i]
                for j in range(self.rank):
                    if b[j] and c[i][j]:
                        total += a[i] * b[j] * di * c[i][j]
        return total

    def norm2(self, root: Root) -> Fraction:
        return self.bilinear(root, root)

    def coroot_pairing(self, beta: Root, omega: Weight) -> int:
        """<beta^vee, omega> for a root beta and a weight omega.

        Expands beta^vee in the simple coroots; the result is always an
        integer for genuine roots and weights.
        """
        if not self.is_root(beta):
            raise ValueError(f"{beta} is not a root of this system")
        norm = self.norm2(beta)
        total = Fraction(0)
        for k in range(self.rank):
            if beta[k] and omega[k]:
                total += omega[k] * beta[k] * 2 * self._sym[k] / norm
        if total.denominator != 1:
            raise ArithmeticError(f"non-integral coroot pairing {total}")
        return int(total)

    def root_coroot_pairing(self, alpha: Root, beta: Root) -> int:
        """<alpha, beta^vee> = 2(alpha, beta)/(beta, beta) for roots."""
        value = 2 * self.bilinear(alpha, beta) / self.norm2(beta)
        if value.denominator != 1:
            raise ArithmeticError(f"non-integral Cartan pairing {value}")
        return int(value)

    # -- weights ------------------------------------------------------------

    def fundamental_weight(self, i: int) -> Weight:
        self._check_node(i)
        return tuple(1 if k == i - 1 else 0 for k in range(self.rank))

    def simple_root_weight(self, j: int) -> Weight:
        """alpha_j expanded in the fundamental-weight basis (column j)."""
        self._check_node(j)
        return tuple(self.cartan.entries[i][j - 1] for i in range(self.rank))

    def root_to_weight(self, root: Root) -> Weight:
        c = self.cartan.entries
        return tuple(sum(c[i][j] * root[j] for j in range(self.rank))
                     for i in range(self.rank))

    def reflect_weight(self, i: int, omega: Weight) -> Weight:
        """s_i on a weight: subtract the i-th coordinate times alpha_i."""
        self._check_node(i)
        coeff = omega[i - 1]
        if coeff == 0:
            return tuple(omega)
        alpha = self.simple_root_weight(i)
        return tuple(omega[k] - coeff * alpha[k] for k in range(self.rank))

    def _check_node(self, i: int) -> None:
        if not 1 <= i <= self.rank:
            raise ValueError(f"node index {i} out of range 1..{self.rank}")

    def __repr__(self) -> str:
        return f"RootSystem(rank={self.rank}, positive_roots={len(self.positive_roots)})"


def build_root_system(cartan: CartanMatrix, max_height: int = 100,
                      labels: tuple[str, ...] | None = None) -> RootSystem:
    """Generate all positive roots by reflection closure.

    Starts from the simple roots and applies simple reflections until no
    new positive root appears.  A root of height above ``max_height``
    aborts with :class:`InfiniteRootSystemError`; every finite-type system
    closes up well below the default bound.
    """
    n = cartan.rank
    c = cartan.entries
    simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    known: set[Root] = set(simple)
    frontier: list[Root] = list(simple)
    while frontier:
        new_frontier: list[Root] = []
        for root in frontier:
            for i in range(n):
                pairing = sum(c[i][j] * root[j] for j in range(n))
                if pairing == 0:
                    continue
                image = tuple(root[j] - (pairing if j == i else 0)
                              for j in range(n))
                if all(x >= 0 for x in image) and image not in known:
                    if sum(image) > max_height:
                        raise InfiniteRootSystemError(
                            f"infinite root system: closure exceeded height "
                            f"{max_height}")
                    known.add(image)
                    new_frontier.append(image)
        frontier = new_frontier
    ordered = tuple(sorted(known, key=lambda r: (sum(r), r)))
    if labels is None:
        labels = tuple(str(i + 1) for i in range(n))
    return RootSystem(cartan, ordered, labels)


@lru_cache(maxsize=None)
def root_system(name: str) -> RootSystem:
    """Shared instance of a built-in named root system."""
    return build_root_system(CartanMatrix.from_name(name))


def load_root_system(path) -> RootSystem:
    return build_root_system(CartanMatrix.from_file(path))
