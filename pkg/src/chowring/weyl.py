"""Weyl group arithmetic on top of a root system.

An element is stored by the images of the simple roots, which is a
faithful representation giving canonical equality and hashing; reduced
words are derived data.  Element-level operations (multiplication,
reduced words, inverses, actions) are plain functions.  The
:class:`WeylGroup` wrapper adds the material that needs full enumeration:
the canonical element list, multiplication tables, longest elements and
parabolic coset representatives.

Composition is functional: ``multiply(u, v)`` acts as u after v, and a
word ``[a1, ..., ak]`` denotes ``s_a1 * s_a2 * ... * s_ak``.  Elements
serialize as the deterministic reduced word, e.g. ``"s3 s2 s1"``, with
the identity written ``"e"``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .rootsystem import Root, RootSystem


@dataclass(frozen=True, eq=False)
class WeylElement:
    system: RootSystem
    images: tuple[Root, ...]
    length: int

    def __eq__(self, other) -> bool:
        return (isinstance(other, WeylElement)
                and self.system is other.system
                and self.images == other.images)

    def __hash__(self) -> int:
        return hash(self.images)

    @property
    def is_identity(self) -> bool:
        return self.length == 0

    def __repr__(self) -> str:
        return f"WeylElement({serialize(self)!r})"


def identity(system: RootSystem) -> WeylElement:
    images = tuple(system.simple_root(i) for i in range(1, system.rank + 1))
    return WeylElement(system, images, 0)


def simple_reflection(system: RootSystem, i: int) -> WeylElement:
    images = tuple(system.reflect_root(i, system.simple_root(j))
                   for j in range(1, system.rank + 1))
    return WeylElement(system, images, 1)


def reflection(system: RootSystem, beta: Root) -> WeylElement:
    """Reflection in an arbitrary root, not necessarily simple."""
    if not system.is_root(beta):
        raise ValueError(f"{beta} is not a root")
    images = []
    for j in range(1, system.rank + 1):
        alpha = system.simple_root(j)
        k = system.root_coroot_pairing(alpha, beta)
        images.append(tuple(alpha[t] - k * beta[t] for t in range(system.rank)))
    return _element(system, tuple(images))


def act_root(w: WeylElement, root: Root) -> Root:
    """Apply w to a root given in simple-root coordinates (linear)."""
    n = w.system.rank
    acc = [0] * n
    for j, coeff in enumerate(root):
        if coeff:
            img = w.images[j]
            for t in range(n):
                acc[t] += coeff * img[t]
    return tuple(acc)


def act_weight(w: WeylElement, omega) -> tuple:
    """Apply w to a weight in fundamental-weight coordinates."""
    for i in reversed(reduced_word(w)):
        omega = w.system.reflect_weight(i, omega)
    return tuple(omega)


def _element(system: RootSystem, images: tuple[Root, ...]) -> WeylElement:
    """Build an element from its images, counting inversions for the length."""
    probe = WeylElement(system, images, -1)
    length = sum(1 for beta in system.positive_roots
                 if not system.is_positive(act_root(probe, beta)))
    return WeylElement(system, images, length)


def multiply(u: WeylElement, v: WeylElement) -> WeylElement:
    """Composition of actions: (u*v)(x) = u(v(x))."""
    if u.system is not v.system:
        raise ValueError("cannot multiply elements of different root systems")
    images = tuple(act_root(u, v.images[j]) for j in range(u.system.rank))
    return _element(u.system, images)


def mult_simple_right(w: WeylElement, i: int) -> WeylElement:
    """w * s_i, with the length updated incrementally."""
    system = w.system
    col = tuple(system.cartan.entries[i - 1][j] for j in range(system.rank))
    base = w.images[i - 1]
    images = tuple(
        tuple(w.images[j][t] - col[j] * base[t] for t in range(system.rank))
        for j in range(system.rank))
    delta = 1 if system.is_positive(base) else -1
    return WeylElement(system, images, w.length + delta)


def mult_simple_left(w: WeylElement, i: int) -> WeylElement:
    """s_i * w."""
    system = w.system
    images = tuple(system.reflect_root(i, img) for img in w.images)
    return _element(system, images)


def right_descents(w: WeylElement) -> tuple[int, ...]:
    """Nodes i with l(w s_i) = l(w) - 1, i.e. w(alpha_i) < 0."""
    return tuple(i for i in range(1, w.system.rank + 1)
                 if not w.system.is_positive(w.images[i - 1]))


def reduced_word(w: WeylElement) -> tuple[int, ...]:
    """Deterministic reduced word: strip the smallest right descent first."""
    letters: list[int] = []
    cur = w
    while cur.length > 0:
        ds = right_descents(cur)
        if not ds:
            raise AssertionError("positive length but no descent")
        i = ds[0]
        letters.append(i)
        cur = mult_simple_right(cur, i)
    letters.reverse()
    return tuple(letters)


def word_to_element(system: RootSystem, word) -> WeylElement:
    w = identity(system)
    for i in word:
        w = mult_simple_right(w, i)
    return w


def inverse(w: WeylElement) -> WeylElement:
    word = reduced_word(w)
    return word_to_element(w.system, tuple(reversed(word)))


def serialize(w: WeylElement) -> str:
    word = reduced_word(w)
    return "e" if not word else " ".join(f"s{i}" for i in word)


def parse_element(system: RootSystem, text: str) -> WeylElement:
    text = text.strip()
    if text == "e" or not text:
        return identity(system)
    word = []
    for tok in text.split():
        if not tok.startswith("s"):
            raise ValueError(f"bad reflection token {tok!r}")
        word.append(int(tok[1:]))
    return word_to_element(system, word)


def normalize_theta(system: RootSystem, theta) -> tuple[int, ...]:
    theta = tuple(sorted(set(int(t) for t in theta)))
    for t in theta:
        if not 1 <= t <= system.rank:
            raise ValueError(f"theta node {t} out of range 1..{system.rank}")
    return theta


def longest_element(system: RootSystem, theta=None) -> WeylElement:
    """Longest element of the parabolic subgroup W_theta (full group if
    theta covers every node).  Greedy ascent: keep multiplying by a
    length-increasing generator from theta, smallest index first."""
    if theta is None:
        theta = range(1, system.rank + 1)
    theta = normalize_theta(system, theta)
    w = identity(system)
    while True:
        for i in theta:
            if system.is_positive(w.images[i - 1]):
                w = mult_simple_right(w, i)
                break
        else:
            return w


class WeylGroup:
    """Fully enumerated Weyl group with canonical order and fast tables.

    Elements are listed by length, ties broken lexicographically on the
    image tuples; this order fixes every downstream basis enumeration.
    The group is materialized eagerly only when something asks for it.
    """

    def __init__(self, system: RootSystem):
        self.system = system
        self.rank = system.rank
        self._elements: tuple[WeylElement, ...] | None = None
        self._index: dict[tuple[Root, ...], int] = {}
        self._right: list[tuple[int, ...]] = []
        self._left: list[tuple[int, ...]] = []
        self._by_length: list[list[int]] = []
        self._left_min_descent: list[int] = []
        self._inverse_idx: list[int] = []

    # -- enumeration -------------------------------------------------------

    def _ensure(self) -> None:
        if self._elements is not None:
            return
        e = identity(self.system)
        seen: dict[tuple[Root, ...], WeylElement] = {e.images: e}
        frontier = [e]
        while frontier:
            nxt = []
            for w in frontier:
                for i in range(1, self.rank + 1):
                    u = mult_simple_right(w, i)
                    if u.length > w.length and u.images not in seen:
                        seen[u.images] = u
                        nxt.append(u)
            frontier = nxt
        elements = tuple(sorted(seen.values(), key=lambda w: (w.length, w.images)))
        self._elements = elements
        self._index = {w.images: k for k, w in enumerate(elements)}
        n = len(elements)
        right = []
        left = []
        for w in elements:
            right.append(tuple(self._index[mult_simple_right(w, i).images]
                               for i in range(1, self.rank + 1)))
            left.append(tuple(self._index[mult_simple_left(w, i).images]
                              for i in range(1, self.rank + 1)))
        self._right = right
        self._left = left
        max_len = elements[-1].length
        by_length: list[list[int]] = [[] for _ in range(max_len + 1)]
        for k, w in enumerate(elements):
            by_length[w.length].append(k)
        self._by_length = by_length
        left_min = []
        for k, w in enumerate(elements):
            if w.length == 0:
                left_min.append(-1)
                continue
            for i in range(1, self.rank + 1):
                if elements[left[k][i - 1]].length < w.length:
                    left_min.append(i)
                    break
        self._left_min_descent = left_min
        inv = [0] * n
        for k, w in enumerate(elements):
            word = reduced_word(w)
            cur = 0
            for i in reversed(word):
                cur = right[cur][i - 1]
            inv[k] = cur
        self._inverse_idx = inv

    @property
    def elements(self) -> tuple[WeylElement, ...]:
        self._ensure()
        return self._elements  # type: ignore[return-value]

    @property
    def order(self) -> int:
        return len(self.elements)

    def index_of(self, w: WeylElement) -> int:
        self._ensure()
        try:
            return self._index[w.images]
        except KeyError:
            raise ValueError("element does not belong to this group") from None

    def element_at(self, idx: int) -> WeylElement:
        return self.elements[idx]

    def right_index(self, idx: int, i: int) -> int:
        self._ensure()
        return self._right[idx][i - 1]

    def left_index(self, idx: int, i: int) -> int:
        self._ensure()
        return self._left[idx][i - 1]

    def indices_of_length(self, length: int) -> list[int]:
        self._ensure()
        if length < 0 or length >= len(self._by_length):
            return []
        return self._by_length[length]

    def left_min_descent(self, idx: int) -> int:
        self._ensure()
        return self._left_min_descent[idx]

    def inverse_index(self, idx: int) -> int:
        self._ensure()
        return self._inverse_idx[idx]

    @property
    def max_length(self) -> int:
        self._ensure()
        return len(self._by_length) - 1

    # -- distinguished elements and cosets ----------------------------------

    @property
    def identity(self) -> WeylElement:
        return identity(self.system)

    def simple(self, i: int) -> WeylElement:
        return simple_reflection(self.system, i)

    @property
    def longest(self) -> WeylElement:
        return longest_element(self.system)

    def longest_parabolic(self, theta) -> WeylElement:
        return longest_element(self.system, theta)

    def minimal_coset_reps(self, theta) -> tuple[WeylElement, ...]:
        """W^theta: elements sending every theta-simple root to a positive
        root; one minimal-length representative per coset, graded by
        length in the canonical order."""
        theta = normalize_theta(self.system, theta)
        reps = tuple(w for w in self.elements
                     if all(self.system.is_positive(w.images[t - 1])
                            for t in theta))
        return reps

    def maximal_coset_reps(self, theta) -> tuple[WeylElement, ...]:
        """Maximal-length coset representatives, the minimal ones times the
        longest element of W_theta; the order mirrors the minimal reps."""
        theta = normalize_theta(self.system, theta)
        w_theta = self.longest_parabolic(theta)
        out = []
        for v in self.minimal_coset_reps(theta):
            w = multiply(v, w_theta)
            if w.length != v.length + w_theta.length:
                raise AssertionError("coset bijection lost length additivity")
            out.append(w)
        return tuple(out)


@lru_cache(maxsize=None)
def get_weyl_group(system: RootSystem) -> WeylGroup:
    return WeylGroup(system)
