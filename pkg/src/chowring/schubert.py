"""Chow rings of projective homogeneous varieties G/P in the Schubert basis.

The basis of CH(G/P_theta) is indexed by the maximal-length coset
representatives; the class indexed by w has codimension l(w0) - l(w).
Three multiplication routes are implemented:

* ``duality_pair`` evaluates products in complementary codimensions from
  the closed formula  [X_w]*[X_w'] = delta_{w, w0*w'*w_theta} * [pt];
* ``chevalley_mult`` multiplies by the codimension-1 class through the
  sum over positive roots beta with l(w*s_beta) = l(w) - 1, weighted by
  the coroot pairing <beta^vee, omega_alpha>;
* ``multiply`` handles arbitrary products by lifting both factors to the
  weight polynomial ring along  lift([X_w]) = delta_{w^{-1}}(d / |W|),
  multiplying there and projecting back with the linear map
  c(u) = sum_{l(w) = deg u} delta_w(u) [X_{w0 w}].

Products of parabolic classes are computed inside the full flag ring and
asserted to land back in the subring, which doubles as a continuous
convention check.  All parabolic rings over one Weyl group share a cached
engine, so lifts and pairwise products are computed once per group.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

from . import weyl as _weyl
from .poly import (RationalPolynomial, _raw_delta, _raw_mul,
                   _raw_root_product, _raw_scale)
from .rootsystem import RootSystem
from .weyl import WeylElement, WeylGroup, get_weyl_group


class SubringError(RuntimeError):
    """A product left the span of the parabolic Schubert basis."""


@dataclass(frozen=True)
class SchubertClass:
    """Basis cycle [X_w]; ``rep`` is the indexing Weyl element."""

    rep: WeylElement
    codim: int

    def __repr__(self) -> str:
        return f"SchubertClass({_weyl.serialize(self.rep)!r}, codim={self.codim})"


class ChowElement:
    """Integer combination of Schubert classes of one ring."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: "ChowRing", terms: dict | None = None):
        self.ring = ring
        self.terms: dict[SchubertClass, int] = \
            {c: v for c, v in (terms or {}).items() if v}

    def _check(self, other: "ChowElement") -> None:
        if self.ring is not other.ring:
            raise ValueError("elements of different Chow rings")

    def __add__(self, other: "ChowElement") -> "ChowElement":
        self._check(other)
        acc = dict(self.terms)
        for c, v in other.terms.items():
            acc[c] = acc.get(c, 0) + v
        return ChowElement(self.ring, acc)

    def __sub__(self, other: "ChowElement") -> "ChowElement":
        self._check(other)
        acc = dict(self.terms)
        for c, v in other.terms.items():
            acc[c] = acc.get(c, 0) - v
        return ChowElement(self.ring, acc)

    def __neg__(self) -> "ChowElement":
        return ChowElement(self.ring, {c: -v for c, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, ChowElement):
            return self.ring.multiply(self, other)
        return ChowElement(self.ring, {c: v * other for c, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (isinstance(other, ChowElement) and self.ring is other.ring
                and self.terms == other.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def codims(self) -> tuple[int, ...]:
        return tuple(sorted({c.codim for c in self.terms}))

    def is_homogeneous(self) -> bool:
        return len(self.codims()) <= 1

    def graded_part(self, codim: int) -> "ChowElement":
        return ChowElement(self.ring,
                           {c: v for c, v in self.terms.items() if c.codim == codim})

    def sorted_terms(self) -> list[tuple[SchubertClass, int]]:
        ring = self.ring
        return sorted(self.terms.items(),
                      key=lambda cv: (cv[0].codim, ring.class_position(cv[0])))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for cls, v in self.sorted_terms():
            label = self.ring.label_of(cls)
            body = label if abs(v) == 1 else f"{abs(v)}*{label}"
            parts.append(("+ " if v > 0 else "- ") + body if parts
                         else (body if v > 0 else f"-{body}"))
        return " ".join(parts)


class _GiambelliEngine:
    """Per-group lift/c-map machinery over the full flag variety.

    Works on raw integer polynomials; the product of positive roots d is
    kept unscaled and all divisions by |W| happen at the very end of the
    c map, with exactness asserted.
    """

    def __init__(self, group: WeylGroup):
        self.group = group
        self.system = group.system
        self._d_raw = dict(_raw_root_product(group.system))
        self._delta_d: dict[int, dict] = {}    # idx -> delta_{w_idx}(d)
        self._w0_left: list[int] | None = None
        self._products: dict[tuple[int, int], dict[int, int]] = {}

    # delta_{w}(d), memoized along smallest-left-descent chains
    def delta_d(self, idx: int) -> dict:
        cached = self._delta_d.get(idx)
        if cached is not None:
            return cached
        group = self.group
        stack = [idx]
        while stack:
            top = stack[-1]
            if top in self._delta_d:
                stack.pop()
                continue
            if group.element_at(top).length == 0:
                self._delta_d[top] = self._d_raw
                stack.pop()
                continue
            i = group.left_min_descent(top)
            parent = group.left_index(top, i)
            got = self._delta_d.get(parent)
            if got is None:
                stack.append(parent)
                continue
            self._delta_d[top] = _raw_delta(self.system, i, got)
            stack.pop()
        return self._delta_d[idx]

    def lift_raw(self, w: WeylElement) -> dict:
        """|W| times the canonical lift of [X_w]."""
        idx = self.group.index_of(w)
        return self.delta_d(self.group.inverse_index(idx))

    def w0_left(self, idx: int) -> int:
        """Index of w0 * w."""
        if self._w0_left is None:
            group = self.group
            w0_word = _weyl.reduced_word(group.longest)
            table = []
            for k in range(group.order):
                cur = k
                for i in reversed(w0_word):
                    cur = group.left_index(cur, i)
                table.append(cur)
            self._w0_left = table
        return self._w0_left[idx]

    def c_raw(self, u_raw: dict, degree: int) -> dict[int, object]:
        """delta_w(u) for all w of the given length, by level-order walk.

        Returns index -> constant (int or Fraction).  Zero polynomials are
        pruned so dead branches cost nothing.
        """
        group = self.group
        if degree > group.max_length:
            return {}
        level: dict[int, dict] = {0: u_raw} if u_raw else {}
        for m in range(1, degree + 1):
            nxt: dict[int, dict] = {}
            for idx in group.indices_of_length(m):
                i = group.left_min_descent(idx)
                parent = level.get(group.left_index(idx, i))
                if not parent:
                    continue
                val = _raw_delta(self.system, i, parent)
                if val:
                    nxt[idx] = val
            level = nxt
            if not level:
                return {}
        out: dict[int, object] = {}
        for idx, raw in level.items():
            for e, c in raw.items():
                if any(e):
                    raise AssertionError("c map met a non-constant leaf")
            const = raw.get(tuple([0] * self.system.rank), 0)
            if const:
                out[idx] = const
        return out

    def product_classes(self, wa: WeylElement, wb: WeylElement) -> dict[int, int]:
        """[X_wa]*[X_wb] over the full flag ring, as index -> coefficient.

        Memoized per unordered pair of element indices; the division by
        |W|^2 must be exact or the conventions are broken somewhere.
        """
        group = self.group
        ia, ib = group.index_of(wa), group.index_of(wb)
        key = (ia, ib) if ia <= ib else (ib, ia)
        cached = self._products.get(key)
        if cached is not None:
            return cached
        la = group.element_at(key[0]).length
        lb = group.element_at(key[1]).length
        top = group.max_length
        codim = (top - la) + (top - lb)
        result: dict[int, int] = {}
        if codim <= top:
            u = _raw_mul(self.delta_d(group.inverse_index(key[0])),
                         self.delta_d(group.inverse_index(key[1])))
            order2 = group.order * group.order
            for idx, const in self.c_raw(u, codim).items():
                q, r = divmod(const, order2)
                if r:
                    raise AssertionError("lift product left the integer lattice")
                if q:
                    result[self.w0_left(idx)] = q
        self._products[key] = result
        return result


@lru_cache(maxsize=None)
def _get_engine(group: WeylGroup) -> _GiambelliEngine:
    return _GiambelliEngine(group)


class ChowRing:
    """CH(G/P_theta) for the Weyl group of ``system``; theta=() is G/B."""

    def __init__(self, system: RootSystem, theta=()):
        self.system = system
        self.group = get_weyl_group(system)
        self.theta = _weyl.normalize_theta(system, theta)
        self.engine = _get_engine(self.group)
        self.w0 = self.group.longest
        self.w_theta = self.group.longest_parabolic(self.theta)
        self.dim = self.w0.length - self.w_theta.length
        reps = self.group.maximal_coset_reps(self.theta)
        classes = [SchubertClass(w, self.w0.length - w.length) for w in reps]
        classes.sort(key=lambda c: (c.codim, c.rep.images))
        self.classes: tuple[SchubertClass, ...] = tuple(classes)
        self._position = {c.rep: k for k, c in enumerate(self.classes)}
        self._by_codim: list[list[SchubertClass]] = [[] for _ in range(self.dim + 1)]
        for c in self.classes:
            self._by_codim[c.codim].append(c)
        self.labels: dict[str, SchubertClass] | None = None
        self._label_of: dict[SchubertClass, str] = {}
        self._pair_products: dict[tuple[WeylElement, WeylElement], ChowElement] = {}
        self._pair_degrees: dict[tuple[WeylElement, WeylElement], int] = {}
        self.self_check = True

    # -- basis bookkeeping ---------------------------------------------------

    @property
    def rank_total(self) -> int:
        return len(self.classes)

    def basis(self, codim: int) -> tuple[SchubertClass, ...]:
        if not 0 <= codim <= self.dim:
            raise ValueError(f"codimension {codim} out of range 0..{self.dim}")
        return tuple(self._by_codim[codim])

    def ranks(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self._by_codim)

    @property
    def unit_class(self) -> SchubertClass:
        return self._by_codim[0][0]

    @property
    def point_class(self) -> SchubertClass:
        return self._by_codim[self.dim][0]

    def class_position(self, cls: SchubertClass) -> int:
        try:
            return self._position[cls.rep]
        except KeyError:
            raise ValueError("class does not belong to this ring") from None

    def class_of(self, w: WeylElement) -> SchubertClass:
        pos = self._position.get(w)
        if pos is None:
            raise ValueError("element does not index a basis class of this ring")
        return self.classes[pos]

    def element(self, terms) -> ChowElement:
        if isinstance(terms, SchubertClass):
            return ChowElement(self, {terms: 1})
        return ChowElement(self, dict(terms))

    def zero(self) -> ChowElement:
        return ChowElement(self)

    @property
    def unit(self) -> ChowElement:
        return self.element(self.unit_class)

    # -- labels (attached by the F4 pipeline) --------------------------------

    def attach_labels(self, mapping: dict[str, SchubertClass]) -> None:
        self.labels = dict(mapping)
        self._label_of = {cls: lab for lab, cls in mapping.items()}

    def label_of(self, cls: SchubertClass) -> str:
        lab = self._label_of.get(cls)
        if lab is not None:
            return lab
        return f"[{_weyl.serialize(cls.rep)}]"

    def class_by_label(self, label: str) -> SchubertClass:
        if self.labels is None or label not in self.labels:
            raise ValueError(f"unknown class label {label!r}")
        return self.labels[label]

    # -- duality ---------------------------------------------------------------

    def dual_class(self, cls: SchubertClass) -> SchubertClass:
        w = _weyl.multiply(_weyl.multiply(self.w0, cls.rep), self.w_theta)
        return self.class_of(w)

    def duality_pair(self, x: ChowElement, y: ChowElement) -> int:
        """Coefficient of the point class in x*y for complementary degrees."""
        if x.is_zero() or y.is_zero():
            return 0
        if not (x.is_homogeneous() and y.is_homogeneous()):
            raise ValueError("duality pairing needs homogeneous arguments")
        if x.codims()[0] + y.codims()[0] != self.dim:
            raise ValueError("duality pairing needs complementary codimensions")
        total = 0
        duals = {self.dual_class(cy): vy for cy, vy in y.terms.items()}
        for cx, vx in x.terms.items():
            vy = duals.get(cx)
            if vy:
                total += vx * vy
        return total

    # -- Chevalley multiplication ----------------------------------------------

    def codim1_node(self, cls: SchubertClass) -> int:
        """Which node's codimension-1 class this is."""
        for i in range(1, self.system.rank + 1):
            if cls.rep == _weyl.mult_simple_right(self.w0, i):
                return i
        raise ValueError("not a codimension-1 Schubert class")

    def hyperplane_class(self, node: int) -> SchubertClass:
        """[X_{w0 s_node}], the codimension-1 class attached to a node."""
        if node in self.theta:
            raise ValueError(f"node {node} lies in theta; its hyperplane class "
                             "is not in this subring")
        return self.class_of(_weyl.mult_simple_right(self.w0, node))

    def chevalley_mult(self, node: int, x: ChowElement) -> ChowElement:
        """Product with the codimension-1 class of ``node``.

        Runs over positive roots beta with l(w s_beta) = l(w) - 1; the
        coefficient is <beta^vee, omega_node>.  The result is asserted to
        stay inside the parabolic subring.
        """
        if node in self.theta:
            raise ValueError(f"node {node} lies in theta")
        omega = self.system.fundamental_weight(node)
        acc: dict[SchubertClass, int] = {}
        for cls, v in x.terms.items():
            for beta, s_beta in _root_reflections(self.system):
                coeff = self.system.coroot_pairing(beta, omega)
                if coeff == 0:
                    continue
                w2 = _weyl.multiply(cls.rep, s_beta)
                if w2.length != cls.rep.length - 1:
                    continue
                pos = self._position.get(w2)
                if pos is None:
                    raise SubringError(
                        f"Chevalley product left the subring at "
                        f"{_weyl.serialize(w2)} (coefficient {coeff})")
                target = self.classes[pos]
                acc[target] = acc.get(target, 0) + v * coeff
        return ChowElement(self, acc)

    # -- Giambelli route ---------------------------------------------------------

    def giambelli_lift(self, cls: SchubertClass) -> RationalPolynomial:
        """Canonical polynomial lift delta_{w^{-1}}(d / |W|) of [X_w]."""
        raw = self.engine.lift_raw(cls.rep)
        scale = Fraction(1, self.group.order)
        return RationalPolynomial(self.system, _raw_scale(raw, scale))

    def c_map(self, u: RationalPolynomial) -> ChowElement:
        """c(u) = sum over w of length deg(u) of delta_w(u) [X_{w0 w}].

        Raises if a coefficient is non-integral ("not in the image
        lattice") or, for a parabolic ring, if the support leaves the
        subring.
        """
        if u.system is not self.system:
            raise ValueError("polynomial belongs to a different root system")
        if u.is_zero():
            return self.zero()
        if not u.is_homogeneous():
            raise ValueError("c map needs a homogeneous polynomial")
        den = lcm(*(Fraction(c).denominator for c in u.terms.values()))
        raw = {e: int(c * den) for e, c in u.terms.items()}
        acc: dict[SchubertClass, int] = {}
        for idx, const in self.engine.c_raw(raw, u.degree()).items():
            q, r = divmod(const, den)
            if r:
                raise ValueError("polynomial is not in the image lattice of c")
            target = self.group.element_at(self.engine.w0_left(idx))
            pos = self._position.get(target)
            if pos is None:
                raise SubringError(
                    f"c map support left the subring at {_weyl.serialize(target)}")
            acc[self.classes[pos]] = q
        return ChowElement(self, acc)

    # -- general products ----------------------------------------------------------

    def pair_product(self, a: SchubertClass, b: SchubertClass) -> ChowElement:
        key = (a.rep, b.rep) if (a.codim, a.rep.images) <= (b.codim, b.rep.images) \
            else (b.rep, a.rep)
        cached = self._pair_products.get(key)
        if cached is not None:
            return cached
        if a.codim + b.codim > self.dim:
            result = self.zero()
        else:
            raw = self.engine.product_classes(a.rep, b.rep)
            acc: dict[SchubertClass, int] = {}
            for idx, v in raw.items():
                w = self.group.element_at(idx)
                pos = self._position.get(w)
                if pos is None:
                    raise SubringError(
                        f"product left the subring at {_weyl.serialize(w)}")
                acc[self.classes[pos]] = v
            result = ChowElement(self, acc)
            if self.self_check:
                self._cross_check(a, b, result)
        self._pair_products[key] = result
        return result

    def _cross_check(self, a: SchubertClass, b: SchubertClass,
                     result: ChowElement) -> None:
        if b.codim == 1 or a.codim == 1:
            one, other = (b, a) if b.codim == 1 else (a, b)
            node = self.codim1_node(one)
            alt = self.chevalley_mult(node, self.element(other))
            if alt != result:
                raise AssertionError(
                    f"Giambelli and Chevalley products disagree on "
                    f"{self.label_of(a)} * {self.label_of(b)}")
        if a.codim + b.codim == self.dim:
            pairing = self.duality_pair(self.element(a), self.element(b))
            if result.terms.get(self.point_class, 0) != pairing or \
                    len(result.terms) > (1 if pairing else 0):
                raise AssertionError(
                    f"Giambelli product disagrees with the duality pairing on "
                    f"{self.label_of(a)} * {self.label_of(b)}")

    def multiply(self, x: ChowElement, y: ChowElement) -> ChowElement:
        """Bilinear extension of the lift-multiply-project product."""
        x._check(y)
        if x.ring is not self:
            raise ValueError("elements belong to a different ring")
        acc = self.zero()
        for ca, va in x.terms.items():
            for cb, vb in y.terms.items():
                acc = acc + (va * vb) * self.pair_product(ca, cb)
        return acc

    def pair_degree(self, a: SchubertClass, b: SchubertClass) -> int:
        """degree([X_a]*[X_b]); memoized, used heavily by correspondences."""
        key = (a.rep, b.rep) if a.rep.images <= b.rep.images else (b.rep, a.rep)
        got = self._pair_degrees.get(key)
        if got is None:
            got = self.degree(self.pair_product(a, b))
            self._pair_degrees[key] = got
        return got

    def degree(self, x: ChowElement) -> int:
        """Coefficient of the point class (other components contribute 0)."""
        return x.terms.get(self.point_class, 0)

    def power(self, cls: SchubertClass, n: int) -> ChowElement:
        acc = self.unit
        for _ in range(n):
            acc = self.multiply(acc, self.element(cls))
        return acc

    def __repr__(self) -> str:
        return f"ChowRing(theta={self.theta}, dim={self.dim}, rank={self.rank_total})"


@lru_cache(maxsize=None)
def _root_reflections(system: RootSystem):
    """(beta, s_beta) for every positive root, in canonical root order."""
    return tuple((beta, _weyl.reflection(system, beta))
                 for beta in system.positive_roots)


@lru_cache(maxsize=None)
def get_chow_ring(system: RootSystem, theta=()) -> ChowRing:
    return ChowRing(system, theta)


# ---------------------------------------------------------------------------
# multiplication table export


def hyperplane_table(ring: ChowRing, node: int) -> list[dict]:
    """Products H*u for every basis class u of codimension 1..dim-1.

    Rows come in basis order and each product is a sorted list of
    {class, coeff} entries, using ring labels when attached.
    """
    rows = []
    h = ring.hyperplane_class(node)
    for codim in range(1, ring.dim):
        for cls in sorted(ring.basis(codim), key=ring.label_of):
            product = ring.chevalley_mult(node, ring.element(cls))
            entries = sorted(({"class": ring.label_of(c), "coeff": v}
                              for c, v in product.terms.items()),
                             key=lambda e: e["class"])
            rows.append({"lhs": ring.label_of(h), "rhs": ring.label_of(cls),
                         "product": entries})
    return rows


def format_table_text(rows: list[dict]) -> str:
    lines = []
    width = max(len(f"{r['lhs']}*{r['rhs']}") for r in rows) if rows else 0
    for r in rows:
        rhs = " + ".join(
            (f"{e['coeff']}*{e['class']}" if e["coeff"] != 1 else e["class"])
            for e in r["product"]) or "0"
        lines.append(f"{(r['lhs'] + '*' + r['rhs']).ljust(width)} = {rhs}")
    return "\n".join(lines) + "\n"
