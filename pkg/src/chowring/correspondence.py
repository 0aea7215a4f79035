"""The algebra of correspondences between products of homogeneous varieties.

A correspondence from X to Y is an integer combination of product classes
f x g with f a Schubert class of X and g one of Y.  Composition uses the
product formula

    (f_b x g_b) o (f_a x g_a) = deg(g_a * f_b) (f_a x g_b),

where the inner product is evaluated in CH(Y) by the Giambelli route and
collapsed by the degree map; off-degree inner products vanish because the
degree map only sees the point class.  Squares of morphism degree, that
is total codimension dim X inside X x X, form a ring whose unit is the
diagonal.

``realize`` is the pullback action of a square correspondence: for
p = sum c (f x g) it maps x to sum c deg(x*g) f, so the image of an
idempotent is spanned by its first factors.  (This is the realization of
the motive (X, p); twisting shows up as a shift of the supported
codimensions.)

Modular reduction keeps balanced representatives, e.g. coefficients in
{-1, 0, 1} for modulus 3, so printed cycles carry their natural signs.
"""

from __future__ import annotations

import json

from .schubert import ChowElement, ChowRing, SchubertClass

Modulus = int  # 0 means integral coefficients


class Correspondence:
    """Bigraded integer cycle on X x Y acting as a morphism X -> Y."""

    __slots__ = ("source", "target", "terms")

    def __init__(self, source: ChowRing, target: ChowRing,
                 terms: dict | None = None):
        self.source = source
        self.target = target
        self.terms: dict[tuple[SchubertClass, SchubertClass], int] = \
            {fg: v for fg, v in (terms or {}).items() if v}

    @classmethod
    def from_pairs(cls, source: ChowRing, target: ChowRing, pairs) -> "Correspondence":
        terms: dict = {}
        for f, g, v in pairs:
            key = (f, g)
            terms[key] = terms.get(key, 0) + v
        return cls(source, target, terms)

    @classmethod
    def from_product(cls, x: ChowElement, y: ChowElement) -> "Correspondence":
        """Outer product of a cycle on X and a cycle on Y."""
        terms = {}
        for f, vf in x.terms.items():
            for g, vg in y.terms.items():
                terms[(f, g)] = vf * vg
        return cls(x.ring, y.ring, terms)

    # -- structure -----------------------------------------------------------

    def _check_pair(self, other: "Correspondence") -> None:
        if self.source is not other.source or self.target is not other.target:
            raise ValueError("correspondences on different variety pairs")

    def __add__(self, other: "Correspondence") -> "Correspondence":
        self._check_pair(other)
        acc = dict(self.terms)
        for fg, v in other.terms.items():
            acc[fg] = acc.get(fg, 0) + v
        return Correspondence(self.source, self.target, acc)

    def __sub__(self, other: "Correspondence") -> "Correspondence":
        self._check_pair(other)
        acc = dict(self.terms)
        for fg, v in other.terms.items():
            acc[fg] = acc.get(fg, 0) - v
        return Correspondence(self.source, self.target, acc)

    def __neg__(self) -> "Correspondence":
        return Correspondence(self.source, self.target,
                              {fg: -v for fg, v in self.terms.items()})

    def __mul__(self, scalar: int) -> "Correspondence":
        return Correspondence(self.source, self.target,
                              {fg: v * scalar for fg, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (isinstance(other, Correspondence)
                and self.source is other.source and self.target is other.target
                and self.terms == other.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def total_codims(self) -> tuple[int, ...]:
        return tuple(sorted({f.codim + g.codim for f, g in self.terms}))

    @property
    def is_morphism_degree(self) -> bool:
        return all(f.codim + g.codim == self.source.dim for f, g in self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items(),
                      key=lambda kv: (kv[0][0].codim,
                                      self.source.class_position(kv[0][0]),
                                      kv[0][1].codim,
                                      self.target.class_position(kv[0][1])))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for (f, g), v in self.sorted_terms():
            body = f"{self.source.label_of(f)}x{self.target.label_of(g)}"
            if abs(v) != 1:
                body = f"{abs(v)}*{body}"
            bits.append(("+ " if v > 0 else "- ") + body if bits
                        else (body if v > 0 else f"-{body}"))
        return " ".join(bits)


# ---------------------------------------------------------------------------
# operations


def transpose(alpha: Correspondence) -> Correspondence:
    return Correspondence(alpha.target, alpha.source,
                          {(g, f): v for (f, g), v in alpha.terms.items()})


def compose(beta: Correspondence, alpha: Correspondence) -> Correspondence:
    """beta o alpha for alpha: X -> Y and beta: Y -> Z."""
    if alpha.target is not beta.source:
        raise ValueError("middle varieties do not match")
    mid = alpha.target
    acc: dict = {}
    for (f_a, g_a), va in alpha.terms.items():
        for (f_b, g_b), vb in beta.terms.items():
            if g_a.codim + f_b.codim != mid.dim:
                continue
            d = mid.pair_degree(g_a, f_b)
            if d:
                key = (f_a, g_b)
                v = acc.get(key, 0) + va * vb * d
                if v:
                    acc[key] = v
                elif key in acc:
                    del acc[key]
    return Correspondence(alpha.source, beta.target, acc)


def intersect(alpha: Correspondence, beta: Correspondence) -> Correspondence:
    """Cup product on X x Y, factorwise via the Chow ring products."""
    alpha._check_pair(beta)
    acc: dict = {}
    for (f_a, g_a), va in alpha.terms.items():
        for (f_b, g_b), vb in beta.terms.items():
            ff = alpha.source.pair_product(f_a, f_b)
            if ff.is_zero():
                continue
            gg = alpha.target.pair_product(g_a, g_b)
            for cf, vf in ff.terms.items():
                for cg, vg in gg.terms.items():
                    key = (cf, cg)
                    v = acc.get(key, 0) + va * vb * vf * vg
                    if v:
                        acc[key] = v
                    elif key in acc:
                        del acc[key]
    return Correspondence(alpha.source, alpha.target, acc)


def diagonal(ring: ChowRing) -> Correspondence:
    """Diagonal cycle: sum over the basis of [X_w] x [dual of X_w]."""
    terms = {(cls, ring.dual_class(cls)): 1 for cls in ring.classes}
    return Correspondence(ring, ring, terms)


def mod_reduce(alpha: Correspondence, m: Modulus) -> Correspondence:
    """Reduce coefficients to balanced representatives in (-m/2, m/2]."""
    if m < 0:
        raise ValueError("modulus must be >= 0")
    if m == 0:
        return alpha
    acc = {}
    for fg, v in alpha.terms.items():
        r = v % m
        if 2 * r > m:
            r -= m
        if r:
            acc[fg] = r
    return Correspondence(alpha.source, alpha.target, acc)


def congruent(alpha: Correspondence, beta: Correspondence, m: Modulus) -> bool:
    return mod_reduce(alpha - beta, m).is_zero()


def _require_square_morphism(p: Correspondence, what: str) -> None:
    if p.source is not p.target:
        raise ValueError(f"{what} needs a correspondence from a variety to itself")
    if not p.is_morphism_degree:
        raise ValueError(f"{what} needs a correspondence of morphism degree")


def is_idempotent(p: Correspondence, m: Modulus = 0) -> bool:
    _require_square_morphism(p, "idempotency")
    return congruent(compose(p, p), p, m) if m else compose(p, p) == p


def are_orthogonal(p: Correspondence, q: Correspondence, m: Modulus = 0) -> bool:
    _require_square_morphism(p, "orthogonality")
    _require_square_morphism(q, "orthogonality")
    if p.source is not q.source:
        raise ValueError("idempotents live on different varieties")
    ab = compose(p, q)
    ba = compose(q, p)
    if m:
        return mod_reduce(ab, m).is_zero() and mod_reduce(ba, m).is_zero()
    return ab.is_zero() and ba.is_zero()


def realize(p: Correspondence, x: ChowElement) -> ChowElement:
    """Pullback action x -> sum c deg(x*g) f of a square correspondence."""
    if p.source is not p.target:
        raise ValueError("realization needs a square correspondence")
    ring = p.source
    if x.ring is not ring:
        raise ValueError("cycle lives on the wrong variety")
    acc: dict = {}
    for (f, g), v in p.terms.items():
        for cls, vx in x.terms.items():
            if cls.codim + g.codim != ring.dim:
                continue
            d = ring.pair_degree(cls, g)
            if d:
                acc[f] = acc.get(f, 0) + v * vx * d
    return ChowElement(ring, acc)


# ---------------------------------------------------------------------------
# serialization


def to_jsonable(alpha: Correspondence) -> list[dict]:
    return [{"f": alpha.source.label_of(f), "g": alpha.target.label_of(g),
             "coeff": v}
            for (f, g), v in alpha.sorted_terms()]


def to_json(alpha: Correspondence) -> str:
    return json.dumps(to_jsonable(alpha), indent=2) + "\n"


def from_jsonable(source: ChowRing, target: ChowRing, data) -> Correspondence:
    pairs = [(source.class_by_label(item["f"]), target.class_by_label(item["g"]),
              int(item["coeff"])) for item in data]
    return Correspondence.from_pairs(source, target, pairs)
