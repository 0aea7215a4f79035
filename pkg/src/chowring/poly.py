"""Exact polynomials in fundamental-weight variables with the Weyl action
and divided-difference operators.

Coefficients are exact rationals (Python ints or Fractions; the two mix
freely and integer-only inputs stay integer, which keeps the long
divided-difference chains fast).  Floating point never appears.

The divided difference against a simple root is computed through the
telescoping identity

    (w_i^e - L_i^e) / alpha_i  =  sum_{a+b=e-1} w_i^a * L_i^b,

where L_i = s_i(w_i) = w_i - alpha_i.  Since s_i fixes every variable
except w_i, this reduces the operator to a per-monomial table lookup and
no polynomial division is ever performed; the defining identity
alpha_i * delta_i(u) == u - s_i(u) is enforced by the test suite instead
of a remainder check.

Raw term dictionaries (exponent tuple -> coefficient) are the working
representation; :class:`RationalPolynomial` is the thin public wrapper
that ties a term dict to its root system.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from weakref import WeakKeyDictionary

from .rootsystem import RootSystem
from .weyl import WeylElement, reduced_word

RawPoly = dict  # exponent tuple -> int | Fraction, zero coefficients absent


# ---------------------------------------------------------------------------
# raw term-dict arithmetic


def _raw_add_into(acc: RawPoly, other: RawPoly, scale=1) -> None:
    for e, c in other.items():
        v = acc.get(e, 0) + c * scale
        if v:
            acc[e] = v
        elif e in acc:
            del acc[e]


def _raw_mul(a: RawPoly, b: RawPoly) -> RawPoly:
    if len(a) > len(b):
        a, b = b, a
    out: RawPoly = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            v = out.get(e, 0) + ca * cb
            if v:
                out[e] = v
            elif e in out:
                del out[e]
    return out


def _raw_scale(a: RawPoly, scale) -> RawPoly:
    if scale == 0:
        return {}
    return {e: c * scale for e, c in a.items()}


def _raw_degree(a: RawPoly) -> int:
    return max((sum(e) for e in a), default=0)


class _Calculus:
    """Per-root-system caches for the substitution and difference tables."""

    def __init__(self, system: RootSystem):
        self.system = system
        n = system.rank
        # L_i = w_i - alpha_i as a raw linear form, per node (0-based list).
        self.lin: list[RawPoly] = []
        for i in range(1, n + 1):
            alpha = system.simple_root_weight(i)
            form: RawPoly = {}
            for k in range(n):
                c = (1 if k == i - 1 else 0) - alpha[k]
                if c:
                    form[tuple(1 if t == k else 0 for t in range(n))] = c
            self.lin.append(form)
        self._lin_pows: list[list[RawPoly]] = [[{tuple([0] * n): 1}] for _ in range(n)]
        self._diff_pows: list[list[RawPoly]] = [[{}] for _ in range(n)]

    def lin_pow(self, i0: int, e: int) -> RawPoly:
        pows = self._lin_pows[i0]
        while len(pows) <= e:
            pows.append(_raw_mul(pows[-1], self.lin[i0]))
        return pows[e]

    def diff_pow(self, i0: int, e: int) -> RawPoly:
        """delta_i(w_i^e) = sum_{a+b=e-1} w_i^a L_i^b, cached."""
        pows = self._diff_pows[i0]
        n = self.system.rank
        while len(pows) <= e:
            k = len(pows)  # building delta_i(w_i^k)
            acc: RawPoly = {}
            for a in range(k):
                lp = self.lin_pow(i0, k - 1 - a)
                for eb, cb in lp.items():
                    e_full = tuple(eb[t] + (a if t == i0 else 0) for t in range(n))
                    v = acc.get(e_full, 0) + cb
                    if v:
                        acc[e_full] = v
                    elif e_full in acc:
                        del acc[e_full]
            pows.append(acc)
        return pows[e]


_CALCULUS: "WeakKeyDictionary[RootSystem, _Calculus]" = WeakKeyDictionary()


def _calculus(system: RootSystem) -> _Calculus:
    calc = _CALCULUS.get(system)
    if calc is None:
        calc = _Calculus(system)
        _CALCULUS[system] = calc
    return calc


def _raw_reflect(system: RootSystem, i: int, a: RawPoly) -> RawPoly:
    """s_i(u): substitute w_i -> L_i, all other variables fixed."""
    calc = _calculus(system)
    i0 = i - 1
    n = system.rank
    out: RawPoly = {}
    for e, c in a.items():
        k = e[i0]
        if k == 0:
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            elif e in out:
                del out[e]
            continue
        rest = tuple(0 if t == i0 else e[t] for t in range(n))
        for el, cl in calc.lin_pow(i0, k).items():
            e_full = tuple(rest[t] + el[t] for t in range(n))
            v = out.get(e_full, 0) + c * cl
            if v:
                out[e_full] = v
            elif e_full in out:
                del out[e_full]
    return out


def _raw_delta(system: RootSystem, i: int, a: RawPoly) -> RawPoly:
    """Divided difference (u - s_i(u)) / alpha_i via the telescoped table."""
    calc = _calculus(system)
    i0 = i - 1
    n = system.rank
    out: RawPoly = {}
    for e, c in a.items():
        k = e[i0]
        if k == 0:
            continue
        rest = tuple(0 if t == i0 else e[t] for t in range(n))
        for ed, cd in calc.diff_pow(i0, k).items():
            e_full = tuple(rest[t] + ed[t] for t in range(n))
            v = out.get(e_full, 0) + c * cd
            if v:
                out[e_full] = v
            elif e_full in out:
                del out[e_full]
    return out


@lru_cache(maxsize=None)
def _raw_root_product(system: RootSystem) -> RawPoly:
    n = system.rank
    acc: RawPoly = {tuple([0] * n): 1}
    for beta in system.positive_roots:
        weight = system.root_to_weight(beta)
        form: RawPoly = {}
        for k in range(n):
            if weight[k]:
                form[tuple(1 if t == k else 0 for t in range(n))] = weight[k]
        acc = _raw_mul(acc, form)
    return acc


# ---------------------------------------------------------------------------
# public wrapper


class RationalPolynomial:
    """Polynomial in w1..wn tied to a root system; immutable by contract."""

    __slots__ = ("system", "terms")

    def __init__(self, system: RootSystem, terms: RawPoly | None = None):
        self.system = system
        self.terms: RawPoly = {e: c for e, c in (terms or {}).items() if c}

    # constructors

    @classmethod
    def zero(cls, system: RootSystem) -> "RationalPolynomial":
        return cls(system)

    @classmethod
    def one(cls, system: RootSystem) -> "RationalPolynomial":
        return cls(system, {tuple([0] * system.rank): 1})

    @classmethod
    def constant(cls, system: RootSystem, value) -> "RationalPolynomial":
        return cls(system, {tuple([0] * system.rank): value})

    @classmethod
    def variable(cls, system: RootSystem, i: int) -> "RationalPolynomial":
        if not 1 <= i <= system.rank:
            raise ValueError(f"variable index {i} out of range")
        e = tuple(1 if t == i - 1 else 0 for t in range(system.rank))
        return cls(system, {e: 1})

    # queries

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return _raw_degree(self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def constant_value(self):
        if not self.terms:
            return 0
        if len(self.terms) == 1:
            (e, c), = self.terms.items()
            if not any(e):
                return c
        raise ValueError("polynomial is not constant")

    # arithmetic

    def _check(self, other: "RationalPolynomial") -> None:
        if self.system is not other.system:
            raise ValueError("polynomials belong to different root systems")

    def __add__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        self._check(other)
        acc = dict(self.terms)
        _raw_add_into(acc, other.terms)
        return RationalPolynomial(self.system, acc)

    def __sub__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        self._check(other)
        acc = dict(self.terms)
        _raw_add_into(acc, other.terms, -1)
        return RationalPolynomial(self.system, acc)

    def __neg__(self) -> "RationalPolynomial":
        return RationalPolynomial(self.system, _raw_scale(self.terms, -1))

    def __mul__(self, other):
        if isinstance(other, RationalPolynomial):
            self._check(other)
            return RationalPolynomial(self.system, _raw_mul(self.terms, other.terms))
        return RationalPolynomial(self.system, _raw_scale(self.terms, other))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "RationalPolynomial":
        if n < 0:
            raise ValueError("negative powers are not defined")
        acc = RationalPolynomial.one(self.system)
        for _ in range(n):
            acc = acc * self
        return acc

    def __eq__(self, other) -> bool:
        return (isinstance(other, RationalPolynomial)
                and self.system is other.system
                and self.terms == other.terms)

    def __hash__(self):
        return hash(frozenset((e, Fraction(c)) for e, c in self.terms.items()))

    def __repr__(self) -> str:
        return f"RationalPolynomial({format_polynomial(self)!r})"


# ---------------------------------------------------------------------------
# operators


def weyl_act(w: WeylElement, u: RationalPolynomial) -> RationalPolynomial:
    """Ring automorphism induced by w acting on the weight lattice."""
    if w.system is not u.system:
        raise ValueError("element and polynomial live on different systems")
    raw = u.terms
    for i in reversed(reduced_word(w)):
        raw = _raw_reflect(u.system, i, raw)
    return RationalPolynomial(u.system, raw)


def divided_difference(i: int, u: RationalPolynomial) -> RationalPolynomial:
    """delta_i(u) = (u - s_i(u)) / alpha_i, exact."""
    u.system._check_node(i)
    return RationalPolynomial(u.system, _raw_delta(u.system, i, u.terms))


def divided_difference_word(word, u: RationalPolynomial) -> RationalPolynomial:
    """Composition delta_{a1} o ... o delta_{ak} (rightmost applied first).

    The word does not need to be reduced; a repeated letter annihilates.
    """
    raw = u.terms
    for i in reversed(tuple(word)):
        u.system._check_node(i)
        raw = _raw_delta(u.system, i, raw)
    return RationalPolynomial(u.system, raw)


def positive_root_product(system: RootSystem) -> RationalPolynomial:
    """Product of all positive roots, expanded in the weight variables."""
    return RationalPolynomial(system, dict(_raw_root_product(system)))


# ---------------------------------------------------------------------------
# plain-text serialization: "11/6*w1^2*w4^2 + 3/4*w1^2*w2^2 - ..."


def _term_sort_key(e: tuple) -> tuple:
    return (-sum(e), tuple(-x for x in e))


def format_polynomial(u: RationalPolynomial) -> str:
    if not u.terms:
        return "0"
    pieces: list[str] = []
    for e in sorted(u.terms, key=_term_sort_key):
        c = Fraction(u.terms[e])
        mono = "*".join(
            f"w{k + 1}" + (f"^{e[k]}" if e[k] > 1 else "")
            for k in range(len(e)) if e[k])
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(("+ " if c > 0 else "- ") + body)
    return " ".join(pieces)


def parse_polynomial(system: RootSystem, text: str) -> RationalPolynomial:
    """Inverse of :func:`format_polynomial`; whitespace is ignored."""
    compact = "".join(text.split())
    if not compact or compact == "0":
        return RationalPolynomial.zero(system)
    # split into signed terms
    terms: RawPoly = {}
    chunks: list[str] = []
    start = 0
    for k, ch in enumerate(compact):
        if ch in "+-" and k > start and compact[k - 1] not in "+-/^*":
            chunks.append(compact[start:k])
            start = k
    chunks.append(compact[start:])
    n = system.rank
    for chunk in chunks:
        sign = 1
        while chunk and chunk[0] in "+-":
            if chunk[0] == "-":
                sign = -sign
            chunk = chunk[1:]
        coeff = Fraction(sign)
        expo = [0] * n
        for factor in chunk.split("*"):
            if not factor:
                continue
            if factor[0] == "w":
                var, _, power = factor.partition("^")
                idx = int(var[1:])
                if not 1 <= idx <= n:
                    raise ValueError(f"variable w{idx} out of range for rank {n}")
                expo[idx - 1] += int(power) if power else 1
            else:
                coeff *= Fraction(factor)
        e = tuple(expo)
        v = terms.get(e, 0) + (int(coeff) if coeff.denominator == 1 else coeff)
        if v:
            terms[e] = v
        elif e in terms:
            del terms[e]
    return RationalPolynomial(system, terms)
