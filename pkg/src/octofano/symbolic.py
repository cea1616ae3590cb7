"""Sparse multivariate polynomials with integer coefficients.

A monomial is a tuple of ``(variable_id, exponent)`` pairs sorted by id with
positive exponents; the constant monomial is ``()``.  A :class:`Poly` maps
monomials to nonzero ints, so equality of polynomials is plain dict
equality and the zero polynomial is the empty map.
"""

from __future__ import annotations

from typing import Callable, Dict, Iterable, Mapping, Optional, Sequence, Tuple

Monomial = Tuple[Tuple[int, int], ...]


def mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    merged = dict(m1)
    for v, e in m2:
        merged[v] = merged.get(v, 0) + e
    return tuple(sorted(merged.items()))


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def _check_monomial(m) -> Monomial:
    m = tuple((int(v), int(e)) for v, e in m)
    ids = [v for v, _ in m]
    if ids != sorted(set(ids)):
        raise ValueError(f"monomial {m!r} is not in canonical (ascending id) order")
    if any(e <= 0 for _, e in m):
        raise ValueError(f"monomial {m!r} has a nonpositive exponent")
    return m


class Poly:
    """Immutable sparse polynomial over the integers."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Monomial, int]] = None):
        clean: Dict[Monomial, int] = {}
        if terms:
            for m, c in terms.items():
                if c:
                    clean[_check_monomial(m)] = int(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Monomial, int]) -> "Poly":
        # trusted constructor: caller guarantees canonical, zero-free terms
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def var(cls, vid: int) -> "Poly":
        return cls._raw({((vid, 1),): 1})

    @classmethod
    def const(cls, c: int) -> "Poly":
        return cls._raw({(): int(c)} if c else {})

    @property
    def terms(self) -> Dict[Monomial, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def variables(self) -> Tuple[int, ...]:
        return tuple(sorted({v for m in self._terms for v, _ in m}))

    def degree(self) -> int:
        return max((mono_degree(m) for m in self._terms), default=-1)

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, int):
            return Poly.const(other)
        return NotImplemented

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw({m: -c for m, c in self._terms.items()})

    def __pos__(self) -> "Poly":
        return self

    def __sub__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if isinstance(other, int):
            if not other:
                return Poly()
            return Poly._raw({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        out: Dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Poly._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def evaluate(self, values: Mapping[int, object]):
        """Substitute ``values[vid]`` for every variable; exact for ints/Fractions."""
        total = 0
        for m, c in self._terms.items():
            t = c
            for v, e in m:
                t = t * values[v] ** e
            total = total + t
        return total

    def substitute(self, images: Mapping[int, "Poly"]) -> "Poly":
        """Replace variables by polynomials; unmapped variables stay."""
        total = Poly()
        for m, c in self._terms.items():
            t = Poly.const(c)
            for v, e in m:
                t = t * (images[v] if v in images else Poly.var(v)) ** e
            total = total + t
        return total

    def sorted_terms(self, var_order: Optional[Sequence[int]] = None):
        """Terms in graded lexicographic order, highest first.

        ``var_order`` lists variable ids from most to least significant; by
        default ids are ranked ascending.
        """
        if var_order is None:
            var_order = sorted({v for m in self._terms for v, _ in m})
        rank = {v: i for i, v in enumerate(var_order)}
        width = len(rank)

        def key(item):
            m, _ = item
            vec = [0] * width
            for v, e in m:
                vec[rank[v]] = e
            return (-mono_degree(m), [-x for x in vec])

        return sorted(self._terms.items(), key=key)

    def render(
        self,
        names: Optional[Callable[[int], str]] = None,
        var_order: Optional[Sequence[int]] = None,
    ) -> str:
        """Textual form, e.g. ``x0^2+x0x1-3``; factors within a monomial by ascending id."""
        names = names or (lambda v: f"x{v}")
        if not self._terms:
            return "0"
        out = []
        for m, c in self.sorted_terms(var_order):
            body = "".join(names(v) + (f"^{e}" if e > 1 else "") for v, e in m)
            mag = abs(c)
            if not body:
                piece = str(mag)
            elif mag == 1:
                piece = body
            else:
                piece = f"{mag}{body}"
            sign = "-" if c < 0 else "+"
            if not out:
                out.append(piece if c > 0 else "-" + piece)
            else:
                out.append(sign + piece)
        return "".join(out)

    def __repr__(self) -> str:
        return f"Poly({self.render()})"


def poly_add(a: Poly, b: Poly) -> Poly:
    return a + b


def poly_mul(a: Poly, b: Poly) -> Poly:
    return a * b


def is_zero(a: Poly) -> bool:
    return a.is_zero()


def poly_sum(polys: Iterable[Poly]) -> Poly:
    total = Poly()
    for p in polys:
        total = total + p
    return total
