"""The Cayley-Dickson tower over the rationals: R, C, H, O and the sedenions.

Level l has dimension 2**l.  An element of level l+1 is a pair (a, b) of
level-l elements, with

    (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c))
    conj((a, b)) = (conj(a), -b)

Basis ordering is recursive: at each doubling e_{2**l + i} = (0, e_i).  Under
this convention e1 e2 = e3 in the quaternions.  Other sign conventions give
isomorphic algebras with different basis-product signs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .tables import MultTable

MAX_LEVEL = 4
NAMES = {0: "reals", 1: "complex numbers", 2: "quaternions", 3: "octonions", 4: "sedenions"}


def _check_level(level: int) -> None:
    if not 0 <= level <= MAX_LEVEL:
        raise ValueError(f"level must be in 0..{MAX_LEVEL}, got {level}")


def _conj(x: tuple) -> tuple:
    return (x[0],) + tuple(-c for c in x[1:])


def _add(x: tuple, y: tuple) -> tuple:
    return tuple(a + b for a, b in zip(x, y))


def _sub(x: tuple, y: tuple) -> tuple:
    return tuple(a - b for a, b in zip(x, y))


def _mul(x: tuple, y: tuple) -> tuple:
    n = len(x)
    if n == 1:
        return (x[0] * y[0],)
    h = n // 2
    a, b, c, d = x[:h], x[h:], y[:h], y[h:]
    return _sub(_mul(a, c), _mul(_conj(d), b)) + _add(_mul(d, a), _mul(b, _conj(c)))


@dataclass(frozen=True)
class CDElement:
    level: int
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        _check_level(self.level)
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if len(coeffs) != 1 << self.level:
            raise ValueError(f"level {self.level} needs {1 << self.level} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence) -> "CDElement":
        n = len(coeffs)
        if n == 0 or n & (n - 1):
            raise ValueError(f"coefficient count {n} is not a power of two")
        return cls(n.bit_length() - 1, tuple(coeffs))

    @classmethod
    def unit(cls, level: int, index: int, sign: int = 1) -> "CDElement":
        c = [0] * (1 << level)
        c[index] = sign
        return cls(level, tuple(c))

    @classmethod
    def real(cls, level: int, r=1) -> "CDElement":
        return cls.unit(level, 0, 1) * Fraction(r)

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    def _same(self, other: "CDElement") -> None:
        if not isinstance(other, CDElement):
            raise TypeError(f"expected CDElement, got {type(other).__name__}")
        if other.level != self.level:
            raise ValueError(f"level mismatch: {self.level} vs {other.level}")

    def __add__(self, other: "CDElement") -> "CDElement":
        self._same(other)
        return CDElement(self.level, _add(self.coeffs, other.coeffs))

    def __sub__(self, other: "CDElement") -> "CDElement":
        self._same(other)
        return CDElement(self.level, _sub(self.coeffs, other.coeffs))

    def __neg__(self) -> "CDElement":
        return CDElement(self.level, tuple(-c for c in self.coeffs))

    def __mul__(self, other) -> "CDElement":
        if isinstance(other, (int, Fraction)):
            return CDElement(self.level, tuple(c * other for c in self.coeffs))
        return cd_multiply(self, other)

    def __rmul__(self, other) -> "CDElement":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __truediv__(self, r) -> "CDElement":
        return CDElement(self.level, tuple(c / r for c in self.coeffs))

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_real(self) -> bool:
        return not any(self.coeffs[1:])

    def support(self) -> Dict[int, Fraction]:
        return {i: c for i, c in enumerate(self.coeffs) if c}

    def __str__(self) -> str:
        parts = []
        for i, c in self.support().items():
            mag = abs(c)
            unit = "" if i == 0 else f"e{i}"
            body = str(mag) if (mag != 1 or not unit) else ""
            if body and unit:
                body += "*"
            parts.append(("-" if c < 0 else "+") + body + unit)
        if not parts:
            return "0"
        s = "".join(parts)
        return s[1:] if s[0] == "+" else s


def cd_multiply(x: CDElement, y: CDElement) -> CDElement:
    """Product by the doubling rule, recursing down to rational multiplication."""
    x._same(y)
    return CDElement(x.level, _mul(x.coeffs, y.coeffs))


def conjugate(x: CDElement) -> CDElement:
    return CDElement(x.level, _conj(x.coeffs))


def norm(x: CDElement) -> Fraction:
    """N(x) = x conj(x), which is always real; raises if that ever fails."""
    p = cd_multiply(x, conjugate(x))
    if not p.is_real():
        raise ArithmeticError(f"x conj(x) has imaginary part for x = {x}")
    return p.coeffs[0]


def inverse(x: CDElement) -> CDElement:
    if x.level > 3:
        raise ValueError("inverse is only defined on the division algebras (level <= 3)")
    n = norm(x)
    if n == 0:
        raise ZeroDivisionError("zero has no inverse")
    return conjugate(x) / n


@lru_cache(maxsize=None)
def basis_table(level: int) -> MultTable:
    """The signed basis-product table of level ``level``, read off from the doubling rule."""
    _check_level(level)
    d = 1 << level
    rows = []
    for i in range(d):
        row = []
        ei = CDElement.unit(level, i)
        for j in range(d):
            ((k, c),) = cd_multiply(ei, CDElement.unit(level, j)).support().items()
            row.append((int(c), k))
        rows.append(tuple(row))
    return MultTable(tuple(rows))


# --- algebraic-law probes ------------------------------------------------------


class Law(str, Enum):
    COMMUTATIVE = "commutative"
    ASSOCIATIVE = "associative"
    ALTERNATIVE = "alternative"
    FLEXIBLE = "flexible"
    MOUFANG = "moufang"
    NORM_COMPOSING = "norm_composing"


class _Ops:
    """Multiplication and norm on one element representation."""

    def __init__(self, mul: Callable, norm: Callable):
        self.mul = mul
        self.norm = norm


# Each law maps elements to (lhs, rhs) pairs that must agree.  The second item
# lists argument positions in which the law is quadratic; it is linear in the rest.
def _commutative(o, x, y):
    return [(o.mul(x, y), o.mul(y, x))]


def _associative(o, x, y, z):
    return [(o.mul(o.mul(x, y), z), o.mul(x, o.mul(y, z)))]


def _alternative(o, x, y):
    xx = o.mul(x, x)
    return [(o.mul(x, o.mul(x, y)), o.mul(xx, y)), (o.mul(o.mul(y, x), x), o.mul(y, xx))]


def _flexible(o, x, y):
    return [(o.mul(x, o.mul(y, x)), o.mul(o.mul(x, y), x))]


def _moufang(o, x, y, z):
    m = o.mul
    zx_yz = m(m(z, x), m(y, z))
    return [
        (zx_yz, m(z, m(m(x, y), z))),
        (zx_yz, m(m(z, m(x, y)), z)),
        (m(z, m(x, m(z, y))), m(m(m(z, x), z), y)),
        (m(x, m(z, m(y, z))), m(m(m(x, z), y), z)),
    ]


def _norm_composing(o, x, y):
    return [(o.norm(o.mul(x, y)), o.norm(x) * o.norm(y))]


LAWS = {
    Law.COMMUTATIVE: (_commutative, 2, ()),
    Law.ASSOCIATIVE: (_associative, 3, ()),
    Law.ALTERNATIVE: (_alternative, 2, (0,)),
    Law.FLEXIBLE: (_flexible, 2, (0,)),
    Law.MOUFANG: (_moufang, 3, (2,)),
    Law.NORM_COMPOSING: (_norm_composing, 2, (0, 1)),
}


def _element_ops() -> _Ops:
    return _Ops(cd_multiply, norm)


def law_holds_on(law: Law, *elements: CDElement) -> bool:
    """Evaluate ``law`` on concrete elements through the doubling-rule product."""
    fn, arity, _ = LAWS[Law(law)]
    if len(elements) != arity:
        raise ValueError(f"{law.value} takes {arity} elements")
    return all(l == r for l, r in fn(_element_ops(), *elements))


@dataclass(frozen=True)
class LawReport:
    level: int
    law: Law
    holds: bool
    counterexample: Optional[Tuple[CDElement, ...]] = None
    basis_tuples_checked: int = 0
    random_trials: int = 0

    def recheck(self) -> bool:
        """True when the stored counterexample still violates the law."""
        if self.counterexample is None:
            return False
        return not law_holds_on(self.law, *self.counterexample)


def _sparse_ops(table: MultTable) -> _Ops:
    entries = table.entries

    def mul(a: Dict[int, int], b: Dict[int, int]) -> Dict[int, int]:
        out: Dict[int, int] = {}
        for i, ca in a.items():
            row = entries[i]
            for j, cb in b.items():
                s, k = row[j]
                out[k] = out.get(k, 0) + s * ca * cb
        return {k: v for k, v in out.items() if v}

    def nrm(a: Dict[int, int]) -> int:
        return sum(v * v for v in a.values())

    return _Ops(mul, nrm)


def _dense_ops(table: MultTable) -> _Ops:
    zero = Fraction(0)
    return _Ops(lambda a, b: tuple(table.multiply(a, b, zero)), lambda a: sum(c * c for c in a))


def basis_candidates(level: int, quadratic: bool) -> List[Dict[int, int]]:
    """Units e_i, plus the pair sums e_i + e_j (i < j) for quadratic arguments.

    A form that is linear in an argument vanishes iff it vanishes on the units;
    a quadratic one vanishes iff it vanishes on units and pair sums.
    """
    d = 1 << level
    units = [{i: 1} for i in range(d)]
    if not quadratic:
        return units
    return units + [{i: 1, j: 1} for i, j in combinations(range(d), 2)]


def _to_element(level: int, sparse: Dict[int, int]) -> CDElement:
    c = [0] * (1 << level)
    for i, v in sparse.items():
        c[i] = v
    return CDElement(level, tuple(c))


def random_element(level: int, rng: random.Random, bound: int = 5) -> CDElement:
    return CDElement(
        level,
        tuple(Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(1 << level)),
    )


def probe_law(level: int, law, trials: int = 100, seed: int = 0) -> LawReport:
    """Test ``law`` exhaustively on basis tuples, then on ``trials`` random elements.

    The basis pass is decisive (the laws are multilinear after polarization);
    the first failing tuple in lexicographic candidate order is returned.
    """
    _check_level(level)
    try:
        law = Law(law)
    except ValueError:
        raise ValueError(f"unknown law {law!r}; choose from {[l.value for l in Law]}") from None
    if trials < 1:
        raise ValueError("trials must be >= 1")
    fn, arity, quad = LAWS[law]
    table = basis_table(level)
    ops = _sparse_ops(table)
    pools = [basis_candidates(level, i in quad) for i in range(arity)]
    checked = 0
    for args in product(*pools):
        checked += 1
        if any(l != r for l, r in fn(ops, *args)):
            witness = tuple(_to_element(level, a) for a in args)
            return LawReport(level, law, False, witness, checked, 0)
    rng = random.Random(seed)
    dense = _dense_ops(table)
    for t in range(trials):
        elems = [random_element(level, rng) for _ in range(arity)]
        if any(l != r for l, r in fn(dense, *(e.coeffs for e in elems))):
            return LawReport(level, law, False, tuple(elems), checked, t + 1)
    return LawReport(level, law, True, None, checked, trials)


def find_zero_divisors(level: int) -> Optional[Tuple[CDElement, CDElement]]:
    """Search pairs (e_i +- e_j, e_k +- e_l) for a product that is exactly zero."""
    _check_level(level)
    d = 1 << level
    mul = _sparse_ops(basis_table(level)).mul
    candidates = [{i: 1, j: s} for i, j in combinations(range(d), 2) for s in (1, -1)]
    for a in candidates:
        for b in candidates:
            if not mul(a, b):
                x, y = _to_element(level, a), _to_element(level, b)
                if cd_multiply(x, y):
                    raise AssertionError("table product disagrees with the doubling rule")
                return x, y
    return None


def embed(x: CDElement, level: int) -> CDElement:
    """Include ``x`` into a higher level as (x, 0, ..., 0)."""
    if level < x.level:
        raise ValueError("can only embed upward")
    return CDElement(level, x.coeffs + (Fraction(0),) * ((1 << level) - x.dim))
