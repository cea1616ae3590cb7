"""Octonion multiplication tables coded on the Fano plane PG(2, 2).

The seven imaginary units are placed on the seven nonzero vectors of
GF(2)^3; three units are collinear exactly when their vectors XOR to 000.
Each line carries an orientation (a, b, c), read as ab = c, bc = a, ca = b,
and the reverse products take a minus sign.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .cayley_dickson import basis_table
from .symbolic import Poly
from .tables import MalformedTableError, MultTable

UNITS = tuple(range(1, 8))


@dataclass(frozen=True)
class UnitLabeling:
    """Bijection unit index (1..7) -> nonzero vector of GF(2)^3, as a string like "010"."""

    assignment: Tuple[Tuple[int, str], ...]

    def __post_init__(self):
        a = tuple(sorted((int(u), str(v)) for u, v in dict(self.assignment).items()))
        object.__setattr__(self, "assignment", a)
        units = [u for u, _ in a]
        vectors = [v for _, v in a]
        nonzero = {format(i, "03b") for i in range(1, 8)}
        if units != list(UNITS) or sorted(vectors) != sorted(nonzero):
            raise ValueError(f"labeling is not a bijection onto the nonzero vectors of GF(2)^3: {a}")

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, str]) -> "UnitLabeling":
        return cls(tuple(mapping.items()))

    def vector(self, unit: int) -> str:
        return dict(self.assignment)[unit]

    def bits(self, unit: int) -> int:
        return int(self.vector(unit), 2)

    def unit_of(self, vector: str) -> int:
        for u, v in self.assignment:
            if v == vector:
                return u
        raise KeyError(vector)

    def collinear(self, i: int, j: int, k: int) -> bool:
        return len({i, j, k}) == 3 and self.bits(i) ^ self.bits(j) ^ self.bits(k) == 0

    def third_point(self, i: int, j: int) -> int:
        return self.unit_of(format(self.bits(i) ^ self.bits(j), "03b"))

    def lines(self) -> List[Tuple[int, int, int]]:
        """The seven Fano lines as sorted unit triples."""
        return sorted(t for t in combinations(UNITS, 3) if self.collinear(*t))

    def __str__(self) -> str:
        return ", ".join(f"e{u} = {v}" for u, v in self.assignment)


#: e1 = 010, e2 = 100, e3 = 110, e4 = 001, e5 = 011, e6 = 101, e7 = 111
FANO_LABELING = UnitLabeling.from_mapping(
    {1: "010", 2: "100", 3: "110", 4: "001", 5: "011", 6: "101", 7: "111"}
)

#: Points p1..p7 of the second coding, p_j -> vector.  Read against
#: FANO_LABELING it sends e1 -> p4, e2 -> p1, e3 -> p2, e4 -> p3,
#: e7 -> p5, e5 -> p6, e6 -> p7.
POINT_LABELING = UnitLabeling.from_mapping(
    {1: "100", 2: "110", 3: "001", 4: "010", 5: "111", 6: "011", 7: "101"}
)

#: One oriented product per line: e1e3 = e2, e2e6 = e4, e4e5 = e1, e3e6 = e5,
#: e1e7 = e6, e2e7 = e5, e4e7 = e3.
FANO_RULES = ((1, 3, 2), (2, 6, 4), (4, 5, 1), (3, 6, 5), (1, 7, 6), (2, 7, 5), (4, 7, 3))


@dataclass(frozen=True)
class OrientedLine:
    """A Fano line with a cyclic order; stored rotated so the smallest unit is first."""

    cycle: Tuple[int, int, int]

    def __post_init__(self):
        c = tuple(int(u) for u in self.cycle)
        if len(c) != 3 or len(set(c)) != 3 or not all(u in UNITS for u in c):
            raise ValueError(f"an oriented line needs three distinct units in 1..7, got {c}")
        r = c.index(min(c))
        object.__setattr__(self, "cycle", c[r:] + c[:r])

    @property
    def points(self) -> frozenset:
        return frozenset(self.cycle)

    def successor_pairs(self) -> List[Tuple[int, int, int]]:
        a, b, c = self.cycle
        return [(a, b, c), (b, c, a), (c, a, b)]

    def reversed(self) -> "OrientedLine":
        a, b, c = self.cycle
        return OrientedLine((b, a, c))

    def __str__(self) -> str:
        return "(" + ", ".join(f"e{u}" for u in self.cycle) + ")"


def table_from_oriented_lines(labeling: UnitLabeling, lines: Sequence) -> MultTable:
    """Full 8x8 signed table from seven oriented lines."""
    lines = [l if isinstance(l, OrientedLine) else OrientedLine(tuple(l)) for l in lines]
    for l in lines:
        if not labeling.collinear(*l.cycle):
            raise ValueError(f"{l} is not a line: its vectors do not XOR to 000")
    if len({l.points for l in lines}) != len(lines):
        raise ValueError("duplicate line among the oriented lines")
    if {l.points for l in lines} != {frozenset(t) for t in labeling.lines()}:
        raise ValueError("oriented lines must cover all seven Fano lines")
    entries = [[(1, 0)] * 8 for _ in range(8)]
    for i in range(8):
        entries[0][i] = entries[i][0] = (1, i)
    for i in UNITS:
        entries[i][i] = (-1, 0)
    for l in lines:
        for a, b, c in l.successor_pairs():
            entries[a][b] = (1, c)
            entries[b][a] = (-1, c)
    return MultTable(tuple(tuple(r) for r in entries))


def fano_table() -> MultTable:
    return table_from_oriented_lines(FANO_LABELING, FANO_RULES)


def cd_octonion_table() -> MultTable:
    """Basis products of the level-3 Cayley-Dickson algebra as a MultTable."""
    return basis_table(3)


def _check_octonion_size(t: MultTable) -> None:
    if t.dim != 8:
        raise MalformedTableError(f"octonion tables are 8x8, got {t.dim}x{t.dim}")


def reconstruct_oriented_lines(t: MultTable) -> List[OrientedLine]:
    """Recover one orientation per quaternion triple {i, j, |e_i e_j|} of the table."""
    _check_octonion_size(t)
    seen = {}
    for i, j in combinations(UNITS, 2):
        s, k = t.product(i, j)
        key = frozenset((i, j, k))
        if k in (0, i, j) or key in seen:
            continue
        seen[key] = OrientedLine((i, j, k) if s > 0 else (j, i, k))
    return sorted(seen.values(), key=lambda l: l.cycle)


# --- validation -------------------------------------------------------------


@dataclass(frozen=True)
class Failure:
    check: str
    witness: tuple


@dataclass(frozen=True)
class ValidationReport:
    anticommutative: bool
    units_square_to_minus_one: bool
    norm_composing: bool
    alternative: bool
    failures: Tuple[Failure, ...] = ()

    @property
    def valid(self) -> bool:
        return self.anticommutative and self.units_square_to_minus_one and self.norm_composing and self.alternative


def symbolic_vectors(dim: int) -> Tuple[List[Poly], List[Poly]]:
    """Generic elements x = sum a_i e_{i-1}, y = sum b_j e_{j-1}.

    Variable ids: a_i is i-1, b_j is 16 + j - 1.
    """
    return [Poly.var(i) for i in range(dim)], [Poly.var(16 + j) for j in range(dim)]


def _squares(v: Sequence[Poly]) -> Poly:
    total = Poly()
    for c in v:
        total = total + c * c
    return total


def norm_residual(t: MultTable) -> Poly:
    """N(xy) - N(x)N(y) expanded over the 2*dim indeterminate coefficients."""
    x, y = symbolic_vectors(t.dim)
    return _squares(t.multiply(x, y, Poly())) - _squares(x) * _squares(y)


def alternative_residuals(t: MultTable) -> Tuple[List[Poly], List[Poly]]:
    """Components of x(xy) - (xx)y and (yx)x - y(xx)."""
    x, y = symbolic_vectors(t.dim)
    z = Poly()
    m = t.multiply
    xx = m(x, x, z)
    left = [p - q for p, q in zip(m(x, m(x, y, z), z), m(xx, y, z))]
    right = [p - q for p, q in zip(m(m(y, x, z), x, z), m(y, xx, z))]
    return left, right


def _sparse_mul(t: MultTable, a: Dict[int, int], b: Dict[int, int]) -> Dict[int, int]:
    out: Dict[int, int] = {}
    for i, ca in a.items():
        for j, cb in b.items():
            s, k = t.product(i, j)
            out[k] = out.get(k, 0) + s * ca * cb
    return {k: v for k, v in out.items() if v}


def _pair_sums(dim: int) -> List[Dict[int, int]]:
    return [{i: 1} for i in range(dim)] + [{i: 1, j: 1} for i, j in combinations(range(dim), 2)]


def _coeffs(sparse: Dict[int, int], dim: int) -> Tuple[int, ...]:
    return tuple(sparse.get(i, 0) for i in range(dim))


def _norm_witness(t: MultTable):
    nrm = lambda a: sum(v * v for v in a.values())
    for a, b in product(_pair_sums(t.dim), repeat=2):
        if nrm(_sparse_mul(t, a, b)) != nrm(a) * nrm(b):
            return (_coeffs(a, t.dim), _coeffs(b, t.dim))
    return None


def _alternative_witness(t: MultTable):
    for a, b in product(_pair_sums(t.dim), [{j: 1} for j in range(t.dim)]):
        aa = _sparse_mul(t, a, a)
        if _sparse_mul(t, a, _sparse_mul(t, a, b)) != _sparse_mul(t, aa, b) or _sparse_mul(
            t, _sparse_mul(t, b, a), a
        ) != _sparse_mul(t, b, aa):
            return (_coeffs(a, t.dim), _coeffs(b, t.dim))
    return None


def validate_table(t: MultTable) -> ValidationReport:
    """Check anticommutativity, unit squares, norm composition and alternativity.

    The last two are decided symbolically: the defect polynomials over 16
    indeterminates must expand to zero.  When one does not, a concrete
    witness pair built from units and pair sums is attached.
    """
    if not isinstance(t, MultTable):
        raise MalformedTableError(f"expected a MultTable, got {type(t).__name__}")
    _check_octonion_size(t)
    failures = []
    anti = True
    for i, j in combinations(UNITS, 2):
        (s1, k1), (s2, k2) = t.product(i, j), t.product(j, i)
        if k1 != k2 or s1 != -s2:
            anti = False
            failures.append(Failure("anticommutative", (i, j)))
    squares = True
    for i in UNITS:
        if t.product(i, i) != (-1, 0):
            squares = False
            failures.append(Failure("units_square_to_minus_one", (i,)))
    composing = norm_residual(t).is_zero()
    if not composing:
        failures.append(Failure("norm_composing", _norm_witness(t)))
    left, right = alternative_residuals(t)
    alternative = all(p.is_zero() for p in left + right)
    if not alternative:
        failures.append(Failure("alternative", _alternative_witness(t)))
    return ValidationReport(anti, squares, composing, alternative, tuple(failures))


def sweep_orientations(
    labeling: UnitLabeling = FANO_LABELING, base: Sequence = FANO_RULES
) -> List[Tuple[Tuple[int, ...], bool]]:
    """Validate all 2**7 orientation choices; each flip bit reverses one base line."""
    base = [OrientedLine(tuple(l)) for l in base]
    results = []
    for flips in product((0, 1), repeat=len(base)):
        lines = [l.reversed() if f else l for l, f in zip(base, flips)]
        results.append((flips, validate_table(table_from_oriented_lines(labeling, lines)).valid))
    return results


# --- subalgebras, recoding, isomorphisms --------------------------------------


QUATERNION_TABLE = basis_table(2)


@dataclass(frozen=True)
class SubalgebraReport:
    units: Tuple[int, int, int]
    closed: bool
    associative: bool
    isomorphic_to_H: bool
    quaternion_map: Optional[Dict[int, int]] = None


def fano_lines(t: MultTable) -> List[frozenset]:
    _check_octonion_size(t)
    return sorted(
        {frozenset((i, j, t.product(i, j)[1])) for i, j in combinations(UNITS, 2) if t.product(i, j)[1] not in (0, i, j)},
        key=sorted,
    )


def quaternion_subalgebra(t: MultTable, line) -> SubalgebraReport:
    """Span of {1, e_i, e_j, e_k} for a line of ``t``: closure, associativity and a map to H."""
    _check_octonion_size(t)
    if isinstance(line, OrientedLine):
        line = line.cycle
    units = tuple(line)
    if len(set(units)) != 3 or frozenset(units) not in fano_lines(t):
        raise ValueError(f"{units} is not a line of this table")
    basis = (0,) + tuple(sorted(units))
    closed = all(t.product(a, b)[1] in basis for a in basis for b in basis)
    associative = closed
    if closed:
        for a, b, c in product(basis, repeat=3):
            s1, k1 = t.product(a, b)
            s2, k2 = t.product(k1, c)
            s3, k3 = t.product(b, c)
            s4, k4 = t.product(a, k3)
            if (s1 * s2, k2) != (s3 * s4, k4):
                associative = False
                break
    # orient the cycle by the table itself: i j = +k
    i, j = basis[1], basis[2]
    s, k = t.product(i, j)
    if s < 0:
        i, j = j, i
    qmap = {0: 0, i: 1, j: 2, k: 3}
    iso = closed and all(
        (lambda e, q: (e[0], qmap.get(e[1])) == q)(t.product(a, b), QUATERNION_TABLE.product(qmap[a], qmap[b]))
        for a in basis
        for b in basis
    )
    return SubalgebraReport(tuple(sorted(units)), closed, associative, iso, qmap if iso else None)


def recode(t: MultTable, source: UnitLabeling, target: UnitLabeling) -> MultTable:
    """Rename units so that each keeps its vector: unit u of ``source`` becomes
    the unit of ``target`` sitting on the same point."""
    _check_octonion_size(t)
    for lab in (source, target):
        if not isinstance(lab, UnitLabeling):
            raise TypeError("labelings must be UnitLabeling instances")
    rename = {0: 0}
    rename.update({u: target.unit_of(source.vector(u)) for u in UNITS})
    entries = [[(1, 0)] * 8 for _ in range(8)]
    for i in range(8):
        for j in range(8):
            s, k = t.product(i, j)
            entries[rename[i]][rename[j]] = (s, rename[k])
    return MultTable(tuple(tuple(r) for r in entries))


SignedUnit = Tuple[int, int]


def _compose(t: MultTable, a: SignedUnit, b: SignedUnit) -> SignedUnit:
    s, k = t.product(a[1], b[1])
    return (a[0] * b[0] * s, k)


def find_isomorphism(t: MultTable, target: Optional[MultTable] = None) -> Optional[Dict[int, SignedUnit]]:
    """Signed basis map phi with phi(e_i) phi(e_j) = phi(e_i e_j), into the CD octonions.

    Only the images of a generating triple are searched: g1, g2 and a unit g3
    outside the quaternion subalgebra they span.  Candidates run over
    (index, sign) with + before -, so a table equal to the target maps by
    the identity first.  Returns ``{unit: (sign, target_unit)}`` or None.
    """
    if not validate_table(t).valid:
        raise ValueError("table fails validation; no isomorphism search on invalid tables")
    target = target or cd_octonion_table()
    g1, g2 = 1, 2
    s12, g12 = t.product(g1, g2)
    g3 = min(u for u in UNITS if u not in (g1, g2, g12))
    # express every unit as a signed word in the generators
    words: Dict[int, Tuple[int, Tuple[int, ...]]] = {0: (1, ()), g1: (1, (g1,)), g2: (1, (g2,)), g3: (1, (g3,))}
    s, k = t.product(g1, g2)
    words[k] = (s, (g1, g2))
    for a in (g1, g2, k):
        s_a, w_a = words[a]
        s, m = t.product(a, g3)
        words[m] = (s_a * s, w_a + (g3,))
    if sorted(words) != list(range(8)):
        raise AssertionError("generators do not reach every unit")
    candidates = [(sg, u) for u in UNITS for sg in (1, -1)]
    for c1 in candidates:
        for c2 in candidates:
            if c2[1] == c1[1] or _compose(target, c1, c2)[1] == 0:
                continue
            c12 = _compose(target, c1, c2)
            for c3 in candidates:
                if c3[1] in (c1[1], c2[1], c12[1]):
                    continue
                images = {g1: c1, g2: c2, g3: c3}
                phi = {}
                for unit, (sign, word) in words.items():
                    acc: SignedUnit = (1, 0)
                    # left-nested: ((w0 w1) w2)
                    for g in word:
                        acc = _compose(target, acc, images[g])
                    phi[unit] = (sign * acc[0], acc[1])
                if len({v[1] for v in phi.values()}) != 8:
                    continue
                if all(
                    _compose(target, phi[i], phi[j]) == (lambda s_k: (s_k[0] * phi[s_k[1]][0], phi[s_k[1]][1]))(t.product(i, j))
                    for i in range(8)
                    for j in range(8)
                ):
                    return phi
    return None


# --- rendering ---------------------------------------------------------------


def rules_text(t: MultTable, labeling: UnitLabeling = FANO_LABELING) -> str:
    lines = []
    for l in reconstruct_oriented_lines(t):
        a, b, c = l.cycle
        vecs = " ".join(labeling.vector(u) for u in l.cycle)
        lines.append(f"e{a} e{b} = e{c}   [{vecs}]")
    return "\n".join(lines)


def fano_table_to_dot(t: MultTable, labeling: UnitLabeling = FANO_LABELING) -> str:
    """Labeled Fano plane with one arrow per successor pair of each oriented line."""
    out = ['digraph "fano" {']
    for u in UNITS:
        out.append(f'  e{u} [label="e{u}\\n{labeling.vector(u)}"];')
    for n, l in enumerate(reconstruct_oriented_lines(t), start=1):
        for a, b, _ in l.successor_pairs():
            out.append(f'  e{a} -> e{b} [label="{n}"];')
    out.append("}")
    return "\n".join(out) + "\n"
