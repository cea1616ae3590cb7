"""Vector spaces over prime fields, their subspace lattices and projective spaces.

Subspaces are stored by their reduced row-echelon basis, which is unique, so
two subspaces are equal exactly when their bases are.  Vectors print as
coordinate strings with coordinate 1 leftmost, e.g. ``"110"``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

Vector = Tuple[int, ...]

MAX_ENUM_DIM = 6
MAX_LATTICE_DIM = 5
MAX_PROJECTIVE_DIM = 4


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    return all(q % d for d in range(2, int(q**0.5) + 1))


def _check_field(q: int) -> None:
    if not is_prime(q):
        raise ValueError(f"GF({q}) unsupported: only prime field orders are implemented")


def vector_string(v: Iterable[int]) -> str:
    return "".join(str(c) for c in v)


def parse_vector(s: str) -> Vector:
    return tuple(int(ch) for ch in s)


@dataclass(frozen=True, order=True)
class GFVector:
    q: int
    coords: Vector

    def __post_init__(self):
        if any(not 0 <= c < self.q for c in self.coords):
            raise ValueError(f"coordinates {self.coords} out of range for GF({self.q})")

    def __str__(self) -> str:
        return vector_string(self.coords)

    def __add__(self, other: "GFVector") -> "GFVector":
        return GFVector(self.q, tuple((a + b) % self.q for a, b in zip(self.coords, other.coords)))

    def scale(self, c: int) -> "GFVector":
        return GFVector(self.q, tuple(c * a % self.q for a in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)


def rref(rows: Sequence[Sequence[int]], q: int) -> Tuple[Vector, ...]:
    """Reduced row-echelon form mod prime ``q`` with zero rows dropped."""
    m = [[c % q for c in r] for r in rows]
    if not m:
        return ()
    ncols = len(m[0])
    pivot_row = 0
    for col in range(ncols):
        pr = next((r for r in range(pivot_row, len(m)) if m[r][col]), None)
        if pr is None:
            continue
        m[pivot_row], m[pr] = m[pr], m[pivot_row]
        inv = pow(m[pivot_row][col], -1, q)
        m[pivot_row] = [c * inv % q for c in m[pivot_row]]
        for r in range(len(m)):
            if r != pivot_row and m[r][col]:
                f = m[r][col]
                m[r] = [(a - f * b) % q for a, b in zip(m[r], m[pivot_row])]
        pivot_row += 1
        if pivot_row == len(m):
            break
    return tuple(tuple(r) for r in m[:pivot_row])


@dataclass(frozen=True, order=True)
class Subspace:
    """A subspace of V(n, q) given by its RREF basis."""

    q: int
    ambient_dim: int
    basis: Tuple[Vector, ...]

    @classmethod
    def span(cls, q: int, n: int, vectors: Iterable[Sequence[int]]) -> "Subspace":
        return cls(q, n, rref([tuple(v) for v in vectors], q))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def pivots(self) -> Tuple[int, ...]:
        return tuple(next(i for i, c in enumerate(row) if c) for row in self.basis)

    def vectors(self) -> List[Vector]:
        """All q**dim vectors of the subspace, sorted."""
        q, n = self.q, self.ambient_dim
        out = set()
        for coeffs in product(range(q), repeat=self.dim):
            v = [0] * n
            for c, row in zip(coeffs, self.basis):
                if c:
                    for i, x in enumerate(row):
                        v[i] = (v[i] + c * x) % q
            out.add(tuple(v))
        return sorted(out)

    def point_strings(self) -> List[str]:
        return sorted(vector_string(v) for v in self.vectors())

    def contains_vector(self, v: Sequence[int]) -> bool:
        # reduce v against the RREF basis; v is inside iff it reduces to 0
        w = [c % self.q for c in v]
        for row, p in zip(self.basis, self.pivots()):
            f = w[p]
            if f:
                w = [(a - f * b) % self.q for a, b in zip(w, row)]
        return not any(w)

    def is_subspace_of(self, other: "Subspace") -> bool:
        return all(other.contains_vector(r) for r in self.basis)

    def label(self) -> str:
        if not self.basis:
            return "0"
        return "<" + ",".join(vector_string(r) for r in self.basis) + ">"

    def representative(self) -> str:
        """Vector string of a 1-dimensional subspace's normalized generator."""
        if self.dim != 1:
            raise ValueError("only 1-dimensional subspaces have a point representative")
        return vector_string(self.basis[0])


def _check_enum_args(n: int, q: int, k: int) -> None:
    _check_field(q)
    if not 0 <= n <= MAX_ENUM_DIM:
        raise ValueError(f"ambient dimension must be in 0..{MAX_ENUM_DIM}, got {n}")
    if not 0 <= k <= n:
        raise ValueError(f"subspace dimension must be in 0..{n}, got {k}")


def enumerate_subspaces(n: int, q: int, k: int) -> List[Subspace]:
    """Every k-dimensional subspace of V(n, q), once each, sorted by RREF basis.

    Bases are generated directly as RREF matrices: a choice of pivot columns
    plus an arbitrary field value in every free position.
    """
    _check_enum_args(n, q, k)
    out = []
    for pivots in combinations(range(n), k):
        pivot_set = set(pivots)
        free = [(r, c) for r, p in enumerate(pivots) for c in range(p + 1, n) if c not in pivot_set]
        for values in product(range(q), repeat=len(free)):
            rows = [[0] * n for _ in range(k)]
            for r, p in enumerate(pivots):
                rows[r][p] = 1
            for (r, c), x in zip(free, values):
                rows[r][c] = x
            out.append(Subspace(q, n, tuple(tuple(r) for r in rows)))
    out.sort()
    return out


@dataclass(frozen=True)
class SubspaceLattice:
    n: int
    q: int
    levels: Tuple[Tuple[Subspace, ...], ...]
    covers: Tuple[Tuple[Subspace, Subspace], ...]

    @property
    def nodes(self) -> List[Subspace]:
        return [s for level in self.levels for s in level]

    def __len__(self) -> int:
        return sum(len(level) for level in self.levels)

    def upper_covers(self, s: Subspace) -> List[Subspace]:
        return [u for lo, u in self.covers if lo == s]

    def maximal_chains(self) -> List[Tuple[Subspace, ...]]:
        up: Dict[Subspace, List[Subspace]] = {}
        for lo, u in self.covers:
            up.setdefault(lo, []).append(u)
        chains = []

        def walk(chain):
            nxt = up.get(chain[-1], [])
            if not nxt:
                chains.append(tuple(chain))
            for u in nxt:
                walk(chain + [u])

        walk([self.levels[0][0]])
        return chains


def build_lattice(n: int, q: int) -> SubspaceLattice:
    """All subspaces of V(n, q) with the covering (codimension-1 inclusion) pairs."""
    _check_field(q)
    if not 0 <= n <= MAX_LATTICE_DIM:
        raise ValueError(f"lattice dimension must be in 0..{MAX_LATTICE_DIM}, got {n}")
    levels = tuple(tuple(enumerate_subspaces(n, q, k)) for k in range(n + 1))
    covers = []
    for k in range(n):
        upper_points = [(u, frozenset(u.vectors())) for u in levels[k + 1]]
        for lo in levels[k]:
            for u, pts in upper_points:
                if all(r in pts for r in lo.basis):
                    covers.append((lo, u))
    return SubspaceLattice(n, q, levels, tuple(covers))


@dataclass(frozen=True)
class ProjectiveSpace:
    """PG(n, q) from V(n+1, q): points are 1-spaces, lines are 2-spaces."""

    n: int
    q: int
    points: Tuple[Subspace, ...]
    lines: Tuple[Subspace, ...]
    incidence: FrozenSet[Tuple[int, int]] = field(repr=False)

    def line_points(self, li: int) -> Tuple[int, ...]:
        return tuple(pi for pi in range(len(self.points)) if (pi, li) in self.incidence)

    def point_lines(self, pi: int) -> Tuple[int, ...]:
        return tuple(li for li in range(len(self.lines)) if (pi, li) in self.incidence)

    def point_label(self, pi: int) -> str:
        return self.points[pi].representative()

    def line_labels(self) -> List[List[str]]:
        """Each line as the sorted vector strings of its points."""
        return [sorted(self.point_label(p) for p in self.line_points(li)) for li in range(len(self.lines))]


def projective_space(n: int, q: int) -> ProjectiveSpace:
    _check_field(q)
    if not 1 <= n <= MAX_PROJECTIVE_DIM:
        raise ValueError(f"projective dimension must be in 1..{MAX_PROJECTIVE_DIM}, got {n}")
    points = tuple(enumerate_subspaces(n + 1, q, 1))
    lines = tuple(enumerate_subspaces(n + 1, q, 2))
    point_index = {p.basis[0]: i for i, p in enumerate(points)}
    incidence = frozenset(
        (point_index[v], li)
        for li, line in enumerate(lines)
        for v in line.vectors()
        if v in point_index
    )
    return ProjectiveSpace(n, q, points, lines, incidence)


def _plane_axioms(npoints: int, nlines: int, incidence: FrozenSet[Tuple[int, int]], q: int) -> Dict[str, bool]:
    order = q * q + q + 1
    on_line = [frozenset(p for p in range(npoints) if (p, l) in incidence) for l in range(nlines)]
    through = [frozenset(l for l in range(nlines) if (p, l) in incidence) for p in range(npoints)]
    return {
        "point_count": npoints == order,
        "line_count": nlines == order,
        "points_per_line": all(len(s) == q + 1 for s in on_line),
        "lines_per_point": all(len(s) == q + 1 for s in through),
        "unique_line_through_two_points": all(
            len(through[a] & through[b]) == 1 for a, b in combinations(range(npoints), 2)
        ),
        "two_lines_meet_once": all(
            len(on_line[a] & on_line[b]) == 1 for a, b in combinations(range(nlines), 2)
        ),
    }


def plane_axioms(ps: ProjectiveSpace) -> Dict[str, bool]:
    """The six projective-plane axioms for PG(2, q), one flag each."""
    if ps.n != 2:
        raise ValueError("plane axioms apply to projective planes (n = 2) only")
    return _plane_axioms(len(ps.points), len(ps.lines), ps.incidence, ps.q)


@dataclass(frozen=True)
class DualityReport:
    is_self_dual_plane: bool
    dual_axioms: Dict[str, bool]
    pencils: Dict[int, Tuple[int, ...]]
    correlation: Dict[int, int]
    correlation_preserves_incidence: bool


def orthogonal_complement(s: Subspace) -> Subspace:
    """{v : v . b = 0 for every basis row b}, via the RREF null space."""
    q, n = s.q, s.ambient_dim
    pivots = s.pivots()
    free = [c for c in range(n) if c not in pivots]
    null_basis = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for row, p in zip(s.basis, pivots):
            v[p] = -row[f] % q
        null_basis.append(v)
    return Subspace.span(q, n, null_basis)


def duality_check(ps: ProjectiveSpace) -> DualityReport:
    """Verify that swapping points and lines of a projective plane gives a projective plane.

    The dual incidence is the transpose; point p becomes the pencil of lines
    through it.  As an explicit point-to-line bijection the orthogonal
    complement p -> p^perp is returned; it reverses incidence
    (p on L iff L^perp on p^perp), which witnesses self-duality.
    """
    if ps.n != 2:
        raise ValueError("duality check needs a projective plane (n = 2)")
    dual_incidence = frozenset((l, p) for p, l in ps.incidence)
    dual = _plane_axioms(len(ps.lines), len(ps.points), dual_incidence, ps.q)
    through: Dict[int, List[int]] = {p: [] for p in range(len(ps.points))}
    for p, l in sorted(ps.incidence):
        through[p].append(l)
    pencils = {p: tuple(ls) for p, ls in through.items()}
    line_index = {l: i for i, l in enumerate(ps.lines)}
    point_index = {p: i for i, p in enumerate(ps.points)}
    correlation = {p: line_index[orthogonal_complement(pt)] for p, pt in enumerate(ps.points)}
    line_to_point = {l: point_index[orthogonal_complement(ln)] for l, ln in enumerate(ps.lines)}
    preserves = len(set(correlation.values())) == len(ps.lines) and all(
        ((p, l) in ps.incidence) == ((line_to_point[l], correlation[p]) in ps.incidence)
        for p in range(len(ps.points))
        for l in range(len(ps.lines))
    )
    return DualityReport(all(dual.values()) and preserves, dual, pencils, correlation, preserves)


def subspaces_to_json(subspaces: Sequence[Subspace]) -> str:
    """JSON array of subspaces, each a sorted array of point strings."""
    return json.dumps([s.point_strings() for s in subspaces])


def subspaces_from_json(text: str, q: int) -> List[Subspace]:
    out = []
    for pts in json.loads(text):
        vecs = [parse_vector(p) for p in pts]
        n = len(vecs[0])
        out.append(Subspace.span(q, n, vecs))
    return out


def lattice_to_dot(lattice: SubspaceLattice) -> str:
    """Hasse diagram in DOT; nodes labeled by RREF basis, one rank per dimension."""
    ids = {s: f"s{i}" for i, s in enumerate(lattice.nodes)}
    lines = [f'digraph "L({lattice.n},{lattice.q})" {{', "  rankdir=BT;", "  node [shape=box];"]
    for k, level in enumerate(lattice.levels):
        lines.append(f"  subgraph rank{k} {{")
        lines.append("    rank=same;")
        for s in level:
            lines.append(f'    {ids[s]} [label="{s.label()}"];')
        lines.append("  }")
    for lo, u in lattice.covers:
        lines.append(f"  {ids[lo]} -> {ids[u]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def incidence_to_dot(ps: ProjectiveSpace) -> str:
    """Bipartite point/line incidence graph; layout is left to the renderer."""
    out = [f'graph "PG({ps.n},{ps.q})" {{']
    for pi in range(len(ps.points)):
        out.append(f'  p{pi} [label="{ps.point_label(pi)}", shape=circle];')
    labels = ps.line_labels()
    for li in range(len(ps.lines)):
        out.append(f'  L{li} [label="L{li + 1}: {" ".join(labels[li])}", shape=box];')
    for pi, li in sorted(ps.incidence):
        out.append(f"  p{pi} -- L{li};")
    out.append("}")
    return "\n".join(out) + "\n"

