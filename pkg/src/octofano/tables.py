"""Signed basis-product tables.

``entries[i][j] == (s, k)`` means e_i e_j = s e_k with s in {+1, -1}.
Unit 0 is the real unit.  The JSON encoding flattens each entry to the
integer ``s * k``; the only ``k == 0`` products of a well-formed table sit
in row 0, column 0 (sign +) and on the diagonal i >= 1 (sign -), so a 0
entry is decoded by position.  See ``docs/formats.md``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import List, Sequence, Tuple

Entry = Tuple[int, int]


class MalformedTableError(ValueError):
    pass


@dataclass(frozen=True)
class MultTable:
    entries: Tuple[Tuple[Entry, ...], ...]

    def __post_init__(self):
        entries = tuple(tuple((int(s), int(k)) for s, k in row) for row in self.entries)
        object.__setattr__(self, "entries", entries)
        d = len(entries)
        if d == 0 or d & (d - 1):
            raise MalformedTableError(f"table size {d} is not a power of two")
        for i, row in enumerate(entries):
            if len(row) != d:
                raise MalformedTableError(f"row {i} has length {len(row)}, expected {d}")
            for j, (s, k) in enumerate(row):
                if s not in (1, -1) or not 0 <= k < d:
                    raise MalformedTableError(f"entry ({i},{j}) = {(s, k)} is not a signed unit")
        for i in range(d):
            if entries[0][i] != (1, i) or entries[i][0] != (1, i):
                raise MalformedTableError("row and column 0 must be the identity")

    @property
    def dim(self) -> int:
        return len(self.entries)

    def product(self, i: int, j: int) -> Entry:
        return self.entries[i][j]

    def multiply(self, x: Sequence, y: Sequence, zero=0) -> list:
        """Bilinear product of coefficient vectors; works for ints, Fractions or Polys."""
        d = self.dim
        out = [zero] * d
        for i in range(d):
            xi = x[i]
            if not xi:
                continue
            row = self.entries[i]
            for j in range(d):
                yj = y[j]
                if not yj:
                    continue
                s, k = row[j]
                t = xi * yj
                out[k] = out[k] + t if s > 0 else out[k] - t
        return out

    def to_matrix(self) -> List[List[int]]:
        return [[s * k for s, k in row] for row in self.entries]

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]]) -> "MultTable":
        rows = []
        for i, row in enumerate(matrix):
            entries = []
            for j, v in enumerate(row):
                v = int(v)
                if v != 0:
                    entries.append((1 if v > 0 else -1, abs(v)))
                elif i == 0 or j == 0:
                    entries.append((1, 0))
                elif i == j:
                    entries.append((-1, 0))
                else:
                    raise MalformedTableError(
                        f"entry ({i},{j}) = 0 cannot be decoded: e_i e_j = +-e_0 off the diagonal"
                    )
            rows.append(tuple(entries))
        return cls(tuple(rows))

    def to_json(self) -> str:
        return json.dumps(self.to_matrix())

    @classmethod
    def from_json(cls, text: str) -> "MultTable":
        return cls.from_matrix(json.loads(text))

    def render(self, names: Sequence[str] = ()) -> str:
        """Aligned text grid, e.g. ``-e3``."""
        names = list(names) or [f"e{i}" for i in range(self.dim)]
        width = max(len(n) for n in names) + 1
        header = " " * (width + 1) + " ".join(n.rjust(width) for n in names)
        lines = [header]
        for i, row in enumerate(self.entries):
            cells = [(("-" if s < 0 else "") + names[k]).rjust(width) for s, k in row]
            lines.append(names[i].rjust(width) + " " + " ".join(cells))
        return "\n".join(lines)
