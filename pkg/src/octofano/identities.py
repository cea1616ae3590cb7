"""N-square identities derived from composition-algebra tables.

For a table of dimension n the product (sum a_i e_{i-1})(sum b_j e_{j-1})
has n bilinear coefficient forms z_1..z_n.  The n-square identity

    (a_1^2 + ... + a_n^2)(b_1^2 + ... + b_n^2) = z_1^2 + ... + z_n^2

holds iff the residual (sum a^2)(sum b^2) - sum z^2 expands to zero.  The
same code yields the 2-, 4- and 8-square identities and shows the
16-square analogue failing on the sedenions.

In the two-square case the textbook (a^2+b^2)(c^2+d^2) = (ac-bd)^2 + (bc+ad)^2
is recovered with a -> a1, b -> a2, c -> b1, d -> b2.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .cayley_dickson import basis_table
from .fano_octonions import symbolic_vectors, validate_table
from .symbolic import Poly, mono_degree
from .tables import MultTable

B_OFFSET = 16
SIZES = (1, 2, 4, 8, 16)


def var_name(vid: int) -> str:
    return f"a{vid + 1}" if vid < B_OFFSET else f"b{vid - B_OFFSET + 1}"


def a_var(i: int) -> int:
    """Variable id of a_i (1-based)."""
    return i - 1


def b_var(j: int) -> int:
    return B_OFFSET + j - 1


@dataclass(frozen=True)
class NSquareIdentity:
    n: int
    forms: Tuple[Poly, ...]
    residual: Poly

    @property
    def verified(self) -> bool:
        return self.residual.is_zero()

    def var_order(self) -> List[int]:
        # b-variables outrank a-variables, which lists a2b1 before a1b2
        return [b_var(j) for j in range(1, self.n + 1)] + [a_var(i) for i in range(1, self.n + 1)]


def _sum_squares(polys) -> Poly:
    total = Poly()
    for p in polys:
        total = total + p * p
    return total


def _resolve_source(n: int, source: Optional[MultTable]) -> MultTable:
    if n not in SIZES:
        raise ValueError(f"n must be one of {SIZES}, got {n}")
    level = n.bit_length() - 1
    if source is None:
        return basis_table(level)
    if not isinstance(source, MultTable) or source.dim != n:
        raise ValueError(f"source must be a {n}x{n} MultTable")
    if n == 8 and source != basis_table(3):
        if not validate_table(source).valid:
            raise ValueError("source table does not validate as an octonion algebra")
    elif source != basis_table(level):
        raise ValueError("only Cayley-Dickson tables or validated 8x8 Fano tables are accepted")
    return source


def derive_identity(n: int, source: Optional[MultTable] = None) -> NSquareIdentity:
    """Read the bilinear forms off the symbolic product and expand the residual.

    ``source`` defaults to the Cayley-Dickson table of dimension ``n``; an
    8x8 table must validate.  n = 16 (sedenions) is accepted so the failing
    case can be shown.
    """
    table = _resolve_source(n, source)
    x, y = symbolic_vectors(n)
    forms = tuple(table.multiply(x, y, Poly()))
    residual = _sum_squares(x) * _sum_squares(y) - _sum_squares(forms)
    return NSquareIdentity(n, forms, residual)


def verify_identity(identity: NSquareIdentity) -> bool:
    return identity.residual.is_zero()


def is_bilinear(identity: NSquareIdentity) -> bool:
    """Every monomial of every form is a_i b_j for some i, j."""
    for z in identity.forms:
        for m, _ in z.items():
            if mono_degree(m) != 2 or len(m) != 2:
                return False
            (u, _), (v, _) = m
            if not (u < B_OFFSET <= v):
                return False
    return True


def form_terms(identity: NSquareIdentity, k: int) -> List[Tuple[int, int, int]]:
    """Terms of z_k as (sign, i, j) meaning sign * a_i b_j, in display order."""
    out = []
    for m, c in identity.forms[k].sorted_terms(identity.var_order()):
        (u, _), (v, _) = m
        out.append((c, u + 1, v - B_OFFSET + 1))
    return out


def emit_identity(identity: NSquareIdentity, fmt: str = "text") -> str:
    if not verify_identity(identity):
        raise ValueError(f"the {identity.n}-square residual is nonzero; refusing to emit a false identity")
    n = identity.n
    if fmt == "json":
        return json.dumps({"n": n, "forms": [[list(t) for t in form_terms(identity, k)] for k in range(n)]})
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    order = identity.var_order()
    lhs = "(" + "+".join(f"a{i}^2" for i in range(1, n + 1)) + ")(" + "+".join(
        f"b{i}^2" for i in range(1, n + 1)
    ) + ")"
    rhs = " + ".join(f"({z.render(var_name, order)})^2" for z in identity.forms)
    return f"{lhs} = {rhs}"


def identity_from_json(text: str) -> NSquareIdentity:
    data = json.loads(text)
    n = int(data["n"])
    forms = []
    for terms in data["forms"]:
        z = Poly()
        for s, i, j in terms:
            z = z + Poly.var(a_var(i)) * Poly.var(b_var(j)) * int(s)
        forms.append(z)
    if len(forms) != n:
        raise ValueError(f"expected {n} forms, got {len(forms)}")
    x = [Poly.var(a_var(i)) for i in range(1, n + 1)]
    y = [Poly.var(b_var(j)) for j in range(1, n + 1)]
    residual = _sum_squares(x) * _sum_squares(y) - _sum_squares(forms)
    return NSquareIdentity(n, tuple(forms), residual)


def textbook_two_square() -> Tuple[Poly, Poly]:
    """(ac - bd, bc + ad) with a, b, c, d -> a1, a2, b1, b2."""
    a, b = Poly.var(a_var(1)), Poly.var(a_var(2))
    c, d = Poly.var(b_var(1)), Poly.var(b_var(2))
    return a * c - b * d, b * c + a * d


def relabel_through_isomorphism(identity: NSquareIdentity, phi) -> Tuple[Poly, ...]:
    """Transport a CD-derived 8-square identity along a signed basis map.

    If phi(f_i) = s_i e_{p(i)} maps the source algebra into the CD algebra,
    then the source form for unit k equals s_k times CD form p(k) with
    a_{p(i)+1} -> s_i a_{i+1} and b likewise.
    """
    images = {}
    for i, (s, p) in phi.items():
        images[a_var(p + 1)] = Poly.var(a_var(i + 1)) * s
        images[b_var(p + 1)] = Poly.var(b_var(i + 1)) * s
    return tuple(identity.forms[phi[k][1]].substitute(images) * phi[k][0] for k in range(identity.n))
