import random
from itertools import combinations, product

import pytest

from octofano.cayley_dickson import basis_table
from octofano.fano_octonions import (
    POINT_LABELING,
    FANO_LABELING,
    FANO_RULES,
    OrientedLine,
    UnitLabeling,
    cd_octonion_table,
    fano_lines,
    find_isomorphism,
    fano_table,
    quaternion_subalgebra,
    recode,
    reconstruct_oriented_lines,
    sweep_orientations,
    table_from_oriented_lines,
    validate_table,
)
from octofano.tables import MalformedTableError, MultTable


def numeric_composition(t, trials=300, seed=0):
    """Oracle independent of the symbolic path: N(xy) = N(x)N(y) on random integer vectors."""
    rng = random.Random(seed)
    for _ in range(trials):
        x = [rng.randint(-4, 4) for _ in range(8)]
        y = [rng.randint(-4, 4) for _ in range(8)]
        z = [0] * 8
        for i, j in product(range(8), repeat=2):
            s, k = t.product(i, j)
            z[k] += s * x[i] * y[j]
        if sum(v * v for v in z) != sum(v * v for v in x) * sum(v * v for v in y):
            return False
    return True


def with_entry(t, i, j, entry):
    rows = [list(r) for r in t.entries]
    rows[i][j] = entry
    return MultTable(tuple(tuple(r) for r in rows))


def test_fano_rules_positive():
    t = fano_table()
    for a, b, c in FANO_RULES:
        assert t.product(a, b) == (1, c)
    assert t.product(1, 3) == (1, 2)
    assert t.product(4, 7) == (1, 3)


def test_reverse_product_negative():
    t = fano_table()
    # cycle (e1, e3, e2): e1 e2 is against the orientation
    assert t.product(1, 2) == (-1, 3)
    assert t.product(2, 2) == (-1, 0)


def test_fano_line_listing():
    expected = [{1, 2, 3}, {4, 7, 3}, {1, 5, 4}, {1, 7, 6}, {2, 7, 5}, {5, 6, 3}, {2, 6, 4}]
    assert {frozenset(s) for s in expected} == set(fano_lines(fano_table()))
    assert {frozenset(s) for s in expected} == {frozenset(l) for l in FANO_LABELING.lines()}


def test_xor_law():
    for flips, ok in sweep_orientations():
        if not ok:
            continue
        base = [OrientedLine(l) for l in FANO_RULES]
        t = table_from_oriented_lines(FANO_LABELING, [l.reversed() if b else l for l, b in zip(base, flips)])
        for i, j in combinations(range(1, 8), 2):
            assert t.product(i, j)[1] == FANO_LABELING.third_point(i, j)


@pytest.mark.parametrize(
    "lines",
    [
        FANO_RULES[:6] + ((1, 2, 4),),  # non-collinear
        FANO_RULES[:6] + (FANO_RULES[0],),  # duplicate
        FANO_RULES[:6],  # missing
    ],
)
def test_bad_line_sets(lines):
    with pytest.raises(ValueError):
        table_from_oriented_lines(FANO_LABELING, lines)


def test_oriented_line_rotation():
    assert OrientedLine((3, 1, 2)) == OrientedLine((1, 2, 3))
    assert OrientedLine((1, 3, 2)).reversed() == OrientedLine((1, 2, 3))
    with pytest.raises(ValueError):
        OrientedLine((1, 1, 2))


def test_labeling_validation():
    with pytest.raises(ValueError):
        UnitLabeling.from_mapping({1: "010", 2: "010", 3: "110", 4: "001", 5: "011", 6: "101", 7: "111"})
    with pytest.raises(ValueError):
        UnitLabeling.from_mapping({1: "000", 2: "100", 3: "110", 4: "001", 5: "011", 6: "101", 7: "111"})
    assert str(FANO_LABELING).startswith("e1 = 010, e2 = 100")


def test_fano_table_validates():
    r = validate_table(fano_table())
    assert r.anticommutative and r.units_square_to_minus_one and r.norm_composing and r.alternative
    assert r.failures == ()
    assert numeric_composition(fano_table())


def test_cd_table_validates():
    assert validate_table(cd_octonion_table()).valid


def test_flipped_orientation_report_matches_numeric_oracle():
    lines = [OrientedLine(l) for l in FANO_RULES]
    lines[0] = lines[0].reversed()
    t = table_from_oriented_lines(FANO_LABELING, lines)
    r = validate_table(t)
    assert r.anticommutative and r.units_square_to_minus_one
    assert r.norm_composing == numeric_composition(t)
    if not r.norm_composing:
        (f,) = [f for f in r.failures if f.check == "norm_composing"]
        x, y = f.witness
        z = t.multiply(list(x), list(y))
        assert sum(v * v for v in z) != sum(v * v for v in x) * sum(v * v for v in y)


def test_injected_commutation_defect():
    t = fano_table()
    bad = with_entry(t, 2, 1, t.product(1, 2))
    r = validate_table(bad)
    assert not r.anticommutative
    assert any(f.check == "anticommutative" and f.witness == (1, 2) for f in r.failures)


def test_injected_square_defect():
    bad = with_entry(fano_table(), 5, 5, (1, 0))
    r = validate_table(bad)
    assert not r.units_square_to_minus_one
    assert any(f.check == "units_square_to_minus_one" and f.witness == (5,) for f in r.failures)


def test_malformed_tables():
    with pytest.raises(MalformedTableError):
        MultTable(((( 1, 0),),) * 3)
    with pytest.raises(MalformedTableError):
        with_entry(fano_table(), 0, 3, (1, 4))
    with pytest.raises(MalformedTableError):
        with_entry(fano_table(), 2, 3, (2, 1))
    with pytest.raises(MalformedTableError):
        validate_table(basis_table(2))


def test_orientation_sweep_count():
    results = sweep_orientations()
    assert len(results) == 128
    valid = {f for f, ok in results if ok}
    base = [OrientedLine(l) for l in FANO_RULES]
    oracle = {
        f
        for f, _ in results
        if numeric_composition(
            table_from_oriented_lines(FANO_LABELING, [l.reversed() if b else l for l, b in zip(base, f)]), 60
        )
    }
    assert valid == oracle
    assert len(valid) == 16
    assert (0,) * 7 in valid


def test_reconstruct_then_rebuild_identity():
    for flips, ok in sweep_orientations():
        if not ok:
            continue
        base = [OrientedLine(l) for l in FANO_RULES]
        t = table_from_oriented_lines(FANO_LABELING, [l.reversed() if b else l for l, b in zip(base, flips)])
        lines = reconstruct_oriented_lines(t)
        assert len(lines) == 7
        assert table_from_oriented_lines(FANO_LABELING, lines) == t


def test_reconstruct_fano_rules():
    assert set(reconstruct_oriented_lines(fano_table())) == {OrientedLine(r) for r in FANO_RULES}


@pytest.mark.parametrize("line", [(1, 2, 3), (2, 6, 4), OrientedLine((1, 3, 2))])
def test_quaternion_subalgebra(line):
    r = quaternion_subalgebra(fano_table(), line)
    assert r.closed and r.associative and r.isomorphic_to_H


def test_all_lines_quaternionic():
    t = fano_table()
    assert all(quaternion_subalgebra(t, l).associative for l in fano_lines(t))


def test_non_line_rejected():
    with pytest.raises(ValueError):
        quaternion_subalgebra(fano_table(), (1, 2, 4))


def test_recode_identity_and_inverse():
    t = fano_table()
    assert recode(t, FANO_LABELING, FANO_LABELING) == t
    m = recode(t, FANO_LABELING, POINT_LABELING)
    assert recode(m, POINT_LABELING, FANO_LABELING) == t


def test_recode_point_labeling():
    m = recode(fano_table(), FANO_LABELING, POINT_LABELING)
    # e1 -> p4, e2 -> p1, e3 -> p2, e4 -> p3, e7 -> p5, e5 -> p6, e6 -> p7
    rename = {1: 4, 2: 1, 3: 2, 4: 3, 7: 5, 5: 6, 6: 7}
    for a, b, c in FANO_RULES:
        assert m.product(rename[a], rename[b]) == (1, rename[c])
    assert validate_table(m).valid
    for i, j in combinations(range(1, 8), 2):
        assert m.product(i, j)[1] == POINT_LABELING.third_point(i, j)


def _check_iso(t, phi, target):
    for i, j in product(range(8), repeat=2):
        s, k = t.product(i, j)
        a, b = phi[i], phi[j]
        s2, k2 = target.product(a[1], b[1])
        assert (a[0] * b[0] * s2, k2) == (s * phi[k][0], phi[k][1])


def test_isomorphism_fano_table():
    phi = find_isomorphism(fano_table())
    assert phi is not None
    assert sorted(v[1] for v in phi.values()) == list(range(8))
    _check_iso(fano_table(), phi, cd_octonion_table())


def test_isomorphism_identity_for_cd_table():
    phi = find_isomorphism(cd_octonion_table())
    assert phi == {i: (1, i) for i in range(8)}


def test_isomorphism_rejects_invalid():
    lines = [OrientedLine(l) for l in FANO_RULES]
    lines[0] = lines[0].reversed()
    bad = table_from_oriented_lines(FANO_LABELING, lines)
    assert not validate_table(bad).valid
    with pytest.raises(ValueError):
        find_isomorphism(bad)


def test_json_round_trip():
    for t in (fano_table(), cd_octonion_table()):
        text = t.to_json()
        assert MultTable.from_json(text) == t
        assert MultTable.from_json(text).to_json() == text
    m = fano_table().to_matrix()
    assert m[0][0] == 0 and m[3][3] == 0 and m[1][3] == 2 and m[1][2] == -3


def test_json_rejects_ambiguous_zero():
    m = fano_table().to_matrix()
    m[1][2] = 0
    with pytest.raises(MalformedTableError):
        MultTable.from_matrix(m)
