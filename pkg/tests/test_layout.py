import numpy as np
import pytest

from pqwalk import (
    C0,
    CP,
    CaseSpec,
    CoinTable,
    case_layout,
    coin_at,
    default_table,
    general_coin,
    hadamard,
    identity_coin,
    layout_from_pattern,
    parse_pattern,
)

TABLE = default_table()
H = hadamard()
I2 = identity_coin()


def coin_is(layout, x, matrix):
    return np.array_equal(coin_at(layout, TABLE, x), matrix)


def test_case_ia_assignments():
    lay = case_layout("IA", 14)
    assert coin_is(lay, 0, H)
    assert coin_is(lay, 14, H)
    assert coin_is(lay, -14, H)
    assert coin_is(lay, 1, I2)


def test_case_iia_assignments():
    lay = case_layout("IIA", 14)
    assert coin_is(lay, 7, I2)
    assert coin_is(lay, -7, I2)
    assert coin_is(lay, 0, H)


def test_single_coin_layout_is_plain_hadamard_walk():
    lay = layout_from_pattern([CP])
    for x in range(-30, 31):
        assert coin_is(lay, x, H)


def test_case_ib3_assignments():
    lay = case_layout("IB", 3)
    for x in range(-21, 22):
        expected = I2 if x % 3 == 0 else H
        assert coin_is(lay, x, expected)


def test_case_iiib7_assignments():
    # [I:7, H:7] with period 14: identity on the centered block |x| <= 3
    lay = case_layout("IIIB", 7)
    for x in range(-28, 29):
        r = x % 14
        expected = I2 if (r <= 3 or r >= 11) else H
        assert coin_is(lay, x, expected)


def test_case_iiia3_residues():
    # enumerate the centered-block rule: H on {-1,0,1} mod 6, I on {2,3,4}
    lay = case_layout("IIIA", 3)
    for x in range(-20, 21):
        expected = H if x % 6 in (0, 1, 5) else I2
        assert coin_is(lay, x, expected)


def test_layout_from_pattern_degenerate():
    all_h = layout_from_pattern([CP])
    all_i = layout_from_pattern([C0])
    for x in (-5, 0, 3):
        assert coin_is(all_h, x, H)
        assert coin_is(all_i, x, I2)


def test_pattern_reproduces_case_ia3():
    lay = layout_from_pattern([CP, C0, C0], 0)
    case = case_layout("IA", 3)
    for x in range(-20, 21):
        assert lay.slot(x) == case.slot(x)


def test_periodicity():
    layouts = [
        case_layout("IA", 5),
        case_layout("IB", 14),
        case_layout("IIA", 8),
        case_layout("IIIB", 7),
        layout_from_pattern([CP, C0, CP, CP], anchor=2),
    ]
    for lay in layouts:
        for x in range(-1000, 1001):
            assert lay.slot(x) == lay.slot(x + lay.period)


def test_duality_under_table_swap():
    swapped = TABLE.swapped()
    for fam_a, fam_b, p in [("IA", "IB", 6), ("IIA", "IIB", 14), ("IIIA", "IIIB", 5)]:
        la, lb = case_layout(fam_a, p), case_layout(fam_b, p)
        for x in range(-40, 41):
            assert np.array_equal(coin_at(la, swapped, x), coin_at(lb, TABLE, x))


def test_reflection_symmetry_of_all_families():
    for fam, p in [("IA", 9), ("IB", 4), ("IIA", 6), ("IIB", 12), ("IIIA", 5), ("IIIB", 9)]:
        lay = case_layout(fam, p)
        for x in range(0, 100):
            assert lay.slot(x) == lay.slot(-x)


def test_minority_counts_per_period():
    for fam, p, each in [("IA", 11, 1), ("IB", 11, 1), ("IIA", 10, 1), ("IIB", 10, 1)]:
        lay = case_layout(fam, p)
        minority = CP if fam in ("IA", "IIB") else C0
        for start in range(-30, 30, 7):
            window = [lay.slot(x) for x in range(start, start + lay.period)]
            assert window.count(minority) == each
    for fam in ("IIIA", "IIIB"):
        q = 7
        lay = case_layout(fam, q)
        for start in (-15, 0, 4):
            window = [lay.slot(x) for x in range(start, start + 2 * q)]
            assert window.count(C0) == q
            assert window.count(CP) == q


@pytest.mark.parametrize(
    "family,param,message",
    [
        ("IA", 1, "N >= 2"),
        ("IIA", 7, "even"),
        ("IIB", 0, "even"),
        ("IIIA", 4, "odd"),
        ("IIIB", 1, "odd"),
    ],
)
def test_case_parameter_validation(family, param, message):
    with pytest.raises(ValueError, match=message):
        case_layout(family, param)


def test_unknown_family_rejected():
    with pytest.raises(ValueError, match="family"):
        CaseSpec("IV", 3)


def test_empty_pattern_rejected():
    with pytest.raises(ValueError, match="nonempty"):
        layout_from_pattern([])


def test_anchor_is_normalized():
    lay = layout_from_pattern([CP, C0, C0], anchor=-1)
    assert lay.anchor == 2
    assert layout_from_pattern([CP, C0], anchor=6).anchor == 0


def test_parse_pattern_matches_cases():
    lay, mats = parse_pattern("H1I13")
    case = case_layout("IA", 14)
    assert len(mats) == 2
    for x in range(-30, 31):
        assert lay.slot(x) == case.slot(x)

    lay, _ = parse_pattern("I7H7")  # odd first block centers on the origin
    case = case_layout("IIIB", 7)
    for x in range(-30, 31):
        assert lay.slot(x) == case.slot(x)


def test_parse_pattern_general_coin():
    lay, mats = parse_pattern("G(0.5,0,0)1I3")
    assert lay.period == 4
    assert np.max(np.abs(mats[lay.slot(0)] - H)) <= 1e-15
    assert np.array_equal(mats[lay.slot(1)], I2)


@pytest.mark.parametrize("text", ["", "X3", "H", "H0", "h1", "G(1,2)2", "H1I13junk"])
def test_parse_pattern_rejects_garbage(text):
    with pytest.raises(ValueError):
        parse_pattern(text)


def test_coin_table_requires_unitary_entries():
    with pytest.raises(ValueError, match="unitary"):
        CoinTable(c0=np.eye(2) * 2.0, cp=H)
    with pytest.raises(ValueError, match="cp"):
        CoinTable(c0=I2, cp=np.ones((2, 2)))


def test_coin_table_accepts_general_coins():
    table = CoinTable(c0=general_coin(0.9, 0.1, 2.0), cp=general_coin(0.2, 3.0, 0.4))
    assert np.array_equal(table.matrices[0], table.c0)
