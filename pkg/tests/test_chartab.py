import importlib.resources as resources

import pytest

from unisingular.chartab import (
    CharacterTable,
    ConjClass,
    char_report,
    fp_multiplicity,
    is_unisingular_char,
    load_table,
    parse_value,
    psl2_classify,
    symplectic_f2_integrality,
    value_at_power,
)
from unisingular.cyclotomic import Cyclotomic
from unisingular.errors import (
    InvariantViolation,
    NonIntegralMultiplicity,
    NotOddPrimePower,
    ParseError,
)


def _bundled(name):
    with resources.as_file(resources.files("unisingular") / "data" / name) as p:
        return load_table(str(p))


@pytest.fixture(scope="module")
def table6():
    return _bundled("table6.tbl")


@pytest.fixture(scope="module")
def table7():
    return _bundled("table7.tbl")


@pytest.fixture(scope="module")
def a4():
    return _bundled("a4.tbl")


def test_parse_value_tokens():
    z3 = Cyclotomic.zeta(3)
    assert parse_value("z3^2") == z3 * z3
    assert parse_value("-2-3*z3") == -2 - 3 * z3
    assert parse_value("(-1-3*sqrtm3)/2") == -2 - 3 * z3
    assert parse_value("(-1+3*sqrtm3)/2") == (-2 - 3 * z3).conj()
    assert parse_value("12") == 12
    with pytest.raises(ParseError):
        parse_value("bogus")


def test_table6_shape(table6):
    assert table6.order == 324
    assert len(table6.classes) == 13
    assert len(table6.characters) == 13
    assert not table6.partial
    assert sum(c.size for c in table6.classes) == 324


def test_table6_row_orthogonality(table6):
    # load_table verifies this for irreducible-complete tables; recompute
    # one row here explicitly
    total = Cyclotomic.integer(0)
    for c, v in zip(table6.classes, table6.characters["rho5"]):
        total = total + c.size * v.norm_abs2()
    assert total == 324


def test_fp_identity_is_degree(table6):
    for name in table6.char_names():
        assert fp_multiplicity(table6, name, "1") == table6.degree(name)


def test_fp_trivial_character(table6):
    for c in table6.classes:
        assert fp_multiplicity(table6, "rho1", c.name) == 1


def test_fp_rho13_values(table6):
    # value -3 on 3D: (1/3)(12 - 3 - 3) = 2
    assert fp_multiplicity(table6, "rho13", "3D") == 2
    assert fp_multiplicity(table6, "rho13", "9A") == 2
    assert fp_multiplicity(table6, "rho13", "3C") == 4
    assert fp_multiplicity(table6, "rho13", "3F") == 4


def test_value_at_power_uses_galois(table6):
    # squaring an order-9 element conjugates its zeta_3 character value
    v1 = table6.value("rho5", "9A")
    v2 = value_at_power(table6, "rho5", "9A", 2)
    assert v1 == Cyclotomic.zeta(3)
    assert v2 == Cyclotomic.zeta(3, 2)


def test_unisingular_verdicts(table6):
    expected = {
        "rho1": True, "rho2": False, "rho3": False, "rho4": True,
        "rho5": False, "rho6": False, "rho7": False, "rho8": False,
        "rho9": False, "rho10": False, "rho11": False, "rho12": False,
        "rho13": True,
    }
    for name, want in expected.items():
        assert is_unisingular_char(table6, name) is want, name


def test_symplectic_integrality(table6):
    assert symplectic_f2_integrality(table6, "rho13") == "certified"
    assert symplectic_f2_integrality(table6, "rho2") == "inconclusive"
    # odd degree, integral values: still inconclusive
    assert symplectic_f2_integrality(table6, "rho4") == "inconclusive"


def test_a4_quotient_cross_check(table6, a4):
    # the four characters with the normal C3^3 in their kernel match the
    # quotient table verdict for verdict
    pairs = [("rho1", "chi1"), ("rho2", "chi2"),
             ("rho3", "chi3"), ("rho4", "chi4")]
    for big, small in pairs:
        assert (is_unisingular_char(table6, big)
                == is_unisingular_char(a4, small))


def test_faithful_cyclic3_character_not_unisingular():
    z3 = Cyclotomic.zeta(3)
    table = CharacterTable(
        3,
        [ConjClass("1", 1, 1), ConjClass("g", 3, 1, {3: "1"}),
         ConjClass("g2", 3, 1, {3: "1"})],
        {"chi": [Cyclotomic.integer(1), z3, z3 * z3]},
    )
    assert is_unisingular_char(table, "chi") is False


def test_nonintegral_multiplicity_detected():
    table = CharacterTable(
        2,
        [ConjClass("1", 1, 1), ConjClass("t", 2, 1, {2: "1"})],
        {"bad": [Cyclotomic.integer(1), Cyclotomic.integer(2)]},
    )
    with pytest.raises(NonIntegralMultiplicity):
        fp_multiplicity(table, "bad", "t")


def test_table7_partial_mode(table7):
    assert table7.partial
    assert len(table7.classes) == 18
    assert len(table7.characters) == 6
    for name in table7.char_names():
        assert table7.degree(name) == 30
        assert is_unisingular_char(table7, name) is None


def test_table7_report_has_fp_gaps(table7):
    rep = char_report(table7, "rho10")
    assert rep["fp"]["9A"] is None
    assert rep["fp"]["1A"] == 30


def test_invariant_violation_on_bad_sizes(tmp_path):
    bad = tmp_path / "bad.tbl"
    bad.write_text(
        "[meta]\norder=10\n[classes]\n1|1|1|\n2|2|4|pow_2=1\n"
        "[characters]\nchi|1|1\n")
    with pytest.raises(InvariantViolation):
        load_table(str(bad))


def test_parse_error_on_junk(tmp_path):
    bad = tmp_path / "junk.tbl"
    bad.write_text("order=5\n")
    with pytest.raises(ParseError):
        load_table(str(bad))


def test_psl2_rows_of_catalog():
    # degree q+1 is symplectic-over-F2 exactly when 3 | q-1
    for q in (13, 19, 25, 37, 49, 61, 73, 121, 157, 211):
        verdict = psl2_classify(q)[2]
        assert verdict.degree == q + 1
        assert verdict.unisingular
        assert verdict.symp_f2 == ((q - 1) % 3 == 0)


def test_psl2_q53_negative():
    verdict = psl2_classify(53)[2]
    assert verdict.degree == 54
    assert verdict.unisingular and not verdict.symp_f2


def test_psl2_rejects_bad_q():
    for q in (4, 8, 9**0, 15, 2):
        with pytest.raises(NotOddPrimePower):
            psl2_classify(q)


def test_psl2_q25_degrees():
    verdicts = psl2_classify(25)
    by_deg = {(v.degree, v.conditions[0].startswith("PGL")): v
              for v in verdicts}
    assert by_deg[(24, False)].unisingular  # q not prime
    assert not by_deg[(24, False)].symp_f2  # 3 does not divide 26
    assert by_deg[(26, False)].symp_f2
