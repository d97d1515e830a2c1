import json

import pytest

from abelianaut import GroupShape, core
from abelianaut.cli import ParseError, main, parse_group, parse_ratio_target


# ------------------------------------------------------------ group parsing

def test_parse_group_examples():
    assert parse_group("Z2xZ3xZ9") == GroupShape.from_exponents({2: [1], 3: [1, 2]})
    assert parse_group("z12") == GroupShape.from_exponents({2: [2], 3: [1]})
    assert parse_group("Z1") == GroupShape()


def test_parse_group_separators_case_whitespace():
    expected = GroupShape.from_exponents({2: [1, 2], 5: [1]})
    assert parse_group("Z2 x C4 * z5") == expected
    assert parse_group(" c2X Z4x C5 ") == expected


def test_parse_group_errors_carry_position():
    with pytest.raises(ParseError) as err:
        parse_group("Q5")
    assert err.value.position == 0
    with pytest.raises(ParseError) as err:
        parse_group("Z2xx")
    assert err.value.position == 3
    with pytest.raises(ParseError) as err:
        parse_group("Z2x")
    assert err.value.position == 3
    with pytest.raises(ParseError):
        parse_group("")
    with pytest.raises(ParseError):
        parse_group("Z")


def test_parse_group_roundtrips_to_normal_form():
    for text in ("Z2xZ3xZ9", "z9 * c2 x Z3", "Z18 x Z3"):
        assert str(parse_group(text)) == "Z2 x Z3 x Z9"
    # Z54 is cyclic: its 3-part stays one factor Z27
    assert str(parse_group("Z54")) == "Z2 x Z27"


# --------------------------------------------------------- rational parsing

def test_parse_ratio_target():
    from fractions import Fraction

    assert parse_ratio_target("3") == Fraction(3)
    assert parse_ratio_target("3/2") == Fraction(3, 2)
    assert parse_ratio_target("6/4") == Fraction(3, 2)
    for bad in ("0", "-3", "3/0", "1.5", "a/b", ""):
        with pytest.raises(ParseError):
            parse_ratio_target(bad)


# ------------------------------------------------------------- subcommands

def test_aut_text(capsys):
    assert main(["aut", "Z2xZ3xZ9"]) == 0
    assert capsys.readouterr().out == "108\n"


def test_ratio_text_integer_and_fraction(capsys):
    assert main(["ratio", "Z2xZ5xZ25"]) == 0
    assert capsys.readouterr().out == "8\n"
    assert main(["ratio", "Z2"]) == 0
    assert capsys.readouterr().out == "1/2\n"


def test_ratio_json_fields(capsys):
    assert main(["ratio", "Z2xZ3xZ9", "--format", "json"]) == 0
    row = json.loads(capsys.readouterr().out)
    assert row == {
        "group": "Z2 x Z3 x Z9",
        "order": 54,
        "aut_order": 108,
        "ratio_num": 2,
        "ratio_den": 1,
    }


def test_classify_text(capsys):
    assert main(["classify", "Z2xZ3xZ9"]) == 0
    assert capsys.readouterr().out == "p=2: cyclic\np=3: zp-times-higher(2)\n"


def test_classify_csv(capsys):
    assert main(["classify", "Z4xZ2", "--format", "csv"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "group,p,class"
    assert out[1] == "Z2 x Z4,2,zp-times-higher(2)"


def test_valuation_text(capsys):
    assert main(["valuation", "Z12", "-p", "2"]) == 0
    assert capsys.readouterr().out == "n=1 d=0 c=1 total=1\n"


def test_valuation_rejects_non_factor_prime(capsys):
    assert main(["valuation", "Z12", "-p", "5"]) == 1
    assert "not a prime factor" in capsys.readouterr().err


def test_enumerate_counts_and_order(capsys):
    assert main(["enumerate", "--max-order", "4"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 5
    assert lines[0] == "1\tZ1\t1\t1"
    assert lines[-1] == "4\tZ2 x Z2\t6\t3/2"


def test_enumerate_csv_header(capsys):
    assert main(["enumerate", "--max-order", "2", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "order,group,aut_order,ratio_num,ratio_den"
    assert lines[1] == "1,Z1,1,1,1"
    assert lines[2] == "2,Z2,1,1,2"


def test_search_unrealizable_odd_prime(capsys):
    assert main(["search", "3", "--max-order", "100"]) == 0
    assert "unrealizable (odd-prime-target)" in capsys.readouterr().out


def test_search_unrealizable_denominator_json(capsys):
    assert main(["search", "1/4", "--format", "json"]) == 0
    row = json.loads(capsys.readouterr().out)
    assert row == {"verdict": "unrealizable",
                   "reason": "non-squarefree-denominator"}


def test_search_witness(capsys):
    assert main(["search", "1/2"]) == 0
    assert capsys.readouterr().out == "witness: Z2 (order 2), ratio 1/2\n"


def test_search_not_found(capsys):
    assert main(["search", "9", "--max-order", "30"]) == 0
    out = capsys.readouterr().out
    assert "no witness among groups of order <= 30" in out


def test_search_rejects_bad_targets(capsys):
    assert main(["search", "0"]) == 1
    assert main(["search", "-2"]) == 1
    assert main(["search", "x/y"]) == 1


def test_atlas_max_order_4(capsys):
    assert main(["atlas", "--max-order", "4"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines == ["1\t1\tZ1", "1/2\t2\tZ2", "2/3\t3\tZ3", "3/2\t4\tZ2 x Z2"]


def test_verify_clean(capsys):
    assert main(["verify", "--max-order", "48", "--budget", "1000000"]) == 0
    out = capsys.readouterr().out
    assert "mismatches=0" in out
    assert "skipped=2" in out  # the two order-32 shapes with rank >= 4


def test_verify_json(capsys):
    assert main(["verify", "--max-order", "8", "--format", "json"]) == 0
    row = json.loads(capsys.readouterr().out)
    assert row["mismatches"] == 0
    assert row["checked"] > 0


def test_verify_reports_and_exits_3_on_mismatch(capsys, monkeypatch):
    monkeypatch.setattr(core, "aut_order_p", lambda shape: 1)
    assert main(["verify", "--max-order", "4"]) == 3
    captured = capsys.readouterr()
    assert "MISMATCH" in captured.err
    assert "mismatches=0" not in captured.out


def test_parse_error_exit_code(capsys):
    assert main(["aut", "Q5"]) == 1
    assert "error:" in capsys.readouterr().err


def test_invalid_modulus_exit_code(capsys):
    assert main(["aut", "Z0"]) == 1


def test_factorization_overflow_exit_code(capsys):
    assert main(["aut", "Z10000000000000"]) == 2
    assert "error:" in capsys.readouterr().err


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["enumerate"])  # missing required --max-order
    assert exc.value.code == 1


def test_unknown_subcommand_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 1
