import json

import pytest

from modpcurves.cli import main
from modpcurves.fixtures import (FixtureError, parse_factorization,
                                 parse_fixture_text, parse_int_list,
                                 parse_pair)
from modpcurves.fixtures import default_fixture_dir
from modpcurves.verify import (EXTERNAL, FAIL, PASS, verify_all, verify_file,
                               verify_records)


@pytest.fixture(scope="module")
def full_report():
    return verify_all()


def test_parse_fixture_text():
    recs = parse_fixture_text(
        "# comment only\n"
        "curve; model=[0,0,1,-1,0]; conductor=37  # trailing comment\n"
        "\n"
        "order; d=2; order_disc=8\n", path="demo.txt")
    assert [r.kind for r in recs] == ["curve", "order"]
    assert recs[0].require("model") == "[0,0,1,-1,0]"
    assert recs[0].check_id == "demo.txt:2"
    assert recs[1].get("missing", "x") == "x"
    with pytest.raises(FixtureError):
        recs[1].require("model")
    with pytest.raises(FixtureError):
        parse_fixture_text("curve; no-equals-here\n")


def test_parse_helpers():
    f = parse_factorization("-2^18*3*353")
    assert f.sign == -1 and f.factors == ((2, 18), (3, 1), (353, 1))
    # composite bases are expanded to primes
    assert parse_factorization("1967").factors == ((7, 1), (281, 1))
    assert parse_factorization("1").factors == ()
    assert parse_int_list("0,-,1,2") == [0, None, 1, 2]
    assert parse_pair("(-4, 2)") == (-4, 2)
    with pytest.raises(ValueError):
        parse_factorization("2^x")


def test_verify_empty_records():
    report = verify_records([])
    assert report.counts == {PASS: 0, FAIL: 0, EXTERNAL: 0, "skipped": 0}
    assert not report.failed


def test_verify_unknown_kind_skipped():
    recs = parse_fixture_text("mystery; a=1\n")
    report = verify_records(recs)
    assert report.counts["skipped"] == 1


def test_verify_all_counts_and_known_failures(full_report):
    report = full_report
    counts = report.counts
    assert counts[PASS] >= 90
    # exactly the three recorded source-table values our computations dispute
    assert {c.check_id for c in report.failed} \
        == {"gl2f2_fields.txt:25", "gl2f2_fields.txt:34", "p5_level67.txt:5"}
    assert counts[EXTERNAL] == 8


def test_verify_render_deterministic():
    path = default_fixture_dir() / "quadratic_forms.txt"
    a = verify_file(path).render()
    b = verify_file(path).render()
    assert a == b
    assert a.splitlines()[-1].startswith("summary:")


def test_cli_exit_codes(capsys):
    assert main(["ap", "[0,-1,1,-10,-20]", "2"]) == 0
    assert "a_2 = -2" in capsys.readouterr().out
    # compare mismatch -> 1
    assert main(["compare", "[1,1,0,-22,-812]", "[1,1,1,-2,16]", "3"]) == 1
    # usage error -> 2
    assert main(["ap"]) == 2
    assert main(["ap", "[not-a-curve]", "2"]) == 2


def test_cli_json_output(capsys):
    assert main(["curve-info", "[1,1,0,-22,-812]", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["conductor"] == "2 * 3 * 353"
    assert main(["obstruct", "--disc", "5", "--a", "(-1,1)",
                 "--ell", "2", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["norm"] == 275 and payload["obstructed_primes"] == [5, 11]


def test_cli_verify_single_fixture(capsys, tmp_path):
    good = tmp_path / "ok.txt"
    good.write_text("order; d=10; order_disc=40\n")
    assert main(["verify", str(good)]) == 0
    out = capsys.readouterr().out
    assert "1 pass, 0 fail" in out
    bad = tmp_path / "bad.txt"
    bad.write_text("order; d=10; order_disc=41\n")
    assert main(["verify", str(bad)]) == 1
