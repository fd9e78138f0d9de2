import csv
import io
import json

import pytest

from orbiqc.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    rc = main(list(argv), out, err)
    return rc, out.getvalue(), err.getvalue()


# ----------------------------------------------------------------------
# coeffs


def test_coeffs_f0_plain():
    rc, out, err = run("coeffs", "--orbifold", "333", "--series", "f0", "--order", "24")
    assert rc == 0
    assert out.splitlines() == ["1 1", "4 1", "7 2", "13 2", "16 1", "19 2", "# exact below q^24"]
    assert "status proven" in err


def test_coeffs_F_json():
    rc, out, _ = run("coeffs", "--series", "F", "--order", "10", "--format", "json")
    assert rc == 0
    records = json.loads(out)
    assert [(r["exponent"], r["coefficient"]) for r in records] == [
        ("0", "1"), ("1", "6"), ("3", "6"), ("4", "6"), ("7", "12"), ("9", "6"),
    ]
    assert all(r["series"] == "F" and r["status"] == "proven" for r in records)


def test_coeffs_h5_is_empty_with_zero_status():
    rc, out, err = run("coeffs", "--orbifold", "236", "--series", "h5", "--order", "50", "--format", "json")
    assert rc == 0
    assert json.loads(out) == []
    assert "status zero" in err


def test_coeffs_orbifold_inferred_from_name():
    rc, out, _ = run("coeffs", "--series", "h6", "--order", "10")
    assert rc == 0
    assert out.splitlines()[0] == "2 1"


def test_coeffs_fractional_exponents_render_as_fractions():
    rc, out, _ = run("coeffs", "--series", "eta", "--order", "3")
    assert rc == 0
    assert out.splitlines()[:3] == ["1/24 1", "25/24 -1", "49/24 -1"]


def test_coeffs_rational_coefficient_rendering():
    rc, out, _ = run("coeffs", "--series", "f1", "--order", "4")
    assert rc == 0
    assert out.splitlines()[0] == "0 1/3"


def test_coeffs_include_degree_zero():
    rc, out, _ = run("coeffs", "--series", "g2", "--order", "5", "--include-degree-zero")
    assert rc == 0
    assert out.splitlines()[0] == "0 1/4"


def test_coeffs_unknown_series_exits_2():
    rc, out, err = run("coeffs", "--series", "nope")
    assert rc == 2 and out == "" and "unknown series" in err
    rc, out, err = run("coeffs", "--orbifold", "244", "--series", "h3")
    assert rc == 2 and out == ""


def test_coeffs_invalid_order_exits_3():
    rc, out, err = run("coeffs", "--series", "F", "--order", "0")
    assert rc == 3 and out == "" and "order" in err


def test_coeffs_deterministic():
    first = run("coeffs", "--series", "G", "--order", "40", "--format", "csv")
    second = run("coeffs", "--series", "G", "--order", "40", "--format", "csv")
    assert first == second


def test_coeffs_csv_json_round_trip_equal():
    _, csv_out, _ = run("coeffs", "--series", "f1", "--order", "24", "--format", "csv")
    _, json_out, _ = run("coeffs", "--series", "f1", "--order", "24", "--format", "json")
    csv_records = list(csv.DictReader(io.StringIO(csv_out)))
    json_records = json.loads(json_out)
    assert csv_records == json_records


# ----------------------------------------------------------------------
# verify


def test_verify_frobenius():
    rc, out, _ = run("verify", "--check", "frobenius", "--order", "100")
    assert rc == 0
    assert "verified through order 99" in out


@pytest.mark.parametrize("check", ["theta-identity-F", "theta-identity-G", "eta-vs-lattice", "divisor-vs-lattice", "f0-factored", "lifting"])
def test_verify_checks_pass(check):
    rc, out, _ = run("verify", "--check", check, "--order", "60")
    assert rc == 0, out
    assert "verified" in out or "match" in out


def test_verify_geometry():
    rc, out, _ = run("verify", "--check", "geometry-vs-residue", "--order", "40")
    assert rc == 0 and "agree" in out


def test_verify_unknown_check_exits_2():
    rc, out, err = run("verify", "--check", "bogus")
    assert rc == 2 and out == "" and "unknown check" in err


def test_verify_invalid_order_exits_3():
    rc, *_ = run("verify", "--check", "frobenius", "--order", "-5")
    assert rc == 3


# ----------------------------------------------------------------------
# table


def test_table_244_csv():
    rc, out, _ = run("table", "--orbifold", "244", "--order", "20", "--format", "csv")
    assert rc == 0
    records = list(csv.DictReader(io.StringIO(out)))
    by_series = {}
    for r in records:
        by_series.setdefault(r["series"], []).append(r)
    assert set(by_series) == {"g0", "g1", "g2", "g3", "g4"}
    assert [r["status"] for r in by_series["g0"]] == ["zero"]
    assert [r["status"] for r in by_series["g4"]] == ["zero"]
    assert all(r["status"] == "proven" for name in ("g1", "g2", "g3") for r in by_series[name])


def test_table_333_two_series():
    rc, out, _ = run("table", "--orbifold", "333", "--order", "24", "--format", "csv")
    records = list(csv.DictReader(io.StringIO(out)))
    assert {r["series"] for r in records} == {"f0", "f1"}


def test_table_236_conjectural_rows():
    rc, out, _ = run("table", "--orbifold", "236", "--order", "48", "--format", "csv")
    records = list(csv.DictReader(io.StringIO(out)))
    statuses = {r["series"]: r["status"] for r in records}
    assert statuses["h8"] == "conjectural" and statuses["h9"] == "conjectural"
    assert statuses["h5"] == "zero"


def test_table_plain_format_lists_series_names():
    rc, out, _ = run("table", "--orbifold", "333", "--order", "24")
    assert rc == 0
    assert out.splitlines()[0] == "f0 1 1 proven"


def test_table_invalid_order_exits_3():
    rc, *_ = run("table", "--orbifold", "333", "--order", "0")
    assert rc == 3


def test_table_defaults_to_all_orbifolds():
    rc, out, _ = run("table", "--order", "8", "--format", "csv")
    records = list(csv.DictReader(io.StringIO(out)))
    names = {r["series"] for r in records}
    assert {"f0", "h0", "g1"} <= names
