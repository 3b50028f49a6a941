"""Command-line surface: formats, exit codes, determinism, persistence."""

from __future__ import annotations

import csv
import json

import pytest

from sgq.cli import CatalogRecord, catalog_record, main, read_catalog, write_catalog
from sgq import parse_group
from sgq.errors import DataFileError


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ── basic subcommands ───────────────────────────────────────────────────────

def test_order(capsys):
    code, out, err = run(capsys, "order", "M11")
    assert code == 0
    assert out == "2^4*3^2*5*11 = 7920\n"
    assert err == ""


def test_order_of_coincidence(capsys):
    code, out, _ = run(capsys, "order", "L4(2)")
    assert code == 0
    assert out == "2^6*3^2*5*7 = 20160\n"


def test_census_lines(capsys):
    code, out, _ = run(capsys, "census", "A5")
    assert code == 0
    assert out == "1 1\n2 15\n3 20\n5 24\n"


def test_invariants(capsys):
    code, out, _ = run(capsys, "invariants", "M11")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "group M11"
    assert lines[1] == "order 2^4*3^2*5*11 = 7920"
    assert "spectrum 1 2 3 4 5 6 8 11" in lines
    assert "npe 165 440 1440 1584" in lines
    assert "largest-prime 11" in lines
    assert "count(11) 1440" in lines


def test_prime_graph(capsys, tmp_path):
    dot_path = tmp_path / "m11.dot"
    code, out, _ = run(capsys, "prime-graph", "M11", "--dot", str(dot_path))
    assert code == 0
    assert "vertices 2 3 5 11" in out
    assert "edge 2 3" in out
    assert "component 2 3" in out
    assert "component 11" in out
    assert f"dot -> {dot_path}" in out
    text = dot_path.read_text()
    assert text.startswith("graph") and "p2 -- p3;" in text


def test_sample_output_shape(capsys):
    code, out, _ = run(
        capsys, "sample", "A6", "--order", "5", "--samples", "4000",
        "--seed", "3", "--threads", "2",
    )
    assert code == 0
    lines = dict(line.split(" ", 1) for line in out.splitlines())
    assert lines["group"] == "A6"
    assert lines["order-k"] == "5"
    assert lines["samples"] == "4000"
    assert lines["seed"] == "3"
    assert lines["threads"] == "2"
    assert int(lines["hits"]) == round(float(lines["fraction"]) * 4000)
    # 144/360 = 0.4; a 4k-draw estimate lands within a wide sanity band
    assert 0.3 < float(lines["fraction"]) < 0.5


def test_verify_paper(capsys, tmp_path):
    jsonl = tmp_path / "report.jsonl"
    code, out, _ = run(capsys, "verify-paper", "--jsonl", str(jsonl))
    assert code == 0
    assert "all 33 checks passed" in out
    assert "sylow-normalizer/M11" in out
    lines = jsonl.read_text().strip().splitlines()
    assert len(lines) == 33
    assert all(json.loads(line)["verdict"] == "pass" for line in lines)


# ── collide ─────────────────────────────────────────────────────────────────

def test_collide_moreto_finds_the_pair(capsys):
    code, out, _ = run(capsys, "collide", "--invariant", "moreto", "--max-order", "100000")
    assert code == 0
    assert "collision A8 L3(4) verdict confirmed" in out
    assert "count(7): 2^7*3^2*5 vs 2^7*3^2*5 [exact] equal" in out
    assert "1 candidate pair(s), 1 confirmed" in out


def test_collide_moreto_empty_below_pair(capsys):
    code, out, _ = run(capsys, "collide", "--invariant", "moreto", "--max-order", "10000")
    assert code == 0
    assert out == "no moreto collisions up to order 10000\n"


@pytest.mark.parametrize("invariant", ("npe", "shi"))
def test_collide_refinements_empty(capsys, invariant):
    code, out, _ = run(
        capsys, "collide", "--invariant", invariant, "--max-order", "1000000"
    )
    assert code == 0
    assert out == f"no {invariant} collisions up to order 1000000\n"


def test_collide_csv(capsys):
    code, out, _ = run(
        capsys, "collide", "--invariant", "moreto", "--max-order", "100000", "--csv"
    )
    assert code == 0
    rows = list(csv.reader(out.splitlines()))
    assert rows[0] == [
        "left", "right", "verdict", "invariant", "left_value", "right_value",
        "equal", "kind", "detail",
    ]
    assert ["A8", "L3(4)", "confirmed", "order", "2^6*3^2*5*7", "2^6*3^2*5*7",
            "true", "exact", ""] in rows


# ── catalog persistence ─────────────────────────────────────────────────────

def test_catalog_export_and_round_trip(capsys, tmp_path):
    out_path = tmp_path / "cat.jsonl"
    code, out, _ = run(capsys, "catalog", "--max-order", "1000", "--out", str(out_path))
    assert code == 0
    assert out == f"5 records -> {out_path}\n"
    records = read_catalog(out_path)
    assert [r.descriptor for r in records] == ["A5", "L2(7)", "A6", "L2(8)", "L2(11)"]
    again = tmp_path / "again.jsonl"
    write_catalog(records, again)
    assert read_catalog(again) == records
    assert again.read_text() == out_path.read_text()


def test_catalog_record_contents(tmp_path):
    rec = catalog_record(parse_group("A5"))
    assert rec.order == "2^2*3*5"
    assert rec.order_decimal == "60"
    assert rec.largest_prime == 5
    assert rec.count_p == "2^3*3"
    assert rec.count_provenance == "census"
    assert rec.pi_e == (1, 2, 3, 5)
    assert rec.npe == (15, 20, 24)


def test_catalog_record_without_realization():
    rec = catalog_record(parse_group("2B2(8)"))
    assert rec.count_p is None
    assert rec.count_provenance == "absent"
    assert rec.pi_e is None and rec.npe is None


def test_catalog_record_sporadic_provenance():
    rec = catalog_record(parse_group("M11"))
    assert rec.count_provenance == "paper"
    assert rec.count_p == "2^5*3^2*5"
    assert rec.pi_e == (1, 2, 3, 4, 5, 6, 8, 11)


def test_catalog_csv(capsys, tmp_path):
    out_path = tmp_path / "cat.csv"
    code, out, _ = run(
        capsys, "catalog", "--max-order", "1000", "--out", str(out_path), "--csv"
    )
    assert code == 0
    rows = list(csv.reader(out_path.read_text().splitlines()))
    assert rows[0] == [
        "descriptor", "order", "order_decimal", "largest_prime",
        "count_p", "count_provenance", "pi_e", "npe",
    ]
    assert len(rows) == 6
    a5 = rows[1]
    assert a5[0] == "A5" and a5[2] == "60" and a5[7] == "15 20 24"


def test_read_catalog_rejects_malformed(tmp_path):
    bad = tmp_path / "bad.jsonl"
    bad.write_text('{"descriptor": "A5"}\n')
    with pytest.raises(DataFileError) as err:
        read_catalog(bad)
    assert f"{bad}:1" in str(err.value)
    worse = tmp_path / "worse.jsonl"
    worse.write_text("not json at all\n")
    with pytest.raises(DataFileError):
        read_catalog(worse)
    with pytest.raises(DataFileError):
        read_catalog(tmp_path / "missing.jsonl")


def test_catalog_record_validates_decimal():
    with pytest.raises(DataFileError):
        CatalogRecord(
            descriptor="A5", order="2^2*3*5", order_decimal="61",
            largest_prime=5, count_p=None, count_provenance="absent",
            pi_e=None, npe=None,
        )


def test_empty_catalog_round_trip(tmp_path):
    path = tmp_path / "empty.jsonl"
    write_catalog([], path)
    assert path.read_text() == ""
    assert read_catalog(path) == []


# ── determinism ─────────────────────────────────────────────────────────────

def test_census_output_thread_independent(capsys):
    _, one, _ = run(capsys, "census", "L3(4)", "--threads", "1")
    _, four, _ = run(capsys, "census", "L3(4)", "--threads", "4")
    assert one == four


def test_sample_byte_identical_for_fixed_seed(capsys):
    args = ("sample", "M11", "--order", "11", "--samples", "3000",
            "--seed", "9", "--threads", "2")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second
    _, third, _ = run(capsys, "sample", "M11", "--order", "11", "--samples",
                      "3000", "--seed", "10", "--threads", "2")
    assert first != third


def test_collide_byte_identical(capsys):
    args = ("collide", "--invariant", "moreto", "--max-order", "100000")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


# ── exit codes ──────────────────────────────────────────────────────────────

def test_unknown_group_is_usage_error(capsys):
    code, out, err = run(capsys, "order", "Zz")
    assert code == 2
    assert out == ""
    assert err.startswith("error:")


def test_bad_parameters_are_usage_errors(capsys):
    code, _, err = run(capsys, "order", "A4")
    assert code == 2 and "n >= 5" in err
    code, _, err = run(capsys, "census", "A5", "--cap", "99999999999")
    assert code == 2 and "cap" in err
    code, _, err = run(capsys, "sample", "A5", "--order", "0", "--samples", "10")
    assert code == 2


def test_cap_exceeded_is_check_failure(capsys):
    code, _, err = run(capsys, "census", "O7(3)")
    assert code == 1
    assert "exceeds cap" in err
    code, _, err = run(capsys, "census", "M12", "--cap", "7920")
    assert code == 1


def test_unrealizable_group_is_usage_error(capsys):
    code, _, err = run(capsys, "census", "2B2(8)")
    assert code == 2
    assert "realization" in err


def test_argparse_rejects_unknown_subcommand():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["collide", "--invariant", "zarrin", "--max-order", "10"])
    assert exc.value.code == 2
