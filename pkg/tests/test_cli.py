"""Command-line interface: subcommands, exit codes, JSON mode, file handling."""

import contextlib
import io
import json
import os
import tempfile

from srcodes import cli


def _run(*argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = cli.main(list(argv))
    return code, out.getvalue(), err.getvalue()


def _tmp(name):
    return os.path.join(tempfile.mkdtemp(prefix="srcodes-test-"), name)


def test_construct_thm25_and_verify_round_trip():
    path = _tmp("thm25.src")
    code, out, _ = _run("construct", "thm25", "--q", "2", "--t", "4", "--k", "1", "--out", path)
    assert code == 0
    assert "K: 8" in out
    assert "claimed-distance: 4" in out
    assert "defect: 2" in out
    code, out, _ = _run("verify", path)
    assert code == 0
    assert "verified-distance: 4" in out
    assert "status: verified" in out


def test_construct_without_out_streams_the_file():
    code, out, err = _run("construct", "thm25", "--q", "2", "--t", "4", "--k", "1")
    assert code == 0
    assert "# claimed-distance: 4" in out  # file body on stdout
    assert "K: 8" in err  # summary stays out of the data path


def test_verify_tampered_claim_exits_2():
    path = _tmp("bad.src")
    _run("construct", "thm25", "--q", "2", "--t", "4", "--k", "1", "--out", path)
    with open(path) as fh:
        text = fh.read()
    with open(path, "w") as fh:
        fh.write(text.replace("# claimed-distance: 4", "# claimed-distance: 6"))
    code, out, _ = _run("verify", path)
    assert code == 2
    assert "below-claim" in out


def test_verify_budget_refusal_exits_3():
    path = _tmp("thm25.src")
    _run("construct", "thm25", "--q", "2", "--t", "4", "--k", "1", "--out", path)
    code, _, err = _run("verify", path, "--budget", "10")
    assert code == 3
    assert "refused" in err


def test_precondition_failures_exit_1():
    code, _, err = _run("construct", "thm25", "--q", "2", "--t", "4", "--k", "2")
    assert code == 1 and "odd" in err
    code, _, err = _run("construct", "msrd", "--q", "2", "--sizes", "4,3", "--d", "3")
    assert code == 1
    code, _, err = _run("verify", "/nonexistent/path.src")
    assert code == 1
    code, _, err = _run("bounds", "volume", "--q", "2", "--t", "1", "--n", "2", "--m", "2", "--r", "9")
    assert code == 1


def test_construct_msrd_writes_verifiable_file():
    path = _tmp("msrd.src")
    code, out, _ = _run("construct", "msrd", "--q", "2", "--sizes", "4,2", "--d", "3", "--out", path)
    assert code == 0
    assert "K: 12" in out
    assert "singleton-gap: 0" in out
    assert _run("verify", path)[0] == 0


def test_construct2_with_dependent_component_rows_exits_1():
    gm = _tmp("dep.gm")
    with open(gm, "w") as fh:
        fh.write("2 1 2\n4 2\n1 1 1 1\n1 1 1 1\n")  # two equal rows
    code, _, err = _run(
        "construct", "construct2", "--q", "2", "--n", "2", "--codes", gm
    )
    assert code == 1
    assert "full row rank" in err


def test_construct2_from_files_matches_direct_construction():
    import numpy as np

    import srcodes as S

    tower = S.make_tower(2, 1, 2)
    a, b = _tmp("a.gm"), _tmp("b.gm")
    with open(a, "w") as fh:
        fh.write(S.export_generator_matrix(S.rs_code(tower.top, 4, 2)))
    with open(b, "w") as fh:
        fh.write(S.export_generator_matrix(S.rs_code(tower.top, 4, 1)))
    out_path = _tmp("c2.src")
    code, out, _ = _run(
        "construct", "construct2", "--q", "2", "--n", "2",
        "--codes", f"{a},{b}", "--distances", "3,4", "--out", out_path,
    )
    assert code == 0
    assert "K: 6" in out
    with open(out_path) as fh:
        imported = S.import_sumrank_code(fh.read())
    direct = S.from_coefficient_codes(
        tower, [S.rs_code(tower.top, 4, 2), S.rs_code(tower.top, 4, 1)]
    )
    assert np.array_equal(imported.gens, direct.gens)
    assert _run("verify", out_path)[0] == 0


def test_construct1_from_file():
    gm = _tmp("rep16.gm")
    with open(gm, "w") as fh:
        fh.write("2 4 1 2 1\n1 1\n")  # [2,1] repetition over F_16
    path = _tmp("c1.src")
    code, out, _ = _run(
        "construct", "construct1", "--q", "2", "--n", "2", "--v", "1",
        "--code", gm, "--distance", "2", "--out", path,
    )
    assert code == 0
    assert "K: 4" in out
    assert "claimed-distance: 2" in out
    assert _run("verify", path)[0] == 0


def test_construct_bch_formula_mode():
    code, out, _ = _run(
        "construct", "bch", "--q", "2", "--n", "2", "--u", "6",
        "--designed", "2,4", "--base-field", "--no-materialize", "--json",
    )
    assert code == 0
    rec = json.loads(out)
    assert rec["block-length"] == 63
    assert rec["component-dims"] == "57,51"
    assert rec["K"] == 216
    assert rec["claimed-distance"] == 4
    assert rec["materialized"] is False


def test_bounds_singleton_and_volume():
    code, out, _ = _run(
        "bounds", "singleton", "--q", "2", "--t", "7", "--n", "2", "--m", "2", "--d", "5", "--json"
    )
    assert code == 0
    assert json.loads(out)["singleton-exponent"] == 20
    code, out, _ = _run(
        "bounds", "volume", "--q", "2", "--t", "2", "--n", "2", "--m", "2", "--r", "1", "--json"
    )
    assert json.loads(out)["volume"] == 19
    code, out, _ = _run(
        "bounds", "volume", "--q", "2", "--sizes", "2", "--r", "1", "--as-printed", "--json"
    )
    assert json.loads(out)["volume"] == 7


def test_bounds_gamma_hsr_gv():
    code, out, _ = _run("bounds", "gamma", "--q", "3", "--json")
    assert code == 0
    assert abs(json.loads(out)["gamma"] - 1.785) < 5e-4
    code, out, _ = _run("bounds", "hsr", "--q", "2", "--n", "2", "--m", "2", "--rho", "1.0", "--json")
    h = json.loads(out)["hsr"]
    assert 0 < h <= 1
    code, out, _ = _run(
        "bounds", "gv", "--q", "2", "--n", "1000", "--m", "1000", "--t", "2", "--d", "600", "--json"
    )
    assert abs(json.loads(out)["gv-rhs"] - 0.49) < 0.05
    code, out, _ = _run("bounds", "asymptotic", "--delta", "0.3", "--xi", "1.0", "--json")
    assert abs(json.loads(out)["rate"] - 0.49) < 1e-12
    code, out, _ = _run(
        "bounds", "tradeoff", "--q", "4", "--n", "64", "--v", "62",
        "--rate", "0.9", "--delta", "0.3", "--json",
    )
    rec = json.loads(out)
    assert rec["satisfied"] == (rec["tradeoff-lhs"] >= rec["tradeoff-rhs"])


def test_table_emits_exact_singleton_column():
    code, out, _ = _run(
        "table", "--q", "2", "--t", "7", "--n", "2", "--m", "2",
        "--d-from", "2", "--d-to", "7", "--json",
    )
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert [r["singleton"] for r in rows] == ["2·13", "2·12", "2·11", "2·10", "2·9", "2·8"]
    assert [r["singleton-exponent"] for r in rows] == [26, 24, 22, 20, 18, 16]


def test_table_fills_from_files_and_formulas():
    path = _tmp("thm25.src")
    _run("construct", "thm25", "--q", "2", "--t", "4", "--k", "1", "--out", path)
    code, out, _ = _run(
        "table", "--q", "2", "--t", "4", "--n", "2", "--m", "2",
        "--d-from", "2", "--d-to", "5", "--codes", path, "--json",
    )
    assert code == 0
    rows = {r["d"]: r for r in map(json.loads, out.splitlines())}
    assert rows[4]["K"] == 8 and rows[4]["source"] == path
    assert rows[2]["source"].startswith("reed-solomon pair")  # k=3 formula row
    assert rows[2]["K"] == 4 + 9 + 1
    assert rows[3]["K"] is None
    assert "needs external" in rows[3]["source"]
    # a space mismatch is a hard error
    code, _, err = _run(
        "table", "--q", "2", "--t", "5", "--n", "2", "--m", "2", "--codes", path
    )
    assert code == 1


def test_table_bch_fill_uses_coset_dimensions():
    code, out, _ = _run(
        "table", "--q", "2", "--t", "7", "--n", "2", "--m", "2",
        "--d-from", "4", "--d-to", "4", "--json",
    )
    assert code == 0
    row = json.loads(out.splitlines()[0])
    # designed distances (2,4) over F_4 of length 7: dims 4 and 1
    assert row["source"].startswith("bch components")
    assert row["K"] == 2 * (4 + 1)


def test_convert_gm_to_src_and_back():
    gm = _tmp("rep.gm")
    with open(gm, "w") as fh:
        fh.write("# comment\n2 2 1\n3 1\n1 1 1\n")
    src = _tmp("rep.src")
    code, _, _ = _run("convert", "--to", "src", "--distance", "3", gm, src)
    assert code == 0
    assert _run("verify", src)[0] == 0
    back = _tmp("back.gm")
    code, _, _ = _run("convert", "--to", "gm", src, back)
    assert code == 0
    with open(back) as fh:
        text = fh.read()
    assert "1 1 1" in text
    # converting a non-Hamming code to gm is refused
    msrd = _tmp("msrd.src")
    _run("construct", "msrd", "--q", "2", "--sizes", "4,2", "--d", "3", "--out", msrd)
    code, _, err = _run("convert", "--to", "gm", msrd, _tmp("no.gm"))
    assert code == 1
    assert "1x1" in err


def test_text_mode_prints_key_value_lines():
    code, out, _ = _run("bounds", "gamma", "--q", "2")
    assert code == 0
    assert out.startswith("gamma: 3.46")
