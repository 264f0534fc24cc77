import json

from hbq.cli import canonical_json, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_finite_exact_output(capsys):
    code, out, _ = run(capsys, "finite", "--variant", "S", "--h", "1", "--k", "2")
    assert code == 0 and out.strip() == "1"
    code, out, _ = run(capsys, "finite", "--variant", "dedekind", "--h", "1",
                       "--k", "3")
    assert code == 0 and out.strip() == "1/18"


def test_usage_error_exit_2(capsys):
    code, _, _ = run(capsys, "finite", "--variant", "nope", "--h", "1", "--k", "2")
    assert code == 2
    code, _, err = run(capsys, "finite", "--variant", "S", "--h", "2", "--k", "4")
    assert code == 2 and "coprime" in err


def test_domain_error_exit_2(capsys):
    code, _, err = run(capsys, "qzeta", "--fn", "l", "--s", "2", "--q", "1/2",
                       "--chi", "5:9")
    assert code == 2 and "out of range" in err


def test_verify_pass_and_fail_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "thm5", "--s", "2", "--q", "1/2",
                       "--chi", "3:1", "--tol", "1e-10")
    assert code == 0 and "PASS" in out
    # an unreachable tolerance flips the exit code, not the report shape
    code, out, _ = run(capsys, "verify", "thm5", "--s", "2", "--q", "1/2",
                       "--chi", "3:1", "--tol", "1e-18")
    assert code == 1 and "FAIL" in out


def test_json_reports_are_byte_identical(tmp_path, capsys):
    args = ("verify", "mellin-defs", "--s", "2", "--q", "1/2",
            "--format", "json")
    paths = []
    for i in (0, 1):
        p = tmp_path / f"report{i}.json"
        code = main(list(args) + ["--out", str(p)])
        assert code == 0
        paths.append(p.read_bytes())
    assert paths[0] == paths[1]
    parsed = json.loads(paths[0])
    assert parsed["pass"] is True
    for row in parsed["results"]:
        assert row["kind"] == "check"
        assert "abs_diff" in row and "tolerance" in row


def test_every_value_carries_certificate(capsys):
    code, out, _ = run(capsys, "qzeta", "--fn", "im", "--s", "2", "--q", "1/2",
                       "--format", "json")
    assert code == 0
    report = json.loads(out)
    row = report["results"][0]
    assert row["route"] and "tail_bound" in row and "terms_used" in row
    code, out, _ = run(capsys, "qsum", "--kind", "gen", "--variant", "S",
                       "--h", "1", "--k", "2", "--q", "1", "--format", "json")
    report = json.loads(out)
    row = report["results"][0]
    assert "residual" in row and "per_offset" in row and row["route"]


def test_qsum_dedekind_reports_classical_alongside(capsys):
    code, out, _ = run(capsys, "qsum", "--kind", "dedekind", "--p", "1",
                       "--h", "1", "--k", "3", "--q", "1", "--format", "json")
    assert code == 0
    names = [r["name"] for r in json.loads(out)["results"]]
    assert names == ["q-dedekind", "classical-dedekind-sum"]


def test_numbers_and_characters_listing(capsys):
    code, out, _ = run(capsys, "numbers", "--kind", "genocchi", "--n-max", "6",
                       "--format", "json")
    assert code == 0
    vals = [r["value"] for r in json.loads(out)["results"]]
    assert vals == ["0", "1", "-1", "0", "1", "0", "-3"]
    code, out, _ = run(capsys, "characters", "--f", "5", "--format", "json")
    assert code == 0
    assert len(json.loads(out)["results"]) == 4
    code, out, _ = run(capsys, "characters", "--f", "4", "--index", "1",
                       "--n", "3", "--format", "json")
    val = json.loads(out)["results"][0]["value"]
    assert val == {"im": 0.0, "re": -1.0}


def test_csv_format(capsys):
    code, out, _ = run(capsys, "verify", "thm19", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "kind,name,params,value,certificate,pass"
    assert lines[-1].endswith("True")


def test_verify_thm4_sweep(capsys, monkeypatch):
    code, out, _ = run(capsys, "verify", "thm4", "--k-max", "4",
                       "--format", "json")
    assert code == 0
    rows = json.loads(out)["results"]
    assert all(r["pass"] for r in rows) and len(rows) > 10
    # the thread cap must not change the report
    monkeypatch.setenv("HBQ_THREADS", "3")
    code2, out2, _ = run(capsys, "verify", "thm4", "--k-max", "4",
                         "--format", "json")
    assert code2 == 0 and out2 == out


def test_verify_thm6_single_point(capsys):
    code, out, _ = run(capsys, "verify", "thm6", "--s", "2", "--q", "1/2",
                       "--chi", "3:1", "--x", "0.25", "--format", "json")
    assert code == 0
    rows = json.loads(out)["results"]
    assert len(rows) == 1 and rows[0]["pass"]


def test_qsum_custom_schedule(capsys):
    code, out, _ = run(capsys, "qsum", "--kind", "gen", "--variant", "S",
                       "--h", "1", "--k", "2", "--q", "2/5",
                       "--eps", "0.4,0.2,0.1", "--order", "1",
                       "--format", "json")
    assert code == 0
    row = json.loads(out)["results"][0]
    assert len(row["per_offset"]) == 3


def test_canonical_json_floats():
    assert canonical_json(0.1) == "0.10000000000000001"
    assert canonical_json({"b": 1, "a": complex(1, -2)}) == \
        '{"a": {"im": -2, "re": 1}, "b": 1}'
