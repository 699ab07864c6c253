import json
import os
import subprocess
import sys

SRC = os.path.join(os.path.dirname(__file__), "..", "src")


def run_cli(*args, env_extra=None):
    env = dict(os.environ)
    env["PYTHONPATH"] = SRC + os.pathsep + env.get("PYTHONPATH", "")
    if env_extra:
        env.update(env_extra)
    return subprocess.run([sys.executable, "-m", "pbent", *args],
                          capture_output=True, text=True, env=env)


def test_analyze_table_row():
    res = run_cli("analyze", "p=3 n=3 f=Tr(x^8+x^14)")
    assert res.returncode == 0
    out = json.loads(res.stdout)
    assert out["bent"] is True
    assert out["classification"]["variant"] == "non_weakly_regular"
    assert out["classification"]["dual_bent"] is True
    assert out["dual_bent"] is True
    assert out["p"] == 3 and out["n"] == 3


def test_analyze_not_bent():
    res = run_cli("analyze", "p=3 n=2 f=Tr(x)")
    out = json.loads(res.stdout)
    assert out["bent"] is False
    assert out["classification"]["variant"] == "not_bent"


def test_analyze_deterministic_output():
    a = run_cli("analyze", "p=3 n=4 f=Tr(x^34+x^2)", "--certify", "--seed", "5")
    b = run_cli("analyze", "p=3 n=4 f=Tr(x^34+x^2)", "--certify", "--seed", "5")
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout  # byte-identical


def test_analyze_naive_matches_fast():
    a = run_cli("analyze", "p=3 n=2 f=Tr(x^2)")
    b = run_cli("analyze", "p=3 n=2 f=Tr(x^2)", "--naive")
    ja, jb = json.loads(a.stdout), json.loads(b.stdout)
    ja.pop("provenance"), jb.pop("provenance")
    assert ja == jb


def test_exit_codes():
    assert run_cli("analyze", "p=3 n=2 f=Tr(x").returncode == 2
    assert run_cli("construct", "trinomial", "--k", "1", "--j", "1", "--t", "1").returncode == 3
    assert run_cli("--max-points", "10", "analyze", "p=3 n=3 f=Tr(x^2)").returncode == 4
    err = json.loads(run_cli("analyze", "p=3 n=2 f=Tr(x").stderr)
    assert err["error"]["kind"] == "parse_error"


def test_construct_trinomial_analyze():
    res = run_cli("construct", "trinomial", "--k", "1", "--j", "2", "--t", "1",
                  "--analyze", "--certify")
    assert res.returncode == 0
    out = json.loads(res.stdout)
    assert out["n"] == 4
    assert out["analysis"]["classification"]["variant"] == "non_weakly_regular"
    assert out["analysis"]["algebraic_degree"] == 3
    assert out["analysis"]["cubic_like"]["complete"] is True
    assert out["analysis"]["wr_identities"]["sound_violation_count"] > 0


def test_verify_table1_json():
    res = run_cli("verify-table1", "--json", "--no-search")
    assert res.returncode == 0
    out = json.loads(res.stdout)
    assert out["all_reproduced"] is True
    assert len(out["rows"]) == 5
    flags = {r["label"]: r["classification"]["dual_bent"] for r in out["rows"]}
    assert flags["sporadic_n3_x8_x14"] is True
    assert flags["sporadic_n6_g7x98"] is False


def test_verify_table1_threads_match_sequential():
    seq = run_cli("verify-table1", "--json", "--no-search")
    par = run_cli("verify-table1", "--json", "--no-search",
                  env_extra={"PBENT_THREADS": "3"})
    assert seq.stdout == par.stdout


def test_spectrum_csv():
    res = run_cli("spectrum", "p=3 n=1 f=Tr(x^2)")
    lines = res.stdout.strip().splitlines()
    assert lines[0] == "index,c0,c1"
    assert lines[1] == "0,1,2"
    assert len(lines) == 4


def test_property_suite_subset():
    res = run_cli("property-suite", "--seed", "7", "--only",
                  "cyclotomic_ring,catalog,trinomial_closed_forms")
    assert res.returncode == 0
    out = json.loads(res.stdout)
    assert out["all_passed"] is True
    # output keeps the canonical battery order regardless of --only order
    assert [c["name"] for c in out["checks"]] == [
        "cyclotomic_ring", "trinomial_closed_forms", "catalog"]


def test_construct_concat_and_add_quadratic(tmp_path):
    slices = tmp_path / "slices.txt"
    slices.write_text("\n".join(["p=3 n=2 f=Tr(x^2)"] * 3) + "\n")
    pi = tmp_path / "pi.json"
    pi.write_text("[0, 1, 2]")
    res = run_cli("construct", "concat", "--slices", str(slices),
                  "--pi", str(pi), "--analyze")
    assert res.returncode == 0
    out = json.loads(res.stdout)
    assert out["construction"] == "special_form"
    assert out["analysis"]["bent"] is True

    res2 = run_cli("construct", "add-quadratic", "--f", "p=3 n=1 f=Tr(x^2)",
                   "--coeffs", "1", "--analyze")
    out2 = json.loads(res2.stdout)
    assert out2["condition_holds"] is True and out2["spectrally_bent"] is True
    assert out2["analysis"]["bent"] is True


def test_concat_without_pi_runs_plain_concatenation(tmp_path):
    slices = tmp_path / "slices.txt"
    slices.write_text("\n".join(["p=3 n=1 f=Tr(x^2)"] * 3) + "\n")
    res = run_cli("construct", "concat", "--slices", str(slices))
    assert res.returncode == 0
    out = json.loads(res.stdout)
    assert out["construction"] == "concatenation"
    assert out["report"]["applicable"] is True
