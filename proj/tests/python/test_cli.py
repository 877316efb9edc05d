import json
import subprocess

import jsonschema


def run(cli, *args, stdin=""):
    return subprocess.run([cli, *args], input=stdin, capture_output=True, text=True, timeout=300)


def test_found_and_schema(cli, schema):
    p = run(cli, "--json", "-", stdin="u_t = u^2*u_xxx\n")
    assert p.returncode == 0
    report = json.loads(p.stdout)
    jsonschema.validate(report, schema)
    assert [a["definition"] for a in report["result"]["aux_vars"]] == ["u^2", "u_x^2"]


def test_benchmarks_validate(cli, schema):
    for name in ["solar-wind", "euler", "schnakenberg", "dym"]:
        p = run(cli, "--benchmark", name, "--json", "-")
        assert p.returncode == 0, name
        jsonschema.validate(json.loads(p.stdout), schema)


def test_not_found_exit_code(cli, schema):
    p = run(cli, "--max-aux", "0", "--json", "-", stdin="u_t = u^3\n")
    assert p.returncode == 2
    jsonschema.validate(json.loads(p.stdout), schema)


def test_usage_errors(cli):
    assert run(cli, stdin="\n").returncode == 1
    p = run(cli, stdin="u_t = u\nv_t = w\n")
    assert p.returncode == 1
    assert "line 2" in p.stderr
    assert run(cli, "--heuristic", "h7", stdin="u_t = u\n").returncode == 1
    assert run(cli, "--benchmark", "nope").returncode == 1


def test_text_output(cli):
    p = run(cli, stdin="u_t = u_x + u^3\n")
    assert p.returncode == 0
    assert "w1 = u^2" in p.stdout
    assert "w1_t = " in p.stdout
