import io
import json
import subprocess
import sys

import jsonschema
import pytest

from centerbench.cli import run
from centerbench.fincat import load_category, validate_category
from centerbench.schemas import COMMAND_SCHEMAS, load_schema, schema_for_report

from conftest import DATA, cli

D = DATA

CASES = [
    (0, ["validate", D / "d12.json"]),
    (0, ["validate", D / "braid-12.json"]),
    (0, ["center", D / "s3-discrete.json"]),
    (0, ["weak-center", D / "z4.json"]),
    (0, ["centralizer", D / "d12.json", "--object", "4"]),
    (0, ["centralizer", D / "d12.json", "--morphism", "2->4"]),
    (0, ["colimit", D / "d12.json", "--diagram", D / "d12-pair-4-6.json"]),
    (0, ["colimit", D / "d30.json", "--diagram", D / "d30-span.json"]),
    (0, ["colimit", D / "d30.json", "--diagram", D / "d30-pair-2-5.json", "--in", "center"]),
    (0, ["colimit", D / "d30.json", "--diagram", D / "d30-pair-2-5.json", "--in", "weak"]),
    (0, ["colimit", D / "d30.json", "--diagram", D / "d30-pair-2-5.json", "--in", "zx", "--param", "6"]),
    (0, ["colimit", D / "d30.json", "--diagram", D / "d30-pair-2-5.json", "--in", "zh", "--param", "1->30"]),
    (0, ["colimit", D / "m3.json", "--diagram", D / "m3-pair-b-c.json", "--in", "center"]),
    (0, ["colimit", D / "braid-12.json", "--diagram", D / "braid-pair-1-2.json"]),
    (0, ["comonoids", D / "d30.json"]),
    (0, ["comonoids", D / "braid-12.json"]),
    (0, ["cofree", D / "s3-discrete.json", "--over", "e"]),
    (0, ["cofree", D / "s3-discrete.json", "--over", "(12)"]),
    (2, ["cofree", D / "braid-12.json", "--over", "3"]),
    (0, ["generators", D / "z4.json", "--check", "0"]),
    (0, ["generators", D / "d30.json", "--lift"]),
    (2, ["generators", D / "bz2.json", "--lift"]),
    (0, ["quotients", D / "d12.json", "--of", "4"]),
    (0, ["braid", "nf", "s1 S2 s1", "--strands", "3"]),
    (0, ["braid", "equal", "s1 s2 s1", "s2 s1 s2", "--strands", "3"]),
    (0, ["braid", "braiding", "2", "3"]),
    (0, ["braid", "theorems"]),
    (0, ["braid", "export", "--max-n", "3"]),
    (1, ["validate", D / "missing.json"]),
    (1, ["centralizer", D / "d12.json", "--object", "7"]),
    (1, ["braid", "nf", "s9", "--strands", "3"]),
]


@pytest.mark.parametrize("code,argv", CASES, ids=[" ".join(map(str, a[:2])) for _, a in CASES])
def test_reports_match_schemas(code, argv):
    got, report, _ = cli(*argv)
    assert got == code
    jsonschema.validate(report, schema_for_report(report))


def test_every_command_has_a_schema():
    covered = {" ".join(str(x) for x in a[:2]) if a[0] == "braid" else a[0] for _, a in CASES}
    assert set(COMMAND_SCHEMAS) <= covered
    for name in set(COMMAND_SCHEMAS.values()) | {"error", "category", "diagram"}:
        jsonschema.Draft7Validator.check_schema(load_schema(name))


def test_data_files_match_schemas():
    for path in sorted(D.glob("*.json")):
        data = json.loads(path.read_text())
        kind = "diagram" if "shape" in data else "category"
        jsonschema.validate(data, load_schema(kind))


def test_output_is_deterministic():
    argv = ["center", str(D / "d12.json")]
    outs = []
    for _ in range(2):
        buf = io.StringIO()
        run(argv, buf, io.StringIO())
        outs.append(buf.getvalue())
    assert outs[0] == outs[1]


def test_seed_changes_only_sampled_checks():
    _, a, _ = cli("braid", "theorems", "--seed", "1")
    _, b, _ = cli("braid", "theorems", "--seed", "2")
    assert a["all_passed"] and b["all_passed"]
    assert a["seed"] == 1 and b["seed"] == 2


def test_usage_errors_exit_one():
    assert cli()[0] == 1
    assert cli("center")[0] == 1
    assert cli("centralizer", D / "d12.json")[0] == 1


def test_invalid_category_exits_one(tmp_path):
    d = json.loads((D / "d12.json").read_text())
    d["composition"] = [r for r in d["composition"] if r[:2] != ["2->4", "1->2"]]
    d["composition"].append(["2->4", "1->2", "1->2"])
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(d))
    code, report, _ = cli("validate", bad)
    assert code == 1
    assert not report["ok"] and report["violations"]


def test_guardrail_flag():
    code, report, err = cli("center", D / "d30.json", "--max-objects", "4")
    assert code == 1
    assert report["type"] == "GuardrailError"
    assert "limit" in err


def test_refusal_is_reported():
    code, report, _ = cli("colimit", D / "m3.json", "--diagram", D / "m3-pair-b-c.json",
                          "--in", "center")
    assert code == 0 and report["refused"]
    assert report["functor"] in {"P_a", "Q_a"}


def test_emit_round_trip(tmp_path):
    out = tmp_path / "z.json"
    code, _, _ = cli("center", D / "d12.json", "--emit", out)
    assert code == 0
    assert validate_category(load_category(out)).ok


def test_export_writes_file(tmp_path):
    out = tmp_path / "b.json"
    code, report, _ = cli("braid", "export", "--max-n", "3", "-o", out)
    assert code == 0 and report["output"] == str(out)
    assert load_category(out).partial


def test_text_format():
    code, text, _ = cli("braid", "nf", "s1 s2 s1", "--strands", "3", "--format", "text")
    assert code == 0
    assert "D^1" in text


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "centerbench", "braid", "equal", "s1 s2 s1",
                           "s2 s1 s2", "--strands", "3"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["equal"] is True
