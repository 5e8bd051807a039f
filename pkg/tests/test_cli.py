import json

from taufact.cli import main
from taufact.corpus import default_corpus_spec, generate_corpus


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify_command(capsys):
    code, out, _ = run_cli(
        capsys, "classify", "--ring", "Zn(6)", "--tau", "full", "--element", "2"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["flags"]["irreducible"] == "true"
    assert payload["flags"]["m-irreducible"] == "true"
    assert payload["flags"]["unrefinably-irreducible"] == "false"
    assert payload["flags"]["very-strongly-irreducible"] == "false"


def test_factorizations_command(capsys):
    code, out, _ = run_cli(
        capsys, "factorizations", "--ring", "Z", "--tau", "comax", "--element", "12"
    )
    assert code == 0
    payload = json.loads(out)
    got = {tuple(sorted(i["factors"], key=lambda x: (abs(x), x < 0))) for i in payload["items"]}
    assert got == {(12,), (3, 4)}


def test_ufact_command(capsys):
    code, out, _ = run_cli(
        capsys, "ufact", "--ring", "Zn(6)", "--tau", "zero", "--element", "2"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["splits"] == [
        {"unit": 1, "inessential": [], "essential": [2], "target": 2}
    ]


def test_properties_command(capsys):
    code, out, _ = run_cli(capsys, "properties", "--ring", "Zn(6)", "--tau", "full")
    assert code == 0
    payload = json.loads(out)
    by_label = {v["property"]: v["outcome"] for v in payload["properties"]}
    assert by_label["ffr/associate/plain"] == "fails"
    assert by_label["wffr/associate/plain"] == "holds"
    assert payload["elasticity"]["value"] == "undefined-empty-scope"


def test_properties_scope(capsys):
    code, out, _ = run_cli(
        capsys,
        "properties",
        "--ring",
        "Z",
        "--tau",
        "full",
        "--scope",
        json.dumps(list(range(2, 30))),
    )
    assert code == 0
    payload = json.loads(out)
    by_label = {v["property"]: v for v in payload["properties"]}
    assert by_label["ufr/irreducible/associate/regular-elements"]["outcome"] == "holds"
    assert by_label["ufr/irreducible/associate/regular-elements"]["scoped"] is True


def test_usage_error_exit_code(capsys):
    code, _, err = run_cli(capsys, "classify", "--ring", "Zn(6)")
    assert code == 1
    code, _, err = run_cli(
        capsys, "classify", "--ring", "Zn(", "--tau", "full", "--element", "2"
    )
    assert code == 1 and "position" in err


def test_verify_tiny_corpus(tmp_path, capsys):
    corpus = {
        "schema": 1,
        "rings": ["Zn(6)", "Zn(8)"],
        "taus": ["full", "zero", "regcap(full)"],
        "scopes": {},
        "cap": 5,
        "budget": 1000,
    }
    path = tmp_path / "corpus.json"
    path.write_text(json.dumps(corpus))
    code, out, _ = run_cli(capsys, "verify", "--corpus", str(path))
    assert code == 0
    report = json.loads(out)
    assert report["summary"]["violated"] == 0
    assert report["summary"]["verified"] > 0


def test_verify_deterministic_and_parallel_equal(tmp_path, capsys):
    corpus = {
        "schema": 1,
        "rings": ["Zn(6)", "Zn(9)", "prod(Zn(2),Zn(3))"],
        "taus": ["full", "comax"],
        "scopes": {},
        "cap": 4,
        "budget": 1000,
    }
    path = tmp_path / "corpus.json"
    path.write_text(json.dumps(corpus))
    outs = []
    for jobs in ("1", "2", "1"):
        code, out, _ = run_cli(capsys, "verify", "--corpus", str(path), "--jobs", jobs)
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1] == outs[2]


def test_catalog_roundtrip(tmp_path, capsys):
    corpus = {
        "schema": 1,
        "rings": ["Zn(6)"],
        "taus": ["full"],
        "scopes": {},
        "cap": 5,
        "budget": 100,
    }
    cpath = tmp_path / "corpus.json"
    cpath.write_text(json.dumps(corpus))
    apath = tmp_path / "atlas.json"
    code, out, _ = run_cli(capsys, "catalog", "--corpus", str(cpath), "--out", str(apath))
    assert code == 0
    atlas = json.loads(apath.read_text())
    assert atlas["schema"] == 1
    entry = atlas["entries"][0]
    assert entry["ring"] == "Zn(6)" and entry["tau"] == "full"
    assert any(e["element"] == 2 for e in entry["elements"])
    # regenerating produces identical bytes
    apath2 = tmp_path / "atlas2.json"
    run_cli(capsys, "catalog", "--corpus", str(cpath), "--out", str(apath2))
    assert apath.read_text() == apath2.read_text()


def test_corpus_budget_enforced(tmp_path, capsys):
    corpus = {
        "schema": 1,
        "rings": ["Zn(24)"],
        "taus": ["full"],
        "scopes": {},
        "cap": 5,
        "budget": 10,
    }
    path = tmp_path / "corpus.json"
    path.write_text(json.dumps(corpus))
    code, _, err = run_cli(capsys, "verify", "--corpus", str(path))
    assert code == 1 and "budget" in err


def test_corpus_zero_scope_rejected(tmp_path, capsys):
    corpus = {
        "schema": 1,
        "rings": ["Z"],
        "taus": ["full"],
        "scopes": {"Z": [0, 2, 3]},
        "cap": 5,
        "budget": 1000,
    }
    path = tmp_path / "corpus.json"
    path.write_text(json.dumps(corpus))
    code, _, err = run_cli(capsys, "verify", "--corpus", str(path))
    assert code == 1 and "0" in err


def test_default_corpus_metadata():
    entries, meta = generate_corpus(default_corpus_spec())
    # 23 modular rings + 25 products + 2 quotients + Z + ZxZ + the one field
    # square not already in the product grid (7x7)
    assert meta["rings"] == 53
    assert meta["taus"] == 7
    assert meta["entries"] == 53 * 7
    # on finite rings the regular-pair relations collapse to the empty one
    assert any(
        set(g) >= {"empty", "regular"}
        for groups in meta["extensionally_equal_taus"].values()
        for g in groups
    )


def test_strict_exit_code_on_skips(tmp_path, capsys):
    # axis samples under the full relation cannot be enumerated, so some
    # checks are skipped; --strict turns that into exit code 3
    corpus = {
        "schema": 1,
        "rings": ["prod(Z,Z)"],
        "taus": ["full"],
        "scopes": {"prod(Z,Z)": [[2, 3], [2, 0]]},
        "cap": 5,
        "budget": 1000,
    }
    path = tmp_path / "corpus.json"
    path.write_text(json.dumps(corpus))
    code, out, _ = run_cli(capsys, "verify", "--corpus", str(path))
    assert code == 0
    code, out, _ = run_cli(capsys, "verify", "--corpus", str(path), "--strict")
    assert code == 3


def test_empty_corpus_is_valid():
    entries, meta = generate_corpus(
        {"schema": 1, "rings": [], "taus": ["full"], "scopes": {}, "cap": 5, "budget": 10}
    )
    assert entries == [] and meta["entries"] == 0
