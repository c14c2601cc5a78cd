import io
import json

from quiverhopf.cli import main


def run(argv):
    buf = io.StringIO()
    rc = main(argv, out=buf)
    return rc, buf.getvalue()


def test_coproduct_pretty_output():
    rc, out = run(["coproduct", "--input", "1 e e*"])
    assert rc == 0
    assert out == (
        "1 * 1 (x) {1 e e*}\n"
        "1 * {1 e e*} (x) 1\n"
        "-1 * {2} (x) {1}\n"
    )


def test_coproduct_structured_scalars():
    rc, out = run(["coproduct", "--input", "1 e e*", "--format", "structured"])
    assert rc == 0
    assert "-1/1 * {2} (x) {1}" in out


def test_coproduct_ordered():
    rc, out = run(["coproduct", "--input", "1 e e*", "--ordered"])
    assert rc == 0
    assert "-1 * (2) (x) (1)" in out


def test_antipode_output():
    rc, out = run(["antipode", "--input", "1 e e*"])
    assert rc == 0
    assert out == "-1 * {1 e e*}\n-1 * {1}{2}\n"


def test_cobracket_or_zero_on_loop(tmp_path):
    qfile = tmp_path / "loop.json"
    qfile.write_text(
        json.dumps(
            {"vertices": ["v"], "edges": [{"id": "a", "source": "v", "target": "v"}]}
        )
    )
    rc, out = run(["cobracket", "--kind", "or", "--quiver", str(qfile), "--input", "[a a*]"])
    assert rc == 0
    assert out == "0\n"


def test_cobracket_p_rt():
    rc, out = run(["cobracket", "--kind", "p-rt", "--input", "1 e e*"])
    assert rc == 0
    assert out == "-1 * 2 (x) 1\n"


def test_chords_listing():
    rc, out = run(["chords", "--path", "1 e e* e e*", "--with-signs"])
    assert rc == 0
    lines = out.strip().split("\n")
    assert len(lines) == 7
    assert lines[0].startswith("()  eps=1  ord=0")
    rc, out = run(["chords", "--path", "1 e e* e e*", "--simple"])
    assert len(out.strip().split("\n")) == 6


def test_dualtree_output():
    rc, out = run(["dualtree", "--path", "1 e e* e e*", "--cut", "(1,4),(2,3)"])
    assert rc == 0
    assert out.startswith("eps=-1\n")
    tree = json.loads(out.split("\n")[1])
    assert tree["label"] == "1"
    assert tree["children"][0]["orient"] == "out"
    assert tree["children"][0]["node"]["children"][0]["orient"] == "in"


def test_eta_output():
    rc, out = run(["eta", "--input", "1 e e*"])
    assert rc == 0
    lines = out.strip().split("\n")
    assert len(lines) == 2
    assert any(line.startswith("-1 * ") for line in lines)
    rc2, out2 = run(["eta", "--input", "[e e*]"])
    assert rc2 == 0
    assert all(line.startswith("1 * ") for line in out2.strip().split("\n"))
    rc3, out3 = run(["eta", "--input", "[e e*]", "--sign-convention", "signed"])
    assert any(line.startswith("-1 * ") for line in out3.strip().split("\n"))


def test_bridge_compare():
    rc, out = run(["bridge", "--instance", "paths", "--max-degree", "8", "--compare"])
    assert rc == 0
    assert "layer 2: 16 terms" in out
    assert "integral coefficients: yes" in out
    assert "PASS layered vs direct coproduct (14 elements)" in out


def test_verify_laws_pass():
    for law in ("prelie", "lie"):
        rc, out = run(["verify", "--law", law, "--max-len", "4"])
        assert rc == 0, out
        assert "FAIL" not in out


def test_verify_theorems_pass():
    for theorem in ("1", "2", "coassoc", "antipode", "injective"):
        rc, out = run(["verify", "--theorem", theorem, "--max-len", "4"])
        assert rc == 0, (theorem, out)
        for line in out.split("\n"):
            if line and not line.startswith("note:"):
                assert line.startswith("PASS"), line


def test_verify_signed_convention_fails_with_witness():
    rc, out = run(
        ["verify", "--theorem", "2", "--max-len", "4", "--sign-convention", "signed"]
    )
    assert rc == 1
    assert "FAIL D_or Lie morphism (signed): witness" in out
    # And the note records that the unsigned convention does pass.
    assert "note: PASS D_or Lie morphism (unsigned)" in out


def test_parse_error_exit_code(capsys):
    rc = main(["coproduct", "--input", "1 e e"])
    assert rc == 2
    assert "token 3" in capsys.readouterr().err


def test_unknown_quiver_file(capsys):
    rc = main(["coproduct", "--input", "1 e", "--quiver", "/nonexistent.json"])
    assert rc == 2


def test_deterministic_output():
    argvs = [
        ["coproduct", "--input", "1 e e* e e*", "--format", "structured"],
        ["chords", "--path", "1 e e* e e*", "--with-signs"],
        ["eta", "--input", "[e e*]"],
        ["verify", "--theorem", "2", "--max-len", "3"],
        ["bridge", "--instance", "trees", "--max-degree", "5", "--compare"],
    ]
    for argv in argvs:
        rc1, out1 = run(argv)
        rc2, out2 = run(argv)
        assert (rc1, out1) == (rc2, out2)
        assert out1.encode() == out2.encode()


def test_trivial_path_input():
    rc, out = run(["coproduct", "--input", "1"])
    assert rc == 0
    assert out == "1 * 1 (x) {1}\n1 * {1} (x) 1\n"
    rc, out = run(["antipode", "--input", "2"])
    assert rc == 0
    assert out == "-1 * {2}\n"
