import json
import subprocess
import sys

import pytest

from finhoop import direct_product, full_decomposition, ordinal_sum
from finhoop import io
from finhoop.cli import main

from corpus import G3, L2, L3, TRIVIAL, census


@pytest.fixture
def files(tmp_path):
    for name, h in {"g3": G3, "l2": L2, "l3": L3, "trivial": TRIVIAL,
                    "l2xl2": direct_product(L2, L2).algebra}.items():
        io.write_hoop(h, tmp_path / f"{name}.hoop")
    return tmp_path


def run(*args):
    return main([str(a) for a in args])


def test_round_trip_is_byte_identical(tmp_path):
    for n in range(1, 5):
        for h in census(n):
            text = io.dumps(io.hoop_to_doc(h))
            back = io.hoop_from_doc(json.loads(text))
            assert back == h and io.dumps(io.hoop_to_doc(back)) == text
    text = io.dumps(io.hoop_to_doc(G3))
    assert io.dumps(io.hoop_to_doc(io.hoop_from_doc(json.loads(text)))) == text
    assert '    [0, 1, 1],\n' in text and text.index('"imp"') < text.index('"mul"')


def test_parse_errors(tmp_path):
    bad = tmp_path / "bad.hoop"
    bad.write_text("{not json")
    with pytest.raises(io.FormatError):
        io.read_hoop(bad)
    bad.write_text(json.dumps({"size": 2, "unit": 1, "mul": [[0, 0], [0, 1]]}))
    with pytest.raises(io.FormatError):
        io.read_hoop(bad)
    bad.write_text(json.dumps({"size": 2, "unit": 1, "mul": [[0, 0], [0, 1]], "imp": [[1, 1], [0, 7]]}))
    with pytest.raises(io.FormatError):
        io.read_hoop(bad)
    assert run("validate", bad) == 1
    assert run("validate", tmp_path / "missing.hoop") == 1


def test_validate_exit_codes(files, capsys):
    assert run("validate", files / "trivial.hoop") == 0
    assert run("validate", files / "g3.hoop") == 0
    broken = files / "broken.hoop"
    broken.write_text(io.dumps({"size": 2, "unit": 1, "mul": [[0, 0], [0, 1]], "imp": [[1, 1], [1, 1]]}))
    assert run("validate", broken) == 2
    assert "order-is-antisymmetric" in capsys.readouterr().out
    assert run("info", broken) == 2


def test_info_iso_product_quotient(files, tmp_path, capsys):
    assert run("info", files / "g3.hoop") == 0
    info = json.loads(capsys.readouterr().out)
    assert info["idempotent_chain_length"] == 3 and info["filters"] == 3 and info["mv_chain"] is None
    assert run("iso", files / "g3.hoop", files / "l3.hoop") == 3
    assert capsys.readouterr().out.strip() == "none"
    assert run("iso", files / "l3.hoop", files / "l3.hoop") == 0
    assert json.loads(capsys.readouterr().out) == [0, 1, 2]

    out = tmp_path / "osum.hoop"
    assert run("product", "--kind", "osum", files / "l2.hoop", files / "l2.hoop", "-o", out) == 0
    assert io.read_hoop(out) == G3
    assert run("product", "--kind", "fprod", files / "l2.hoop", files / "l2.hoop") == 1
    capsys.readouterr()
    m = tmp_path / "sigma.json"
    m.write_text(io.dumps(io.morphism_to_doc("l2.hoop", "l2.hoop", [0, 1])))
    (tmp_path / "l2.hoop").write_text((files / "l2.hoop").read_text())
    assert run("product", "--kind", "fprod", "--morphism", m, files / "l2.hoop", files / "l2.hoop") == 0
    assert json.loads(capsys.readouterr().out)["size"] == 3
    bad = tmp_path / "bad.json"
    bad.write_text(io.dumps(io.morphism_to_doc(L3, L3, [0, 1, 2])))
    assert run("product", "--kind", "fprod", "--morphism", bad, files / "l3.hoop", files / "l3.hoop") == 2
    assert run("product", "--kind", "direct", files / "l2.hoop", files / "l2.hoop") == 0
    assert json.loads(capsys.readouterr().out)["size"] == 4

    assert run("quotient", files / "g3.hoop", "--filter", "1,2") == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["projection"] == [0, 1, 1] and doc["quotient"]["size"] == 2
    assert run("quotient", files / "l3.hoop", "--filter", "1,2") == 2
    assert run("quotient", files / "l3.hoop", "--filter", "x") == 1


def test_decompose_and_verify(files, tmp_path, capsys):
    cert = tmp_path / "g3.cert"
    assert run("decompose", files / "g3.hoop", "-o", cert) == 0
    doc = io.read_certificate(cert)
    assert doc["leaves"] == [2, 2]
    assert doc["tree"]["morphism"] == [0, 1]          # σ on Ł₂
    assert run("verify-cert", files / "g3.hoop", cert) == 0
    assert run("decompose", files / "trivial.hoop") == 1
    # tampering is caught
    bad = dict(doc, iso_to_input=[1, 0, 2])
    (tmp_path / "bad.cert").write_text(io.dumps(bad))
    assert run("verify-cert", files / "g3.hoop", tmp_path / "bad.cert") == 3
    bad = json.loads(json.dumps(doc))
    bad["tree"]["morphism"] = [1, 1]
    (tmp_path / "bad2.cert").write_text(io.dumps(bad))
    assert run("verify-cert", files / "g3.hoop", tmp_path / "bad2.cert") == 3
    assert run("verify-cert", files / "l3.hoop", cert) == 3


def test_verify_certificate_is_independent_of_labels():
    h = direct_product(L3, ordinal_sum(L2, L3)).algebra
    c = full_decomposition(h, association="left", strategy="largest-proper")
    doc = io.certificate_to_doc(c, h)
    assert io.verify_certificate(h.with_labels(None), doc).valid


def test_assoc_command(files, tmp_path, capsys):
    (tmp_path / "f.json").write_text(io.dumps(io.morphism_to_doc(L2, L2, [0, 1])))
    ab = ordinal_sum(L2, L2)
    (tmp_path / "g.json").write_text(io.dumps(io.morphism_to_doc(L2, ab, [0, 2])))
    args = ["assoc", files / "l2.hoop", files / "l2.hoop", files / "l2.hoop",
            "--f", tmp_path / "f.json", "--g", tmp_path / "g.json"]
    assert run(*args) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["round_trip"] is True and len(doc["gamma"]) == 4
    (tmp_path / "g2.json").write_text(io.dumps(io.morphism_to_doc(L2, L2, [0, 1])))
    (tmp_path / "f2.json").write_text(io.dumps(io.morphism_to_doc(G3, L2, [1, 1, 1])))
    assert run("assoc", files / "l2.hoop", files / "l2.hoop", files / "l2.hoop",
               "--f", tmp_path / "f2.json", "--g", tmp_path / "g2.json", "--chirality", "right") == 0


def test_enumerate_command(tmp_path, capsys):
    assert run("enumerate", 3, "--out", tmp_path / "c3") == 0
    files = sorted((tmp_path / "c3").iterdir())
    assert len(files) == 2
    assert [io.read_hoop(f) for f in files] == list(census(3))
    capsys.readouterr()
    assert run("enumerate", 4) == 0
    assert json.loads(capsys.readouterr().out)["count"] == 5
    assert run("enumerate", 9) == 1


def test_census_morphisms_bullet_exact_lemmas_dot(files, tmp_path, capsys):
    assert run("census-morphisms", files / "g3.hoop", files / "l2.hoop") == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["morphisms"]) == 3 and sorted(d["idempotent"] for d in doc["nu"]) == [0, 1, 2]
    assert run("census-morphisms", files / "l2.hoop", files / "g3.hoop") == 0
    assert len(json.loads(capsys.readouterr().out)["mu"]) == 3

    (tmp_path / "p.json").write_text(io.dumps(io.morphism_to_doc(G3, L2, [0, 1, 1], "homomorphism")))
    assert run("bullet", files / "g3.hoop", files / "l2.hoop", "--hom", tmp_path / "p.json") == 0
    assert json.loads(capsys.readouterr().out)["size"] == 2
    (tmp_path / "q.json").write_text(io.dumps(io.morphism_to_doc(L2, L3, [0, 2], "homomorphism")))
    assert run("bullet", files / "l2.hoop", files / "l3.hoop", "--hom", tmp_path / "q.json") == 2

    manifest = tmp_path / "seq.json"
    manifest.write_text(io.dumps({"hoops": ["l2.hoop", "g3.hoop", "l2.hoop"], "maps": [[1, 2], [0, 1, 1]]}))
    for f in ("l2.hoop", "g3.hoop"):
        (tmp_path / f).write_text((files / f).read_text())
    assert run("exact", manifest) == 0
    manifest.write_text(io.dumps({"hoops": ["g3.hoop", "g3.hoop", "g3.hoop"], "maps": [[0, 1, 2], [0, 1, 2]]}))
    assert run("exact", manifest) == 3
    manifest.write_text(io.dumps({"hoops": ["g3.hoop"], "maps": [[0, 1, 2]]}))
    assert run("exact", manifest) == 1

    capsys.readouterr()
    assert run("lemmas", files / "g3.hoop") == 0
    assert capsys.readouterr().out.count("ok") == 4
    assert run("export-dot", files / "g3.hoop") == 0
    dot = capsys.readouterr().out
    assert dot.count("doublecircle") == 3 and "0 -> 1;" in dot and "1 -> 2;" in dot
    assert run("export-dot", files / "l3.hoop") == 0
    assert capsys.readouterr().out.count("doublecircle") == 2


def test_usage_errors_exit_1(capsys):
    assert run("bogus") == 1
    assert run() == 1
    assert run("--seedless", "enumerate", 2) == 0


def test_console_entry_point(files):
    r = subprocess.run([sys.executable, "-m", "finhoop", "validate", str(files / "g3.hoop")],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip() == "ok"
