import json

from domcx.cli import main
from domcx.domains import domain_from_json, domains_disjoint
from domcx.surface import build_surface


def test_surface_info(capsys):
    assert main(["surface", "info", "--genus", "1", "--boundary", "3"]) == 0
    assert "S_{1,3}" in capsys.readouterr().out


def test_surface_rejected(capsys):
    assert main(["surface", "info", "--genus", "0", "--boundary", "2"]) == 2


def test_classes_enumerate(tmp_path):
    out = tmp_path / "arcs.json"
    assert main(["classes", "enumerate", "-g", "0", "-b", "5", "--kind", "arc",
                 "--norm", "6", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["count"] == 168


def test_domains_and_disjoint(tmp_path, capsys):
    out = tmp_path / "doms.json"
    assert main(["domains", "enumerate", "-g", "0", "-b", "5", "--norm", "8",
                 "--out", str(out)]) == 0
    doms = json.loads(out.read_text())["domains"]
    assert len(doms) == 70
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    a.write_text(json.dumps(doms[0]))
    b.write_text(json.dumps(doms[1]))
    assert main(["domains", "disjoint", "-g", "0", "-b", "5", str(a), str(b)]) == 0
    s = build_surface(0, 5)
    expect = domains_disjoint(domain_from_json(s, doms[0]), domain_from_json(s, doms[1]))
    assert json.loads(capsys.readouterr().out.strip())["disjoint"] is expect
    assert main(["domains", "disjoint", "-g", "0", "-b", "5", str(a), str(a)]) == 2


def test_ball_build_and_distance(tmp_path, capsys):
    ball = tmp_path / "c.json"
    assert main(["ball", "build", "-g", "0", "-b", "5", "--kind", "C", "--norm", "12",
                 "--out", str(ball), "--dot", str(tmp_path / "c.dot")]) == 0
    assert "29 vertices, 57 edges" in capsys.readouterr().out
    verts = json.loads(ball.read_text())["vertices"]
    u, v = tmp_path / "u.json", tmp_path / "v.json"
    u.write_text(json.dumps(verts[0]))
    v.write_text(json.dumps(verts[-1]))
    assert main(["ball", "distance", "--ball", str(ball), "--u", str(u), "--v", str(v)]) == 0
    res = json.loads(capsys.readouterr().out)
    assert res["distance_upper"] == len(res["witness"]["vertices"]) - 1


def test_map_wrap(capsys):
    assert main(["map", "wrap", "--genus", "1", "--boundary", "3"]) == 0
    res = json.loads(capsys.readouterr().out)
    assert res["B"]["topo_type"] == [0, 4] and res["C"]["topo_type"] == [1, 1]


def test_map_wrap_genus0():
    assert main(["map", "wrap", "--genus", "0", "--boundary", "5"]) == 2


def test_check_run_exit_codes(tmp_path):
    out = tmp_path / "rep.json"
    assert main(["check", "run", "--surface", "0,5", "--checks", "T2", "--norm", "8",
                 "--quiet", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["failed"] == 0
    assert main(["check", "run", "--checks", "T9", "--quiet"]) == 2
    assert main(["check", "run", "--surface", "0,2", "--quiet"]) == 2
