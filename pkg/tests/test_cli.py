import json
import subprocess
import sys

import pytest

from wiener_degen.canonical import canonical_form
from wiener_degen.cli import main
from wiener_degen.constructions import power_of_path
from wiener_degen.formats import from_graph6, read_edge_list


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, text, name="g.txt"):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_wiener_path(tmp_path, capsys):
    code, out, _ = run(capsys, "wiener", write(tmp_path, "4 3\n0 1\n1 2\n2 3\n"))
    assert code == 0
    assert "W=10" in out and "diameter=3" in out


def test_wiener_json(tmp_path, capsys):
    code, out, _ = run(capsys, "wiener", "--json", "--format", "g6", write(tmp_path, "C~\n"))
    d = json.loads(out)
    assert code == 0 and d["schema"] == 1
    assert d["wiener"] == 6 and d["distance_distribution"] == [6]


def test_wiener_single_vertex(tmp_path, capsys):
    code, out, _ = run(capsys, "wiener", write(tmp_path, "1 0\n"))
    assert code == 0 and "W=0" in out


def test_wiener_disconnected_exits_3(tmp_path, capsys):
    code, _, err = run(capsys, "wiener", write(tmp_path, "4 2\n0 1\n2 3\n"))
    assert code == 3 and "disconnected" in err


def test_wiener_parse_error_exits_2(tmp_path, capsys):
    code, _, err = run(capsys, "wiener", write(tmp_path, "3 2\n0 1\n"))
    assert code == 2 and "parse error" in err


def test_wiener_missing_file_exits_2(tmp_path, capsys):
    assert run(capsys, "wiener", str(tmp_path / "nope"))[0] == 2


def test_generate_path_power(capsys):
    code, out, _ = run(capsys, "generate", "pnk", "--n", "7", "--k", "3")
    assert code == 0
    assert read_edge_list(out) == power_of_path(7, 3)


def test_generate_named_graphs(capsys):
    _, out, _ = run(capsys, "generate", "tr2")
    g = read_edge_list(out)
    assert (g.n, g.size) == (6, 9)
    _, out, _ = run(capsys, "generate", "order7-k4-regions", "-o", "g6")
    g = from_graph6(out)
    assert (g.n, g.size) == (7, 15)


def test_generate_tree_join(tmp_path, capsys):
    tree = write(tmp_path, "4 3\n0 1\n1 2\n2 3\n")
    _, out, _ = run(capsys, "generate", "tree-join", "--tree", tree)
    assert canonical_form(read_edge_list(out)) == canonical_form(power_of_path(5, 2))


def test_generate_from_trace(tmp_path, capsys):
    trace = write(tmp_path, json.dumps({"k": 2, "steps": [[0, 1], [1, 2], [2, 3]]}), "t.json")
    _, out, _ = run(capsys, "generate", "trace", "--trace", trace)
    assert read_edge_list(out) == power_of_path(5, 2)


def test_generate_errors(capsys):
    assert run(capsys, "generate", "heawood")[0] == 2
    assert run(capsys, "generate", "fan")[0] == 2
    assert run(capsys, "generate", "trace")[0] == 2


def test_bounds_json(capsys):
    code, out, _ = run(capsys, "bounds", "--n", "10", "--k", "2", "--json")
    d = json.loads(out)
    assert code == 0 and d["schema"] == 1
    assert d["upper_sum"] == d["upper_closed"] == 95 and d["D"] == 4


def test_bounds_domain_error(capsys):
    assert run(capsys, "bounds", "--n", "2", "--k", "3")[0] == 3


def test_sequence(capsys):
    _, out, _ = run(capsys, "sequence", "--k", "3", "--m", "10")
    assert out.strip() == "0, 1, 3, 6, 11, 18, 27, 39, 54, 72"
    _, out, _ = run(capsys, "sequence", "--k", "1", "--m", "4", "--json")
    assert json.loads(out) == {"schema": 1, "k": 1, "m": 4, "sequence": [0, 1, 4, 10]}


def test_enumerate_json_and_dumps(tmp_path, capsys):
    maxi, mini = tmp_path / "max.g6", tmp_path / "min.g6"
    code, out, _ = run(capsys, "enumerate", "--n", "8", "--k", "2", "--json",
                       "--dump-maximizers", str(maxi), "--dump-minimizers", str(mini))
    d = json.loads(out)
    assert code == 0 and d["count"] == 39 and d["wiener_max"] == d["upper_bound"]
    assert all(d["checks"].values())
    assert maxi.read_text().split() == [canonical_form(power_of_path(8, 2)).code]
    assert len(mini.read_text().split()) == len(d["minimizers"])


def test_enumerate_text_and_classes(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "5", "--k", "2", "--class", "mkd")
    assert code == 0 and "count=3" in out and "class=maximalKDegenerate" in out


def test_enumerate_budget_exits_3(capsys):
    assert run(capsys, "enumerate", "--n", "9", "--k", "2", "--ceiling", "8")[0] == 3


def test_verify_formulas(capsys):
    code, out, _ = run(capsys, "verify", "formulas", "--json")
    d = json.loads(out)
    assert code == 0 and d["schema"] == 1 and d["suite"] == "formulas"
    assert {c["status"] for c in d["claims"]} == {"verified"}


def test_verify_thm5_k2(capsys):
    code, out, _ = run(capsys, "verify", "thm5", "--k", "2", "--max-n", "9")
    assert code == 0 and "0 refuted" in out


def test_verify_cor2_k3(capsys):
    code, out, _ = run(capsys, "verify", "cor2", "--k", "3")
    assert code == 0 and "cor2.k3.n7" in out


def test_verify_skipped_claims_and_strict(capsys):
    code, out, _ = run(capsys, "verify", "thm5", "--k", "2", "--max-n", "9", "--ceiling", "8")
    assert code == 0 and "skipped" in out
    code, _, _ = run(capsys, "verify", "thm5", "--k", "2", "--max-n", "9", "--ceiling", "8", "--strict")
    assert code == 1


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bounds", "--n", "x", "--k", "2"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "wiener_degen", "bounds", "--n", "7", "--k", "3"],
                          capture_output=True, text=True, check=True)
    assert "upper_sum=27" in proc.stdout
