import json

import dominocells.cycles as cycles_mod
from dominocells.cli import main
from dominocells.verify import (
    verify_class_decomposition, verify_conjecture, verify_insertion,
    verify_intermediate_structure, verify_tau,
)


def test_verify_insertion_passes_small():
    report = verify_insertion(2, 2)
    assert report.status == "pass"
    assert report.counts["elements"] == 8
    data = report.to_dict()
    assert set(data) >= {"check", "params", "status", "counts", "counterexamples", "ms"}


def test_verify_insertion_reports_an_injected_fault(monkeypatch):
    healthy = cycles_mod.moved_domino

    def corrupted(t, k, convention):
        cells = healthy(t, k, convention)
        if k == 2 and convention == cycles_mod.REGULAR:
            fix = cycles_mod.fixed_square(t, k, convention)
            (var,) = cells - {fix}
            i, j = fix
            for alt in ((i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1)):
                if alt != var and alt[0] >= 1 and alt[1] >= 1:
                    return frozenset({fix, alt})
        return cells

    monkeypatch.setattr(cycles_mod, "moved_domino", corrupted)
    report = verify_insertion(2, 1)
    assert report.status == "fail"
    assert report.counterexamples
    assert any(c.get("kind") == "rank-raise" for c in report.counterexamples)


def test_verify_tau_small():
    assert verify_tau(2).status == "pass"


def test_verify_classes_small():
    report = verify_class_decomposition(3, 1)
    assert report.status == "pass"
    assert report.counts["tableaux"] == 20


def test_verify_conjecture_small():
    report = verify_conjecture(2, "all")
    assert report.status == "pass"
    assert report.counts["blocks_r1_L"] == 4


def test_verify_conjecture_cache_warm_rerun_is_identical(tmp_path):
    cold = verify_conjecture(3, 2, cache_dir=str(tmp_path)).to_dict()
    warm = verify_conjecture(3, 2, cache_dir=str(tmp_path)).to_dict()
    cold.pop("ms"), warm.pop("ms")
    assert cold == warm


def test_verify_intermediate_small():
    report = verify_intermediate_structure(3)
    assert report.status == "pass"
    assert (
        report.counts["kl_blocks"]
        == report.counts["split_asymptotic_cells"]
        + report.counts["nonsplit_tau_classes"]
    )


def test_cli_verify_exit_codes_and_json(tmp_path, capsys):
    out = tmp_path / "report.json"
    code = main(["verify", "conjecture", "--n", "2", "--ratio", "all",
                 "--json", str(out)])
    assert code == 0
    printed = capsys.readouterr().out
    assert "[PASS] conjecture" in printed
    data = json.loads(out.read_text())
    assert data["status"] == "pass"


def test_cli_insert_json_and_steps(tmp_path, capsys):
    out = tmp_path / "pair.json"
    code = main(["insert", "--perm", "[4,1,-3,-2]", "--rank", "2",
                 "--json", str(out)])
    assert code == 0
    data = json.loads(out.read_text())
    assert data["right"] == [[0, 0, 1, 1], [0, 2, 2], [3, 4, 4], [3]]
    code = main(["insert", "--perm", "4 1 -3 -2", "--rank", "2", "--steps"])
    assert code == 0
    printed = capsys.readouterr().out
    assert "step 4" in printed


def test_cli_insert_rejects_bad_input(capsys):
    assert main(["insert", "--perm", "1 1", "--rank", "0"]) == 2
    assert main(["insert", "--perm", "1 2", "--n", "3", "--rank", "0"]) == 2
    capsys.readouterr()


def test_cli_cells_kind_kl(capsys):
    code = main(["cells", "--n", "2", "--rank", "1", "--side", "L",
                 "--kind", "kl", "--ratio", "2"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert len(data["blocks"]) == 6


def test_cli_cache_dir(tmp_path, capsys):
    code = main(["verify", "conjecture", "--n", "2", "--ratio", "1",
                 "--cache", str(tmp_path)])
    assert code == 0
    capsys.readouterr()
    assert list(tmp_path.glob("kl_v1_*.jsonl"))
    code = main(["verify", "conjecture", "--n", "2", "--ratio", "1",
                 "--cache", str(tmp_path)])
    assert code == 0
