import json

import numpy as np
import pytest
from click.testing import CliRunner

from hyperinv import DensityState, PureState, ValidationError, random_density
from hyperinv.cli import main
from hyperinv.statefile import (
    fingerprint_to_csv,
    fingerprint_to_dict,
    load_state,
    save_state,
    state_from_dict,
    state_to_dict,
)
from hyperinv.invariants import fingerprint_state

from conftest import STATES_DIR


@pytest.fixture
def runner():
    return CliRunner()


def bell_path():
    return str(STATES_DIR / "bell.json")


def ghz_path():
    return str(STATES_DIR / "ghz3.json")


def w_path():
    return str(STATES_DIR / "w3.json")


class TestStateFiles:
    def test_round_trip_density(self, tmp_path):
        rho = random_density((2, 3), 2, seed=0)
        p = tmp_path / "rho.json"
        save_state(rho, p)
        back = load_state(p)
        assert isinstance(back, DensityState)
        np.testing.assert_allclose(back.matrix, rho.matrix, atol=1e-15)

    def test_round_trip_pure(self, tmp_path):
        phi = PureState((2, 2), np.eye(2) / np.sqrt(2))
        p = tmp_path / "phi.json"
        save_state(phi, p)
        back = load_state(p)
        assert isinstance(back, PureState)
        np.testing.assert_allclose(back.amplitudes.data, phi.amplitudes.data)

    def test_complex_entries_are_pairs(self):
        doc = state_to_dict(random_density((2,), 1, seed=1))
        entry = doc["matrix"][0][1]
        assert isinstance(entry, list) and len(entry) == 2

    def test_non_hermitian_file_rejected(self):
        doc = {
            "kind": "density",
            "dims": [2],
            "matrix": [[[1, 0], [1, 0]], [[0, 0], [0, 0]]],
        }
        with pytest.raises(ValidationError):
            state_from_dict(doc)

    def test_small_hermiticity_residue_symmetrized(self):
        eps = 1e-10
        doc = {
            "kind": "density",
            "dims": [2],
            "matrix": [[[0.5, 0], [eps, 0]], [[0, 0], [0.5, 0]]],
        }
        state = state_from_dict(doc)
        np.testing.assert_allclose(state.matrix, state.matrix.conj().T, atol=0)

    @pytest.mark.parametrize(
        "doc",
        [
            [1, 2],
            {"kind": "density", "dims": "2"},
            {"kind": "density", "dims": [2], "matrix": [[1, 2]]},
            {"kind": "pure", "dims": [2], "amplitudes": [[1, 0]]},
            {"kind": "thermal", "dims": [2]},
        ],
    )
    def test_malformed_documents_rejected(self, doc):
        with pytest.raises(ValidationError):
            state_from_dict(doc)

    def test_missing_file(self, tmp_path):
        with pytest.raises(ValidationError):
            load_state(tmp_path / "nope.json")

    def test_fingerprint_dict_and_csv(self):
        fp = fingerprint_state(load_state(ghz_path()))
        doc = fingerprint_to_dict(fp)
        assert doc["kind"] == "pure"
        assert {e["name"] for e in doc["entries"]} == {"det222@v1", "tangle3@v1"}
        csv = fingerprint_to_csv(fp)
        assert csv.splitlines()[0] == "name,real,imag,constant,guaranteed"
        assert len(csv.splitlines()) == 3


class TestCorpusGoldens:
    @pytest.mark.parametrize("name", ["bell", "ghz3", "w3", "mixed4q_rank2"])
    def test_blessed_fingerprints_still_reproduce(self, name):
        fp = fingerprint_state(load_state(STATES_DIR / f"{name}.json"))
        golden = json.loads((STATES_DIR / f"{name}.fingerprint.json").read_text())
        assert [e["name"] for e in golden["entries"]] == fp.names()
        for e in golden["entries"]:
            ref = complex(e["value"][0], e["value"][1])
            now = fp.value(e["name"])
            assert abs(now - ref) <= 1e-10 * max(1.0, abs(ref))


class TestCli:
    def test_repr_bell(self, runner):
        result = runner.invoke(main, ["repr", bell_path()])
        assert result.exit_code == 0
        assert "format: 4x4" in result.output
        line = next(l for l in result.output.splitlines() if l.startswith("a[2,2]"))
        assert float(line.split("=")[1].split()[0]) == pytest.approx(-0.25)

    def test_fingerprint_json(self, runner):
        result = runner.invoke(main, ["fingerprint", ghz_path()])
        assert result.exit_code == 0
        doc = json.loads(result.output)
        det = next(e for e in doc["entries"] if e["name"] == "det222@v1")
        assert det["value"][0] == pytest.approx(0.25)

    def test_fingerprint_csv(self, runner):
        result = runner.invoke(main, ["fingerprint", bell_path(), "--out", "csv"])
        assert result.exit_code == 0
        assert result.output.startswith("name,real,imag")

    def test_fingerprint_guaranteed_only(self, runner):
        result = runner.invoke(main, ["fingerprint", bell_path(), "--guaranteed-only"])
        names = [e["name"] for e in json.loads(result.output)["entries"]]
        assert names == ["charpoly.F4@v1", "alias.det@v1"]

    def test_fingerprint_bless_writes_sibling(self, runner, tmp_path):
        src = tmp_path / "s.json"
        save_state(random_density((2, 2), 1, seed=2), src)
        result = runner.invoke(main, ["fingerprint", str(src), "--bless"])
        assert result.exit_code == 0
        assert (tmp_path / "s.fingerprint.json").exists()

    def test_det222_values(self, runner):
        out_ghz = runner.invoke(main, ["det222", ghz_path()])
        out_w = runner.invoke(main, ["det222", w_path()])
        assert float(out_ghz.output.split()[0]) == pytest.approx(0.25)
        assert float(out_w.output.split()[0]) == pytest.approx(0.0, abs=1e-14)

    def test_det222_rejects_density(self, runner):
        result = runner.invoke(main, ["det222", bell_path()])
        assert result.exit_code == 2

    def test_hdet_on_mixed_four_qubits(self, runner):
        result = runner.invoke(
            main, ["hdet", str(STATES_DIR / "mixed4q_rank2.json")]
        )
        assert result.exit_code == 0
        float(result.output.split()[0])  # parses as a number

    def test_charpoly_bipartite(self, runner):
        result = runner.invoke(main, ["charpoly", bell_path()])
        assert result.exit_code == 0
        lines = result.output.strip().splitlines()
        assert lines[0].startswith("c0 = ") and lines[-1].startswith("c4 = ")
        assert float(lines[0].split("=")[1].split()[0]) == pytest.approx(-1 / 256)

    def test_charpoly_rejects_three_parties(self, runner, tmp_path):
        src = tmp_path / "odd.json"
        save_state(random_density((2, 2, 2), 1, seed=3), src)
        result = runner.invoke(main, ["charpoly", str(src)])
        assert result.exit_code == 2

    def test_compare_ghz_w(self, runner):
        result = runner.invoke(main, ["compare", ghz_path(), w_path()])
        assert result.exit_code == 0
        assert result.output.startswith("NECESSARILY_INEQUIVALENT")
        assert "det222@v1" in result.output

    def test_compare_state_with_itself(self, runner):
        result = runner.invoke(main, ["compare", bell_path(), bell_path()])
        assert result.output.startswith("CONSISTENT")

    def test_audit_requires_seed(self, runner):
        result = runner.invoke(main, ["audit", bell_path(), "--trials", "2"])
        assert result.exit_code != 0

    def test_audit_table(self, runner):
        result = runner.invoke(
            main,
            ["audit", bell_path(), "--group", "lu", "--trials", "3", "--seed", "0"],
        )
        assert result.exit_code == 0
        assert "alias.det@v1" in result.output
        assert "INVARIANT" in result.output

    def test_audit_claims_sections(self, runner):
        result = runner.invoke(
            main, ["audit", "--claims", "paper", "--trials", "3", "--seed", "1"]
        )
        assert result.exit_code == 0
        assert result.output.count("== ") == 4

    def test_audit_without_state_or_claims(self, runner):
        result = runner.invoke(main, ["audit", "--seed", "0"])
        assert result.exit_code == 2

    def test_sample_round_trip(self, runner, tmp_path):
        out = tmp_path / "sampled.json"
        result = runner.invoke(
            main,
            [
                "sample",
                "--kind",
                "density",
                "--dims",
                "2,2",
                "--rank",
                "2",
                "--seed",
                "5",
                "--out",
                str(out),
            ],
        )
        assert result.exit_code == 0
        assert isinstance(load_state(out), DensityState)

    def test_sample_operator(self, runner, tmp_path):
        out = tmp_path / "u.json"
        result = runner.invoke(
            main,
            ["sample", "--kind", "unitary", "--dims", "3", "--seed", "6", "--out", str(out)],
        )
        assert result.exit_code == 0
        doc = json.loads(out.read_text())
        assert doc["kind"] == "unitary" and doc["dim"] == 3

    def test_sample_bad_dims(self, runner, tmp_path):
        result = runner.invoke(
            main,
            ["sample", "--kind", "pure", "--dims", "2,x", "--seed", "0", "--out", str(tmp_path / "o.json")],
        )
        assert result.exit_code == 2

    def test_budget_exit_code(self, runner, tmp_path, monkeypatch):
        monkeypatch.setenv("HYPERINV_BUDGET", "1")
        src = tmp_path / "big.json"
        save_state(random_density((2, 2, 2, 2), 1, seed=7), src)
        result = runner.invoke(main, ["hdet", str(src)])
        assert result.exit_code == 3

    def test_seventeen_significant_digits(self):
        from hyperinv.cli import fmt, fmt_complex

        assert fmt(1 / 3) == "0.33333333333333331"
        assert fmt_complex(1 / 3 - 1j / 7) == (
            "0.33333333333333331 - 0.14285714285714285j"
        )
