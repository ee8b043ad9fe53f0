import json

import pytest

from distinguon.cli import MANIFEST_SUFFIX, dispatch
from distinguon.data import dump_json, load_json, read_distribution, read_matrix, read_samples
from distinguon.interferometer import unitarity_residual


def _manifest(path):
	return path.with_name(path.name + MANIFEST_SUFFIX)


def test_verify_rep_theory_prints_pass_table(capsys):
	assert dispatch(["verify", "--suite", "rep-theory"]) == 0
	out = capsys.readouterr().out
	assert "PASS" in out
	assert "FAIL" not in out
	assert "checks passed" in out


def test_hong_ou_mandel_distribution(tmp_path, data_dir):
	out = tmp_path / "dist.json"
	code = dispatch(["distribution", "--model", "ideal", "--input", "1,1", "--unitary", str(data_dir / "beamsplitter.json"), "--out", str(out)])
	assert code == 0
	dist = read_distribution(out)
	assert dist[(1, 1)] == pytest.approx(0.0, abs=1e-12)
	manifest = load_json(_manifest(out))
	assert manifest["command"] == "distribution"
	assert str(data_dir / "beamsplitter.json") in manifest["inputs"]
	assert manifest["parameters"]["model"] == "ideal"


def test_partial_from_smatrix_csv(tmp_path, data_dir):
	out = tmp_path / "dist.csv"
	argv = [
		"distribution", "--model", "partial", "--input", "1,1",
		"--unitary", str(data_dir / "beamsplitter.json"),
		"--smatrix", str(data_dir / "smatrix_example.json"),
		"--out", str(out), "--format", "csv",
	]
	assert dispatch(argv) == 0
	rows = dict(line.split(",") for line in out.read_text().splitlines()[1:])
	assert float(rows["1 1"]) == pytest.approx(0.32, abs=1e-10)


def test_lossy_with_labels(tmp_path, data_dir):
	out = tmp_path / "lossy.json"
	argv = [
		"distribution", "--model", "lossy", "--input", "1,1", "--lost", "1",
		"--unitary", str(data_dir / "beamsplitter.json"),
		"--labels", str(data_dir / "labels_example.json"),
		"--out", str(out),
	]
	assert dispatch(argv) == 0
	dist = read_distribution(out)
	assert dist.n == 1
	assert dist.total() == pytest.approx(1.0)


def test_losing_more_bosons_than_input_is_rejected(tmp_path, data_dir, capsys):
	assert dispatch(["distribution", "--model", "lossy", "--lost", "3", "--input", "1,1"]) == 1
	argv = [
		"distribution", "--model", "lossy", "--lost", "3", "--input", "1,1",
		"--unitary", str(data_dir / "beamsplitter.json"), "--out", str(tmp_path / "d.json"),
	]
	assert dispatch(argv) == 1
	assert "--lost 3" in capsys.readouterr().err
	assert not (tmp_path / "d.json").exists()


def test_unknown_subcommand_prints_usage(capsys):
	assert dispatch(["teleport"]) == 1
	assert "usage:" in capsys.readouterr().err


def test_unknown_flag_and_model(capsys):
	assert dispatch(["verify", "--suite", "rep-theory", "--frobnicate"]) == 1
	assert dispatch(["distribution", "--model", "nope", "--input", "1", "--unitary", "x.json", "--out", "y.json"]) == 1


def test_json_errors(tmp_path, capsys):
	code = dispatch(["distribution", "--model", "ideal", "--input", "1,1", "--unitary", str(tmp_path / "missing.json"), "--out", str(tmp_path / "d.json"), "--json-errors"])
	assert code == 1
	payload = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
	assert payload["error"] == "ValidationError"
	assert payload["exit_code"] == 1
	assert "missing.json" in payload["message"]


def test_size_cap_exit_code(tmp_path, data_dir, capsys):
	argv = ["distribution", "--model", "ideal", "--input", "25,0", "--unitary", str(data_dir / "beamsplitter.json"), "--out", str(tmp_path / "d.json"), "--json-errors"]
	assert dispatch(argv) == 2
	assert json.loads(capsys.readouterr().err.strip().splitlines()[-1])["error"] == "SizeError"


def test_size_cap_from_environment(tmp_path, data_dir, monkeypatch):
	monkeypatch.setenv("DISTINGUON_MAX_N", "1")
	argv = ["distribution", "--model", "ideal", "--input", "1,1", "--unitary", str(data_dir / "beamsplitter.json"), "--out", str(tmp_path / "d.json")]
	assert dispatch(argv) == 2
	assert dispatch(argv + ["--unsafe-size"]) == 0


def test_bad_thread_count():
	assert dispatch(["verify", "--suite", "rep-theory", "--threads", "0"]) == 1


def test_gen_unitary_decompose_and_replay(tmp_path):
	u_path = tmp_path / "u.json"
	assert dispatch(["gen-unitary", "--modes", "4", "--seed", "17", "--out", str(u_path)]) == 0
	assert unitarity_residual(read_matrix(u_path)) < 1e-12
	assert load_json(_manifest(u_path))["seeds"] == [17]

	seq_path = tmp_path / "seq.json"
	assert dispatch(["decompose", "--in", str(u_path), "--out", str(seq_path)]) == 0
	assert load_json(seq_path)["m"] == 4

	assert dispatch(["replay", "--manifest", str(_manifest(u_path))]) == 0
	assert dispatch(["replay", "--manifest", str(_manifest(seq_path))]) == 0


def test_replay_detects_changed_input(tmp_path, data_dir):
	u_path = tmp_path / "bs.json"
	dump_json(u_path, load_json(data_dir / "beamsplitter.json"))
	out = tmp_path / "d.json"
	assert dispatch(["distribution", "--model", "distinguishable", "--input", "1,1", "--unitary", str(u_path), "--out", str(out)]) == 0
	assert dispatch(["replay", "--manifest", str(_manifest(out))]) == 0
	dump_json(u_path, {"m": 2, "re": [[0.0, 1.0], [1.0, 0.0]], "im": [[0.0, 0.0], [0.0, 0.0]]})
	assert dispatch(["replay", "--manifest", str(_manifest(out))]) == 3


def test_sample_and_stats(tmp_path, data_dir, capsys):
	bs = str(data_dir / "beamsplitter.json")
	samples = tmp_path / "s.jsonl"
	dist = tmp_path / "d.json"
	assert dispatch(["sample", "--model", "distinguishable", "--unitary", bs, "--input", "1,1", "--shots", "4000", "--seed", "3", "--out", str(samples)]) == 0
	assert len(read_samples(samples)) == 4000
	assert dispatch(["replay", "--manifest", str(_manifest(samples))]) == 0
	assert dispatch(["distribution", "--model", "distinguishable", "--unitary", bs, "--input", "1,1", "--out", str(dist)]) == 0
	capsys.readouterr()
	assert dispatch(["stats", "--samples", str(samples), "--dist", str(dist)]) == 0
	report = json.loads(capsys.readouterr().out)
	assert report["samples"] == 4000
	assert report["tvd"] < 0.05
	assert 0.0 <= report["p_value"] <= 1.0


def test_direct_sampling(tmp_path, data_dir):
	bs = str(data_dir / "beamsplitter.json")
	out = tmp_path / "s.jsonl"
	argv = ["sample", "--model", "distinguishable", "--direct", "--unitary", bs, "--input", "1,1", "--shots", "100", "--seed", "1", "--out", str(out)]
	assert dispatch(argv) == 0
	argv[2] = "ideal"
	assert dispatch(argv) == 1


@pytest.mark.parametrize("n, eps", [(2, 0.5), (3, 1.0), (3, 0.0)])
def test_trace_norm_command(capsys, n, eps):
	assert dispatch(["trace-norm", "--n", str(n), "--eps", str(eps)]) == 0
	report = json.loads(capsys.readouterr().out)
	assert report["trace_norm"] == pytest.approx(report["closed_form"], abs=1e-8)
	assert report["closed_form"] == pytest.approx(1 + eps * (n - 1))


def test_trace_norm_rejects_bad_arguments():
	assert dispatch(["trace-norm", "--n", "2", "--eps", "2"]) == 1
	assert dispatch(["trace-norm", "--n", "0", "--eps", "0.5"]) == 1


def test_help_and_version_return_zero(capsys):
	from distinguon import __version__

	assert dispatch(["--version"]) == 0
	assert __version__ in capsys.readouterr().out
	assert dispatch(["--help"]) == 0
	assert "trace-norm" in capsys.readouterr().out
	assert dispatch(["sample", "--help"]) == 0
	assert "--shots" in capsys.readouterr().out
