"""
Command-line front end.

    gen-unitary   --modes m --seed s --out u.json
    decompose     --in u.json --out seq.json
    distribution  --model M --unitary u.json --input "1,1,0" [--labels l.json | --smatrix s.json] [--lost k] --out d.json [--format csv]
    sample        --model M --unitary u.json --input "1,1,0" ... --shots N --seed s --out samples.jsonl [--direct]
    stats         --samples samples.jsonl --dist d.json
    verify        --suite {rep-theory|oracle|limits|sampling|all}
    trace-norm    --n N --eps E
    replay        --manifest d.json.manifest.json

Exit codes: 0 ok, 1 invalid input or usage, 2 size cap exceeded, 3 verification failed.
Every file-producing command writes <output>.manifest.json next to its output.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import tempfile
import time
from collections.abc import Sequence
from pathlib import Path
from typing import Any, NoReturn

from . import __version__
from .config import DEFAULT_MAX_PERMANENT_N, ENV_MAX_N, Settings, configure
from .data import (
	RunManifest,
	dump_json,
	file_digest,
	load_json,
	parse_file,
	read_dist_matrix,
	read_distribution,
	read_labels,
	read_matrix,
	read_samples,
	write_distribution,
	write_matrix,
	write_samples,
	write_sequence,
)
from .density import min_eigenvalue, partial_transpose_first, trace_norm, werner_mixture
from .distributions import ModelInputs, available_models, get_model, total_variation
from .errors import DistinguonError, UsageError, ValidationError, VerificationFailure
from .interferometer import haar_random_unitary, recompose, reck_decompose
from .models import ModeWord, Occupation
from .sampler import chi_square_test, empirical_distribution, sample_model
from .verify import available_suites, run_suites


log = logging.getLogger(__name__)

MANIFEST_SUFFIX = ".manifest.json"


class _Parser(argparse.ArgumentParser):
	def error(self, message: str) -> NoReturn:
		raise UsageError(f"{message}\n{self.format_usage().rstrip()}")


def _common() -> argparse.ArgumentParser:
	common = argparse.ArgumentParser(add_help=False)
	common.add_argument("--threads", type=int, default=None, help="worker threads (default: all cores)")
	common.add_argument("--unsafe-size", action="store_true", help=f"lift the permanent size cap of {DEFAULT_MAX_PERMANENT_N}")
	common.add_argument("--json-errors", action="store_true", help="machine-readable error JSON on stderr")
	common.add_argument("--verbose", "-v", action="store_true")
	return common


def _model_inputs_args(p: argparse.ArgumentParser) -> None:
	p.add_argument("--model", required=True, choices=available_models())
	p.add_argument("--unitary", type=Path, required=True)
	p.add_argument("--input", required=True, help='input occupation, e.g. "1,1,0"')
	group = p.add_mutually_exclusive_group()
	group.add_argument("--labels", type=Path, help="per-mode Label vectors (JSON)")
	group.add_argument("--smatrix", type=Path, help="distinguishability matrix (matrix JSON)")
	p.add_argument("--lost", type=int, default=0, help="bosons lost before the interferometer")


def build_parser() -> argparse.ArgumentParser:
	common = _common()
	parser = _Parser(prog="distinguon", description="Exact bosonic sampling with partial distinguishability and loss.")
	parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
	sub = parser.add_subparsers(dest="command", metavar="COMMAND")
	sub.required = True

	p = sub.add_parser("gen-unitary", parents=[common], help="Haar-random unitary")
	p.add_argument("--modes", type=int, required=True)
	p.add_argument("--seed", type=int, required=True)
	p.add_argument("--out", type=Path, required=True)

	p = sub.add_parser("decompose", parents=[common], help="triangular decomposition of a unitary")
	p.add_argument("--in", dest="infile", type=Path, required=True)
	p.add_argument("--out", type=Path, required=True)

	p = sub.add_parser("distribution", parents=[common], help="exact output distribution")
	_model_inputs_args(p)
	p.add_argument("--out", type=Path, required=True)
	p.add_argument("--format", choices=("json", "csv"), default="json")

	p = sub.add_parser("sample", parents=[common], help="seeded samples from a model")
	_model_inputs_args(p)
	p.add_argument("--shots", type=int, required=True)
	p.add_argument("--seed", type=int, required=True)
	p.add_argument("--direct", action="store_true", help="route distinguishable bosons one by one")
	p.add_argument("--out", type=Path, required=True)

	p = sub.add_parser("stats", parents=[common], help="TVD and chi-square of samples against a distribution")
	p.add_argument("--samples", type=Path, required=True)
	p.add_argument("--dist", type=Path, required=True)

	p = sub.add_parser("verify", parents=[common], help="run verification suites")
	p.add_argument("--suite", required=True, choices=available_suites() + ["all"])

	p = sub.add_parser("trace-norm", parents=[common], help="trace norm of the partially transposed mixture")
	p.add_argument("--n", type=int, required=True)
	p.add_argument("--eps", type=float, required=True)

	p = sub.add_parser("replay", parents=[common], help="re-run a manifest and compare output digests")
	p.add_argument("--manifest", type=Path, required=True)
	return parser


def _configure_logging(verbose: bool, settings: Settings) -> None:
	level = logging.DEBUG if verbose else logging.getLevelName(settings.log_level)
	# no-op when the root logger already has handlers (replay, embedding callers)
	logging.basicConfig(format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
	logging.getLogger().setLevel(level)


def _settings_for(args: argparse.Namespace) -> Settings:
	base = Settings.from_env()
	if base.max_permanent_n != DEFAULT_MAX_PERMANENT_N:
		log.warning("permanent cap set to %d from %s", base.max_permanent_n, ENV_MAX_N)
	update: dict[str, Any] = {}
	if args.threads is not None:
		if args.threads < 1:
			raise ValidationError(f"--threads must be positive, got {args.threads}")
		update["threads"] = args.threads
	if args.unsafe_size:
		update["unsafe_size"] = True
	return base.model_copy(update=update)


def _model_inputs(args: argparse.Namespace) -> ModelInputs:
	s = Occupation.parse(args.input)
	if args.lost < 0 or args.lost > s.n:
		raise ValidationError(f"--lost {args.lost}: must be between 0 and the {s.n} input bosons")
	if args.lost and args.model != "lossy":
		raise ValidationError("--lost only applies to the lossy model")
	u = read_matrix(args.unitary)
	labels = read_labels(args.labels) if args.labels else None
	smat = read_dist_matrix(args.smatrix).dist_matrix if args.smatrix else None
	return ModelInputs(unitary=u, occupation=s, dist_matrix=smat, labels=labels, lost=args.lost)


def _input_files(args: argparse.Namespace) -> list[Path]:
	return [p for key in ("unitary", "labels", "smatrix", "infile") if isinstance(p := getattr(args, key, None), Path)]


def _write_manifest(args: argparse.Namespace, argv: Sequence[str], started: float) -> None:
	out: Path = args.out
	params = {k: (str(v) if isinstance(v, Path) else v) for k, v in sorted(vars(args).items())}
	seeds = [int(args.seed)] if getattr(args, "seed", None) is not None else []
	manifest = RunManifest(
		command=args.command,
		argv=list(argv),
		parameters=params,
		seeds=seeds,
		version=__version__,
		inputs={str(p): file_digest(p) for p in _input_files(args)},
		outputs={str(out): file_digest(out)},
		seconds=round(time.perf_counter() - started, 6),
	)
	path = out.with_name(out.name + MANIFEST_SUFFIX)
	dump_json(path, manifest.model_dump())
	log.debug("wrote manifest %s", path)


def _cmd_gen_unitary(args: argparse.Namespace) -> int:
	write_matrix(args.out, haar_random_unitary(args.modes, args.seed))
	print(f"wrote {args.out} ({args.modes}x{args.modes} unitary, seed {args.seed})")
	return 0


def _cmd_decompose(args: argparse.Namespace) -> int:
	u = read_matrix(args.infile)
	seq = reck_decompose(u)
	err = float(abs(recompose(seq) - u).max())
	log.info("round-trip error %.2e", err)
	write_sequence(args.out, seq)
	print(f"wrote {args.out} ({seq.mixing_count} mixing elements, round-trip error {err:.1e})")
	return 0


def _cmd_distribution(args: argparse.Namespace, settings: Settings) -> int:
	dist = get_model(args.model).compute(_model_inputs(args), settings)
	write_distribution(args.out, dist, args.format)
	if dist.clamped:
		log.warning("%d tiny negative probabilities were clamped to 0", dist.clamped)
	print(f"wrote {args.out} ({len(dist)} occupations, model {dist.model})")
	return 0


def _cmd_sample(args: argparse.Namespace, settings: Settings) -> int:
	batch, _ = sample_model(args.model, _model_inputs(args), args.shots, args.seed, settings, direct=args.direct)
	write_samples(args.out, batch)
	print(f"wrote {args.out} ({len(batch)} samples, seed {args.seed})")
	return 0


def _cmd_stats(args: argparse.Namespace, settings: Settings) -> int:
	batch = read_samples(args.samples)
	dist = read_distribution(args.dist)
	tvd = total_variation(empirical_distribution(batch, settings), dist)
	statistic, pvalue = chi_square_test(batch, dist)
	print(json.dumps({"samples": len(batch), "tvd": tvd, "chi2": statistic, "p_value": pvalue}))
	return 0


def _cmd_verify(args: argparse.Namespace, settings: Settings) -> int:
	results = run_suites(args.suite, settings)
	width = max((len(r.name) for r in results), default=10)
	for r in results:
		print(f"{r.suite:<11} {r.name:<{width}}  {'PASS' if r.passed else 'FAIL'}  {r.detail}")
	failed = [r for r in results if not r.passed]
	print(f"{len(results) - len(failed)}/{len(results)} checks passed")
	if failed:
		raise VerificationFailure(f"{len(failed)} check(s) failed: " + ", ".join(r.name for r in failed[:5]))
	return 0


def _cmd_trace_norm(args: argparse.Namespace, settings: Settings) -> int:
	n = int(args.n)
	if n < 1:
		raise ValidationError(f"--n must be positive, got {n}")
	rho = werner_mixture(ModeWord(tuple(range(1, n + 1))), args.eps, n, settings)
	pt = partial_transpose_first(rho)
	value = trace_norm(pt)
	expected = 1.0 + args.eps * (n - 1)
	print(json.dumps({"n": n, "eps": args.eps, "trace_norm": value, "closed_form": expected, "min_eigenvalue": min_eigenvalue(pt)}))
	return 0


def _redirect_output(argv: Sequence[str], target: str) -> list[str]:
	out = list(argv)
	for i, a in enumerate(out):
		if a == "--out" and i + 1 < len(out):
			out[i + 1] = target
			return out
		if a.startswith("--out="):
			out[i] = f"--out={target}"
			return out
	raise ValidationError("recorded command has no --out argument")


def _cmd_replay(args: argparse.Namespace) -> int:
	manifest = parse_file(RunManifest, load_json(args.manifest), str(args.manifest))
	for path, digest in manifest.inputs.items():
		if file_digest(Path(path)) != digest:
			raise VerificationFailure(f"input {path} changed since the manifest was written")
	if len(manifest.outputs) != 1:
		raise ValidationError(f"{args.manifest}: expected exactly one recorded output")
	(original, digest), = manifest.outputs.items()
	with tempfile.TemporaryDirectory(prefix="distinguon-replay-") as tmp:
		target = Path(tmp) / Path(original).name
		code = dispatch(_redirect_output(manifest.argv, str(target)))
		if code != 0:
			raise VerificationFailure(f"replayed command exited with {code}")
		got = file_digest(target)
		if got != digest:
			raise VerificationFailure(f"output {original} does not reproduce: {got[:12]} != {digest[:12]}")
	print(f"replayed {manifest.command}: {len(manifest.outputs)} output(s) reproduced")
	return 0


def _run(args: argparse.Namespace, argv: Sequence[str], settings: Settings) -> int:
	started = time.perf_counter()
	match args.command:
		case "gen-unitary":
			code = _cmd_gen_unitary(args)
		case "decompose":
			code = _cmd_decompose(args)
		case "distribution":
			code = _cmd_distribution(args, settings)
		case "sample":
			code = _cmd_sample(args, settings)
		case "stats":
			return _cmd_stats(args, settings)
		case "verify":
			return _cmd_verify(args, settings)
		case "trace-norm":
			return _cmd_trace_norm(args, settings)
		case "replay":
			return _cmd_replay(args)
		case _:
			raise UsageError(f"unknown command {args.command!r}")
	_write_manifest(args, argv, started)
	return code


def _report(err: Exception, exit_code: int, json_errors: bool) -> None:
	if json_errors:
		payload = {"error": type(err).__name__, "message": str(err), "exit_code": exit_code}
		print(json.dumps(payload), file=sys.stderr)
	else:
		print(f"error: {err}", file=sys.stderr)


def dispatch(argv: Sequence[str]) -> int:
	argv = list(argv)
	json_errors = "--json-errors" in argv
	try:
		try:
			args = build_parser().parse_args(argv)
		except SystemExit as e:
			# --help and --version
			return e.code if isinstance(e.code, int) else 0
		settings = _settings_for(args)
		_configure_logging(args.verbose, settings)
		previous = configure(settings)
		try:
			return _run(args, argv, settings)
		finally:
			configure(previous)
	except DistinguonError as e:
		_report(e, e.exit_code, json_errors)
		return e.exit_code
	except OSError as e:
		_report(e, 1, json_errors)
		return 1


def main() -> None:
	sys.exit(dispatch(sys.argv[1:]))
