"""
Command-line front end: build and verify certificates, enumerate and
propagate quantum MDS parameters.

Exit codes: 0 success, 1 verification failure, 2 invalid parameters, 3 I/O.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass, replace
from pathlib import Path
from typing import List, Optional, Sequence

from pydantic import ValidationError

from qmds.config import QmdsSettings
from qmds.constructions import ConstructionSpec, Family, VerifyLevel, build, reproduce
from qmds.errors import (
    CertificateMismatchError,
    ConstructionError,
    LemmaViolation,
    QmdsError,
)
from qmds.quantum import QuantumParams, enumerate_families, from_certificate, propagate_steps

from .config_loader import load_settings
from .export import certificate_to_human, rows_to_csv, rows_to_human, rows_to_json, write_output
from .schemas import (
    VerdictsDocument,
    certificate_to_document,
    document_to_certificate,
    dump_document,
    load_document,
    row_from_params,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_INVALID = 2
EXIT_IO = 3

FORMATS = ("json", "csv", "human")


class UsageError(QmdsError, ValueError):
    pass


@dataclass
class CommandConfig:
    command: str
    family: Optional[str] = None
    q: Optional[int] = None
    s: Optional[int] = None
    r: Optional[int] = None
    t: Optional[int] = None
    k: Optional[int] = None
    n_max: Optional[int] = None
    n: Optional[int] = None
    k_q: Optional[int] = None
    d: Optional[int] = None
    output_format: str = "json"
    output_path: Optional[str] = None
    input_path: Optional[str] = None
    verify_level: str = VerifyLevel.FULL.value
    seed: Optional[int] = None
    sample_count: Optional[int] = None
    workers: Optional[int] = None
    all_k: bool = False
    steps: int = 1
    verbose: bool = False


@dataclass
class RunResult:
    exit_code: int
    output: str


def _require(config: CommandConfig, *names: str) -> None:
    missing = [name for name in names if getattr(config, name) is None]
    if missing:
        flags = ", ".join("--" + name.replace("_", "-") for name in missing)
        raise UsageError(f"{config.command} needs {flags}")


def _apply_overrides(config: CommandConfig, settings: QmdsSettings) -> QmdsSettings:
    verification = settings.verification
    if config.seed is not None:
        verification = replace(verification, seed=config.seed)
    if config.sample_count is not None:
        verification = replace(verification, sample_count=config.sample_count)
    enumeration = settings.enumeration
    if config.workers is not None:
        enumeration = replace(enumeration, workers=config.workers)
    return replace(settings, verification=verification, enumeration=enumeration)


def _render_rows(params: Sequence[QuantumParams], output_format: str) -> str:
    rows = [row_from_params(p) for p in params]
    if output_format == "csv":
        return rows_to_csv(rows)
    if output_format == "human":
        return rows_to_human(rows)
    return rows_to_json(rows)


def _read_input(path: str) -> str:
    try:
        return Path(path).read_text()
    except UnicodeDecodeError as exc:
        raise OSError(f"{path} is not a text document") from exc


def _run_build(config: CommandConfig, settings: QmdsSettings) -> RunResult:
    _require(config, "family", "q", "s", "k")
    spec = ConstructionSpec.create(config.family, config.q, config.s, k=config.k, r=config.r, t=config.t)
    try:
        certificate = build(spec, config.verify_level, settings)
        exit_code = EXIT_OK
    except ConstructionError as exc:
        logger.error("%s", exc)
        certificate = exc.certificate
        exit_code = EXIT_VERIFICATION
    document = certificate_to_document(certificate)
    if config.output_format == "human":
        return RunResult(exit_code, certificate_to_human(document))
    if config.output_format == "csv":
        return RunResult(exit_code, _render_rows([from_certificate(certificate)], "csv"))
    return RunResult(exit_code, dump_document(document))


def _run_verify(config: CommandConfig, settings: QmdsSettings) -> RunResult:
    _require(config, "input_path")
    document = load_document(_read_input(config.input_path))
    certificate = document_to_certificate(document, settings)
    verdicts = reproduce(certificate, config.verify_level, settings)
    exit_code = EXIT_OK if verdicts.accepted else EXIT_VERIFICATION
    if not verdicts.accepted:
        logger.error("%s failed %s", certificate.spec.reference, ", ".join(verdicts.failures()))
    report = VerdictsDocument(**verdicts.to_dict())
    if config.output_format == "human":
        checks = ", ".join(f"{k}={v}" for k, v in report.model_dump().items() if v is not None)
        return RunResult(exit_code, f"{certificate.spec.reference}: {checks or 'parameters only'}\n")
    return RunResult(exit_code, dump_document(report))


def _run_enumerate(config: CommandConfig, settings: QmdsSettings) -> RunResult:
    _require(config, "q", "n_max")
    level = VerifyLevel(config.verify_level)
    params = enumerate_families(
        config.q,
        config.n_max,
        verify=level is not VerifyLevel.PARAMS,
        all_k=config.all_k,
        level=level,
        workers=settings.enumeration.workers,
        settings=settings,
    )
    return RunResult(EXIT_OK, _render_rows(params, config.output_format))


def _run_propagate(config: CommandConfig, settings: QmdsSettings) -> RunResult:
    if config.steps < 1:
        raise UsageError(f"--steps must be positive, got {config.steps}")
    if config.input_path is not None:
        document = load_document(_read_input(config.input_path))
        start = from_certificate(document_to_certificate(document, settings))
    else:
        _require(config, "q", "n", "k_q", "d")
        start = QuantumParams(q=config.q, n=config.n, k_q=config.k_q, d=config.d, provenance="given")
    chain = propagate_steps(start, config.steps)
    return RunResult(EXIT_OK, _render_rows(chain, config.output_format))


COMMANDS = {
    "build": _run_build,
    "verify": _run_verify,
    "enumerate": _run_enumerate,
    "propagate": _run_propagate,
}


def run(config: CommandConfig, settings: Optional[QmdsSettings] = None) -> RunResult:
    """Execute one command; failures are mapped onto the exit codes."""
    if config.output_format not in FORMATS:
        return RunResult(EXIT_INVALID, f"unknown output format {config.output_format!r}\n")
    settings = _apply_overrides(config, settings or load_settings())
    logger.debug("%s with settings %s", config.command, settings.to_dict())
    try:
        return COMMANDS[config.command](config, settings)
    except (OSError, json.JSONDecodeError, ValidationError) as exc:
        logger.error("cannot read document: %s", exc)
        return RunResult(EXIT_IO, "")
    except (CertificateMismatchError, ConstructionError, LemmaViolation) as exc:
        logger.error("%s", exc)
        return RunResult(EXIT_VERIFICATION, "")
    except (KeyError, ValueError) as exc:
        logger.error("%s", exc)
        return RunResult(EXIT_INVALID, "")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qmds", description="Hermitian self-orthogonal GRS codes and quantum MDS parameters")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", dest="output_format", choices=FORMATS, default="json")
        p.add_argument("--output", dest="output_path")
        p.add_argument("--verify-level", choices=[level.value for level in VerifyLevel], default=VerifyLevel.FULL.value)
        p.add_argument("--seed", type=int, help="seed for sampled MDS checks")
        p.add_argument("--sample-count", type=int, help="k-subsets drawn when exhaustive MDS checks are too large")

    build_cmd = sub.add_parser("build", help="build and certify one construction")
    build_cmd.add_argument("--family", required=True, choices=[f.value for f in Family])
    build_cmd.add_argument("--q", type=int, required=True)
    build_cmd.add_argument("--s", type=int, required=True)
    build_cmd.add_argument("--r", type=int)
    build_cmd.add_argument("--t", type=int)
    build_cmd.add_argument("--k", type=int, required=True)
    common(build_cmd)

    verify_cmd = sub.add_parser("verify", help="recompute the verdicts of a certificate document")
    verify_cmd.add_argument("--input", dest="input_path", required=True)
    common(verify_cmd)

    enum_cmd = sub.add_parser("enumerate", help="tabulate quantum MDS parameters for one q")
    enum_cmd.add_argument("--q", type=int, required=True)
    enum_cmd.add_argument("--n-max", type=int, required=True)
    enum_cmd.add_argument("--all-k", action="store_true", help="every legal k, not only the largest")
    enum_cmd.add_argument("--workers", type=int)
    common(enum_cmd)

    prop_cmd = sub.add_parser("propagate", help="apply the propagation rule")
    prop_cmd.add_argument("--input", dest="input_path", help="certificate document to start from")
    prop_cmd.add_argument("--q", type=int)
    prop_cmd.add_argument("--n", type=int)
    prop_cmd.add_argument("--k-q", type=int)
    prop_cmd.add_argument("--d", type=int)
    prop_cmd.add_argument("--steps", type=int, default=1)
    common(prop_cmd)
    return parser


def config_from_args(args: argparse.Namespace) -> CommandConfig:
    fields = CommandConfig.__dataclass_fields__
    return CommandConfig(**{name: value for name, value in vars(args).items() if name in fields})


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    config = config_from_args(args)
    result = run(config)
    if result.output:
        try:
            write_output(result.output, config.output_path)
        except OSError as exc:
            logger.error("cannot write output: %s", exc)
            return EXIT_IO
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
