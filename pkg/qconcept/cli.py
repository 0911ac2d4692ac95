"""Command-line interface.

Example:
    ```sh
    python -m qconcept check-frame --frame test/fixtures/frame-godel-formal.json
    python -m qconcept lattice \
        --frame test/fixtures/frame-crisp-formal.json \
        --context test/fixtures/context-identity.json --out dot
    python -m qconcept export-quantaloid --frame test/fixtures/frame-crisp-property.json
    ```

Exit codes: 0 success, 1 parse error, 2 failed law or size guard, 3 oracle mismatch.
"""
import argparse
import dataclasses
import logging
import pathlib
import sys
from dataclasses import dataclass

import pandas as pd

from qconcept._version import __version__
from qconcept.algebra import quantaloid
from qconcept.algebra.triple import check_adjointness, check_monotonicity
from qconcept.concept import engine, export, frame, oracle
from qconcept.util import io, parallel
from qconcept.util.decorator import timer
from qconcept.util.errors import (
    FibreTooLarge,
    OracleMismatch,
    ParseError,
    QConceptError,
    ValidationError,
)

logger = logging.getLogger(__name__)

COMMANDS = ("check-frame", "lattice", "export-quantaloid")
OUTPUTS = ("json", "dot")


@dataclass
class RunConfig:
    """Settings of one run: defaults, then the YAML file, then explicit flags."""

    command: str = "lattice"
    frame: str | None = None
    context: str | None = None
    mode: str | None = None
    strategy: str = "both"
    out: str = "json"
    limit: int = 65536
    brute_limit: int = 4096
    pair_limit: int = 1_000_000
    oracle: bool = True
    cores: int = 1
    output: str | None = None
    config: str | None = None

    @classmethod
    def from_args(cls, args: dict) -> "RunConfig":
        """Layers `args` (``None`` is unset) over the optional ``--config`` YAML."""
        settings = {}
        if args.get("config"):
            _exists(args["config"], "config")
            settings = io.load_yaml(args["config"])
            if not isinstance(settings, dict):
                raise ParseError(f"config {args['config']} must be a mapping")
        names = {f.name for f in dataclasses.fields(cls)}
        unknown = sorted(set(settings) - names)
        if unknown:
            raise ParseError(f"unknown config keys {unknown}")
        settings.update({k: v for k, v in args.items() if k in names and v is not None})
        return cls(**settings).validate()

    def validate(self) -> "RunConfig":
        if self.command not in COMMANDS:
            raise ParseError(f"unknown command {self.command!r}")
        if self.strategy not in ("brute", "generators", "both"):
            raise ParseError(f"unknown strategy {self.strategy!r}")
        if self.out not in OUTPUTS:
            raise ParseError(f"unknown output format {self.out!r}")
        for key in ("limit", "brute_limit", "pair_limit"):
            if not isinstance(getattr(self, key), int) or getattr(self, key) < 1:
                raise ParseError(f"{key} must be a positive integer")
        if not isinstance(self.cores, int) or self.cores < 0:
            raise ParseError("cores must be a non-negative integer")
        if self.frame is None:
            raise ParseError("--frame is required")
        _exists(self.frame, "frame")
        if self.command == "lattice":
            if self.context is None:
                raise ParseError("--context is required")
            _exists(self.context, "context")
        if self.mode is not None:
            self.mode = frame.normalize_mode(self.mode)
        return self


def _exists(path: str, what: str) -> None:
    if not pathlib.Path(path).is_file():
        raise ParseError(f"{what} file {path} not found")


def _step(rows: list, check: str, func) -> None:
    try:
        detail = func()
    except ValidationError as e:
        rows.append({"check": check, "status": "FAIL", "detail": str(e)})
        raise
    rows.append({"check": check, "status": "PASS", "detail": detail or ""})


def cmd_check_frame(config: RunConfig) -> pd.DataFrame:
    """Validates a frame step by step and returns the report table.

    Raises:
        ValidationError: The first failing law (the report so far is printed).
    """
    data = io.load_json(config.frame)
    if not isinstance(data, dict):
        raise ParseError("frame must be a JSON object")
    mode = frame.normalize_mode(config.mode or data.get("mode", ""))
    rows = []
    built = {}

    def lattices():
        built["lattices"] = frame.parse_lattices(data)
        return ", ".join(f"{k}={len(v)}" for k, v in built["lattices"].items())

    def triples():
        f = frame.build_frame(
            mode,
            built["lattices"],
            frame.frame_conjunctions(data),
            data.get("name", ""),
        )
        for t in f.triples:
            for check, witness in (
                ("adjointness", check_adjointness(t)),
                ("monotonicity", check_monotonicity(t)),
            ):
                if witness is not None:
                    raise ValidationError(f"{t.name} fails {check}", witness)
        built["frame"] = f
        return f"{mode}, n={f.n}"

    def laws():
        Q = quantaloid.validate_quantaloid(frame.frame_to_quantaloid(built["frame"]))
        built["Q"] = Q
        return f"{Q.name}, objects {', '.join(Q.objects)}"

    def residuation():
        witness = quantaloid.residuation_witness(built["Q"])
        if witness is not None:
            raise ValidationError("implications are not adjoint", witness)

    def nontrivial():
        if not quantaloid.is_nontrivial(built["Q"]):
            raise ValidationError(f"{built['Q'].name} is trivial")

    try:
        _step(rows, "lattices", lattices)
        _step(rows, "triples", triples)
        _step(rows, "quantaloid laws", laws)
        _step(rows, "residuation", residuation)
        _step(rows, "non-trivial", nontrivial)
    finally:
        report = pd.DataFrame(rows, columns=["check", "status", "detail"])
        io.write_text(report.to_string(index=False), config.output)
    return report


def cmd_lattice(config: RunConfig) -> engine.ConceptLattice:
    """Computes the concept lattice of the frame mode and writes it.

    Raises:
        OracleMismatch: ``oracle`` is on and the direct computation disagrees.
    """
    f = frame.load_frame(config.frame, config.mode)
    ctx = frame.load_context(config.context, f)
    cores = parallel.set_cores(config.cores)
    run = timer(engine.compute)
    lattice, seconds = run(
        f,
        ctx,
        strategy=config.strategy,
        limit=config.limit,
        brute_limit=config.brute_limit,
        pair_limit=config.pair_limit,
        cores=cores,
    )
    logger.info(f"{lattice.provenance} - {len(lattice)} concepts in {seconds}s")
    if config.oracle:
        expected, seconds = timer(oracle.oracle_direct)(f, ctx, limit=config.limit)
        same, report = engine.compare(lattice, expected)
        if not same:
            raise OracleMismatch(f"oracle disagrees: {report}")
        logger.info(f"oracle PASS - {report} in {seconds}s")
    if config.out == "dot":
        text = export.to_dot(lattice)
    else:
        text = io.dumps(export.to_json(lattice))
    io.write_text(text, config.output)
    return lattice


def cmd_export_quantaloid(config: RunConfig) -> dict:
    """Dumps the frame's quantaloid as JSON."""
    f = frame.load_frame(config.frame, config.mode)
    dump = quantaloid.quantaloid_to_json(frame.frame_to_quantaloid(f))
    io.write_text(io.dumps(dump), config.output)
    return dump


def parse_args(argv: list | None = None) -> dict:
    parser = argparse.ArgumentParser(
        prog="qconcept", description="Concept lattices of multi-adjoint frames"
    )
    parser.add_argument("--version", action="version", version=__version__)
    commands = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub = commands.add_parser(name)
        sub.add_argument("--frame", help="Frame JSON file")
        sub.add_argument("--mode", help="Override the frame mode")
        sub.add_argument("--config", help="YAML run configuration")
        sub.add_argument("--output", help="Output file (default: stdout)")
        if name != "lattice":
            continue
        sub.add_argument("--context", help="Context JSON file")
        sub.add_argument("--strategy", help="brute, generators or both")
        sub.add_argument("--out", help="Output format: json or dot")
        sub.add_argument("--limit", type=int, help="Fibre size guard")
        sub.add_argument("--brute-limit", type=int, help="Largest brute cross-check")
        sub.add_argument("--pair-limit", type=int, help="Largest pairwise Galois check")
        sub.add_argument("--cores", type=int, help="Cores for brute force (0 = auto)")
        sub.add_argument(
            "--oracle",
            action=argparse.BooleanOptionalAction,
            default=None,
            help="Cross-check against the direct formulas",
        )
    return vars(parser.parse_args(argv))


def main(argv: list | None = None) -> int:
    """Runs one command and returns its exit code."""
    try:
        config = RunConfig.from_args(parse_args(argv))
        commands = {
            "check-frame": cmd_check_frame,
            "lattice": cmd_lattice,
            "export-quantaloid": cmd_export_quantaloid,
        }
        commands[config.command](config)
    except ParseError as e:
        logger.error(f"{e}")
        return 1
    except (ValidationError, FibreTooLarge) as e:
        logger.error(f"{e}")
        return 2
    except OracleMismatch as e:
        logger.error(f"{e}")
        return 3
    except QConceptError as e:
        logger.error(f"{e}")
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
