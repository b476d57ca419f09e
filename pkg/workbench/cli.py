"""
Command-line surface of the workbench.
"""

import argparse
import logging
import sys
from typing import Any, Optional, Sequence

from .core import CHECK_KINDS, Workbench
from .exceptions import ConfigurationError

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="varietas",
        description="Regular languages, lattice bimodules and their duality, on finite instances.",
    )
    parser.add_argument("--config", default="config.yaml", help="YAML configuration file")
    output = parser.add_mutually_exclusive_group()
    output.add_argument("--json", action="store_true", help="machine-readable output")
    output.add_argument("--dot", action="store_true", help="Graphviz output where available")
    parser.add_argument("--alphabet", help="alphabet for regex inputs, e.g. 'ab'")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, text in (
        ("syntactic", "transition monoid of a language"),
        ("closure", "derivative closure of a language or variety file"),
        ("pipeline", "closure, dual, minimal recognizer and round trips"),
    ):
        sub.add_parser(name, help=text).add_argument("spec", help="regex or DFA/variety JSON file")

    dualize = sub.add_parser("dualize", help="U-quotient dual to a variety")
    dualize.add_argument("spec", help="regex or variety JSON file")
    dualize.add_argument("--verify", action="store_true", help="also verify the round trip")
    verify_duality = sub.add_parser("verify-duality", help="dualize and verify the round trip")
    verify_duality.add_argument("spec", help="regex or variety JSON file")

    sub.add_parser("reduce", help="reduce a bimodule").add_argument("file")
    check = sub.add_parser("check", help="check a bimodule, U-quotient or cotheory file")
    check.add_argument("file")
    check.add_argument("--kind", choices=CHECK_KINDS, default="bimodule")
    sub.add_parser("check-cotheory", help="check a cotheory sample file").add_argument("file")
    sub.add_parser("rec", help="languages recognized by a U-quotient or hom").add_argument("file")

    qfa = sub.add_parser("qfa", help="measure-many quantum automata")
    qfa_sub = qfa.add_subparsers(dest="qfa_command", required=True)
    run = qfa_sub.add_parser("run", help="acceptance probability of one word")
    run.add_argument("automaton", help="QFA JSON file, or 'parity' / 'rotation'")
    run.add_argument("word", nargs="?", default="")
    margin = qfa_sub.add_parser("margin", help="bounded-error margin against a language")
    margin.add_argument("automaton")
    margin.add_argument("language", help="regex or DFA JSON file")
    margin.add_argument("-n", "--length", type=int, default=6)
    validate = qfa_sub.add_parser("validate", help="unitarity and partition checks")
    validate.add_argument("automaton")
    probe = qfa_sub.add_parser("probe", help="derivative and preimage cuts (bounded evidence)")
    probe.add_argument("automaton")
    probe.add_argument("-n", "--length", type=int, default=5)
    probe.add_argument("--context", action="append", default=[], help="left:right")
    probe.add_argument("--hom", action="append", default=[], help="c=aa,d=b")
    for command in (run, margin, probe):
        command.add_argument("--mode", choices=["subspace", "basis"])

    verify = sub.add_parser("verify", help="run the verification suites")
    verify.add_argument("--suite", action="append", default=[], help="run only this suite")
    verify.add_argument("--seed", type=int)
    return parser


def dispatch(args: argparse.Namespace) -> tuple[str, dict[str, Any]]:
    """Map parsed arguments to a workbench command and its keyword options."""
    alphabet = args.alphabet
    match args.command:
        case "syntactic" | "closure" | "pipeline":
            return args.command, {"spec": args.spec, "alphabet": alphabet}
        case "dualize":
            return "dualize", {"spec": args.spec, "alphabet": alphabet, "verify": args.verify}
        case "verify-duality":
            return "dualize", {"spec": args.spec, "alphabet": alphabet, "verify": True}
        case "reduce" | "rec":
            return args.command, {"path": args.file}
        case "check":
            return "check", {"path": args.file, "kind": args.kind}
        case "check-cotheory":
            return "check", {"path": args.file, "kind": "cotheory"}
        case "verify":
            return "verify", {"suites": args.suite, "seed": args.seed}
    match args.qfa_command:
        case "run":
            return "qfa-run", {"source": args.automaton, "word": args.word, "mode": args.mode}
        case "margin":
            return "qfa-margin", {
                "source": args.automaton,
                "spec": args.language,
                "length": args.length,
                "mode": args.mode,
                "alphabet": alphabet,
            }
        case "validate":
            return "qfa-validate", {"source": args.automaton}
        case _:
            return "qfa-probe", {
                "source": args.automaton,
                "length": args.length,
                "contexts": args.context,
                "homs": args.hom,
                "mode": args.mode,
            }


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main entry point."""
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO, format=LOG_FORMAT)
    workbench = Workbench(args.config)
    try:
        logging.getLogger().setLevel(workbench.config.log_level)
    except ConfigurationError as e:
        logger.error(f"Configuration error: {e}")
        return 2
    command, options = dispatch(args)
    output = "json" if args.json else "dot" if args.dot else "text"
    return workbench.run_sync(command, output, **options)


if __name__ == "__main__":
    sys.exit(main())
