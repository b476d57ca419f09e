"""
Core workbench class that orchestrates the library for each subcommand.
"""

import logging
from pathlib import Path
from typing import Any, Optional, Sequence

from varietas.bimodule import (
    canonical_collapse,
    check_axioms,
    is_reduced,
    is_star_embedded,
    is_star_generated,
    reduce,
)
from varietas.codec import DotWriter, JsonCodec
from varietas.duality import (
    dual_of_variety,
    verify_local_duality,
    verify_subvariety_correspondence,
)
from varietas.enums import MeasurementMode
from varietas.exceptions import VarietasError
from varietas.languages import (
    Alphabet,
    Context,
    FreeMonoidHom,
    RegularLanguage,
    enumerate_words,
    transition_monoid,
)
from varietas.order import FinitePoset
from varietas.qfa import (
    Kwqfa,
    basic_variety_probe,
    margin_report,
    parity_machine,
    rotation_machine,
    simulate,
    validate,
)
from varietas.recognition import (
    minimal_recognizer,
    rec_of_uquotient,
    recognized_languages,
    recognizes,
    uquotient_of_hom,
)
from varietas.regex import compile_regex
from varietas.uquotient import check_uquotient
from varietas.varieties import (
    LocalBasicVariety,
    check_cotheory,
    derivative_closure,
    generated_local_variety,
)

from .config import ConfigManager, WorkbenchConfig
from .exceptions import ConfigurationError, UsageError, VerificationFailure, WorkbenchError
from .report_builder import ReportBuilder
from .suites import VerificationSuites

logger = logging.getLogger(__name__)

BUILTIN_QFAS = {"parity": parity_machine, "rotation": rotation_machine}
CHECK_KINDS = ("bimodule", "uquotient", "cotheory")
COMMANDS = (
    "syntactic",
    "closure",
    "dualize",
    "reduce",
    "check",
    "rec",
    "pipeline",
    "qfa-run",
    "qfa-margin",
    "qfa-validate",
    "qfa-probe",
    "verify",
)
SAMPLE_LENGTH = 4
SAMPLE_WORDS = 6


def summarize(language: RegularLanguage) -> str:
    """Short description: state count and the first few members in shortlex order."""
    if language.is_empty():
        return "∅"
    members = []
    for word in enumerate_words(language.alphabet, SAMPLE_LENGTH):
        if language.contains(word):
            members.append(word or "ε")
            if len(members) == SAMPLE_WORDS:
                break
    more = ", …" if len(members) == SAMPLE_WORDS else ""
    return f"{language.states} states {{{', '.join(members)}{more}}}"


class Workbench:
    """Main workbench class: one method per subcommand, each returning a report."""

    def __init__(self, config_path: str = "config.yaml"):
        """
        Initialize the workbench.

        Args:
            config_path: Path to the configuration file
        """
        self.config_path = config_path
        self._config_manager: Optional[ConfigManager] = None

    @property
    def config_manager(self) -> ConfigManager:
        """Get the configuration manager (lazy initialization)."""
        if self._config_manager is None:
            self._config_manager = ConfigManager(self.config_path)
        return self._config_manager

    @property
    def config(self) -> WorkbenchConfig:
        """Get the workbench configuration."""
        return self.config_manager.config

    def _alphabet(self, alphabet: Optional[str]) -> Optional[Alphabet]:
        return Alphabet.of(alphabet) if alphabet else None

    def _load(self, path: str) -> dict[str, Any]:
        if not path:
            raise UsageError("An input file is required")
        return JsonCodec.read(path)

    def load_language(self, spec: str, alphabet: Optional[str] = None) -> RegularLanguage:
        """A regex, or a path to a DFA JSON file."""
        if not spec or not spec.strip():
            raise UsageError("Empty language: pass a regex or a DFA JSON file")
        if spec.endswith(".json") and Path(spec).is_file():
            return JsonCodec.decode_language(JsonCodec.read(spec))
        return compile_regex(spec, self._alphabet(alphabet), self.config.default_symbol)

    def load_variety(self, spec: str, alphabet: Optional[str] = None) -> LocalBasicVariety:
        """A variety JSON file (closed under derivatives on load), or the closure of a language."""
        if spec and spec.endswith(".json") and Path(spec).is_file():
            data = JsonCodec.read(spec)
            if "languages" in data:
                variety = JsonCodec.decode_variety(data)
                return generated_local_variety(variety.languages, variety.alphabet or alphabet)
        return derivative_closure(self.load_language(spec, alphabet))

    def load_qfa(self, source: str) -> Kwqfa:
        if source in BUILTIN_QFAS:
            return BUILTIN_QFAS[source]()
        return JsonCodec.decode_qfa(self._load(source))

    def _mode(self, mode: Optional[str]) -> MeasurementMode:
        if mode is None:
            return self.config.qfa.default_mode
        try:
            return MeasurementMode(mode)
        except ValueError:
            raise UsageError(f"Unknown measurement mode {mode!r}") from None

    def _variety_section(self, report: ReportBuilder, variety: LocalBasicVariety) -> None:
        report.add_section(
            "variety",
            size=len(variety),
            alphabet=str(variety.alphabet),
            members=[summarize(language) for language in variety],
        )
        poset = variety.poset()
        report.dot = DotWriter.hasse(
            FinitePoset(poset.leq, [summarize(language) for language in variety]), "variety"
        )

    def syntactic(self, spec: str, alphabet: Optional[str] = None) -> ReportBuilder:
        language = self.load_language(spec, alphabet)
        monoid, letters = transition_monoid(language)
        report = ReportBuilder(f"syntactic monoid of {spec}")
        report.add_section(
            "monoid",
            size=monoid.size,
            states=language.states,
            letters=letters,
            elements=[w or "ε" for w in monoid.words or ()],
        )
        report.payload = {
            "monoid": JsonCodec.encode_monoid(monoid),
            "letters": letters,
            "words": list(monoid.words or ()),
            "dfa": JsonCodec.encode_dfa(language.dfa),
        }
        report.dot = DotWriter.dfa(language.dfa)
        return report

    def closure(self, spec: str, alphabet: Optional[str] = None) -> ReportBuilder:
        variety = self.load_variety(spec, alphabet)
        report = ReportBuilder(f"derivative closure of {spec}")
        self._variety_section(report, variety)
        report.payload = JsonCodec.encode_variety(variety)
        return report

    def dualize(
        self, spec: str, alphabet: Optional[str] = None, verify: bool = False
    ) -> ReportBuilder:
        variety = self.load_variety(spec, alphabet)
        quotient = dual_of_variety(variety, self._alphabet(alphabet))
        report = ReportBuilder(f"dual of {spec}")
        report.add_section(
            "dual",
            members=len(variety),
            lattice=quotient.codomain.size,
            states=quotient.machine.size,
        )
        if verify:
            report.add_section("round trip", ok=verify_local_duality(variety))
            report.add_section(
                "subvariety correspondence", ok=verify_subvariety_correspondence(variety)
            )
        report.payload = JsonCodec.encode_uquotient(quotient)
        report.dot = DotWriter.uquotient(quotient)
        return report

    def reduce(self, path: str) -> ReportBuilder:
        bimodule = JsonCodec.decode_bimodule(self._load(path))
        report = ReportBuilder(f"reduction of {path}")
        axioms = check_axioms(bimodule)
        if not axioms.passed:
            details = [f"{v.law.value} at {v.witness}" for v in axioms.violations]
            report.add_section("axioms", ok=False, details=details)
            return report
        collapse = canonical_collapse(bimodule)
        reduced, _ = reduce(bimodule)
        report.add_section(
            "reduction",
            monoid=f"{bimodule.monoid.size} -> {reduced.monoid.size}",
            lattice=reduced.lattice.size,
            classes=list(collapse.part_m),
            already_reduced=collapse.is_diagonal(),
        )
        report.payload = JsonCodec.encode_bimodule(reduced)
        return report

    def check(self, path: str, kind: str = "bimodule") -> ReportBuilder:
        if kind not in CHECK_KINDS:
            raise UsageError(f"Unknown check kind {kind!r}; expected one of {CHECK_KINDS}")
        data = self._load(path)
        report = ReportBuilder(f"{kind} check of {path}")
        if kind == "bimodule":
            bimodule = JsonCodec.decode_bimodule(data)
            axioms = check_axioms(bimodule)
            details = [f"{v.law.value} at {v.witness}: {v.message}" for v in axioms.violations]
            report.add_section("axioms", ok=axioms.passed, details=details)
            if axioms.passed:
                report.add_section(
                    "properties",
                    star_generated=is_star_generated(bimodule),
                    star_embedded=is_star_embedded(bimodule),
                    reduced=is_reduced(bimodule),
                )
        elif kind == "uquotient":
            result = check_uquotient(JsonCodec.decode_uquotient(data))
            report.add_section("surjective", ok=result.surjective)
            report.add_section(
                "liftings",
                ok=not result.failed_liftings,
                contexts=result.contexts_checked,
                details=[f"({v!r}, {w!r})" for v, w in result.failed_liftings],
            )
        else:
            cotheory = check_cotheory(JsonCodec.decode_cotheory(data))
            details = [
                f"{v.kind} over {v.alphabet!r}: {v.detail}"
                + (f" (witness {summarize(v.witness)})" if v.witness is not None else "")
                for v in cotheory.violations
            ]
            report.add_section("cotheory", ok=cotheory.passed, details=details)
            if cotheory.notes:
                report.add_section("skipped", details=cotheory.notes)
        return report

    def rec(self, path: str) -> ReportBuilder:
        data = self._load(path)
        if "machine" in data:
            languages = rec_of_uquotient(JsonCodec.decode_uquotient(data))
        else:
            languages = recognized_languages(JsonCodec.decode_free_hom(data))
        ordered = sorted(languages, key=lambda language: language.sort_key)
        report = ReportBuilder(f"languages recognized by {path}")
        report.add_section(
            "recognized", count=len(ordered), languages=[summarize(lang) for lang in ordered]
        )
        report.payload = [JsonCodec.encode_dfa(language.dfa) for language in ordered]
        return report

    def pipeline(self, spec: str, alphabet: Optional[str] = None) -> ReportBuilder:
        """Closure, dual, minimal recognizer and both recognition round trips."""
        language = self.load_language(spec, alphabet)
        report = ReportBuilder(f"pipeline for {spec}")
        closure = derivative_closure(language)
        report.add_section("closure", size=len(closure))
        quotient = dual_of_variety(closure)
        report.add_section("dual", lattice=quotient.codomain.size, states=quotient.machine.size)
        bimodule, hom = minimal_recognizer(language)
        report.add_section(
            "recognizer",
            monoid=bimodule.monoid.size,
            lattice=bimodule.lattice.size,
            axioms=check_axioms(bimodule).passed,
            recognizes=recognizes(hom, language),
        )
        from_dual = rec_of_uquotient(quotient) == closure.as_set()
        from_hom = rec_of_uquotient(uquotient_of_hom(hom)) == recognized_languages(hom)
        report.add_section(
            "round trip",
            ok=from_dual and from_hom and verify_local_duality(closure),
            rec_of_dual=from_dual,
            rec_of_recognizer=from_hom,
        )
        logger.info(f"Pipeline for {spec!r} finished: {'OK' if report.ok else 'FAILED'}")
        return report

    def qfa_run(self, source: str, word: str = "", mode: Optional[str] = None) -> ReportBuilder:
        automaton = self.load_qfa(source)
        trace = simulate(automaton, word, self._mode(mode))
        report = ReportBuilder(f"run of {source} on {word or 'ε'!r}")
        report.add_section(
            "result",
            mode=trace.mode.value,
            p_acc=round(trace.p_acc, 12),
            p_rej=round(trace.p_rej, 12),
            continuing=round(trace.continuing, 12),
        )
        report.payload = [
            {"symbol": s.symbol, "p_acc": s.p_acc, "p_rej": s.p_rej, "continuing": s.continuing}
            for s in trace.steps
        ]
        return report

    def qfa_margin(
        self,
        source: str,
        spec: str,
        length: int,
        mode: Optional[str] = None,
        alphabet: Optional[str] = None,
    ) -> ReportBuilder:
        automaton = self.load_qfa(source)
        language = self.load_language(spec, alphabet or str(automaton.alphabet))
        margin = margin_report(
            automaton, language, length, self._mode(mode), self.config.limits.max_margin_length
        )
        report = ReportBuilder(f"margin of {source} against {spec}")
        report.add_section(
            "bounded error",
            ok=margin.bounded_error,
            min_accept=round(margin.min_accept, 12),
            max_accept=round(margin.max_accept, 12),
            margin=round(margin.margin, 12),
            words=margin.words_checked,
        )
        return report

    def qfa_validate(self, source: str) -> ReportBuilder:
        automaton = self.load_qfa(source)
        result = validate(automaton, self.config.qfa.tolerance)
        report = ReportBuilder(f"validation of {source}")
        report.add_section(
            "unitarity",
            ok=result.passed,
            max_residual=result.max_residual,
            details=result.failures,
        )
        return report

    def qfa_probe(
        self,
        source: str,
        length: int,
        contexts: Sequence[str] = (),
        homs: Sequence[str] = (),
        mode: Optional[str] = None,
    ) -> ReportBuilder:
        """Contexts as `left:right`, homs as `c=aa,d=b` over the automaton alphabet."""
        automaton = self.load_qfa(source)
        parsed_contexts = [Context(*self._split(text, ":", 2)) for text in contexts]
        parsed_homs = [self._parse_hom(text, automaton.alphabet) for text in homs]
        probe = basic_variety_probe(
            automaton,
            parsed_contexts,
            parsed_homs,
            length,
            self._mode(mode),
            self.config.limits.max_margin_length,
        )
        report = ReportBuilder(f"basic variety probe of {source}")
        report.add_section(
            "language cut", words=len(probe.language_cut), conclusive=probe.conclusive
        )
        for entry in probe.entries:
            report.add_section(
                f"{entry.kind} {entry.description}",
                ok=entry.consistent,
                cut=[w or "ε" for w in entry.cut],
                margin=round(entry.margin, 12),
            )
        return report

    @staticmethod
    def _split(text: str, separator: str, parts: int) -> list[str]:
        pieces = text.split(separator)
        if len(pieces) != parts:
            raise UsageError(f"Expected {parts} parts separated by {separator!r} in {text!r}")
        return pieces

    def _parse_hom(self, text: str, target: Alphabet) -> FreeMonoidHom:
        mapping = dict(self._split(item, "=", 2) for item in text.split(",") if item)
        return FreeMonoidHom.of("".join(mapping), target, mapping)

    def verify(self, suites: Sequence[str] = (), seed: Optional[int] = None) -> ReportBuilder:
        runner = VerificationSuites(self.config, seed)
        names = list(suites) or runner.names
        unknown = [name for name in names if name not in runner.registry]
        if unknown:
            raise UsageError(f"Unknown suites {unknown}; available: {runner.names}")
        report = ReportBuilder(f"verification (seed {runner.seed})")
        results = [runner.run(name) for name in names]
        for result in results:
            report.add_section(
                result.name,
                ok=result.passed,
                details=result.failures[:20],
                checks=result.checked,
                seconds=round(result.seconds, 3),
            )
        report.payload = {
            result.name: {
                "passed": result.passed,
                "checks": result.checked,
                "failures": result.failures,
            }
            for result in results
        }
        return report

    def run(self, command: str, output: str = "text", **options: Any) -> ReportBuilder:
        """
        Execute one subcommand and print its report.

        Raises:
            VerificationFailure: If the report contains a failed section
        """
        if command not in COMMANDS:
            raise UsageError(f"Unknown command {command!r}")
        handler = getattr(self, command.replace("-", "_"))
        logger.info(f"Running {command}")
        report: ReportBuilder = handler(**options)
        if output == "json":
            print(report.render_json())
        elif output == "dot":
            if report.dot is None:
                raise UsageError(f"{command} has no diagram output")
            print(report.dot)
        else:
            print(report.render_text())
        if not report.ok:
            raise VerificationFailure(f"{command} reported failures", report.failed)
        return report

    def run_sync(self, command: str, output: str = "text", **options: Any) -> int:
        """
        Run a subcommand and map the outcome to an exit code:
        0 pass, 1 verification failure or unexpected error, 2 usage or input error.
        """
        try:
            self.run(command, output, **options)
            return 0
        except VerificationFailure as e:
            logger.error(f"Verification failed: {e} {e.failures}")
            return 1
        except (UsageError, ConfigurationError) as e:
            logger.error(f"Usage error: {e}")
            return 2
        except VarietasError as e:
            logger.error(f"Input error: {e}")
            return 2
        except WorkbenchError as e:
            logger.error(f"Workbench error: {e}")
            return 1
        except KeyboardInterrupt:
            logger.info("Interrupted by user")
            return 1
        except Exception as e:
            logger.exception(f"Unexpected error: {e}")
            return 1
