"""
JSON codecs and Graphviz DOT writers for the workbench structures.

Decoders accept plain dicts (as produced by `json.load`) and raise
StructureError naming the offending field on malformed input.
"""

import json
import logging
from pathlib import Path
from typing import Any, Mapping, Sequence, Union

import numpy as np

from .bimodule import FreeHomSpec, LatticeBimodule
from .enums import Provenance
from .exceptions import StructureError
from .languages import Alphabet, Dfa, FreeMonoidHom, Machine, RegularLanguage, minimize
from .monoid import FiniteMonoid
from .order import Fdl, FinitePoset
from .qfa import Kwqfa, parse_partition
from .uquotient import UQuotient
from .varieties import CotheorySample, LocalBasicVariety

logger = logging.getLogger(__name__)

Json = dict[str, Any]


def _field(data: Mapping[str, Any], key: str, what: str) -> Any:
    if not isinstance(data, Mapping):
        raise StructureError(f"{what} must be a JSON object", what)
    try:
        return data[key]
    except KeyError:
        raise StructureError(f"{what} is missing field {key!r}", key) from None


def _table(value: Any, key: str) -> np.ndarray:
    try:
        return np.array(value, dtype=np.int64)
    except (TypeError, ValueError) as e:
        raise StructureError(f"Field {key!r} is not an integer table: {e}", key) from e


class JsonCodec:
    """Static encoders/decoders between workbench objects and JSON-ready dicts."""

    @staticmethod
    def encode_dfa(dfa: Dfa) -> Json:
        return {
            "alphabet": str(dfa.alphabet),
            "states": dfa.size,
            "init": dfa.init,
            "delta": [list(row) for row in dfa.delta],
            "finals": sorted(dfa.finals),
        }

    @staticmethod
    def decode_dfa(data: Mapping[str, Any]) -> Dfa:
        alphabet = _field(data, "alphabet", "dfa")
        delta = _field(data, "delta", "dfa")
        try:
            rows = len(delta)
            states = data.get("states", rows)
            if states != rows:
                raise StructureError(f"dfa declares {states} states but has {rows} rows", "states")
            return Dfa.build(alphabet, delta, int(data.get("init", 0)), data.get("finals", []))
        except (TypeError, ValueError) as e:
            raise StructureError(f"Malformed dfa: {e}", "delta") from e

    @staticmethod
    def decode_language(data: Mapping[str, Any]) -> RegularLanguage:
        return minimize(JsonCodec.decode_dfa(data))

    @staticmethod
    def encode_poset(poset: FinitePoset) -> Json:
        return {"size": poset.size, "leq": poset.leq.astype(int).tolist()}

    @staticmethod
    def decode_poset(data: Mapping[str, Any]) -> FinitePoset:
        leq = _table(_field(data, "leq", "poset"), "leq").astype(bool)
        poset = FinitePoset(leq)
        if poset.size != data.get("size", poset.size):
            raise StructureError("poset size does not match its order table", "size")
        poset.validate()
        return poset

    @staticmethod
    def encode_lattice(lattice: Fdl) -> Json:
        return {
            "size": lattice.size,
            "leq": lattice.leq.astype(int).tolist(),
            "bottom": lattice.bottom,
            "top": lattice.top,
            "join": lattice.join.tolist(),
            "meet": lattice.meet.tolist(),
        }

    @staticmethod
    def decode_lattice(data: Mapping[str, Any]) -> Fdl:
        leq = _table(_field(data, "leq", "lattice"), "leq").astype(bool)
        join = _table(data["join"], "join") if "join" in data else None
        meet = _table(data["meet"], "meet") if "meet" in data else None
        lattice = Fdl(leq, join, meet)
        for key in ("size", "bottom", "top"):
            if key in data and data[key] != getattr(lattice, key):
                raise StructureError(f"lattice field {key!r} disagrees with the order", key)
        return lattice

    @staticmethod
    def encode_monoid(monoid: FiniteMonoid) -> Json:
        return {"size": monoid.size, "identity": monoid.identity, "table": monoid.table.tolist()}

    @staticmethod
    def decode_monoid(data: Mapping[str, Any]) -> FiniteMonoid:
        table = _table(_field(data, "table", "monoid"), "table")
        monoid = FiniteMonoid(table, int(data.get("identity", 0)))
        if data.get("size", monoid.size) != monoid.size:
            raise StructureError("monoid size does not match its table", "size")
        return monoid

    @staticmethod
    def encode_bimodule(bimodule: LatticeBimodule) -> Json:
        return {
            "monoid": JsonCodec.encode_monoid(bimodule.monoid),
            "lattice": JsonCodec.encode_lattice(bimodule.lattice),
            "iota": bimodule.iota.tolist(),
            "act_left": bimodule.act_left.tolist(),
            "act_right": bimodule.act_right.tolist(),
        }

    @staticmethod
    def decode_bimodule(data: Mapping[str, Any]) -> LatticeBimodule:
        return LatticeBimodule(
            JsonCodec.decode_monoid(_field(data, "monoid", "bimodule")),
            JsonCodec.decode_lattice(_field(data, "lattice", "bimodule")),
            _table(_field(data, "iota", "bimodule"), "iota"),
            _table(_field(data, "act_left", "bimodule"), "act_left"),
            _table(_field(data, "act_right", "bimodule"), "act_right"),
        )

    @staticmethod
    def encode_free_hom(hom: FreeHomSpec) -> Json:
        return {
            "alphabet": str(hom.alphabet),
            "bimodule": JsonCodec.encode_bimodule(hom.target),
            "letters": dict(zip(hom.alphabet, hom.letter_image)),
        }

    @staticmethod
    def decode_free_hom(data: Mapping[str, Any]) -> FreeHomSpec:
        letters = _field(data, "letters", "hom")
        if not isinstance(letters, Mapping):
            raise StructureError("letters must map symbols to monoid elements", "letters")
        return FreeHomSpec.of(
            _field(data, "alphabet", "hom"),
            JsonCodec.decode_bimodule(_field(data, "bimodule", "hom")),
            letters,
        )

    @staticmethod
    def encode_uquotient(quotient: UQuotient) -> Json:
        machine = quotient.machine
        return {
            "machine": {
                "alphabet": str(machine.alphabet),
                "states": machine.size,
                "init": machine.init,
                "delta": [list(row) for row in machine.delta],
            },
            "val": list(quotient.val),
            "lattice": JsonCodec.encode_lattice(quotient.codomain),
            "provenance": quotient.provenance.value,
        }

    @staticmethod
    def decode_uquotient(data: Mapping[str, Any]) -> UQuotient:
        raw = _field(data, "machine", "uquotient")
        dfa = JsonCodec.decode_dfa({**raw, "finals": []})
        try:
            provenance = Provenance(data.get("provenance", Provenance.EXTERNAL.value))
        except ValueError:
            raise StructureError(
                f"Unknown provenance {data.get('provenance')!r}", "provenance"
            ) from None
        return UQuotient(
            JsonCodec.decode_lattice(_field(data, "lattice", "uquotient")),
            Machine(dfa.alphabet, dfa.init, dfa.delta),
            tuple(int(v) for v in _field(data, "val", "uquotient")),
            provenance,
        )

    @staticmethod
    def encode_variety(variety: LocalBasicVariety) -> Json:
        return {
            "alphabet": str(variety.alphabet) if variety.alphabet is not None else None,
            "languages": [JsonCodec.encode_dfa(language.dfa) for language in variety],
        }

    @staticmethod
    def decode_variety(data: Mapping[str, Any]) -> LocalBasicVariety:
        members = _field(data, "languages", "variety")
        if not isinstance(members, list):
            raise StructureError("languages must be a list of dfas", "languages")
        return LocalBasicVariety.of(
            (JsonCodec.decode_language(member) for member in members), data.get("alphabet")
        )

    @staticmethod
    def encode_hom(hom: FreeMonoidHom) -> Json:
        return {
            "source": str(hom.source),
            "target": str(hom.target),
            "images": dict(zip(hom.source, hom.images)),
        }

    @staticmethod
    def decode_hom(data: Mapping[str, Any]) -> FreeMonoidHom:
        images = _field(data, "images", "hom")
        if not isinstance(images, Mapping):
            raise StructureError("images must map source letters to words", "images")
        return FreeMonoidHom.of(
            _field(data, "source", "hom"), _field(data, "target", "hom"), images
        )

    @staticmethod
    def decode_cotheory(data: Mapping[str, Any]) -> CotheorySample:
        families = _field(data, "families", "cotheory")
        if not isinstance(families, Mapping):
            raise StructureError("families must map alphabets to lists of varieties", "families")
        return CotheorySample(
            {
                str(Alphabet.of(key)): [JsonCodec.decode_variety(v) for v in members]
                for key, members in families.items()
            },
            [JsonCodec.decode_hom(h) for h in data.get("homs", [])],
        )

    @staticmethod
    def encode_qfa(automaton: Kwqfa) -> Json:
        return {
            "states": automaton.size,
            "alphabet": str(automaton.alphabet),
            "partition": "".join(kind.value for kind in automaton.partition),
            "unitaries": {
                symbol: [[[z.real, z.imag] for z in row] for row in matrix.tolist()]
                for symbol, matrix in automaton.unitaries.items()
            },
            "init": automaton.init,
        }

    @staticmethod
    def decode_qfa(data: Mapping[str, Any]) -> Kwqfa:
        raw = _field(data, "unitaries", "qfa")
        if not isinstance(raw, Mapping):
            raise StructureError("unitaries must map symbols to matrices", "unitaries")
        partition = parse_partition(_field(data, "partition", "qfa"))
        if data.get("states", len(partition)) != len(partition):
            raise StructureError("qfa states do not match the partition", "states")
        unitaries = {}
        for symbol, matrix in raw.items():
            try:
                array = np.array(matrix, dtype=np.float64)
            except (TypeError, ValueError) as e:
                raise StructureError(
                    f"Matrix for {symbol!r} is not numeric: {e}", "unitaries"
                ) from e
            # entries are either reals or [re, im] pairs
            if array.ndim == 3 and array.shape[-1] == 2:
                unitaries[symbol] = array[..., 0] + 1j * array[..., 1]
            else:
                unitaries[symbol] = array.astype(np.complex128)
        return Kwqfa(
            Alphabet.of(_field(data, "alphabet", "qfa")),
            unitaries,
            int(data.get("init", 0)),
            partition,
        )

    @staticmethod
    def read(path: Union[str, Path]) -> Json:
        """Load a JSON document; unreadable or malformed files raise StructureError."""
        try:
            with open(path, "r", encoding="utf-8") as file:
                data = json.load(file)
        except FileNotFoundError:
            raise StructureError(f"Input file not found: {path}", "path") from None
        except json.JSONDecodeError as e:
            logger.error(f"Error parsing JSON file {path}: {e}")
            raise StructureError(f"Invalid JSON in {path}: {e.msg}", "path") from e
        if not isinstance(data, dict):
            raise StructureError(f"Top level of {path} must be a JSON object", "path")
        return data

    @staticmethod
    def dumps(data: Any) -> str:
        return json.dumps(data, indent=2, ensure_ascii=False, default=_fallback)


def _fallback(value: Any) -> Any:
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, (set, frozenset)):
        return sorted(value, key=str)
    return str(value)


def _quote(label: object) -> str:
    return '"' + str(label).replace("\\", "\\\\").replace('"', '\\"') + '"'


class DotWriter:
    """Graphviz renderings of automata and Hasse diagrams."""

    @staticmethod
    def machine(
        machine: Machine,
        finals: Sequence[int] = (),
        labels: Union[Sequence[object], None] = None,
        name: str = "machine",
    ) -> str:
        lines = [f"digraph {name} {{", "  rankdir=LR;", '  start [shape=point, label=""];']
        for q in range(machine.size):
            shape = "doublecircle" if q in finals else "circle"
            text = f"{q}: {labels[q]}" if labels is not None else str(q)
            lines.append(f"  {q} [shape={shape}, label={_quote(text)}];")
        lines.append(f"  start -> {machine.init};")
        for q, row in enumerate(machine.delta):
            grouped: dict[int, list[str]] = {}
            for symbol, target in zip(machine.alphabet, row):
                grouped.setdefault(target, []).append(symbol)
            for target, symbols in grouped.items():
                lines.append(f"  {q} -> {target} [label={_quote(','.join(symbols))}];")
        lines.append("}")
        return "\n".join(lines)

    @staticmethod
    def dfa(dfa: Dfa) -> str:
        return DotWriter.machine(dfa, sorted(dfa.finals), name="dfa")

    @staticmethod
    def uquotient(quotient: UQuotient) -> str:
        return DotWriter.machine(quotient.machine, labels=quotient.val, name="uquotient")

    @staticmethod
    def hasse(poset: FinitePoset, name: str = "hasse") -> str:
        """Cover relation drawn bottom to top."""
        lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box];"]
        for x in range(poset.size):
            label = poset.labels[x] if poset.labels is not None else x
            lines.append(f"  {x} [label={_quote(label)}];")
        for x, y in zip(*np.nonzero(poset.covers)):
            lines.append(f"  {x} -> {y} [arrowhead=none];")
        lines.append("}")
        return "\n".join(lines)
