"""Tests for varietas.codec module."""

import json

import numpy as np
import pytest

from varietas.bimodule import FreeHomSpec
from varietas.codec import DotWriter, JsonCodec
from varietas.enums import Provenance
from varietas.exceptions import LatticeError, StructureError
from varietas.languages import FreeMonoidHom
from varietas.order import Fdl, FinitePoset
from varietas.qfa import accept_probability, rotation_machine
from varietas.recognition import recognized_languages, uquotient_of_hom
from varietas.regex import compile_regex
from varietas.varieties import derivative_closure


class TestJsonCodec:
    """Test cases for JsonCodec."""

    def test_dfa_round_trip(self, alternating):
        dfa = alternating.dfa
        assert JsonCodec.decode_dfa(JsonCodec.encode_dfa(dfa)) == dfa

    def test_language_is_minimized(self):
        """Test that a redundant dfa decodes to the canonical language."""
        data = {"alphabet": "a", "delta": [[1], [0]], "finals": [0, 1]}
        assert JsonCodec.decode_language(data) == compile_regex("a*")

    def test_missing_field(self):
        with pytest.raises(StructureError) as excinfo:
            JsonCodec.decode_dfa({"alphabet": "a"})
        assert excinfo.value.field == "delta"

    def test_state_count_mismatch(self):
        with pytest.raises(StructureError) as excinfo:
            JsonCodec.decode_dfa({"alphabet": "a", "states": 3, "delta": [[0]]})
        assert excinfo.value.field == "states"

    def test_delta_without_rows(self):
        with pytest.raises(StructureError) as excinfo:
            JsonCodec.decode_dfa({"alphabet": "a", "delta": 3})
        assert excinfo.value.field == "delta"

    def test_transition_out_of_range(self):
        with pytest.raises(StructureError):
            JsonCodec.decode_dfa({"alphabet": "a", "delta": [[4]]})

    def test_not_an_object(self):
        with pytest.raises(StructureError):
            JsonCodec.decode_dfa(["a"])

    def test_non_integer_table(self):
        with pytest.raises(StructureError) as excinfo:
            JsonCodec.decode_monoid({"table": [["x"]]})
        assert excinfo.value.field == "table"

    def test_lattice_round_trip(self):
        lattice = Fdl.chain(3)
        decoded = JsonCodec.decode_lattice(JsonCodec.encode_lattice(lattice))
        assert decoded.size == 3
        assert decoded.join.tolist() == lattice.join.tolist()

    def test_lattice_from_order_only(self):
        data = {"leq": [[1, 1], [0, 1]]}
        assert JsonCodec.decode_lattice(data).top == 1

    def test_lattice_field_disagrees(self):
        data = {**JsonCodec.encode_lattice(Fdl.chain(3)), "top": 0}
        with pytest.raises(StructureError):
            JsonCodec.decode_lattice(data)

    def test_poset_not_antisymmetric(self):
        with pytest.raises(LatticeError):
            JsonCodec.decode_poset({"leq": [[1, 1], [1, 1]]})

    def test_bimodule_round_trip(self, diamond):
        assert JsonCodec.decode_bimodule(JsonCodec.encode_bimodule(diamond)) == diamond

    def test_free_hom_round_trip(self, diamond):
        hom = FreeHomSpec.of("a", diamond, {"a": 1})
        decoded = JsonCodec.decode_free_hom(JsonCodec.encode_free_hom(hom))
        assert recognized_languages(decoded) == recognized_languages(hom)

    def test_free_hom_letters_not_a_mapping(self, diamond):
        encoded = JsonCodec.encode_free_hom(FreeHomSpec.of("a", diamond, {"a": 1}))
        data = {**encoded, "letters": [1]}
        with pytest.raises(StructureError):
            JsonCodec.decode_free_hom(data)

    def test_uquotient_round_trip(self, diamond):
        quotient = uquotient_of_hom(FreeHomSpec.of("a", diamond, {"a": 1}))
        decoded = JsonCodec.decode_uquotient(JsonCodec.encode_uquotient(quotient))
        assert decoded.val == quotient.val
        assert decoded.provenance is Provenance.FROM_BIMODULE

    def test_uquotient_unknown_provenance(self, diamond):
        quotient = uquotient_of_hom(FreeHomSpec.of("a", diamond, {"a": 1}))
        data = {**JsonCodec.encode_uquotient(quotient), "provenance": "guessed"}
        with pytest.raises(StructureError) as excinfo:
            JsonCodec.decode_uquotient(data)
        assert excinfo.value.field == "provenance"

    def test_variety_round_trip(self, alternating):
        variety = derivative_closure(alternating)
        decoded = JsonCodec.decode_variety(JsonCodec.encode_variety(variety))
        assert decoded.as_set() == variety.as_set()

    def test_hom_round_trip(self):
        hom = FreeMonoidHom.of("cd", "ab", {"c": "ab", "d": ""})
        assert JsonCodec.decode_hom(JsonCodec.encode_hom(hom)) == hom

    def test_cotheory(self, alternating):
        data = {
            "families": {"ab": [JsonCodec.encode_variety(derivative_closure(alternating))]},
            "homs": [JsonCodec.encode_hom(FreeMonoidHom.of("c", "ab", {"c": "ab"}))],
        }
        sample = JsonCodec.decode_cotheory(data)
        assert list(sample.families) == ["ab"]
        assert len(sample.homs) == 1

    def test_qfa_round_trip(self):
        """Test that a complex automaton survives encoding and simulates the same."""
        machine = rotation_machine()
        decoded = JsonCodec.decode_qfa(JsonCodec.encode_qfa(machine))
        for word in ("", "a", "aaa"):
            assert accept_probability(decoded, word) == pytest.approx(
                accept_probability(machine, word)
            )

    def test_qfa_real_matrices(self):
        data = {
            "alphabet": "a",
            "partition": "na",
            "unitaries": {
                "κ": np.eye(2).tolist(),
                "a": [[0, 1], [1, 0]],
                "$": np.eye(2).tolist(),
            },
        }
        assert accept_probability(JsonCodec.decode_qfa(data), "a") == pytest.approx(1.0)

    def test_qfa_states_mismatch(self):
        data = {**JsonCodec.encode_qfa(rotation_machine()), "states": 3}
        with pytest.raises(StructureError):
            JsonCodec.decode_qfa(data)


class TestFiles:
    """Test cases for reading and dumping JSON documents."""

    def test_read(self, tmp_path, even):
        path = tmp_path / "even.json"
        path.write_text(json.dumps(JsonCodec.encode_dfa(even.dfa)), encoding="utf-8")
        assert JsonCodec.decode_language(JsonCodec.read(path)) == even

    def test_read_missing_file(self, tmp_path):
        with pytest.raises(StructureError):
            JsonCodec.read(tmp_path / "absent.json")

    def test_read_invalid_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json", encoding="utf-8")
        with pytest.raises(StructureError):
            JsonCodec.read(path)

    def test_read_non_object(self, tmp_path):
        path = tmp_path / "list.json"
        path.write_text("[1, 2]", encoding="utf-8")
        with pytest.raises(StructureError):
            JsonCodec.read(path)

    def test_dumps_numpy_values(self):
        text = JsonCodec.dumps({"size": np.int64(4), "table": np.eye(2, dtype=int)})
        assert json.loads(text) == {"size": 4, "table": [[1, 0], [0, 1]]}


class TestDotWriter:
    """Test cases for DotWriter."""

    def test_dfa(self, even):
        text = DotWriter.dfa(even.dfa)
        assert text.startswith("digraph dfa {")
        assert "doublecircle" in text
        assert "0 -> 1" in text
        assert text.rstrip().endswith("}")

    def test_grouped_labels(self):
        text = DotWriter.dfa(compile_regex("(a|b)*").dfa)
        assert 'label="a,b"' in text

    def test_hasse_of_chain(self):
        text = DotWriter.hasse(FinitePoset.chain(3))
        assert "0 -> 1" in text
        assert "1 -> 2" in text
        assert "0 -> 2" not in text

    def test_uquotient_labels(self, diamond):
        quotient = uquotient_of_hom(FreeHomSpec.of("a", diamond, {"a": 1}))
        text = DotWriter.uquotient(quotient)
        assert text.startswith("digraph uquotient {")
        assert "circle" in text
