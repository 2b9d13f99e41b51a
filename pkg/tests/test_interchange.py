"""Tests for the .acm.json interchange format."""

import json

import pytest

from acm_toolkit.core.exceptions import DanglingReference, ParseError, SchemaError
from acm_toolkit.core.strings import MultiLangString
from acm_toolkit.core.types import Notation
from acm_toolkit.interchange import dumps, load, load_file, save, save_file, write_bytes
from acm_toolkit.model import Claim

from .corpus import SEEDED, WELL_FORMED, cae_r2, choice_pattern, etcs, gsn_pattern, gsn_r1

BUILDERS = {
    **{f"seeded {name}": build for name, build in SEEDED.items()},
    **{f"well-formed {name}": build for name, build in WELL_FORMED.items()},
    "R1": gsn_r1,
    "R2": cae_r2,
    "ETCS": etcs,
    "pattern": gsn_pattern,
    "choice": choice_pattern,
}


def envelope(*elements, notation="sacm"):
    return json.dumps({"format_version": "1.0", "notation": notation, "elements": list(elements)})


class TestRoundTrip:
    """save and load agree."""

    @pytest.mark.parametrize("name", sorted(BUILDERS))
    def test_round_trip(self, name):
        """Loading a saved document gives the same document."""
        doc = BUILDERS[name]()
        assert load(save(doc), check_references=False) == doc

    @pytest.mark.parametrize("name", sorted(BUILDERS))
    def test_fixed_point(self, name):
        """Saving a loaded document reproduces the bytes."""
        data = save(BUILDERS[name]())
        assert save(load(data, check_references=False)) == data

    def test_canonical_form(self, etcs):
        """Output is sorted, indented and ends with one newline."""
        data = save(etcs)
        text = data.decode("utf-8")
        assert text.endswith("}\n") and not text.endswith("\n\n")
        assert "\r" not in text
        parsed = json.loads(text)
        assert list(parsed) == ["elements", "format_version", "notation"]
        gids = [record["gid"] for record in parsed["elements"]]
        assert gids == sorted(gids)
        assert text.startswith('{\n  "elements": [')

    def test_insertion_order_irrelevant(self):
        """Element order in the document does not change the bytes."""
        doc = etcs()
        reordered = doc.copy()
        reordered.elements = dict(reversed(list(reordered.elements.items())))
        assert save(doc) == save(reordered)

    def test_any_formatting_accepted(self, r1):
        """Compact JSON loads to the same document."""
        compact = json.dumps(json.loads(save(r1)), separators=(",", ":"))
        assert load(compact) == r1

    def test_non_ascii(self):
        """Text is written as UTF-8, not escaped."""
        doc = etcs()
        doc.get("APB1.G1").content = MultiLangString.of("Größe ist sicher")
        assert "Größe".encode() in save(doc)

    def test_dumps(self):
        """dumps uses the same canonical form for plain values."""
        assert dumps({"b": 1, "a": [1]}) == b'{\n  "a": [\n    1\n  ],\n  "b": 1\n}\n'


class TestLoadErrors:
    """Malformed input."""

    def test_parse_error_position(self):
        """Malformed JSON reports its line and column."""
        with pytest.raises(ParseError) as exc:
            load('{\n  "notation": "sacm",\n  "elements": [,]\n}')
        assert (exc.value.line, exc.value.col) == (3, 16)

    def test_not_utf8(self):
        """Bytes that are not UTF-8 do not parse."""
        with pytest.raises(ParseError):
            load(b"\xff\xfe")

    @pytest.mark.parametrize(
        "data,path",
        [
            ("[]", "$"),
            ('{"format_version": "2.0"}', "$.format_version"),
            ('{"notation": "UML"}', "$.notation"),
            ('{"elements": [], "extra": true}', "$.extra"),
            (envelope({"gid": "C1"}), "$.elements[0].kind"),
            (envelope({"kind": "Axiom", "gid": "C1"}), "$.elements[0].kind"),
            (envelope({"kind": "Goal", "gid": "G1"}), "$.elements[0].kind"),
            (envelope({"kind": "Claim"}), "$.elements[0].gid"),
            (
                envelope({"kind": "Claim", "gid": "C1"}, {"kind": "Claim", "gid": "C1"}),
                "$.elements[1].gid",
            ),
            (
                envelope({"kind": "Claim", "gid": "C1", "is_citation": "often"}),
                "$.elements[0].is_citation",
            ),
        ],
    )
    def test_schema_error_paths(self, data, path):
        """Schema errors name the offending JSON path."""
        with pytest.raises(SchemaError) as exc:
            load(data)
        assert exc.value.path == path

    def test_ownership_cycle(self):
        """Owners must form a forest."""
        data = envelope(
            {"kind": "ArgumentPackage", "gid": "P1", "owner_gid": "P2"},
            {"kind": "ArgumentPackage", "gid": "P2", "owner_gid": "P1"},
        )
        with pytest.raises(SchemaError) as exc:
            load(data)
        assert exc.value.path == "$.elements[0].owner_gid"

    def test_dangling_references(self):
        """Every unresolved reference is listed."""
        data = envelope(
            {"kind": "Claim", "gid": "C1", "cited_element": "X9", "is_citation": True},
            {
                "kind": "AssertedInference",
                "gid": "R1",
                "source_ids": ["X2"],
                "target_ids": ["C1"],
            },
        )
        with pytest.raises(DanglingReference) as exc:
            load(data)
        assert exc.value.gids == ["X2", "X9"]

        doc = load(data, check_references=False)
        assert doc.get("C1").cited_element == "X9"

    def test_gsn_kind_in_gsn_document(self):
        """GSN kinds load in GSN documents."""
        doc = load(envelope({"kind": "Goal", "gid": "G1"}, notation="gsn"))
        assert doc.notation == Notation.GSN
        assert "G1" in doc


class TestFiles:
    """Reading and writing files."""

    def test_save_and_load_file(self, tmp_path, etcs):
        """Files round-trip and remember their directory."""
        path = tmp_path / "etcs.acm.json"
        save_file(etcs, path)
        doc = load_file(path)
        assert doc == etcs
        assert doc.base_dir == tmp_path.resolve()
        assert path.read_bytes() == save(etcs)

    def test_write_bytes_overwrites(self, tmp_path):
        """write_bytes replaces the previous content."""
        path = tmp_path / "out.json"
        write_bytes(path, b"first")
        write_bytes(path, b"second")
        assert path.read_bytes() == b"second"

    def test_loaded_elements_are_typed(self, write_doc, etcs):
        """Records come back as their model classes."""
        doc = load_file(write_doc(etcs))
        assert isinstance(doc.get("APB1.G1"), Claim)
        assert doc.get("APB1.G1").owner_gid == "APB1"
