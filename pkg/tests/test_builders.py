import json

import pytest

from vgroups import classify_object, standard_suite, validate_vgroup
from vgroups.builders import group_roster


class TestRoster:
    def test_groups_present(self):
        roster = group_roster()
        assert set(roster) == {"Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z2xZ2", "S3"}
        assert roster["S3"].size == 6 and not roster["S3"].is_abelian
        assert roster["Z2xZ2"].size == 4


@pytest.fixture(scope="module")
def suite():
    return standard_suite("smoke")


class TestSmokeSuite:

    def test_level_composition(self, suite):
        assert [name for name, _ in suite.quantales] == ["boolean", "lawvere_chain_2"]
        assert [name for name, _ in suite.groups] == ["Z1", "Z2", "Z3", "Z4"]

    def test_object_counts(self, suite):
        def count(qname, gname):
            return sum(1 for o in suite.objects
                       if o.quantale_name == qname and o.group_name == gname)
        assert count("boolean", "Z2") == 2
        assert count("lawvere_chain_2", "Z2") == 3
        assert count("boolean", "Z1") == 1
        assert count("lawvere_chain_2", "Z1") == 1
        assert count("lawvere_chain_2", "Z3") == 5

    def test_every_object_validates(self, suite):
        for obj in suite.objects:
            assert validate_vgroup(obj.vgroup).ok

    def test_boolean_objects_symmetric(self, suite):
        for obj in suite.objects_over("boolean"):
            assert classify_object(obj.vgroup).symmetric

    def test_regeneration_bit_stable(self, suite):
        again = standard_suite("smoke")
        assert [o.vgroup for o in again.objects] == [o.vgroup for o in suite.objects]
        assert again.hom_sets == suite.hom_sets

    def test_no_truncation_at_smoke(self, suite):
        assert all(not hs.truncated for hs in suite.hom_sets)

    def test_hom_sets_only_within_a_quantale(self, suite):
        for hs in suite.hom_sets:
            assert (suite.objects[hs.dom].quantale_name
                    == suite.objects[hs.cod].quantale_name)

    def test_truncation_marker(self):
        tiny = standard_suite("smoke", per_pair_cap=10)
        assert any(hs.truncated for hs in tiny.hom_sets)
        for hs in tiny.hom_sets:
            if hs.truncated:
                assert hs.homs == () and hs.candidates > 10

    def test_bad_level(self):
        with pytest.raises(ValueError):
            standard_suite("enormous")

    def test_export_documents_round_trip(self, suite):
        from vgroups.document import document_text, parse_document
        exported = suite.export_documents()
        assert len(exported) == len(suite.objects)
        for obj in suite.objects:
            doc = parse_document(exported[obj.name])
            assert doc.vgroup == obj.vgroup
            text = document_text(doc)
            assert document_text(parse_document(json.loads(text))) == text


@pytest.mark.slow
def test_full_suite_generates():
    suite = standard_suite("full")
    assert [name for name, _ in suite.quantales] == [
        "boolean", "lawvere_chain_2", "ultrametric_chain_3", "lawvere_chain_3"]
    assert [name for name, _ in suite.groups] == [
        "Z1", "Z2", "Z3", "Z4", "Z2xZ2", "Z5", "S3"]
    for obj in suite.objects:
        assert validate_vgroup(obj.vgroup).ok
    # nonabelian boolean objects are exactly the normal-subgroup indicators
    s3_bool = [o for o in suite.objects
               if o.group_name == "S3" and o.quantale_name == "boolean"]
    assert len(s3_bool) == 3
