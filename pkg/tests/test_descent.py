import pytest

from vgroups import (FiniteGroup, NonIntegralQuantaleError, StructuralError,
                     VHom, Window, action_of_covering, descent_cover,
                     discrete_vgroup, enumerate_structures, identity_hom,
                     kernel_pair_groupoid, verify_cover_window)
from vgroups.descent import require_clean
from vgroups.errors import TheoremCheckError


class TestPiecewiseFormula:
    def test_below_diagonal_uses_base(self, z4_bool):
        cover, _ = descent_cover(z4_bool)
        for x, x2 in ((0, 1), (1, 3), (2, 2)):
            assert cover.relation((0, x), (1, x2)) == z4_bool.entry(x, x2)
            assert cover.relation((-1, x), (1, x2)) == z4_bool.entry(x, x2)

    def test_same_level_same_point_is_top(self, z4_bool, bool_q):
        cover, _ = descent_cover(z4_bool)
        for z in (-2, 0, 5):
            for x in range(4):
                assert cover.relation((z, x), (z, x)) == bool_q.top

    def test_otherwise_bottom(self, z4_bool, bool_q):
        cover, _ = descent_cover(z4_bool)
        assert cover.relation((1, 0), (0, 1)) == bool_q.bottom
        assert cover.relation((0, 0), (0, 1)) == bool_q.bottom

    def test_projection_and_section(self, z4_bool):
        cover, descriptor = descent_cover(z4_bool)
        for x in range(4):
            assert cover.projection(cover.section(x)) == x
        assert descriptor.as_dict()["base_size"] == 4

    def test_non_integral_rejected(self, non_integral_q, z2):
        obj = discrete_vgroup(z2, non_integral_q)
        with pytest.raises(NonIntegralQuantaleError):
            descent_cover(obj)


class TestWindowChecks:
    def test_discrete_base(self, z2_discrete):
        cover, _ = descent_cover(z2_discrete)
        report = verify_cover_window(cover, 2)
        assert report.ok
        # the finality join at distinct points is the bottom value
        q = z2_discrete.quantale
        assert cover.relation((0, 0), (1, 1)) == q.bottom

    def test_indiscrete_base_cover_is_separated(self, z2_indiscrete):
        cover, _ = descent_cover(z2_indiscrete)
        report = verify_cover_window(cover, 1)
        assert report.ok

    def test_radii_up_to_four(self, z4_bool):
        cover, _ = descent_cover(z4_bool)
        joins = []
        for radius in (1, 2, 3, 4):
            report = require_clean(verify_cover_window(cover, radius))
            joins.append(report.notes["finality_joins"])
        assert all(j == joins[0] for j in joins)

    def test_window_materialization_agrees(self, z4_law):
        cover, _ = descent_cover(z4_law)
        window = Window(cover, 2)
        assert window.agrees_with_formula()
        dump = window.as_dict()
        assert dump["radius"] == 2
        assert len(dump["elements"]) == 5 * 4

    def test_bad_radius(self, z4_bool):
        cover, _ = descent_cover(z4_bool)
        with pytest.raises(StructuralError):
            verify_cover_window(cover, 0)

    def test_every_smoke_object(self, bool_q, law2):
        for q in (bool_q, law2):
            for group in (FiniteGroup.cyclic(2), FiniteGroup.cyclic(3)):
                for vg in enumerate_structures(group, q):
                    cover, _ = descent_cover(vg)
                    assert verify_cover_window(cover, 1).ok


class TestKernelPairGroupoid:
    def test_clean_on_worked_example(self, z4_bool):
        cover, _ = descent_cover(z4_bool)
        report = kernel_pair_groupoid(cover, 2)
        assert report.ok
        assert report.notes["carrier_size"] == 25 * 4

    def test_meet_of_mixed_levels_is_bottom(self, z4_bool, bool_q):
        cover, _ = descent_cover(z4_bool)
        v = bool_q.meet(cover.relation((0, 0), (1, 1)),
                        cover.relation((1, 0), (0, 1)))
        assert v == bool_q.bottom


class TestAction:
    def test_identity_covering(self, z4_bool):
        cover, _ = descent_cover(z4_bool)
        report = action_of_covering(identity_hom(z4_bool), cover, 2)
        assert report.ok

    def test_mono_covering(self, z4_bool, z2_discrete):
        cover, _ = descent_cover(z4_bool)
        mono = VHom(z2_discrete, z4_bool, [0, 2])
        report = action_of_covering(mono, cover, 3)
        assert report.ok
        assert report.notes["carrier_size"] == 7 * 2

    def test_covering_with_separated_non_discrete_kernel(self, z4_law, law2):
        # projecting away a chain-valued factor: the kernel carries values
        # strictly between unit and bottom yet stays separated
        from vgroups import (classify_object, is_covering, kernel, product,
                             structure_from_delta, validate_hom)
        factor = structure_from_delta(FiniteGroup.cyclic(2), law2, (0, 1))
        prod = product(z4_law, factor)
        projection = VHom(prod, z4_law, [i // 2 for i in range(8)])
        assert validate_hom(projection).ok and is_covering(projection)
        ker, _ = kernel(projection)
        cls = classify_object(ker)
        assert cls.separated and not cls.discrete
        cover, _ = descent_cover(z4_law)
        report = action_of_covering(projection, cover, 2)
        assert report.ok

    def test_non_covering_rejected(self, z4_bool, z2_indiscrete):
        # the zero map out of a nontrivial indiscrete object has an
        # indiscrete, hence non-separated, kernel
        cover, _ = descent_cover(z4_bool)
        bad = VHom(z2_indiscrete, z4_bool, [0, 0])
        with pytest.raises(StructuralError, match="not a covering"):
            action_of_covering(bad, cover, 2)

    def test_wrong_base_rejected(self, z4_bool, z2_discrete):
        cover, _ = descent_cover(z4_bool)
        with pytest.raises(StructuralError):
            action_of_covering(identity_hom(z2_discrete), cover, 2)


def test_require_clean_raises():
    from vgroups.reports import ValidationReport
    rep = ValidationReport(subject="x")
    rep.add("some-law", (1,))
    with pytest.raises(TheoremCheckError):
        require_clean(rep)
