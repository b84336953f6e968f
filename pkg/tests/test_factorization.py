import itertools

import pytest

from vgroups import (FiniteGroup, NonIntegralQuantaleError, VHom,
                     classify_morphism, classify_object, discrete_vgroup,
                     enumerate_homs, enumerate_structures, identity_hom,
                     is_covering, is_isomorphism, kernel,
                     monotone_light_factorize, product, pullback,
                     reflective_factorize, trivial_vgroup, zero_hom)
from vgroups.vgroup import factorization_middle_iso


class TestClassifyMorphism:
    def test_identity_all_flags(self, z4_bool):
        rep = classify_morphism(identity_hom(z4_bool))
        assert rep.reflector_inverted and rep.trivial_covering
        assert rep.stably_inverted and rep.covering

    def test_worked_quotient(self, quotient_to_z2):
        rep = classify_morphism(quotient_to_z2)
        assert rep.reflector_inverted
        assert rep.stably_inverted
        assert not rep.trivial_covering
        assert not rep.covering

    def test_product_projection_is_trivial_covering(self, bool_q, z2_discrete):
        # projecting away a discrete factor: torsion parts match and the
        # structure is the meet of the pulled-back ones
        prod = product(z2_discrete, z2_discrete)
        proj = VHom(prod, z2_discrete, [0, 0, 1, 1])
        rep = classify_morphism(proj)
        assert rep.trivial_covering and rep.covering

    def test_inclusion_into_product_is_trivial_covering(self, bool_q, z2_discrete):
        prod = product(z2_discrete, z2_discrete)
        inc = VHom(z2_discrete, prod, [0, 3])
        rep = classify_morphism(inc)
        assert rep.trivial_covering

    def test_zero_to_indiscrete_is_inverted(self, bool_q, z2_indiscrete):
        f = zero_hom(trivial_vgroup(bool_q), z2_indiscrete)
        rep = classify_morphism(f)
        # the reflector collapses the indiscrete codomain to a point
        assert rep.reflector_inverted
        assert not rep.stably_inverted  # not surjective, so not a normal epi

    def test_cross_checks_recorded(self, quotient_to_z2):
        rep = classify_morphism(quotient_to_z2)
        assert all(rep.cross_checks.values())

    def test_non_integral_rejected(self, non_integral_q, z2):
        obj = discrete_vgroup(z2, non_integral_q)
        with pytest.raises(NonIntegralQuantaleError):
            classify_morphism(identity_hom(obj))


class TestCovering:
    def test_mono_is_covering(self, z2_discrete, z4_bool):
        mono = VHom(z2_discrete, z4_bool, [0, 2])
        assert is_covering(mono)

    def test_worked_quotient_is_not(self, quotient_to_z2):
        assert not is_covering(quotient_to_z2)
        ker, _ = kernel(quotient_to_z2)
        assert classify_object(ker).indiscrete and ker.size == 2

    def test_discrete_kernel_gives_covering(self, bool_q, z2_discrete):
        z4_discrete = discrete_vgroup(FiniteGroup.cyclic(4), bool_q)
        f = VHom(z4_discrete, z2_discrete, [0, 1, 0, 1])
        ker, _ = kernel(f)
        assert classify_object(ker).discrete
        assert is_covering(f)

    def test_matches_kernel_separation_everywhere(self, bool_q, law2):
        z4 = FiniteGroup.cyclic(4)
        for q in (bool_q, law2):
            objs = enumerate_structures(z4, q)
            for dom, cod in itertools.product(objs, repeat=2):
                for f in enumerate_homs(dom, cod):
                    ker, _ = kernel(f)
                    assert is_covering(f) == classify_object(ker).separated


class TestReflectiveFactorize:
    def test_trivial_covering_gives_iso_left_leg(self, bool_q, z2_discrete):
        prod = product(z2_discrete, z2_discrete)
        inc = VHom(z2_discrete, prod, [0, 3])
        fact = reflective_factorize(inc)
        assert is_isomorphism(fact.e)

    def test_inverted_gives_iso_right_leg(self, quotient_to_z2):
        fact = reflective_factorize(quotient_to_z2)
        assert is_isomorphism(fact.m)
        assert fact.middle.size == 2

    def test_composite(self, z4_bool, z2_indiscrete, bool_q):
        for f in enumerate_homs(z4_bool, z2_indiscrete):
            fact = reflective_factorize(f)
            assert fact.e.then(fact.m) == f

    def test_every_smoke_hom_postverifies(self, law2):
        z4 = FiniteGroup.cyclic(4)
        z2 = FiniteGroup.cyclic(2)
        objs = enumerate_structures(z4, law2) + enumerate_structures(z2, law2)
        for dom, cod in itertools.product(objs, repeat=2):
            for f in enumerate_homs(dom, cod):
                fact = reflective_factorize(f)
                rep_e = classify_morphism(fact.e)
                rep_m = classify_morphism(fact.m)
                assert rep_e.reflector_inverted and rep_m.trivial_covering


class TestMonotoneLightFactorize:
    def test_separated_kernel_gives_iso_left_leg(self, bool_q, z2_discrete):
        z4_discrete = discrete_vgroup(FiniteGroup.cyclic(4), bool_q)
        f = VHom(z4_discrete, z2_discrete, [0, 1, 0, 1])
        fact = monotone_light_factorize(f)
        assert is_isomorphism(fact.e)

    def test_worked_quotient(self, quotient_to_z2):
        fact = monotone_light_factorize(quotient_to_z2)
        assert fact.e.mapping == quotient_to_z2.mapping
        assert is_isomorphism(fact.m)

    def test_zero_from_indiscrete(self, z2_indiscrete, z2_discrete):
        f = zero_hom(z2_indiscrete, z2_discrete)
        fact = monotone_light_factorize(f)
        assert fact.middle.size == 1
        assert classify_morphism(fact.m).covering

    def test_uniqueness_against_alternatives(self, bool_q, quotient_to_z2):
        fact = monotone_light_factorize(quotient_to_z2)
        # an alternative splitting with the same class flags through an
        # equal-size middle must be connected by a commuting isomorphism
        alt_middle = quotient_to_z2.cod
        e2 = quotient_to_z2
        m2 = identity_hom(alt_middle)
        assert classify_morphism(e2).stably_inverted
        assert classify_morphism(m2).covering
        iso = factorization_middle_iso(fact.e, fact.m, e2, m2)
        assert iso is not None


class TestStability:
    def test_stably_inverted_pullbacks_stay_inverted(self, bool_q, z4_bool,
                                                     quotient_to_z2, z2_discrete):
        f = quotient_to_z2
        assert classify_morphism(f).stably_inverted
        for g in enumerate_homs(z2_discrete, z2_discrete):
            _, _, pulled = pullback(f, g)
            assert classify_morphism(pulled).reflector_inverted

    def test_trivial_coverings_closed_under_pullback(self, bool_q, z2_discrete):
        prod = product(z2_discrete, z2_discrete)
        inc = VHom(z2_discrete, prod, [0, 3])
        for g in enumerate_homs(prod, prod):
            p, pi1, pi2 = pullback(inc, g)
            assert classify_morphism(pi2).trivial_covering
