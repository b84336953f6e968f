import pytest

from vgroups import FiniteGroup, StructuralError, group_isomorphism, quotient_group, subgroup_group


class TestConstruction:
    def test_cyclic(self):
        z4 = FiniteGroup.cyclic(4)
        assert z4.size == 4
        assert z4.identity == 0
        assert z4.inv(1) == 3
        assert z4.op(2, 3) == 1
        assert z4.is_abelian

    def test_trivial(self):
        assert FiniteGroup.trivial().size == 1

    def test_symmetric3(self):
        s3 = FiniteGroup.symmetric3()
        assert s3.size == 6
        assert not s3.is_abelian
        # every element composed with its inverse gives the identity
        for x in range(6):
            assert s3.op(x, s3.inv(x)) == s3.identity

    def test_direct_product(self):
        k4 = FiniteGroup.direct_product(FiniteGroup.cyclic(2), FiniteGroup.cyclic(2))
        assert k4.size == 4
        assert k4.is_abelian
        assert all(k4.op(x, x) == k4.identity for x in range(4))

    def test_rejects_non_associative(self):
        with pytest.raises(StructuralError):
            FiniteGroup([[0, 1], [1, 1]])

    def test_rejects_no_identity(self):
        with pytest.raises(StructuralError):
            FiniteGroup([[0, 0], [0, 0]])

    def test_rejects_ragged(self):
        with pytest.raises(StructuralError):
            FiniteGroup([[0, 1], [1]])


class TestSubgroups:
    def test_all_subgroups_z4(self):
        z4 = FiniteGroup.cyclic(4)
        assert z4.all_subgroups() == [(0,), (0, 1, 2, 3), (0, 2)]

    def test_s3_normal_subgroups(self):
        s3 = FiniteGroup.symmetric3()
        normals = s3.all_normal_subgroups()
        sizes = sorted(len(n) for n in normals)
        assert sizes == [1, 3, 6]
        # and a two-element subgroup exists but is not normal
        two = [s for s in s3.all_subgroups() if len(s) == 2]
        assert two and all(s3.normality_witness(s) is not None for s in two)

    def test_normal_closure(self):
        s3 = FiniteGroup.symmetric3()
        two = [s for s in s3.all_subgroups() if len(s) == 2][0]
        closure = s3.normal_closure(two)
        assert s3.is_normal_subgroup(closure)
        assert set(two) <= set(closure)

    def test_quotient(self):
        z4 = FiniteGroup.cyclic(4)
        q, proj = quotient_group(z4, (0, 2))
        assert q.size == 2
        assert proj == (0, 1, 0, 1)
        with pytest.raises(StructuralError):
            quotient_group(z4, (0, 1))

    def test_subgroup_group(self):
        z4 = FiniteGroup.cyclic(4)
        sub = subgroup_group(z4, (0, 2))
        assert sub.size == 2
        assert sub.names == ("0", "2")
        with pytest.raises(StructuralError):
            subgroup_group(z4, (0, 3))

    def test_cosets_deterministic(self):
        z4 = FiniteGroup.cyclic(4)
        assert z4.cosets((0, 2)) == [(0, 2), (1, 3)]


class TestIsomorphism:
    def test_z4_not_klein(self):
        z4 = FiniteGroup.cyclic(4)
        k4 = FiniteGroup.direct_product(FiniteGroup.cyclic(2), FiniteGroup.cyclic(2))
        assert group_isomorphism(z4, k4) is None

    def test_z6_is_z2_x_z3(self):
        z6 = FiniteGroup.cyclic(6)
        other = FiniteGroup.direct_product(FiniteGroup.cyclic(2), FiniteGroup.cyclic(3))
        assert group_isomorphism(z6, other) is not None

    def test_self_iso(self):
        s3 = FiniteGroup.symmetric3()
        mapping = group_isomorphism(s3, s3)
        assert mapping is not None
