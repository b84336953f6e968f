import itertools

import pytest
from hypothesis import given, settings, strategies as st

from vgroups import StructuralError, VRel, boolean, lawvere_chain, vrel_compose


def all_rels(q, n, m):
    for flat in itertools.product(range(q.size), repeat=n * m):
        yield VRel(q, [flat[i * m:(i + 1) * m] for i in range(n)])


def bool_matmul(r, s):
    """Independent oracle over the boolean quantale: or-of-ands."""
    n, k, m = r.src_size, r.dst_size, s.dst_size
    return [[int(any(r.entry(x, y) and s.entry(y, z) for y in range(k)))
             for z in range(m)] for x in range(n)]


class TestBasics:
    def test_identity_shape(self, bool_q, law2):
        assert VRel.identity(bool_q, 2).entries == ((1, 0), (0, 1))
        assert VRel.identity(law2, 2).entries == ((0, 2), (2, 0))
        assert VRel.identity(bool_q, 1).entries == ((1,),)

    def test_identity_laws(self, law2):
        for r in itertools.islice(all_rels(law2, 2, 3), 50):
            assert vrel_compose(VRel.identity(law2, 2), r) == r
            assert vrel_compose(r, VRel.identity(law2, 3)) == r

    def test_boolean_composition_is_matrix_product(self, bool_q):
        for r in all_rels(bool_q, 2, 2):
            for s in all_rels(bool_q, 2, 2):
                got = vrel_compose(r, s)
                assert [list(row) for row in got.entries] == bool_matmul(r, s)

    def test_single_term_join(self, law2):
        # one inner element: the composite entry is a bare tensor
        r = VRel(law2, [[1]])
        s = VRel(law2, [[1]])
        assert vrel_compose(r, s).entry(0, 0) == 2

    def test_join_order_independent(self, law2):
        # folding the inner carrier in any order gives the same composite
        def compose_permuted(r, s, order):
            q = r.quantale
            return [[q.join_all(q.tensor(r.entry(x, y), s.entry(y, z))
                                for y in order)
                     for z in range(s.dst_size)] for x in range(r.src_size)]
        import itertools as it
        for r in it.islice(all_rels(law2, 2, 3), 30):
            for s in it.islice(all_rels(law2, 3, 2), 10):
                reference = [list(row) for row in vrel_compose(r, s).entries]
                for order in it.permutations(range(3)):
                    assert compose_permuted(r, s, order) == reference

    def test_shape_mismatch(self, bool_q):
        r = VRel(bool_q, [[0, 1]])
        with pytest.raises(StructuralError):
            vrel_compose(r, r)

    def test_quantale_mismatch(self, bool_q, law2):
        r = VRel(bool_q, [[0]])
        s = VRel(law2, [[0]])
        with pytest.raises(StructuralError):
            vrel_compose(r, s)

    def test_ragged_rejected(self, bool_q):
        with pytest.raises(StructuralError):
            VRel(bool_q, [[0, 1], [0]])

    def test_entry_out_of_range(self, bool_q):
        with pytest.raises(StructuralError):
            VRel(bool_q, [[0, 3]])


class TestConverseMeetOrder:
    def test_converse_of_identity(self, law2):
        ident = VRel.identity(law2, 3)
        assert ident.converse() == ident

    def test_converse_involution(self, law2):
        for r in itertools.islice(all_rels(law2, 2, 3), 80):
            assert r.converse().converse() == r

    def test_converse_antihomomorphism(self, bool_q):
        for r in all_rels(bool_q, 2, 2):
            for s in itertools.islice(all_rels(bool_q, 2, 2), 16):
                lhs = vrel_compose(r, s).converse()
                rhs = vrel_compose(s.converse(), r.converse())
                assert lhs == rhs

    def test_meet_idempotent(self, law2):
        for r in itertools.islice(all_rels(law2, 2, 2), 81):
            assert r.meet(r) == r

    def test_composition_monotone(self, bool_q):
        rels = list(all_rels(bool_q, 2, 2))
        for r, r2 in itertools.product(rels, repeat=2):
            if not r.leq(r2):
                continue
            for s in rels[:8]:
                assert vrel_compose(r, s).leq(vrel_compose(r2, s))
                assert vrel_compose(s, r).leq(vrel_compose(s, r2))


class TestFunctionEmbedding:
    def test_constant_map_columns(self, bool_q):
        r = VRel.from_function(bool_q, [0, 0], 2)
        assert r.entries == ((1, 0), (1, 0))

    def test_embedding_respects_composition(self, law2):
        for f in itertools.product(range(3), repeat=2):
            for g in itertools.product(range(2), repeat=3):
                rf = VRel.from_function(law2, f, 3)
                rg = VRel.from_function(law2, g, 2)
                composed = [g[f[x]] for x in range(2)]
                assert vrel_compose(rf, rg) == VRel.from_function(law2, composed, 2)

    def test_value_out_of_range(self, bool_q):
        with pytest.raises(StructuralError):
            VRel.from_function(bool_q, [5], 2)


@st.composite
def rel_triple(draw):
    q = draw(st.sampled_from([boolean(), lawvere_chain(2)]))
    sizes = draw(st.tuples(*[st.integers(1, 3)] * 4))
    n1, n2, n3, n4 = sizes
    def rel(n, m):
        rows = draw(st.lists(
            st.lists(st.integers(0, q.size - 1), min_size=m, max_size=m),
            min_size=n, max_size=n))
        return VRel(q, rows)
    return rel(n1, n2), rel(n2, n3), rel(n3, n4)


@settings(max_examples=150, deadline=None)
@given(rel_triple())
def test_composition_associative(triple):
    r, s, t = triple
    assert vrel_compose(vrel_compose(r, s), t) == vrel_compose(r, vrel_compose(s, t))
