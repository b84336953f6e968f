import pytest

from vgroups import (FiniteGroup, Quantale, boolean, discrete_vgroup,
                     indiscrete_vgroup, lawvere_chain, structure_from_delta,
                     ultrametric_chain, VHom)


@pytest.fixture
def bool_q():
    return boolean()


@pytest.fixture
def law2():
    return lawvere_chain(2)


@pytest.fixture
def ultra2():
    return ultrametric_chain(2)


@pytest.fixture
def non_integral_q():
    # chain 0 < 1 < 2 with saturating multiplication; unit 1 sits below top 2
    return Quantale(
        labels=["0", "1", "2"],
        leq=[[u <= v for v in range(3)] for u in range(3)],
        tensor=[[min(2, u * v) for v in range(3)] for u in range(3)],
        unit=1, bottom=0, top=2)


@pytest.fixture
def z2():
    return FiniteGroup.cyclic(2)


@pytest.fixture
def z3():
    return FiniteGroup.cyclic(3)


@pytest.fixture
def z4():
    return FiniteGroup.cyclic(4)


@pytest.fixture
def z4_bool(bool_q, z4):
    """The worked example: shift profile (top, bot, top, bot) over Z4."""
    return structure_from_delta(z4, bool_q, (1, 0, 1, 0))


@pytest.fixture
def z4_law(law2, z4):
    """The worked chain example: shift profile (0, 1, 2, 2) over Z4."""
    return structure_from_delta(z4, law2, (0, 1, 2, 2))


@pytest.fixture
def z2_discrete(bool_q, z2):
    return discrete_vgroup(z2, bool_q)


@pytest.fixture
def z2_indiscrete(bool_q, z2):
    return indiscrete_vgroup(z2, bool_q)


@pytest.fixture
def quotient_to_z2(z4_bool, z2_discrete):
    """The canonical quotient map from the worked Z4 example onto discrete Z2."""
    return VHom(z4_bool, z2_discrete, [0, 1, 0, 1])
