"""Canonical object and morphism suites feeding the property batteries.

Generation is pure and deterministic: quantales and groups in a fixed
roster order, structures in lexicographic profile order, homomorphisms
in lexicographic mapping order.  Hom-sets whose candidate count exceeds
the per-pair cap are skipped with an explicit truncation marker; tests
that need totality skip marked sets.
"""

from dataclasses import dataclass, field

from .groups import FiniteGroup
from .quantale import boolean, lawvere_chain, ultrametric_chain
from .vgroup import enumerate_homs, enumerate_structures

PER_PAIR_HOM_CAP = 50_000
TOTAL_HOM_BUDGET = 2_000_000


def group_roster():
    """Every group constructor the suites draw from, by name."""
    return {
        "Z1": FiniteGroup.trivial(),
        "Z2": FiniteGroup.cyclic(2),
        "Z3": FiniteGroup.cyclic(3),
        "Z4": FiniteGroup.cyclic(4),
        "Z5": FiniteGroup.cyclic(5),
        "Z6": FiniteGroup.cyclic(6),
        "Z2xZ2": FiniteGroup.direct_product(FiniteGroup.cyclic(2),
                                            FiniteGroup.cyclic(2)),
        "S3": FiniteGroup.symmetric3(),
    }


SMOKE_QUANTALES = (("boolean", boolean), ("lawvere_chain_2", lambda: lawvere_chain(2)))
FULL_EXTRA_QUANTALES = (("ultrametric_chain_3", lambda: ultrametric_chain(3)),
                        ("lawvere_chain_3", lambda: lawvere_chain(3)))
SMOKE_GROUPS = ("Z1", "Z2", "Z3", "Z4")
FULL_EXTRA_GROUPS = ("Z2xZ2", "Z5", "S3")


@dataclass(frozen=True)
class SuiteObject:
    name: str
    quantale_name: str
    group_name: str
    vgroup: object


@dataclass(frozen=True)
class HomSet:
    dom: int
    cod: int
    homs: tuple
    truncated: bool
    candidates: int


@dataclass
class Suite:
    level: str
    quantales: list
    groups: list
    objects: list
    hom_sets: list
    caps: dict = field(default_factory=dict)

    def objects_over(self, quantale_name):
        return [o for o in self.objects if o.quantale_name == quantale_name]

    def homs_between(self, i, j):
        for hs in self.hom_sets:
            if hs.dom == i and hs.cod == j:
                return hs
        return None

    def all_homs(self):
        """Every enumerated morphism with its endpoint objects."""
        out = []
        for hs in self.hom_sets:
            if hs.truncated:
                continue
            for h in hs.homs:
                out.append((self.objects[hs.dom], self.objects[hs.cod], h))
        return out

    def export_documents(self):
        """Every suite object as a workbench document value, keyed by name."""
        from .document import document_from_vgroup
        specs = {"boolean": {"builtin": "boolean"},
                 "lawvere_chain_2": {"builtin": "lawvere_chain", "m": 2},
                 "lawvere_chain_3": {"builtin": "lawvere_chain", "m": 3},
                 "ultrametric_chain_3": {"builtin": "ultrametric_chain", "m": 3}}
        return {obj.name: document_from_vgroup(obj.vgroup,
                                               specs.get(obj.quantale_name))
                for obj in self.objects}


def standard_suite(level="smoke", per_pair_cap=PER_PAIR_HOM_CAP,
                   total_budget=TOTAL_HOM_BUDGET):
    """The fixture battery: builtin quantales x small groups x all structures.

    smoke: boolean and the 3-element truncated-sum chain, over the
    trivial group and the cyclic groups of order 2, 3, 4.  full: adds
    the 4-element chains (truncated sum and maximum) and the Klein
    four-group, the cyclic group of order 5 and the nonabelian group of
    order 6.
    """
    if level not in ("smoke", "full"):
        raise ValueError(f"unknown suite level: {level!r}")
    roster = group_roster()
    quantale_specs = list(SMOKE_QUANTALES)
    group_names = list(SMOKE_GROUPS)
    if level == "full":
        quantale_specs += list(FULL_EXTRA_QUANTALES)
        group_names += list(FULL_EXTRA_GROUPS)
    quantales = [(name, make()) for name, make in quantale_specs]
    groups = [(name, roster[name]) for name in group_names]

    objects = []
    for qname, q in quantales:
        for gname, grp in groups:
            for vg in enumerate_structures(grp, q):
                delta = ",".join(q.label(v) for v in vg.delta())
                name = f"{qname}/{gname}/{delta}"
                vg.name = name
                objects.append(SuiteObject(name=name, quantale_name=qname,
                                           group_name=gname, vgroup=vg))

    hom_sets = []
    budget = total_budget
    for i, a in enumerate(objects):
        for j, b in enumerate(objects):
            if a.quantale_name != b.quantale_name:
                continue
            candidates = b.vgroup.size ** a.vgroup.size
            if candidates > per_pair_cap or candidates > budget:
                hom_sets.append(HomSet(dom=i, cod=j, homs=(),
                                       truncated=True, candidates=candidates))
                continue
            budget -= candidates
            homs = tuple(enumerate_homs(a.vgroup, b.vgroup))
            hom_sets.append(HomSet(dom=i, cod=j, homs=homs,
                                   truncated=False, candidates=candidates))

    return Suite(level=level, quantales=quantales, groups=groups,
                 objects=objects, hom_sets=hom_sets,
                 caps={"per_pair_hom_cap": per_pair_cap,
                       "total_hom_budget": total_budget})
