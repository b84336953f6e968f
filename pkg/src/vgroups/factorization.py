"""The two factorization systems induced by the separated reflection, and
the covering predicate.

The reflective system splits a morphism through a pullback of its
reflection against the codomain's unit; its left class is the morphisms
the reflector inverts, its right class the trivial coverings (maps whose
reflection naturality square is a pullback).  The stabilized system
splits through the quotient by the torsion part of the kernel; its left
class is the normal epimorphisms with indiscrete kernel, its right class
the coverings, which are exactly the morphisms with separated kernel.

Every class flag is computed along two routes (definitional and
characterization) and compared; a disagreement is a loud failure, never
a tolerated state, because the agreement is itself a theorem this
workbench is meant to exercise.  Both factorizations post-verify their
output classes and composite instead of assuming them.
"""

from dataclasses import dataclass, field

from .errors import NonIntegralQuantaleError, StructuralError, TheoremCheckError
from .torsion import decompose
from .vgroup import (VGroup, VHom, classify_hom, classify_object, is_isomorphism,
                     kernel, pullback, pullback_comparison, quotient_vgroup,
                     validate_hom)

_DECOMPOSE_CACHE = {}


def cached_decomposition(g):
    """Torsion decomposition memoized by object; treat results as read-only."""
    d = _DECOMPOSE_CACHE.get(g)
    if d is None:
        d = decompose(g)
        _DECOMPOSE_CACHE[g] = d
    return d


def reflected_morphism(f, dom_dec, cod_dec):
    """The induced map between separated quotients (coset to coset)."""
    mapping = [0] * dom_dec.quotient.size
    for x in range(f.dom.size):
        mapping[dom_dec.projection(x)] = cod_dec.projection(f(x))
    return VHom(dom_dec.quotient, cod_dec.quotient, mapping)


@dataclass
class MorphismClassReport:
    reflector_inverted: bool       # the reflector sends the morphism to an iso
    trivial_covering: bool         # reflection naturality square is a pullback
    stably_inverted: bool          # normal epi with indiscrete kernel
    covering: bool                 # kernel is separated
    cross_checks: dict = field(default_factory=dict)

    def as_dict(self):
        return {
            "reflector_inverted": self.reflector_inverted,
            "trivial_covering": self.trivial_covering,
            "stably_inverted": self.stably_inverted,
            "covering": self.covering,
            "cross_checks": dict(sorted(self.cross_checks.items())),
        }


def classify_morphism(f):
    """Total class flags for a morphism, each computed twice.

    Left-class flag: definitionally the reflected morphism must be an
    isomorphism; the characterization demands that the torsion part of
    the domain is the full preimage of the codomain's, that the kernel
    structures agree through the map, and that the composite to the
    codomain's reflection is a regular epimorphism.  Right-class flag:
    definitionally the naturality square must be a pullback; the
    characterization demands an isomorphic restriction between torsion
    parts and that the structure is the meet of the two pulled-back
    ones.  The stabilized flags are computed from the kernel; their
    containment in the unstabilized classes is recorded as a cross
    check.  Any route disagreement raises.
    """
    if not f.dom.quantale.is_integral:
        raise NonIntegralQuantaleError(
            "morphism classification is relative to the separated reflection, "
            "which needs an integral quantale")
    if not validate_hom(f).ok:
        raise StructuralError("cannot classify an invalid homomorphism")

    q = f.dom.quantale
    dom_dec = cached_decomposition(f.dom)
    cod_dec = cached_decomposition(f.cod)
    n_dom = set(dom_dec.injection.mapping)
    n_cod = set(cod_dec.injection.mapping)
    reflected = reflected_morphism(f, dom_dec, cod_dec)

    # Left class, definitional route.
    inverted_def = is_isomorphism(reflected)

    # Left class, characterization route.
    preimage = {x for x in range(f.dom.size) if f(x) in n_cod}
    cond_a = preimage == n_dom
    cond_b = all(f.dom.entry(x, y) ==
                 q.meet(f.cod.entry(f(x), f(y)), f.dom.entry(x, y))
                 for x in n_dom for y in n_dom)
    cond_c = classify_hom(f.then(cod_dec.projection)).regular_epi
    inverted_char = cond_a and cond_b and cond_c
    if inverted_def != inverted_char:
        raise TheoremCheckError(
            "left-class routes disagree: "
            f"definitional={inverted_def} characterization={inverted_char}")

    # Right class, definitional route: the naturality square is a pullback.
    p, to_cod, to_refl = pullback(cod_dec.projection, reflected)
    comparison = pullback_comparison(p, to_cod, to_refl, f, dom_dec.projection)
    trivial_def = is_isomorphism(comparison)

    # Right class, characterization route.
    restriction_is_iso = (
        len(n_dom) == len(n_cod)
        and len({f(x) for x in n_dom}) == len(n_dom)
        and {f(x) for x in n_dom} == n_cod)
    structure_meet = all(
        f.dom.entry(x, y) == q.meet(
            f.cod.entry(f(x), f(y)),
            dom_dec.quotient.entry(dom_dec.projection(x), dom_dec.projection(y)))
        for x in range(f.dom.size) for y in range(f.dom.size))
    trivial_char = restriction_is_iso and structure_meet
    if trivial_def != trivial_char:
        raise TheoremCheckError(
            "right-class routes disagree: "
            f"definitional={trivial_def} characterization={trivial_char}")

    ker_obj, _ = kernel(f)
    ker_class = classify_object(ker_obj)
    stably_inverted = classify_hom(f).regular_epi and ker_class.indiscrete
    covering = ker_class.separated

    cross = {
        "left_routes_agree": inverted_def == inverted_char,
        "right_routes_agree": trivial_def == trivial_char,
        "stably_inverted_implies_inverted": (not stably_inverted) or inverted_def,
        "trivial_covering_implies_covering": (not trivial_def) or covering,
    }
    if not all(cross.values()):
        raise TheoremCheckError(f"class containment cross-check failed: {cross}")
    return MorphismClassReport(
        reflector_inverted=inverted_def, trivial_covering=trivial_def,
        stably_inverted=stably_inverted, covering=covering, cross_checks=cross)


def is_covering(f):
    """A morphism is a covering exactly when its kernel is separated.

    The same predicate answers the locally-semisimple-covering question
    relative to the separated objects.
    """
    if not f.dom.quantale.is_integral:
        raise NonIntegralQuantaleError("the covering predicate needs an integral quantale")
    ker_obj, _ = kernel(f)
    return classify_object(ker_obj).separated


@dataclass
class Factorization:
    e: VHom
    middle: VGroup
    m: VHom
    system: str  # "reflective" | "monotone_light"

    def as_dict(self):
        q = self.middle.quantale
        return {
            "system": self.system,
            "e_mapping": [self.middle.group.names[v] for v in self.e.mapping],
            "middle_carrier": list(self.middle.group.names),
            "middle_structure": [[q.label(v) for v in row]
                                 for row in self.middle.structure.entries],
            "m_mapping": [self.m.cod.group.names[v] for v in self.m.mapping],
        }


def reflective_factorize(f):
    """Split f through the pullback of its reflection against the unit.

    The middle is the pullback of the reflected morphism along the
    codomain's projection; the left leg is the induced comparison, the
    right leg the pullback projection.  Post-verifies that the left leg
    is inverted by the reflector, the right leg is a trivial covering,
    and the composite is f; any failure raises.
    """
    dom_dec = cached_decomposition(f.dom)
    cod_dec = cached_decomposition(f.cod)
    reflected = reflected_morphism(f, dom_dec, cod_dec)
    p, to_cod, to_refl = pullback(cod_dec.projection, reflected)
    e = pullback_comparison(p, to_cod, to_refl, f, dom_dec.projection)
    m = to_cod
    if e.then(m) != f:
        raise TheoremCheckError("reflective factorization does not compose to f")
    if not validate_hom(e).ok or not validate_hom(m).ok:
        raise TheoremCheckError("reflective factorization produced an invalid leg")
    report_e = classify_morphism(e)
    report_m = classify_morphism(m)
    if not report_e.reflector_inverted:
        raise TheoremCheckError("left leg is not inverted by the reflector")
    if not report_m.trivial_covering:
        raise TheoremCheckError("right leg is not a trivial covering")
    return Factorization(e=e, middle=p, m=m, system="reflective")


def monotone_light_factorize(f):
    """Split f through the quotient by the torsion part of its kernel.

    The subgroup being quotiented is normal in the whole domain (the
    composite of the kernel inclusion with the torsion counit is a
    normal monomorphism), so the quotient exists; the induced map to the
    codomain is well-defined because the quotiented subgroup sits inside
    the kernel.  Post-verifies the class membership of both legs and the
    composite; a failure here would be a finding about the construction,
    not a tolerated state, so it raises.
    """
    if not f.dom.quantale.is_integral:
        raise NonIntegralQuantaleError("stabilized factorization needs an integral quantale")
    q = f.dom.quantale
    dom = f.dom
    e_id = dom.group.identity
    k = q.unit
    ker_members = [x for x in range(dom.size) if f(x) == f.cod.group.identity]
    torsion_of_kernel = tuple(sorted(
        x for x in ker_members
        if q.leq(k, dom.entry(e_id, x)) and q.leq(k, dom.entry(x, e_id))))
    witness = dom.group.normality_witness(torsion_of_kernel)
    if witness is not None:
        raise TheoremCheckError(
            "torsion part of the kernel is not normal in the domain, "
            f"witness {witness}")
    middle, e = quotient_vgroup(dom, torsion_of_kernel)
    mapping = [0] * middle.size
    for x in range(dom.size):
        mapping[e(x)] = f(x)
    m = VHom(middle, f.cod, mapping)
    if e.then(m) != f:
        raise TheoremCheckError("stabilized factorization does not compose to f")
    if not validate_hom(m).ok:
        raise TheoremCheckError("stabilized factorization produced an invalid leg")
    report_e = classify_morphism(e)
    report_m = classify_morphism(m)
    if not report_e.stably_inverted:
        raise TheoremCheckError("left leg is not a normal epi with indiscrete kernel")
    if not report_m.covering:
        raise TheoremCheckError("right leg is not a covering")
    return Factorization(e=e, middle=middle, m=m, system="monotone_light")
