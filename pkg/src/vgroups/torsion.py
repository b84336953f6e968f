"""Torsion decomposition (indiscrete kernel, separated quotient) and the
pretorsion variant (symmetric part, separated quotient).

The torsion part of an object is the set of elements related to the
identity at unit level in both directions.  It is always a normal
subgroup, over any quantale; the canonical short exact sequence through
it needs an integral quantale (otherwise the category has no zero
object) and is re-verified here rather than assumed: the kernel must be
indiscrete, the quotient separated, and the two structure equations of
the kernel/cokernel characterization must hold on the nose.

The pretorsion side works over any quantale.  Its kernels and cokernels
are taken relative to the null class (symmetric objects with one-sided
separation); membership of a morphism in the null ideal is decided via
its image, which is sound but not known to be complete, so reports carry
the method label.  Universal properties are verified by exhaustive
quantification over enumerated hom-sets from a finite family of test
objects: a finite-model check, not a symbolic proof.
"""

from dataclasses import dataclass, field

from .errors import (CapacityError, NonIntegralQuantaleError, StructuralError,
                     TheoremCheckError)
from .reports import ValidationReport
from .vgroup import (VGroup, VHom, classify_hom, classify_object,
                     enumerate_homs, image_factorize, quotient_vgroup,
                     subobject, trivial_vgroup, validate_vgroup)
from .vrel import VRel


def torsion_part(g):
    """Elements related to the identity at unit level both ways.

    Works over any quantale.  The result is re-verified to be a normal
    subgroup; a failure would contradict the theory and raises.
    """
    q = g.quantale
    e = g.group.identity
    k = q.unit
    members = tuple(sorted(
        x for x in range(g.size)
        if q.leq(k, g.entry(e, x)) and q.leq(k, g.entry(x, e))))
    if not g.group.is_subgroup(members):
        raise TheoremCheckError("torsion part is not a subgroup")
    witness = g.group.normality_witness(members)
    if witness is not None:
        raise TheoremCheckError(
            f"torsion part is not normal, witness {witness}")
    return members


@dataclass
class TorsionDecomposition:
    object: VGroup
    torsion: VGroup
    injection: VHom
    quotient: VGroup
    projection: VHom
    notes: dict = field(default_factory=dict)

    def as_dict(self):
        names = self.object.group.names
        return {
            "torsion_carrier": [names[x] for x in self.injection.mapping],
            "projection": [self.quotient.group.names[v]
                           for v in self.projection.mapping],
            "quotient_carrier": list(self.quotient.group.names),
            "quotient_structure": [[self.quotient.quantale.label(v) for v in row]
                                   for row in self.quotient.structure.entries],
            "notes": dict(sorted(self.notes.items())),
        }


def _check_induced_structure(sub_hom):
    """Induced structure equals the matricial composite through the inclusion."""
    g = sub_hom.cod
    emb = VRel.from_function(g.quantale, sub_hom.mapping, g.size)
    composite = emb.then(g.structure).then(emb.converse())
    return composite == sub_hom.dom.structure


def _check_final_structure(quot_hom):
    """Final structure equals the matricial composite through the projection."""
    g = quot_hom.dom
    emb = VRel.from_function(g.quantale, quot_hom.mapping, quot_hom.cod.size)
    composite = emb.converse().then(g.structure).then(emb)
    return composite == quot_hom.cod.structure


def decompose(g):
    """The canonical short exact sequence through the torsion part.

    Requires an integral quantale.  Verifies, rather than assumes, that
    the injection is a normal monomorphism, the projection a regular
    epimorphism, the kernel indiscrete, the quotient separated, and that
    both structure equations hold exactly (computed independently by
    relation composition).
    """
    if not g.quantale.is_integral:
        raise NonIntegralQuantaleError(
            "torsion decomposition needs unit = top; without it the "
            "category has no zero object")
    members = torsion_part(g)
    torsion, injection = subobject(g, members)
    quotient, projection = quotient_vgroup(g, members)

    if not classify_hom(injection).normal_mono:
        raise TheoremCheckError("torsion injection is not a normal monomorphism")
    if not classify_hom(projection).regular_epi:
        raise TheoremCheckError("torsion projection is not a regular epimorphism")
    if not _check_induced_structure(injection):
        raise TheoremCheckError("kernel structure equation failed")
    if not _check_final_structure(projection):
        raise TheoremCheckError("cokernel structure equation failed")
    if not classify_object(torsion).indiscrete:
        raise TheoremCheckError("torsion part is not indiscrete")
    if not classify_object(quotient).separated:
        raise TheoremCheckError("torsion-free quotient is not separated")

    return TorsionDecomposition(
        object=g, torsion=torsion, injection=injection,
        quotient=quotient, projection=projection,
        notes={"torsion_size": len(members), "quotient_size": quotient.size})


def reflect(g):
    """Separated reflection: the quotient with its unit (the projection)."""
    d = decompose(g)
    return d.quotient, d.projection


def coreflect(g):
    """Indiscrete coreflection: the torsion part with its counit (the injection)."""
    d = decompose(g)
    return d.torsion, d.injection


def reflect_morphism(f):
    """The induced map between separated reflections (coset to coset)."""
    dom_q, dom_proj = reflect(f.dom)
    cod_q, cod_proj = reflect(f.cod)
    mapping = [0] * dom_q.size
    for x in range(f.dom.size):
        mapping[dom_proj(x)] = cod_proj(f(x))
    return VHom(dom_q, cod_q, mapping)


def coreflect_morphism(f):
    """The restriction of a map to the torsion parts."""
    dom_t, dom_inj = coreflect(f.dom)
    cod_t, cod_inj = coreflect(f.cod)
    pos = {x: i for i, x in enumerate(cod_inj.mapping)}
    mapping = []
    for x in dom_inj.mapping:
        y = f(x)
        if y not in pos:
            raise TheoremCheckError(
                "homomorphism does not restrict to the torsion parts")
        mapping.append(pos[y])
    return VHom(dom_t, cod_t, mapping)


def symmetric_coreflect(g):
    """The greatest symmetric structure below the given one: a meet a-converse."""
    hat = g.structure.meet(g.structure.converse())
    out = VGroup(g.group, g.quantale, hat)
    if not validate_vgroup(out).ok:
        raise TheoremCheckError("symmetrized structure failed validation")
    if not classify_object(out).symmetric:
        raise TheoremCheckError("symmetrized structure is not symmetric")
    return out


def is_null_object(g):
    """Member of the null class: symmetric, and one-sided separation holds."""
    q = g.quantale
    k = q.unit
    n = g.size
    symmetric = all(g.entry(x, y) == g.entry(y, x)
                    for x in range(n) for y in range(n))
    one_sided = all(x == y for x in range(n) for y in range(n)
                    if q.leq(k, g.entry(x, y)))
    return symmetric and one_sided


def is_null_morphism(f):
    """Whether a morphism factors through a null object, decided via its image.

    Sound: if the image (with final structure) is null, the morphism is
    null.  Completeness of the negative answer is not claimed; the
    report records the method.
    """
    _, middle, _ = image_factorize(f)
    verdict = is_null_object(middle)
    return {"is_null": verdict, "method": "via-image",
            "image_is_null": verdict}


def _family_budget(test_objects, inner_sizes, cap):
    total = 0
    for w in test_objects:
        for s in inner_sizes:
            total += s ** w.size
    if total > cap:
        raise CapacityError(
            f"universal-property quantification needs {total} candidates, "
            f"over the cap of {cap}")


def default_test_family(*objects):
    """Deduplicated test objects: the given ones, their symmetrizations,
    and the one-element objects (unit-valued and top-valued)."""
    family = []
    seen = set()
    q = objects[0].quantale
    pool = list(objects)
    pool.append(trivial_vgroup(q))
    if q.unit != q.top:
        pool.append(trivial_vgroup(q, value=q.top))
    for obj in objects:
        pool.append(symmetric_coreflect(obj))
    for obj in pool:
        if obj not in seen:
            seen.add(obj)
            family.append(obj)
    return family


def verify_pretorsion_kernel(candidate, of, test_objects=None, cap=10 ** 6):
    """Check the kernel-relative-to-null universal property of ``candidate``.

    ``candidate``: K -> A must compose with ``of``: A -> B into the null
    ideal, and every test morphism into A whose composite with ``of`` is
    null must factor through ``candidate`` uniquely.  Both quantifiers
    run over enumerated hom-sets from the test family.
    """
    if candidate.cod != of.dom:
        raise StructuralError("candidate kernel must land in the domain of 'of'")
    report = ValidationReport(subject="pretorsion-kernel")
    if not is_null_morphism(candidate.then(of))["is_null"]:
        report.add("composite-in-null-ideal", ())
        return report
    if test_objects is None:
        test_objects = default_test_family(candidate.dom, of.dom, of.cod)
    _family_budget(test_objects, (of.dom.size, candidate.dom.size), cap)
    for w_index, w in enumerate(test_objects):
        into_a = enumerate_homs(w, of.dom, cap=cap)
        into_k = None
        for alpha in into_a:
            if not is_null_morphism(alpha.then(of))["is_null"]:
                continue
            if into_k is None:
                into_k = enumerate_homs(w, candidate.dom, cap=cap)
            matches = [phi for phi in into_k
                       if phi.then(candidate) == alpha]
            if len(matches) == 0:
                report.add("factorization-exists",
                           (w_index, alpha.mapping))
            elif len(matches) > 1:
                report.add("factorization-unique",
                           (w_index, alpha.mapping))
    return report


def verify_pretorsion_cokernel(candidate, of, test_objects=None, cap=10 ** 6):
    """Dual check: ``candidate``: B -> C as cokernel of ``of``: A -> B."""
    if of.cod != candidate.dom:
        raise StructuralError("candidate cokernel must start at the codomain of 'of'")
    report = ValidationReport(subject="pretorsion-cokernel")
    if not is_null_morphism(of.then(candidate))["is_null"]:
        report.add("composite-in-null-ideal", ())
        return report
    if test_objects is None:
        test_objects = default_test_family(of.dom, of.cod, candidate.cod)
    total = 0
    for w in test_objects:
        total += w.size ** candidate.dom.size + w.size ** candidate.cod.size
    if total > cap:
        raise CapacityError(
            f"universal-property quantification needs {total} candidates, "
            f"over the cap of {cap}")
    for w_index, w in enumerate(test_objects):
        from_b = enumerate_homs(candidate.dom, w, cap=cap)
        from_c = None
        for alpha in from_b:
            if not is_null_morphism(of.then(alpha))["is_null"]:
                continue
            if from_c is None:
                from_c = enumerate_homs(candidate.cod, w, cap=cap)
            matches = [phi for phi in from_c
                       if candidate.then(phi) == alpha]
            if len(matches) == 0:
                report.add("factorization-exists",
                           (w_index, alpha.mapping))
            elif len(matches) > 1:
                report.add("factorization-unique",
                           (w_index, alpha.mapping))
    return report


@dataclass
class PretorsionDecomposition:
    object: VGroup
    symmetric_part: VGroup
    comparison: VHom
    quotient: VGroup
    projection: VHom
    kernel_report: ValidationReport
    cokernel_report: ValidationReport
    notes: dict = field(default_factory=dict)

    def as_dict(self):
        q = self.object.quantale
        return {
            "symmetric_structure": [[q.label(v) for v in row]
                                    for row in self.symmetric_part.structure.entries],
            "projection": [self.quotient.group.names[v]
                           for v in self.projection.mapping],
            "quotient_carrier": list(self.quotient.group.names),
            "kernel_verification": self.kernel_report.as_dict(),
            "cokernel_verification": self.cokernel_report.as_dict(),
            "notes": dict(sorted(self.notes.items())),
        }


def pretorsion_decompose(g, test_objects=None, cap=10 ** 6):
    """Symmetric part, identity comparison, separated quotient; verified.

    Works over any quantale.  Runs both relative universal-property
    verifiers on the sequence and spot-checks that every enumerated
    morphism from a symmetric test object to a separated one is null.
    """
    sym = symmetric_coreflect(g)
    comparison = VHom(sym, g, range(g.size))
    members = torsion_part(g)
    quotient, projection = quotient_vgroup(g, members)
    if not classify_object(quotient).separated:
        raise TheoremCheckError("pretorsion quotient is not separated")
    if not sym.structure.leq(g.structure):
        raise TheoremCheckError("symmetrized structure is not below the original")

    if test_objects is None:
        test_objects = default_test_family(g, quotient)
    kernel_report = verify_pretorsion_kernel(
        comparison, projection, test_objects=test_objects, cap=cap)
    cokernel_report = verify_pretorsion_cokernel(
        projection, comparison, test_objects=test_objects, cap=cap)
    if not kernel_report.ok or not cokernel_report.ok:
        raise TheoremCheckError(
            "pretorsion sequence failed a relative universal property: "
            f"{kernel_report.laws_violated() + cokernel_report.laws_violated()}")

    checked = 0
    for t in test_objects:
        cls_t = classify_object(t)
        if not cls_t.symmetric:
            continue
        for f_obj in test_objects:
            if not classify_object(f_obj).separated:
                continue
            for hom in enumerate_homs(t, f_obj, cap=cap):
                checked += 1
                if not is_null_morphism(hom)["is_null"]:
                    raise TheoremCheckError(
                        "found a non-null morphism from a symmetric object "
                        "to a separated one")
    return PretorsionDecomposition(
        object=g, symmetric_part=sym, comparison=comparison,
        quotient=quotient, projection=projection,
        kernel_report=kernel_report, cokernel_report=cokernel_report,
        notes={"null_spot_checks": checked})
