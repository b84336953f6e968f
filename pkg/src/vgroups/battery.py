"""The property battery the `suite` command runs: every structural
invariant the theory promises, quantified exhaustively over a generated
suite, with deterministic iteration order and explicit caps.

Each check returns a CheckResult; a failed check means a mathematical
statement did not hold on concrete data, which the command line surfaces
as exit code 1.
"""

from dataclasses import dataclass, field
from itertools import product as iproduct

from .builders import standard_suite
from .descent import descent_cover, kernel_pair_groupoid, verify_cover_window
from .errors import TheoremCheckError
from .factorization import (cached_decomposition, classify_morphism, is_covering,
                            monotone_light_factorize, reflective_factorize)
from .quantale import validate_quantale
from .torsion import (default_test_family, is_null_object,
                      pretorsion_decompose, symmetric_coreflect)
from .vgroup import (VHom, classify_hom, classify_object,
                     enumerate_structures, factorization_middle_iso,
                     image_factorize, is_isomorphism, kernel, pullback,
                     pullback_comparison, quotient_vgroup, subobject,
                     validate_hom, validate_vgroup, zero_hom)

MATRIX_ENUMERATION_CAP = 200_000


@dataclass
class CheckResult:
    name: str
    ok: bool
    details: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    def as_dict(self):
        return {"name": self.name, "ok": self.ok,
                "details": dict(sorted(self.details.items())),
                "failures": self.failures[:20]}


def _result(name, failures, **details):
    return CheckResult(name=name, ok=not failures, details=details,
                       failures=failures)


# -- quantale laws ----------------------------------------------------------

def check_quantale_laws(suite):
    failures = []
    for qname, q in suite.quantales:
        report = validate_quantale(q)
        if not report.ok:
            failures.append((qname, report.laws_violated()))
    return _result("quantale_laws", failures, quantales=len(suite.quantales))


# -- shift route versus compatibility route ---------------------------------

def _route_flags(group, q, flat):
    """(reflexive+transitive+shifted, reflexive+compatible) for one matrix."""
    n = group.size
    rng = range(n)
    leq, ten, op = q.leq, q.tensor, group.op
    k = q.unit
    if not all(leq(k, flat[x * n + x]) for x in rng):
        return False, False
    t_ok = all(leq(ten(flat[x * n + y], flat[y * n + z]), flat[x * n + z])
               for x in rng for y in rng for z in rng)
    shift_ok = t_ok and all(
        flat[x * n + y] == flat[op(x, s) * n + op(y, s)]
        for s in rng for x in rng for y in rng)
    functor_ok = all(
        leq(ten(flat[x1 * n + x2], flat[y1 * n + y2]),
            flat[op(x1, y1) * n + op(x2, y2)])
        for x1 in rng for x2 in rng for y1 in rng for y2 in rng)
    return (t_ok and shift_ok), functor_ok


def route_agreement_counts(group, q, matrix_cap=MATRIX_ENUMERATION_CAP):
    """Compare the two validation routes over a candidate family.

    All square matrices when that is affordable, otherwise all shift
    profiles spread to matrices.  Returns (candidates, disagreements,
    nonabelian_findings); a disagreement on an abelian carrier is
    counted, on a nonabelian one it is recorded as a finding.
    """
    n = group.size
    abelian = group.is_abelian
    candidates = disagreements = findings = 0
    if q.size ** (n * n) <= matrix_cap:
        source = iproduct(range(q.size), repeat=n * n)
        spread = False
    else:
        source = iproduct(range(q.size), repeat=n)
        spread = True
    for item in source:
        if spread:
            delta = item
            flat = tuple(delta[group.sub(y, x)]
                         for x in range(n) for y in range(n))
        else:
            flat = item
        candidates += 1
        shift_route, functor_route = _route_flags(group, q, flat)
        if shift_route != functor_route:
            if abelian:
                disagreements += 1
            else:
                findings += 1
    return candidates, disagreements, findings


def check_structure_routes(suite):
    failures = []
    total = findings = 0
    for qname, q in suite.quantales:
        for gname, grp in suite.groups:
            cands, dis, finds = route_agreement_counts(grp, q)
            total += cands
            findings += finds
            if dis:
                failures.append((qname, gname, dis))
    return _result("structure_route_agreement", failures,
                   candidates=total, nonabelian_findings=findings)


# -- object-level checks -----------------------------------------------------

def check_objects(suite):
    failures = []
    for obj in suite.objects:
        report = validate_vgroup(obj.vgroup)
        if not report.ok:
            failures.append((obj.name, report.laws_violated()))
        if obj.quantale_name == "boolean" and \
                not classify_object(obj.vgroup).symmetric:
            failures.append((obj.name, "boolean object not symmetric"))
    regenerated = standard_suite(suite.level)
    if [o.vgroup for o in regenerated.objects] != [o.vgroup for o in suite.objects] \
            or regenerated.hom_sets != suite.hom_sets:
        failures.append(("suite", "regeneration is not bit-stable"))
    return _result("object_validation", failures, objects=len(suite.objects))


# -- normal-category lemmas ---------------------------------------------------

def check_kernel_cokernel_roundtrips(suite):
    """Regular epis are cokernels of their kernels and dually for normal monos."""
    failures = []
    checked = 0
    for dom, cod, f in suite.all_homs():
        cls = classify_hom(f)
        if cls.regular_epi:
            checked += 1
            _, inclusion = kernel(f)
            quotient, projection = quotient_vgroup(
                f.dom, inclusion.mapping)
            mapping = [0] * quotient.size
            for x in range(f.dom.size):
                mapping[projection(x)] = f(x)
            canonical = VHom(quotient, f.cod, mapping)
            if not (validate_hom(canonical).ok and is_isomorphism(canonical)):
                failures.append((dom.name, cod.name, f.mapping, "cokernel-of-kernel"))
        if cls.normal_mono:
            checked += 1
            coker, projection = quotient_vgroup(f.cod, f.image_set())
            ker_obj, ker_inc = kernel(VHom(f.cod, coker, projection.mapping))
            pos = {x: i for i, x in enumerate(ker_inc.mapping)}
            try:
                canonical = VHom(f.dom, ker_obj,
                                 [pos[f(x)] for x in range(f.dom.size)])
            except KeyError:
                failures.append((dom.name, cod.name, f.mapping, "kernel-of-cokernel"))
                continue
            if not (validate_hom(canonical).ok and is_isomorphism(canonical)):
                failures.append((dom.name, cod.name, f.mapping, "kernel-of-cokernel"))
    return _result("kernel_cokernel_roundtrips", failures, checked=checked)


def check_ses_morphism_pullback(suite, max_carrier=4):
    """For morphisms of short exact sequences, the left square is a pullback
    exactly when the induced map between quotients is injective."""
    failures = []
    checked = 0
    for hs in suite.hom_sets:
        if hs.truncated:
            continue
        x_obj = suite.objects[hs.dom].vgroup
        y_obj = suite.objects[hs.cod].vgroup
        if x_obj.size > max_carrier or y_obj.size > max_carrier:
            continue
        x_normals = x_obj.group.all_normal_subgroups()
        y_normals = y_obj.group.all_normal_subgroups()
        for b in hs.homs:
            for nx in x_normals:
                tx, inc_x = subobject(x_obj, nx)
                fx, proj_x = quotient_vgroup(x_obj, nx)
                for ny in y_normals:
                    if any(b(v) not in set(ny) for v in nx):
                        continue
                    ty, inc_y = subobject(y_obj, ny)
                    fy, proj_y = quotient_vgroup(y_obj, ny)
                    pos = {v: i for i, v in enumerate(ny)}
                    a_vert = VHom(tx, ty, [pos[b(v)] for v in nx])
                    c_map = [0] * fx.size
                    for v in range(x_obj.size):
                        c_map[proj_x(v)] = proj_y(b(v))
                    c_vert = VHom(fx, fy, c_map)
                    if not (validate_hom(a_vert).ok and validate_hom(c_vert).ok):
                        continue
                    checked += 1
                    p, to_ty, to_x = pullback(inc_y, b)
                    try:
                        comparison = pullback_comparison(
                            p, to_ty, to_x, a_vert, inc_x)
                        left_is_pullback = is_isomorphism(comparison)
                    except TheoremCheckError:
                        left_is_pullback = False
                    c_mono = c_vert.is_injective()
                    if left_is_pullback != c_mono:
                        failures.append((suite.objects[hs.dom].name,
                                         suite.objects[hs.cod].name,
                                         b.mapping, nx, ny))
    return _result("ses_morphism_pullback", failures, checked=checked)


# -- image factorization ------------------------------------------------------

def check_image_factorization(suite, uniqueness_cap=300):
    failures = []
    checked = uniqueness_checked = 0
    for dom, cod, f in suite.all_homs():
        checked += 1
        e, mid, m = image_factorize(f)
        cls_e, cls_m = classify_hom(e), classify_hom(m)
        if e.then(m) != f or not cls_e.regular_epi or not cls_m.mono:
            failures.append((dom.name, cod.name, f.mapping, "factorization"))
            continue
        if dom.vgroup.size > 4 or uniqueness_checked >= uniqueness_cap:
            continue
        for i, alt in enumerate(suite.objects):
            if alt.quantale_name != dom.quantale_name:
                continue
            if alt.vgroup.size != mid.size:
                continue
            dom_idx = suite.objects.index(dom)
            cod_idx = suite.objects.index(cod)
            hs_e = suite.homs_between(dom_idx, i)
            hs_m = suite.homs_between(i, cod_idx)
            if hs_e is None or hs_m is None or hs_e.truncated or hs_m.truncated:
                continue
            for e2 in hs_e.homs:
                if not classify_hom(e2).regular_epi:
                    continue
                for m2 in hs_m.homs:
                    if e2.then(m2) != f or not classify_hom(m2).mono:
                        continue
                    uniqueness_checked += 1
                    if factorization_middle_iso(e, m, e2, m2) is None:
                        failures.append((dom.name, cod.name, f.mapping,
                                         "image-uniqueness", alt.name))
    return _result("image_factorization", failures, checked=checked,
                   uniqueness_checked=uniqueness_checked)


# -- pullback stability -------------------------------------------------------

def check_regular_epi_stability(suite, cospan_cap=400):
    failures = []
    checked = 0
    homs = suite.all_homs()
    for dom, cod, f in homs:
        if not classify_hom(f).regular_epi:
            continue
        for dom2, cod2, g in homs:
            if cod2.vgroup != cod.vgroup or checked >= cospan_cap:
                continue
            checked += 1
            _, _, pulled = pullback(f, g)
            if not classify_hom(pulled).regular_epi:
                failures.append((dom.name, cod.name, f.mapping, g.mapping))
    return _result("regular_epi_pullback_stability", failures, cospans=checked)


# -- torsion theory -----------------------------------------------------------

def check_torsion_theory(suite, uniqueness_max_carrier=4):
    failures = []
    for obj in suite.objects:
        try:
            dec = cached_decomposition(obj.vgroup)
        except TheoremCheckError as exc:
            failures.append((obj.name, f"decompose: {exc}"))
            continue
        if not classify_object(dec.torsion).indiscrete:
            failures.append((obj.name, "torsion part not indiscrete"))
        if not classify_object(dec.quotient).separated:
            failures.append((obj.name, "quotient not separated"))
        if obj.vgroup.size <= uniqueness_max_carrier:
            canonical = set(dec.injection.mapping)
            for alt in obj.vgroup.group.all_normal_subgroups():
                t_alt, _ = subobject(obj.vgroup, alt)
                f_alt, _ = quotient_vgroup(obj.vgroup, alt)
                if classify_object(t_alt).indiscrete and \
                        classify_object(f_alt).separated and \
                        set(alt) != canonical:
                    failures.append((obj.name, "alternative sequence", alt))
    vanish_checked = 0
    by_quantale = {}
    for i, obj in enumerate(suite.objects):
        by_quantale.setdefault(obj.quantale_name, []).append(i)
    for qname, indices in by_quantale.items():
        for i in indices:
            if not classify_object(suite.objects[i].vgroup).indiscrete:
                continue
            for j in indices:
                if not classify_object(suite.objects[j].vgroup).separated:
                    continue
                hs = suite.homs_between(i, j)
                if hs is None or hs.truncated:
                    continue
                vanish_checked += 1
                expected = (zero_hom(suite.objects[i].vgroup,
                                     suite.objects[j].vgroup),)
                if hs.homs != expected:
                    failures.append((suite.objects[i].name,
                                     suite.objects[j].name, "hom-vanishing"))
    return _result("torsion_theory", failures,
                   objects=len(suite.objects), vanishing_pairs=vanish_checked)


def check_reflection_naturality(suite):
    failures = []
    checked = 0
    for dom, cod, f in suite.all_homs():
        checked += 1
        dd = cached_decomposition(f.dom)
        cd = cached_decomposition(f.cod)
        reflected_map = [0] * dd.quotient.size
        for x in range(f.dom.size):
            reflected_map[dd.projection(x)] = cd.projection(f(x))
        reflected = VHom(dd.quotient, cd.quotient, reflected_map)
        if not validate_hom(reflected).ok:
            failures.append((dom.name, cod.name, f.mapping, "reflected invalid"))
        if dd.projection.then(reflected) != f.then(cd.projection):
            failures.append((dom.name, cod.name, f.mapping, "unit naturality"))
        pos = {x: i for i, x in enumerate(cd.injection.mapping)}
        try:
            restricted = VHom(dd.torsion, cd.torsion,
                              [pos[f(x)] for x in dd.injection.mapping])
        except KeyError:
            failures.append((dom.name, cod.name, f.mapping,
                             "torsion restriction missing"))
            continue
        if not validate_hom(restricted).ok:
            failures.append((dom.name, cod.name, f.mapping, "restricted invalid"))
        if restricted.then(cd.injection) != dd.injection.then(f):
            failures.append((dom.name, cod.name, f.mapping, "counit naturality"))
    return _result("reflection_naturality", failures, checked=checked)


# -- factorization systems ------------------------------------------------------

def check_morphism_classification(suite):
    failures = []
    checked = 0
    for dom, cod, f in suite.all_homs():
        checked += 1
        try:
            report = classify_morphism(f)
        except TheoremCheckError as exc:
            failures.append((dom.name, cod.name, f.mapping, str(exc)))
            continue
        ker_obj, _ = kernel(f)
        if is_covering(f) != classify_object(ker_obj).separated:
            failures.append((dom.name, cod.name, f.mapping, "covering-kernel"))
        if report.covering != is_covering(f):
            failures.append((dom.name, cod.name, f.mapping, "covering-flag"))
    return _result("morphism_classification", failures, checked=checked)


def check_factorizations(suite, uniqueness_cap=200):
    failures = []
    checked = uniqueness_checked = 0
    for dom, cod, f in suite.all_homs():
        checked += 1
        try:
            refl = reflective_factorize(f)
            light = monotone_light_factorize(f)
        except TheoremCheckError as exc:
            failures.append((dom.name, cod.name, f.mapping, str(exc)))
            continue
        if dom.vgroup.size > 4 or uniqueness_checked >= uniqueness_cap:
            continue
        dom_idx = suite.objects.index(dom)
        cod_idx = suite.objects.index(cod)
        for fact, side in ((refl, "reflective"), (light, "monotone_light")):
            for i, alt in enumerate(suite.objects):
                if alt.quantale_name != dom.quantale_name or \
                        alt.vgroup.size != fact.middle.size:
                    continue
                hs_e = suite.homs_between(dom_idx, i)
                hs_m = suite.homs_between(i, cod_idx)
                if hs_e is None or hs_m is None or hs_e.truncated or hs_m.truncated:
                    continue
                for e2 in hs_e.homs:
                    for m2 in hs_m.homs:
                        if e2.then(m2) != f:
                            continue
                        rep_e = classify_morphism(e2)
                        rep_m = classify_morphism(m2)
                        if side == "reflective":
                            matching = rep_e.reflector_inverted and rep_m.trivial_covering
                        else:
                            matching = rep_e.stably_inverted and rep_m.covering
                        if not matching:
                            continue
                        uniqueness_checked += 1
                        if factorization_middle_iso(fact.e, fact.m, e2, m2) is None:
                            failures.append((dom.name, cod.name, f.mapping,
                                             side, "uniqueness", alt.name))
    return _result("factorization_postverify", failures, checked=checked,
                   uniqueness_checked=uniqueness_checked)


def check_stable_class_pullbacks(suite, cap=250):
    """Morphisms flagged stably-inverted stay reflector-inverted under pullback."""
    failures = []
    checked = 0
    homs = suite.all_homs()
    for dom, cod, f in homs:
        if not classify_morphism(f).stably_inverted:
            continue
        for dom2, cod2, g in homs:
            if cod2.vgroup != cod.vgroup or checked >= cap:
                continue
            checked += 1
            _, _, pulled = pullback(f, g)
            if not classify_morphism(pulled).reflector_inverted:
                failures.append((dom.name, f.mapping, dom2.name, g.mapping))
    return _result("stable_class_pullbacks", failures, pullbacks=checked)


# -- pretorsion ---------------------------------------------------------------

def check_pretorsion(suite, quantale_names=("boolean", "lawvere_chain_2"),
                     family_max_carrier=3):
    failures = []
    checked = 0
    # the null class is extensionally the symmetric separated objects
    for obj in suite.objects:
        cls = classify_object(obj.vgroup)
        if is_null_object(obj.vgroup) != (cls.symmetric and cls.separated):
            failures.append((obj.name, "null class mismatch"))
    for qname in quantale_names:
        small = [o.vgroup for o in suite.objects_over(qname)
                 if o.vgroup.size <= family_max_carrier]
        for obj in suite.objects_over(qname):
            checked += 1
            try:
                family = default_test_family(obj.vgroup)
                for extra in small:
                    if extra not in family:
                        family.append(extra)
                pretorsion_decompose(obj.vgroup, test_objects=family)
            except TheoremCheckError as exc:
                failures.append((obj.name, str(exc)))
    greatest_checked = 0
    for obj in suite.objects:
        if obj.vgroup.size > 4:
            continue
        hat = symmetric_coreflect(obj.vgroup)
        for candidate in enumerate_structures(obj.vgroup.group, obj.vgroup.quantale):
            if not classify_object(candidate).symmetric:
                continue
            if not candidate.structure.leq(obj.vgroup.structure):
                continue
            greatest_checked += 1
            if not candidate.structure.leq(hat.structure):
                failures.append((obj.name, "symmetric part not greatest",
                                 candidate.delta()))
    return _result("pretorsion", failures, decomposed=checked,
                   greatest_candidates=greatest_checked)


# -- descent ------------------------------------------------------------------

def check_descent_windows(suite, radii=(1, 2)):
    failures = []
    for obj in suite.objects:
        cover, _ = descent_cover(obj.vgroup)
        for radius in radii:
            report = verify_cover_window(cover, radius)
            if not report.ok:
                failures.append((obj.name, radius, report.laws_violated()))
        groupoid = kernel_pair_groupoid(cover, radii[0])
        if not groupoid.ok:
            failures.append((obj.name, "groupoid", groupoid.laws_violated()))
    return _result("descent_windows", failures,
                   objects=len(suite.objects), radii=list(radii))


ALL_CHECKS = (
    check_quantale_laws,
    check_structure_routes,
    check_objects,
    check_kernel_cokernel_roundtrips,
    check_ses_morphism_pullback,
    check_image_factorization,
    check_regular_epi_stability,
    check_torsion_theory,
    check_reflection_naturality,
    check_morphism_classification,
    check_factorizations,
    check_stable_class_pullbacks,
    check_pretorsion,
    check_descent_windows,
)


def run_battery(level="smoke"):
    """Build the suite and run every check, in the canonical order."""
    suite = standard_suite(level)
    return [check(suite) for check in ALL_CHECKS]
