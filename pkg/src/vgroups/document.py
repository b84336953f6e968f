"""The workbench file format: UTF-8 JSON documents holding a quantale, a
group, a structure matrix and optional named morphisms.

Quantale and group elements are referenced by string label, with an
explicit ordering array, so documents are diff-friendly.  Entries may
also be given as integer indices; the canonical emitted form always uses
labels, sorted keys and two-space indentation, and a document already in
canonical form round-trips byte-identically through parse then emit.

A morphism's target is either a path to another document (resolved
relative to the referencing file; its quantale must coincide) or an
inline object sharing the document's quantale.
"""

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import jsonschema

from .errors import StructuralError
from .groups import FiniteGroup
from .quantale import Quantale, builtin_quantale
from .vgroup import VGroup, VHom
from .vrel import VRel

with resources.files("vgroups.data").joinpath("workbench.schema.json").open() as _fh:
    SCHEMA = json.load(_fh)


def canonical_json(obj):
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


@dataclass
class WorkbenchDocument:
    quantale: Quantale
    vgroup: VGroup
    morphisms: list = field(default_factory=list)  # list of VHom, named
    quantale_spec: dict = field(default_factory=dict)
    morphism_specs: list = field(default_factory=list)

    def morphism(self, name):
        for hom in self.morphisms:
            if hom.name == name:
                return hom
        raise StructuralError(f"document has no morphism named {name!r}")


def _resolve(value, labels, what):
    if isinstance(value, bool):
        raise StructuralError(f"{what} entry must be a label or index, not a boolean")
    if isinstance(value, int):
        if not 0 <= value < len(labels):
            raise StructuralError(f"{what} index out of range: {value}")
        return value
    try:
        return labels.index(str(value))
    except ValueError:
        raise StructuralError(f"unknown {what} label: {value!r}") from None


def _parse_quantale(spec):
    if "builtin" in spec:
        kind = spec["builtin"]
        return builtin_quantale(kind, spec.get("m"))
    labels = [str(x) for x in spec["elements"]]
    tensor = [[_resolve(v, labels, "quantale") for v in row] for row in spec["tensor"]]
    return Quantale(labels=labels, leq=spec["leq"], tensor=tensor,
                    unit=_resolve(spec["unit"], labels, "quantale"),
                    bottom=_resolve(spec["bottom"], labels, "quantale"),
                    top=_resolve(spec["top"], labels, "quantale"))


def _parse_group(spec):
    names = [str(x) for x in spec["elements"]]
    table = [[_resolve(v, names, "group") for v in row] for row in spec["table"]]
    return FiniteGroup(table, names=names)


def _parse_object(group_spec, structure_spec, quantale):
    group = _parse_group(group_spec)
    labels = list(quantale.labels)
    if len(structure_spec) != group.size or \
            any(len(row) != group.size for row in structure_spec):
        raise StructuralError("structure matrix must be square, one row per element")
    entries = [[_resolve(v, labels, "quantale") for v in row]
               for row in structure_spec]
    return VGroup(group, quantale, VRel(quantale, entries))


def parse_document(data, base_dir=None):
    """Build the in-memory objects from a parsed JSON value.

    Cross-references and index ranges are checked here; algebraic laws
    are not (run the validators for those).
    """
    try:
        jsonschema.validate(data, SCHEMA)
    except jsonschema.ValidationError as exc:
        raise StructuralError(f"document does not match the schema: {exc.message}") from exc
    quantale = _parse_quantale(data["quantale"])
    vg = _parse_object(data["group"], data["structure"], quantale)
    morphisms = []
    for spec in data.get("morphisms", ()):
        target = spec["target"]
        if isinstance(target, str):
            if base_dir is None:
                raise StructuralError(
                    f"morphism {spec['name']!r} references a file but no base "
                    "directory is known")
            ref = load_document(Path(base_dir) / target)
            if ref.quantale != quantale:
                raise StructuralError(
                    f"morphism {spec['name']!r}: target document uses a "
                    "different quantale")
            cod = ref.vgroup
        else:
            cod = _parse_object(target["group"], target["structure"], quantale)
        mapping = [_resolve(v, list(cod.group.names), "group") for v in spec["map"]]
        if len(mapping) != vg.size:
            raise StructuralError(
                f"morphism {spec['name']!r}: map must list one target element "
                "per source element")
        morphisms.append(VHom(vg, cod, mapping, name=spec["name"]))
    return WorkbenchDocument(quantale=quantale, vgroup=vg, morphisms=morphisms,
                             quantale_spec=data["quantale"],
                             morphism_specs=list(data.get("morphisms", ())))


def load_document(path):
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise StructuralError(f"cannot read {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StructuralError(f"{path} is not valid JSON: {exc}") from exc
    return parse_document(data, base_dir=path.parent)


def _emit_quantale(doc):
    spec = doc.quantale_spec
    if "builtin" in spec:
        out = {"builtin": spec["builtin"]}
        if "m" in spec:
            out["m"] = spec["m"]
        return out
    q = doc.quantale
    return {
        "elements": list(q.labels),
        "leq": [list(row) for row in q.leq_table],
        "tensor": [[q.labels[v] for v in row] for row in q.tensor_table],
        "unit": q.labels[q.unit],
        "bottom": q.labels[q.bottom],
        "top": q.labels[q.top],
    }


def _emit_object(vg):
    q = vg.quantale
    return (
        {"elements": list(vg.group.names),
         "table": [[vg.group.names[v] for v in row] for row in vg.group.table]},
        [[q.labels[v] for v in row] for row in vg.structure.entries],
    )


def emit_document(doc):
    """The canonical plain-JSON form of a document (labels everywhere)."""
    group, structure = _emit_object(doc.vgroup)
    out = {"quantale": _emit_quantale(doc), "group": group, "structure": structure}
    if doc.morphisms:
        morphisms = []
        for hom, spec in zip(doc.morphisms, doc.morphism_specs):
            target = spec["target"]
            if isinstance(target, str):
                emitted_target = target
            else:
                tgt_group, tgt_structure = _emit_object(hom.cod)
                emitted_target = {"group": tgt_group, "structure": tgt_structure}
            morphisms.append({
                "name": hom.name,
                "target": emitted_target,
                "map": [hom.cod.group.names[v] for v in hom.mapping],
            })
        out["morphisms"] = morphisms
    return out


def document_text(doc):
    return canonical_json(emit_document(doc))


def document_from_vgroup(vg, quantale_spec=None):
    """A plain document value for one object, ready for canonical_json.

    ``quantale_spec`` may name a builtin (e.g. {"builtin": "boolean"});
    without it the quantale is emitted as explicit tables.
    """
    group, structure = _emit_object(vg)
    if quantale_spec is None:
        q = vg.quantale
        quantale_spec = {
            "elements": list(q.labels),
            "leq": [list(row) for row in q.leq_table],
            "tensor": [[q.labels[v] for v in row] for row in q.tensor_table],
            "unit": q.labels[q.unit],
            "bottom": q.labels[q.bottom],
            "top": q.labels[q.top],
        }
    return {"quantale": quantale_spec, "group": group, "structure": structure}
